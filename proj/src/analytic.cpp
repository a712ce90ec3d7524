#include "twr/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "twr/error.hpp"
#include "twr/quadrature.hpp"
#include "twr/relay.hpp"
#include "twr/specfun.hpp"

namespace twr {

namespace {

constexpr double kPi = std::numbers::pi;

SnrModel base_model(int n_i, int n_r, int n_j, double rate_j, double gamma_bar_j, double a) {
    if (n_i < 1 || n_r < 1 || n_j < 1) throw DomainError("antenna counts must be >= 1");
    if (!(rate_j > 0.0)) throw DomainError("code rate must be > 0");
    SnrModel m;
    m.p = std::max(n_r, n_i);
    m.q = std::min(n_r, n_i);
    m.n_j = n_j;
    m.alpha_j = 1.0 / (rate_j * n_j);
    m.gamma_bar_j = gamma_bar_j;
    m.a = a;
    return m;
}

}  // namespace

SnrModel SnrModel::estimated(int n_i, int n_r, int n_j, double rate_j, double gamma_bar_j, double a, double np_i,
                             double np_j) {
    if (!(np_i > 0.0) || !(np_j > 0.0)) throw DomainError("pilot repetitions must be > 0");
    SnrModel m = base_model(n_i, n_r, n_j, rate_j, gamma_bar_j, a);
    const double a2 = a * a;
    m.z1 = 1.0 + a2 * (1.0 / np_i + 1.0 / np_j);
    m.z2 = a2 * (1.0 + 1.0 / np_i + 1.0 / np_j);
    return m;
}

SnrModel SnrModel::perfect(int n_i, int n_r, int n_j, double rate_j, double gamma_bar_j, double a) {
    SnrModel m = base_model(n_i, n_r, n_j, rate_j, gamma_bar_j, a);
    m.z1 = 1.0;
    m.z2 = a * a;
    return m;
}

SnrModel SnrModel::from_config(const SystemConfig& cfg, int user, bool perfect_csi) {
    const int partner = other_user(user);
    const double a = relay_gain(cfg);
    if (perfect_csi) return perfect(cfg.n(user), cfg.nr, cfg.n(partner), cfg.code.rate(), cfg.gamma_bar(partner), a);
    return estimated(cfg.n(user), cfg.nr, cfg.n(partner), cfg.code.rate(), cfg.gamma_bar(partner), a, cfg.np(user),
                     cfg.np(partner));
}

double SnrModel::ln_kappa() const {
    double acc = 0.0;
    for (int l = 1; l <= q; ++l) acc += std::lgamma(p - l + 1.0) + std::lgamma(q - l + 1.0);
    return acc;
}

// ---------------------------------------------------------------------------

MgfEvaluator::MgfEvaluator(SnrModel model, MgfSettings settings) : model_(model), settings_(settings) {
    if (!(model_.z1 >= 1.0) || !(model_.z2 > 0.0)) throw DomainError("need Z1 >= 1 and Z2 > 0");
}

double MgfEvaluator::entry_quadrature(int t, int v, double s) const {
    const int nu = t + v + model_.p - model_.q - 1;
    if (!(s >= 0.0)) throw DomainError("m.g.f. argument must be >= 0");
    const double c = model_.z2 / model_.z1;
    const double cd = c * (1.0 + model_.snr_scale() * s / model_.z2);
    const int n = model_.n_j;
    const auto integrand = [&](double l) {
        double log_f = -l + n * (std::log1p(c * l) - std::log1p(cd * l));
        if (nu != 1) log_f += (nu - 1) * std::log(l);
        return std::exp(log_f);
    };
    // The rational factor falls from 1 to d^-N around l ~ 1/(c d); start the
    // panels at that scale so the drop is resolved even when it is tiny.
    const double first = std::min(1.0, 1.0 / cd);
    const double tail_start = 2.0 * nu + 40.0;
    return quad::integrate_half_line(integrand, 0.0, first, tail_start, {0.0, settings_.rel_tol, 4000}).value;
}

double MgfEvaluator::entry_closed_form(int t, int v, double s) const {
    const int nu = t + v + model_.p - model_.q - 1;
    if (!(s >= 0.0)) throw DomainError("m.g.f. argument must be >= 0");
    const int n = model_.n_j;
    const double c = model_.z2 / model_.z1;
    const double x = model_.snr_scale() * s / model_.z2;  // d - 1
    const double d = 1.0 + x;
    const double z = 1.0 / (c * d);
    const double log_pref = std::lgamma(static_cast<double>(nu)) - nu * std::log(c) - (nu + n) * std::log(d);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0 && x == 0.0) break;
        const double log_coeff = std::log(binomial(n, k)) + (k > 0 ? k * std::log(x) : 0.0);
        sum += std::exp(log_pref + log_coeff) * tricomi_u(nu, nu + 1.0 - k, z, 1e-12);
    }
    return sum;
}

double MgfEvaluator::entry_by_nu(int nu, double s) const {
    // Any (t, v) with t + v = nu - p + q + 1; J is Hankel.
    const int tv = nu - model_.p + model_.q + 1;
    const int t = std::max(1, tv - model_.q);
    const int v = tv - t;
    const double quad_value = entry_quadrature(t, v, s);
    if (settings_.cross_check) {
        const double closed = entry_closed_form(t, v, s);
        const double rel = std::abs(quad_value - closed) / std::abs(quad_value);
        if (!(rel <= settings_.cross_check_tol)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "Hankel entry nu=" << nu << " at s=" << s << ": quadrature " << quad_value << " vs closed form "
                << closed << " (relative difference " << rel << ")";
            throw CrossCheckFailure(msg.str());
        }
    }
    return quad_value;
}

Eigen::MatrixXd MgfEvaluator::hankel(double s) const {
    const int q = model_.q;
    std::vector<double> by_sum(static_cast<std::size_t>(2 * q - 1));
    for (int k = 0; k < 2 * q - 1; ++k) by_sum[static_cast<std::size_t>(k)] = entry_by_nu(k + model_.p - model_.q + 1, s);
    Eigen::MatrixXd j(q, q);
    for (int t = 0; t < q; ++t)
        for (int v = 0; v < q; ++v) j(t, v) = by_sum[static_cast<std::size_t>(t + v)];
    return j;
}

double MgfEvaluator::operator()(double s) const {
    const Eigen::MatrixXd j = hankel(s);
    const double det = model_.q == 1 ? j(0, 0) : j.partialPivLu().determinant();
    return det * std::exp(-model_.ln_kappa());
}

double mgf(const SnrModel& model, double s, MgfSettings settings) {
    return MgfEvaluator(model, settings)(s);
}

double instantaneous_snr(const CMat& h_i, const CMat& h_j, const SnrModel& model) {
    const CMat g = h_i * h_j.transpose();
    const CMat k = model.z1 * identity(h_i.rows()) + model.z2 * h_i * h_i.adjoint();
    const CMat kg = k.llt().solve(g);
    return model.snr_scale() * (g.adjoint() * kg).trace().real();
}

// ---------------------------------------------------------------------------

namespace {

// (1/pi) int_0^upper M(g / sin^2 t) dt
double mgf_angle_integral(const std::function<double(double)>& mgf_fn, double g, double upper) {
    const auto integrand = [&](double t) {
        const double sn = std::sin(t);
        if (sn == 0.0) return 0.0;
        return mgf_fn(g / (sn * sn));
    };
    return quad::integrate(integrand, 0.0, upper, {1e-300, 1e-10, 2000}).value / kPi;
}

std::function<double(double)> as_function(const SnrModel& model, MgfSettings settings) {
    auto ev = std::make_shared<MgfEvaluator>(model, settings);
    return [ev](double s) { return (*ev)(s); };
}

}  // namespace

double ser_mpsk(const std::function<double(double)>& mgf_fn, int m) {
    if (m < 2) throw DomainError("PSK order must be >= 2");
    const double g = std::pow(std::sin(kPi / m), 2);
    return mgf_angle_integral(mgf_fn, g, kPi * (m - 1) / m);
}

double ser_mpsk(const SnrModel& model, int m, MgfSettings settings) {
    return ser_mpsk(as_function(model, settings), m);
}

double ser_mqam(const std::function<double(double)>& mgf_fn, int m) {
    const double root = std::sqrt(static_cast<double>(m));
    if (m < 4 || std::abs(root - std::round(root)) > 1e-12) throw DomainError("QAM order must be a square >= 4");
    const double g = 3.0 / (2.0 * (m - 1));
    const double w = 1.0 - 1.0 / root;
    const double full = mgf_angle_integral(mgf_fn, g, kPi / 2);
    const double quarter = mgf_angle_integral(mgf_fn, g, kPi / 4);
    return 4.0 * w * full - 4.0 * w * w * quarter;
}

double ser_mqam(const SnrModel& model, int m, MgfSettings settings) {
    return ser_mqam(as_function(model, settings), m);
}

double error_rate(const SnrModel& model, const Constellation& cons, MgfSettings settings) {
    if (cons.modulation() == Modulation::psk) return ser_mpsk(model, cons.order(), settings);
    return ser_mqam(model, cons.order(), settings);
}

double bpsk_q1_closed_form(const SnrModel& model) {
    if (model.q != 1) throw Unsupported("closed-form BPSK BER requires min(N_r, N_i) = 1");
    const int p = model.p;
    const double big_a = model.snr_scale();
    if (big_a == 0.0) return 0.5;
    const double ratio = big_a / model.z2;
    const double z = model.z1 / (model.z2 + big_a);
    const double log_common = 0.5 * std::log(ratio) - p * std::log(model.z2 / model.z1) - std::lgamma(p);
    double sum = 0.0;
    for (int k = 0; k < model.n_j; ++k) {
        for (int l = 0; l <= k; ++l) {
            const double a1 = p + l + 0.5;
            const double log_term = log_common + std::log(binomial(2 * k, k)) + std::log(binomial(k, l)) +
                                    std::lgamma(a1) - a1 * std::log1p(ratio) - k * std::log(4.0);
            sum += std::exp(log_term) * tricomi_u(a1, p + l - k + 1.0, z, 1e-13);
        }
    }
    return 0.5 * (1.0 - sum);
}

DiversityOrder diversity_order(const SnrModel& model) {
    if (model.q != 1) throw Unsupported("diversity order is only available for min(N_r, N_i) = 1");
    return {std::min(model.p, model.n_j), model.p == model.n_j};
}

double mgf_asymptotic_q1(const SnrModel& model, double s) {
    if (model.q != 1) throw Unsupported("asymptotic m.g.f. requires min(N_r, N_i) = 1");
    const int p = model.p;
    const double x = model.snr_scale() * s / model.z2;
    const double z = model.z1 / (model.z2 * (1.0 + x));
    double num = 0.0;
    for (int k = 0; k <= model.n_j; ++k)
        num += binomial(model.n_j, k) * std::pow(x, k) * tricomi_u_small_z(p, p + 1.0 - k, z);
    return num / (std::pow(1.0 + x, p + model.n_j) * std::pow(model.z2 / model.z1, p));
}

double slope_estimate(std::span<const CurvePoint> curve, int points) {
    if (points < 2 || static_cast<int>(curve.size()) < points)
        throw InsufficientData("slope needs at least " + std::to_string(std::max(points, 2)) + " points");
    std::vector<CurvePoint> sorted(curve.begin(), curve.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) { return l.snr_db < r.snr_db; });
    const auto top = std::span(sorted).last(static_cast<std::size_t>(points));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& pt : top) {
        if (!(pt.rate > 0.0)) throw InsufficientData("slope needs strictly positive error rates");
        const double lx = pt.snr_db / 10.0;
        const double ly = std::log10(pt.rate);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = points;
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw InsufficientData("slope needs distinct SNR points");
    return -(n * sxy - sx * sy) / denom;
}

double snr_db_at_rate(const std::function<double(double)>& rate_of_db, double target, double lo_db, double hi_db) {
    const double log_target = std::log10(target);
    const auto f = [&](double db) { return std::log10(rate_of_db(db)) - log_target; };
    const double f_lo = f(lo_db);
    const double f_hi = f(hi_db);
    if (f_lo * f_hi > 0.0) throw DomainError("target error rate is not bracketed by the SNR interval");
    std::uintmax_t iterations = 100;
    const auto [a, b] = boost::math::tools::toms748_solve(
        f, lo_db, hi_db, f_lo, f_hi, [](double l, double r) { return std::abs(r - l) < 1e-7; }, iterations);
    return 0.5 * (a + b);
}

}  // namespace twr
