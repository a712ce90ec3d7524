#include "twr/specfun.hpp"

#include <cmath>

#include "twr/error.hpp"
#include "twr/quadrature.hpp"

namespace twr {

namespace {

void require_positive(double x, const char* fn) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(fn) + ": argument must be finite and > 0");
}

}  // namespace

double gamma_fn(double x) {
    require_positive(x, "gamma_fn");
    return std::tgamma(x);
}

double ln_gamma(double x) {
    require_positive(x, "ln_gamma");
    return std::lgamma(x);
}

double digamma(double x) {
    require_positive(x, "digamma");
    double acc = 0.0;
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic series in 1/x^2 with Bernoulli-number coefficients.
    const double inv2 = 1.0 / (x * x);
    const double series =
        inv2 * (1.0 / 12 -
                inv2 * (1.0 / 120 -
                        inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760))))));
    return acc + std::log(x) - 0.5 / x - series;
}

double tricomi_u(double a, double b, double z, double rel_tol) {
    if (!(a > 0.0)) throw DomainError("tricomi_u: a must be > 0");
    if (!(z > 0.0)) throw DomainError("tricomi_u: z must be > 0");
    const double tail_exp = b - a - 1.0;
    quad::Tolerance tol{0.0, rel_tol, 4000};

    // [0, 1] with t = w^(1/a): t^(a-1) dt = dw / a removes the endpoint singularity.
    const auto head_integrand = [&](double w) {
        const double t = std::pow(w, 1.0 / a);
        return std::exp(-z * t) * std::pow(1.0 + t, tail_exp);
    };
    const double head = quad::integrate(head_integrand, 0.0, 1.0, tol).value / a;

    // [1, inf): e^{-zt} sets the decay scale, 1/z can be huge for small z.
    const auto tail_integrand = [&](double t) {
        return std::exp(-z * t + (a - 1.0) * std::log(t) + tail_exp * std::log1p(t));
    };
    const double tail_start = 1.0 + (a + std::abs(tail_exp) + 1.0) / z;
    tol.abs = 1e-3 * rel_tol * head;
    const double tail = quad::integrate_half_line(tail_integrand, 1.0, 1.0, tail_start, tol).value;

    return (head + tail) / std::tgamma(a);
}

double tricomi_u_small_z(double a, double b, double z) {
    if (!(a > 0.0)) throw DomainError("tricomi_u_small_z: a must be > 0");
    if (!(z > 0.0)) throw DomainError("tricomi_u_small_z: z must be > 0");
    if (b > 1.0) return std::tgamma(b - 1.0) / std::tgamma(a) * std::pow(z, 1.0 - b);
    if (b == 1.0) return -(std::log(z) + digamma(a)) / std::tgamma(a);
    return std::tgamma(1.0 - b) / std::tgamma(1.0 + a - b);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace twr
