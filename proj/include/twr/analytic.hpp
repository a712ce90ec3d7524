#pragma once

#include <functional>
#include <span>

#include <Eigen/Dense>

#include "twr/config.hpp"
#include "twr/linalg.hpp"
#include "twr/ostbc.hpp"

namespace twr {

/// Parameters of the post-processing SNR at User-i,
///   gamma = alpha_j gamma_bar_j a^2 Tr{G_ij^H (Z1 I + Z2 H_i H_i^H)^-1 G_ij},
/// with p = max(N_r, N_i), q = min(N_r, N_i).
struct SnrModel {
    int p = 1;
    int q = 1;
    int n_j = 1;
    double alpha_j = 1.0;  ///< 1 / (R_j N_j)
    double gamma_bar_j = 1.0;
    double a = 1.0;
    double z1 = 1.0;
    double z2 = 1.0;

    /// Training with n_p_i, n_p_j pilot repetitions:
    /// Z1 = 1 + a^2 (1/n_p_i + 1/n_p_j), Z2 = a^2 (1 + 1/n_p_i + 1/n_p_j).
    static SnrModel estimated(int n_i, int n_r, int n_j, double rate_j, double gamma_bar_j, double a, double np_i,
                              double np_j);

    /// Exact CSI: Z1 = 1, Z2 = a^2.
    static SnrModel perfect(int n_i, int n_r, int n_j, double rate_j, double gamma_bar_j, double a);

    /// Model for `user` decoding its partner under `cfg` (SNRs and gain taken
    /// from the config).
    static SnrModel from_config(const SystemConfig& cfg, int user, bool perfect_csi);

    /// a^2 alpha_j gamma_bar_j.
    double snr_scale() const { return a * a * alpha_j * gamma_bar_j; }

    /// ln kappa, kappa = prod_{l=1}^{q} Gamma(p-l+1) Gamma(q-l+1).
    double ln_kappa() const;

    SnrModel with_gamma_bar(double gamma_bar) const {
        SnrModel m = *this;
        m.gamma_bar_j = gamma_bar;
        return m;
    }
};

struct MgfSettings {
    double rel_tol = 1e-12;        ///< per Hankel entry
    bool cross_check = true;       ///< evaluate the U-based closed form too
    double cross_check_tol = 1e-6;  ///< max relative disagreement of the two routes
};

/// Moment generating function M(s) = E[exp(-s gamma)] = det J(s) / kappa,
/// where J is the q x q Hankel matrix of
///   J_tv(s) = int_0^inf l^(nu-1) ((1 + c l) / (1 + c d l))^N_j e^(-l) dl,
///   nu = t + v + p - q - 1, c = Z2/Z1, d = 1 + a^2 s alpha_j gamma_bar_j / Z2.
/// Entries come from adaptive quadrature; with cross-checking on, each one
/// is compared with the Tricomi-U closed form and CrossCheckFailure is
/// thrown on disagreement.
class MgfEvaluator {
public:
    explicit MgfEvaluator(SnrModel model, MgfSettings settings = {});

    double operator()(double s) const;

    /// Hankel entry by direct quadrature (1-based t, v).
    double entry_quadrature(int t, int v, double s) const;

    /// Hankel entry from the finite sum of Tricomi U terms.
    double entry_closed_form(int t, int v, double s) const;

    /// Full J(s), quadrature route.
    Eigen::MatrixXd hankel(double s) const;

    const SnrModel& model() const { return model_; }
    const MgfSettings& settings() const { return settings_; }

private:
    double entry_by_nu(int nu, double s) const;

    SnrModel model_;
    MgfSettings settings_;
};

double mgf(const SnrModel& model, double s, MgfSettings settings = {});

/// gamma for one channel draw; h_i is N_i x N_r, h_j is N_j x N_r.
double instantaneous_snr(const CMat& h_i, const CMat& h_j, const SnrModel& model);

/// M-PSK SER, (1/pi) int_0^{(M-1)pi/M} M(sin^2(pi/M) / sin^2 t) dt.
/// Also the BPSK BER for m = 2.
double ser_mpsk(const SnrModel& model, int m, MgfSettings settings = {});
double ser_mpsk(const std::function<double(double)>& mgf_fn, int m);

/// Square M-QAM SER, g = 3 / (2 (M - 1)).
double ser_mqam(const SnrModel& model, int m, MgfSettings settings = {});
double ser_mqam(const std::function<double(double)>& mgf_fn, int m);

/// SER for any supported constellation (BER when it is BPSK).
double error_rate(const SnrModel& model, const Constellation& cons, MgfSettings settings = {});

/// Closed-form BPSK BER for q = 1 as a double sum of Tricomi U terms.
/// Unsupported when q != 1.
double bpsk_q1_closed_form(const SnrModel& model);

struct DiversityOrder {
    int order = 0;
    bool extrapolated = false;  ///< p == N_j, outside both proven branches
};

/// min(p, N_j) for q = 1; Unsupported otherwise.
DiversityOrder diversity_order(const SnrModel& model);

/// High-SNR m.g.f. for q = 1 with U replaced by its small-argument form.
/// Unsupported when q != 1.
double mgf_asymptotic_q1(const SnrModel& model, double s);

struct CurvePoint {
    double snr_db = 0.0;
    double rate = 0.0;
};

/// -d log10(rate) / d log10(gamma_bar) from a least-squares line through the
/// `points` highest-SNR entries (exactly the two-point slope for points = 2).
double slope_estimate(std::span<const CurvePoint> curve, int points = 2);

/// SNR in dB where the decreasing `rate_of_db` crosses `target`, searched in
/// [lo_db, hi_db] on a log-rate scale.
double snr_db_at_rate(const std::function<double(double)>& rate_of_db, double target, double lo_db, double hi_db);

}  // namespace twr
