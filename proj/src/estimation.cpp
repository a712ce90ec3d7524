#include "twr/estimation.hpp"

#include "twr/error.hpp"

namespace twr {

CMat estimate_individual(const CMat& received, const CMat& s_p) {
    const CMat gram = s_p * s_p.adjoint();
    // H^ = R S^H (S S^H)^-1  <=>  (S S^H)^H H^^H = S R^H.
    return solve(gram.adjoint(), s_p * received.adjoint()).adjoint();
}

CMat estimate_cascaded(const CMat& received, const CMat& pilot, const CMat& /*h_hat_local*/) {
    const CMat gram = pilot * pilot.adjoint();
    return solve(gram.adjoint(), pilot * received.adjoint()).adjoint();
}

CMat estimate_cascaded_gls(const CMat& received, const CMat& pilot, const CMat& h_hat_local) {
    const auto n = received.rows();
    const auto len = pilot.cols();
    const CMat local_cov = h_hat_local * h_hat_local.adjoint() + identity(n);
    const CMat k_inv = inverse(kron(identity(len), local_cov));
    const CMat left = kron(pilot.conjugate(), identity(n));
    const CMat right = kron(pilot.transpose(), identity(n));
    const CMat normal = left * k_inv * right;
    return solve(normal, left * k_inv * vec(received));
}

CMat cascaded_error_form(const CMat& g_true_vec, const CMat& pilot, const CMat& h_hat_local, const CMat& n) {
    const auto rows = h_hat_local.rows();
    const auto len = pilot.cols();
    const CMat local_cov = h_hat_local * h_hat_local.adjoint() + identity(rows);
    const CMat k_sqrt = kron(identity(len), herm_sqrt(local_cov));
    const CMat energy = pilot.conjugate() * pilot.transpose();
    const CMat proj = kron(solve(energy, pilot.conjugate()), identity(rows));
    return g_true_vec + proj * k_sqrt * n;
}

CMat build_whitener(const CMat& h_hat, double a) {
    const auto n = h_hat.rows();
    return herm_inv_sqrt(a * a * h_hat * h_hat.adjoint() + identity(n));
}

CsiEstimates estimate_csi(const SystemConfig& cfg, int user, const Phase1Signals& phase1,
                          const TrainingSignals& phase2, const TrainingSignals& phase3) {
    const TrainingSignals& own_phase = phase2.sender == user ? phase2 : phase3;
    const TrainingSignals& partner_phase = phase2.sender == user ? phase3 : phase2;
    if (own_phase.sender != user || partner_phase.sender != other_user(user))
        throw DimensionMismatch("estimate_csi: need one training phase per user");

    CsiEstimates est;
    est.h_hat = estimate_individual(phase1.r(user), phase1.s_p);
    est.g_own_hat = estimate_cascaded(own_phase.at_sender, own_phase.pilot, est.h_hat);
    est.g_cross_hat = estimate_cascaded(partner_phase.at_partner, partner_phase.pilot, est.h_hat);
    est.whitener = build_whitener(est.h_hat, relay_gain(cfg));
    return est;
}

CsiEstimates perfect_csi(const SystemConfig& cfg, int user, const ChannelRealization& ch) {
    CsiEstimates est;
    est.h_hat = ch.h(user);
    est.g_own_hat = ch.g_own(user);
    est.g_cross_hat = ch.g_cross(user);
    est.whitener = build_whitener(est.h_hat, relay_gain(cfg));
    return est;
}

}  // namespace twr
