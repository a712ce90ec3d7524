#pragma once

#include "twr/channel.hpp"
#include "twr/linalg.hpp"
#include "twr/relay.hpp"

namespace twr {

/// What User-i knows about the link after training (or exactly, in the
/// perfect-CSI mode).
struct CsiEstimates {
    CMat h_hat;        ///< N_i x N_r
    CMat g_own_hat;    ///< G_i estimate, N_i x N_i
    CMat g_cross_hat;  ///< G_ij estimate, N_i x N_j
    CMat whitener;     ///< (a^2 H^ H^^H + I)^(-1/2), N_i x N_i

    CMat g_own_vec() const { return vec(g_own_hat); }
    CMat g_cross_vec() const { return vec(g_cross_hat); }
};

/// H^ = R S_p^H (S_p S_p^H)^-1.
CMat estimate_individual(const CMat& received, const CMat& s_p);

/// Generalized least squares estimate of the cascaded channel from one
/// training phase, returned as a matrix (the vec of it is g^). The noise
/// covariance I_L (x) (H^ H^^H + I) is block diagonal, so the whitening
/// cancels from the normal equations and the estimate is
/// R C_p^H (C_p C_p^H)^-1; `h_hat_local` is accepted for the interface
/// but does not change the result.
CMat estimate_cascaded(const CMat& received, const CMat& pilot, const CMat& h_hat_local);

/// The same estimator assembled literally from Kronecker products:
/// ((C_p* (x) I) K~^-1 (C_p^T (x) I))^-1 (C_p* (x) I) K~^-1 vec(R),
/// K~ = I_L (x) (H^ H^^H + I). Returns the vector g^. O((L N)^3); for
/// checking the structured path.
CMat estimate_cascaded_gls(const CMat& received, const CMat& pilot, const CMat& h_hat_local);

/// Error form of the cascaded estimate:
/// g^ = g + ((C_p* C_p^T)^-1 C_p* (x) I) K~^(1/2) n, with n a whitened
/// noise vector of length L N.
CMat cascaded_error_form(const CMat& g_true_vec, const CMat& pilot, const CMat& h_hat_local, const CMat& n);

/// (a^2 H^ H^^H + I)^(-1/2); applied column by column it equals the full
/// (a^2 (I_T (x) H^ H^^H) + I)^(-1/2).
CMat build_whitener(const CMat& h_hat, double a);

/// Applies the block whitener (I_T (x) W) to vec(Y), i.e. W * Y.
inline CMat apply_whitener(const CMat& whitener, const CMat& y) { return whitener * y; }

/// Estimates held by `user` after phases 1-3.
CsiEstimates estimate_csi(const SystemConfig& cfg, int user, const Phase1Signals& phase1,
                          const TrainingSignals& phase2, const TrainingSignals& phase3);

/// Exact CSI for `user`.
CsiEstimates perfect_csi(const SystemConfig& cfg, int user, const ChannelRealization& ch);

}  // namespace twr
