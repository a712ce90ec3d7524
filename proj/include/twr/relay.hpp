#pragma once

#include "twr/channel.hpp"
#include "twr/config.hpp"
#include "twr/linalg.hpp"
#include "twr/rng.hpp"

namespace twr {

/// Fixed AF gain: a = sqrt(b / (Nr T (1 + gamma_bar_1 + gamma_bar_2))),
/// or the configured fixed value.
double relay_gain(const SystemConfig& cfg);

/// `reps` horizontal copies of the normalized n x n DFT matrix, each scaled
/// so that every column has energy `column_energy`.
CMat unitary_block_pilot(int n, int reps, double column_energy = 1.0);

/// N_r x (M_p N_r) relay pilot S_p.
CMat relay_pilot(const SystemConfig& cfg);

/// N_i x (N_p_i N_i) training matrix sent by `user`.
CMat user_pilot(const SystemConfig& cfg, int user);

/// Phase 1: R_i = H_i S_p + N_i at both users.
struct Phase1Signals {
    CMat s_p;
    CMat r1;
    CMat r2;
    const CMat& r(int user) const { return user == 1 ? r1 : r2; }
};

/// One cascaded-training phase: `sender` transmits C_p, the relay forwards
/// H_sender^T C_p + U with unit gain. The partner receives
/// R~ = H_partner H_sender^T C_p + H_partner U + N_partner, the sender receives
/// R- = G_sender C_p + H_sender U + N_sender; U is shared.
struct TrainingSignals {
    int sender = 1;
    CMat pilot;
    CMat at_partner;
    CMat at_sender;
};

/// Phase 4 noise draws: W_r (Nr x T) and W_1, W_2 (N_i x T).
struct Phase4Noise {
    CMat w_r;
    CMat w1;
    CMat w2;
};

struct Phase4Signals {
    CMat y_r;
    CMat y1;
    CMat y2;
    const CMat& y(int user) const { return user == 1 ? y1 : y2; }
};

/// `noise_scale` multiplies every noise draw; 0 gives the noiseless protocol.
Phase1Signals run_phase1(const SystemConfig& cfg, const ChannelRealization& ch, RngStream& rng,
                         double noise_scale = 1.0);

/// Cascaded training with `sender` transmitting (phase 2: sender 1, phase 3: sender 2).
TrainingSignals run_training(const SystemConfig& cfg, const ChannelRealization& ch, int sender, RngStream& rng,
                             double noise_scale = 1.0);

inline TrainingSignals run_phase2(const SystemConfig& cfg, const ChannelRealization& ch, RngStream& rng,
                                  double noise_scale = 1.0) {
    return run_training(cfg, ch, 1, rng, noise_scale);
}

inline TrainingSignals run_phase3(const SystemConfig& cfg, const ChannelRealization& ch, RngStream& rng,
                                  double noise_scale = 1.0) {
    return run_training(cfg, ch, 2, rng, noise_scale);
}

Phase4Noise draw_phase4_noise(const SystemConfig& cfg, RngStream& relay_rng, RngStream& user_rng,
                              double noise_scale = 1.0);

/// Y_r = H_1^T C_1 + H_2^T C_2 + W_r, then Y_i = a H_i Y_r + W_i.
Phase4Signals compose_phase4(double a, const ChannelRealization& ch, const CMat& c1, const CMat& c2,
                             const Phase4Noise& noise);

/// Y_i = a G_i C_i + a G_ij C_j + a H_i W_r + W_i, written out per user.
CMat expanded_phase4(double a, const ChannelRealization& ch, int user, const CMat& c1, const CMat& c2,
                     const Phase4Noise& noise);

Phase4Signals run_phase4(const SystemConfig& cfg, const ChannelRealization& ch, const CMat& c1, const CMat& c2,
                         RngStream& relay_rng, RngStream& user_rng, double noise_scale = 1.0);

}  // namespace twr
