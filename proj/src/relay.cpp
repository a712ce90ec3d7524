#include "twr/relay.hpp"

#include <cmath>

#include "twr/error.hpp"

namespace twr {

void SystemConfig::validate() const {
    if (n1 < 1 || n2 < 1 || nr < 1) throw DomainError("antenna counts must be >= 1");
    if (mp < 1 || np1 < 1 || np2 < 1) throw DomainError("pilot repetitions must be >= 1");
    if (!(gamma_bar_1 >= 0.0) || !(gamma_bar_2 >= 0.0)) throw DomainError("average SNRs must be >= 0");
    if (fixed_gain) {
        if (!(*fixed_gain > 0.0)) throw DomainError("relay gain must be > 0");
    } else if (!(relay_power > 0.0)) {
        throw DomainError("relay power budget b must be > 0 when no fixed gain is set");
    }
    if (code.n_tx != n1 || code.n_tx != n2)
        throw DomainError("code '" + code.name + "' needs " + std::to_string(code.n_tx) + " antennas at each user");
}

double relay_gain(const SystemConfig& cfg) {
    if (cfg.fixed_gain) return *cfg.fixed_gain;
    const double rho = cfg.gamma_bar_1 + cfg.gamma_bar_2;
    return std::sqrt(cfg.relay_power / (cfg.nr * cfg.t_slots() * (1.0 + rho)));
}

CMat unitary_block_pilot(int n, int reps, double column_energy) {
    const CMat block = std::sqrt(column_energy) * dft_matrix(n);
    CMat out(n, static_cast<Eigen::Index>(n) * reps);
    for (int r = 0; r < reps; ++r) out.middleCols(static_cast<Eigen::Index>(r) * n, n) = block;
    return out;
}

CMat relay_pilot(const SystemConfig& cfg) {
    return unitary_block_pilot(cfg.nr, cfg.mp);
}

CMat user_pilot(const SystemConfig& cfg, int user) {
    const double energy = cfg.pilot_power == PilotPower::matched ? cfg.gamma_bar(user) : 1.0;
    return unitary_block_pilot(cfg.n(user), cfg.np(user), energy);
}

Phase1Signals run_phase1(const SystemConfig& cfg, const ChannelRealization& ch, RngStream& rng,
                         double noise_scale) {
    Phase1Signals out;
    out.s_p = relay_pilot(cfg);
    const auto p = out.s_p.cols();
    out.r1 = ch.h1 * out.s_p + noise_scale * sample_awgn(cfg.n1, p, rng);
    out.r2 = ch.h2 * out.s_p + noise_scale * sample_awgn(cfg.n2, p, rng);
    return out;
}

TrainingSignals run_training(const SystemConfig& cfg, const ChannelRealization& ch, int sender, RngStream& rng,
                             double noise_scale) {
    const int partner = other_user(sender);
    TrainingSignals out;
    out.sender = sender;
    out.pilot = user_pilot(cfg, sender);
    const auto len = out.pilot.cols();
    const CMat u = noise_scale * sample_awgn(cfg.nr, len, rng);
    const CMat n_partner = noise_scale * sample_awgn(cfg.n(partner), len, rng);
    const CMat n_sender = noise_scale * sample_awgn(cfg.n(sender), len, rng);
    const CMat relayed = ch.h(sender).transpose() * out.pilot + u;
    out.at_partner = ch.h(partner) * relayed + n_partner;
    out.at_sender = ch.h(sender) * relayed + n_sender;
    return out;
}

Phase4Noise draw_phase4_noise(const SystemConfig& cfg, RngStream& relay_rng, RngStream& user_rng,
                              double noise_scale) {
    const int t = cfg.t_slots();
    Phase4Noise noise;
    noise.w_r = noise_scale * sample_awgn(cfg.nr, t, relay_rng);
    noise.w1 = noise_scale * sample_awgn(cfg.n1, t, user_rng);
    noise.w2 = noise_scale * sample_awgn(cfg.n2, t, user_rng);
    return noise;
}

Phase4Signals compose_phase4(double a, const ChannelRealization& ch, const CMat& c1, const CMat& c2,
                             const Phase4Noise& noise) {
    Phase4Signals out;
    out.y_r = ch.h1.transpose() * c1 + ch.h2.transpose() * c2 + noise.w_r;
    out.y1 = a * ch.h1 * out.y_r + noise.w1;
    out.y2 = a * ch.h2 * out.y_r + noise.w2;
    return out;
}

CMat expanded_phase4(double a, const ChannelRealization& ch, int user, const CMat& c1, const CMat& c2,
                     const Phase4Noise& noise) {
    const CMat& own = user == 1 ? c1 : c2;
    const CMat& partner = user == 1 ? c2 : c1;
    const CMat& w = user == 1 ? noise.w1 : noise.w2;
    return a * ch.g_own(user) * own + a * ch.g_cross(user) * partner + a * ch.h(user) * noise.w_r + w;
}

Phase4Signals run_phase4(const SystemConfig& cfg, const ChannelRealization& ch, const CMat& c1, const CMat& c2,
                         RngStream& relay_rng, RngStream& user_rng, double noise_scale) {
    return compose_phase4(relay_gain(cfg), ch, c1, c2, draw_phase4_noise(cfg, relay_rng, user_rng, noise_scale));
}

}  // namespace twr
