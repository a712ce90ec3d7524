#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "twr/config.hpp"

namespace twr {

enum class CsiMode { perfect, estimated };
enum class DecoderKind { symbolwise, exhaustive };

struct SimOptions {
    CsiMode csi = CsiMode::estimated;
    DecoderKind decoder = DecoderKind::symbolwise;
    int user = 1;             ///< the receiving user whose errors are counted
    double noise_scale = 1.0;  ///< 0 switches every noise source off
};

struct TrialOutcome {
    int bit_errors = 0;
    int symbol_errors = 0;
};

/// One codeword exchange: channel draw, training (estimated mode), data
/// phase, decoding at `opt.user`. Randomness comes only from streams keyed
/// by (seed, trial_index).
TrialOutcome run_trial(const SystemConfig& cfg, const SimOptions& opt, std::uint64_t seed,
                       std::uint64_t trial_index);

/// Error counts for one SNR point. Standard errors use the per-trial error
/// counts, so errors that cluster within a codeword are accounted for.
struct ErrorStats {
    double snr_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t bits = 0;
    std::uint64_t symbols = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t symbol_errors = 0;
    double bit_errors_sq = 0.0;  ///< sum over trials of (bit errors)^2
    double symbol_errors_sq = 0.0;

    double ber() const { return bits ? static_cast<double>(bit_errors) / bits : 0.0; }
    double ser() const { return symbols ? static_cast<double>(symbol_errors) / symbols : 0.0; }
    double ber_sigma() const;
    double ser_sigma() const;
    double ber_ci95() const { return 1.96 * ber_sigma(); }
    double ser_ci95() const { return 1.96 * ser_sigma(); }

    void add(const TrialOutcome& t, int bits_per_trial, int symbols_per_trial);
    void merge(const ErrorStats& other);
};

struct StopRule {
    std::uint64_t max_trials = 2'000'000;
    std::uint64_t min_errors = 200;  ///< symbol error events
};

struct CampaignOptions {
    std::uint64_t seed = 1;
    int workers = 1;
    StopRule stop;
    std::uint64_t batch_trials = 2048;
};

/// Runs trials at one configuration until the stop rule fires. Trials are
/// processed in fixed batches and the stop decision is taken on the ordered
/// batch prefix, so the result does not depend on `workers`.
ErrorStats run_point(const SystemConfig& cfg, const SimOptions& opt, const CampaignOptions& copt, double snr_db);

/// `base` with gamma_bar_1 = gamma_bar_2 = 10^(snr_db / 10).
SystemConfig at_snr(SystemConfig base, double snr_db);

/// One ErrorStats per SNR point; `on_point` sees each as soon as it is done.
std::vector<ErrorStats> run_campaign(const SystemConfig& base, std::span<const double> snr_db_grid,
                                     const SimOptions& opt, const CampaignOptions& copt,
                                     const std::function<void(const ErrorStats&)>& on_point = {});

struct PointComparison {
    double snr_db = 0.0;
    double simulated = 0.0;
    double analytic = 0.0;
    double sigma = 0.0;
    double z = 0.0;
    bool flagged = false;  ///< |z| > threshold
};

/// z = (simulated - analytic) / sigma_sim per point. `use_ber` selects BER or
/// SER from the simulated stats. analytic must align with sim.
std::vector<PointComparison> compare(std::span<const ErrorStats> sim, std::span<const double> analytic, bool use_ber,
                                     double threshold = 3.0);

}  // namespace twr
