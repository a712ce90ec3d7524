#include "twr/harness.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "twr/channel.hpp"
#include "twr/decoder.hpp"
#include "twr/error.hpp"
#include "twr/estimation.hpp"
#include "twr/relay.hpp"
#include "twr/rng.hpp"

namespace twr {

namespace {

std::vector<int> draw_symbols(const SystemConfig& cfg, RngStream& rng) {
    std::vector<int> idx(static_cast<std::size_t>(cfg.code.m_symbols));
    const auto order = static_cast<std::uint64_t>(cfg.constellation.order());
    // order is a power of two, so the low bits are uniform.
    for (auto& i : idx) i = static_cast<int>(rng.next_u64() & (order - 1));
    return idx;
}

std::vector<cplx> to_points(const Constellation& cons, const std::vector<int>& idx) {
    std::vector<cplx> pts;
    pts.reserve(idx.size());
    for (int i : idx) pts.push_back(cons.point(i));
    return pts;
}

}  // namespace

TrialOutcome run_trial(const SystemConfig& cfg, const SimOptions& opt, std::uint64_t seed,
                       std::uint64_t trial_index) {
    auto stream = [&](UsageTag tag) { return RngStream::for_trial(seed, trial_index, tag); };

    auto ch_rng = stream(UsageTag::channel);
    const ChannelRealization ch = sample_channel(cfg.n1, cfg.n2, cfg.nr, ch_rng);

    auto data_rng = stream(UsageTag::data_symbols);
    const auto sym1 = draw_symbols(cfg, data_rng);
    const auto sym2 = draw_symbols(cfg, data_rng);
    const CMat c1 = encode(cfg.code, to_points(cfg.constellation, sym1), cfg.symbol_energy(1));
    const CMat c2 = encode(cfg.code, to_points(cfg.constellation, sym2), cfg.symbol_energy(2));

    const int user = opt.user;
    const int partner = other_user(user);
    CsiEstimates csi;
    if (opt.csi == CsiMode::estimated) {
        auto p1 = stream(UsageTag::pilot_noise_phase1);
        auto p2 = stream(UsageTag::pilot_noise_phase2);
        auto p3 = stream(UsageTag::pilot_noise_phase3);
        const auto phase1 = run_phase1(cfg, ch, p1, opt.noise_scale);
        const auto phase2 = run_phase2(cfg, ch, p2, opt.noise_scale);
        const auto phase3 = run_phase3(cfg, ch, p3, opt.noise_scale);
        csi = estimate_csi(cfg, user, phase1, phase2, phase3);
    } else {
        csi = perfect_csi(cfg, user, ch);
    }

    auto relay_rng = stream(UsageTag::relay_noise);
    auto user_rng = stream(UsageTag::user_noise);
    const auto data = run_phase4(cfg, ch, c1, c2, relay_rng, user_rng, opt.noise_scale);

    DecoderInput in{data.y(user), std::move(csi), user == 1 ? c1 : c2, relay_gain(cfg), cfg.symbol_energy(partner)};
    const Decision d = opt.decoder == DecoderKind::symbolwise ? decode_symbolwise(in, cfg.code, cfg.constellation)
                                                              : decode_exhaustive(in, cfg.code, cfg.constellation);

    const auto& sent = partner == 1 ? sym1 : sym2;
    TrialOutcome out;
    for (std::size_t k = 0; k < sent.size(); ++k) {
        if (d.symbols[k] == sent[k]) continue;
        ++out.symbol_errors;
        out.bit_errors += std::popcount(cfg.constellation.label(d.symbols[k]) ^ cfg.constellation.label(sent[k]));
    }
    return out;
}

double ErrorStats::ber_sigma() const {
    if (trials == 0) return 0.0;
    const double n = static_cast<double>(trials);
    const double mean = bit_errors / n;
    const double var = std::max(0.0, bit_errors_sq / n - mean * mean);
    return std::sqrt(var / n) / (static_cast<double>(bits) / n);
}

double ErrorStats::ser_sigma() const {
    if (trials == 0) return 0.0;
    const double n = static_cast<double>(trials);
    const double mean = symbol_errors / n;
    const double var = std::max(0.0, symbol_errors_sq / n - mean * mean);
    return std::sqrt(var / n) / (static_cast<double>(symbols) / n);
}

void ErrorStats::add(const TrialOutcome& t, int bits_per_trial, int symbols_per_trial) {
    ++trials;
    bits += static_cast<std::uint64_t>(bits_per_trial);
    symbols += static_cast<std::uint64_t>(symbols_per_trial);
    bit_errors += static_cast<std::uint64_t>(t.bit_errors);
    symbol_errors += static_cast<std::uint64_t>(t.symbol_errors);
    bit_errors_sq += static_cast<double>(t.bit_errors) * t.bit_errors;
    symbol_errors_sq += static_cast<double>(t.symbol_errors) * t.symbol_errors;
}

void ErrorStats::merge(const ErrorStats& o) {
    trials += o.trials;
    bits += o.bits;
    symbols += o.symbols;
    bit_errors += o.bit_errors;
    symbol_errors += o.symbol_errors;
    bit_errors_sq += o.bit_errors_sq;
    symbol_errors_sq += o.symbol_errors_sq;
}

SystemConfig at_snr(SystemConfig base, double snr_db) {
    base.gamma_bar_1 = base.gamma_bar_2 = std::pow(10.0, snr_db / 10.0);
    return base;
}

ErrorStats run_point(const SystemConfig& cfg, const SimOptions& opt, const CampaignOptions& copt, double snr_db) {
    cfg.validate();
    const int symbols_per_trial = cfg.code.m_symbols;
    const int bits_per_trial = symbols_per_trial * cfg.constellation.bits_per_symbol();
    const std::uint64_t batch = std::max<std::uint64_t>(1, copt.batch_trials);
    const std::uint64_t max_trials = copt.stop.max_trials;
    const std::uint64_t n_batches = (max_trials + batch - 1) / batch;
    // Batches evaluated per round; fixed so that rounds never depend on the worker count.
    constexpr std::uint64_t kRound = 32;
    const int workers = std::max(1, copt.workers);

    ErrorStats total;
    total.snr_db = snr_db;
    for (std::uint64_t first = 0; first < n_batches; first += kRound) {
        const std::uint64_t count = std::min(kRound, n_batches - first);
        std::vector<ErrorStats> results(count);
        std::atomic<std::uint64_t> next{0};
        auto work = [&] {
            for (std::uint64_t b = next++; b < count; b = next++) {
                const std::uint64_t begin = (first + b) * batch;
                const std::uint64_t end = std::min(begin + batch, max_trials);
                ErrorStats& st = results[b];
                for (std::uint64_t t = begin; t < end; ++t)
                    st.add(run_trial(cfg, opt, copt.seed, t), bits_per_trial, symbols_per_trial);
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        }
        for (const auto& r : results) {
            total.merge(r);
            if (total.symbol_errors >= copt.stop.min_errors) return total;
        }
    }
    return total;
}

std::vector<ErrorStats> run_campaign(const SystemConfig& base, std::span<const double> snr_db_grid,
                                     const SimOptions& opt, const CampaignOptions& copt,
                                     const std::function<void(const ErrorStats&)>& on_point) {
    std::vector<ErrorStats> out;
    for (std::size_t i = 0; i < snr_db_grid.size(); ++i) {
        CampaignOptions point_opt = copt;
        point_opt.seed = mix64(copt.seed + 0x9e3779b97f4a7c15ULL * (i + 1));
        out.push_back(run_point(at_snr(base, snr_db_grid[i]), opt, point_opt, snr_db_grid[i]));
        if (on_point) on_point(out.back());
    }
    return out;
}

std::vector<PointComparison> compare(std::span<const ErrorStats> sim, std::span<const double> analytic, bool use_ber,
                                     double threshold) {
    if (sim.size() != analytic.size()) throw DimensionMismatch("compare: curves have different lengths");
    std::vector<PointComparison> out;
    for (std::size_t i = 0; i < sim.size(); ++i) {
        PointComparison pc;
        pc.snr_db = sim[i].snr_db;
        pc.simulated = use_ber ? sim[i].ber() : sim[i].ser();
        pc.analytic = analytic[i];
        pc.sigma = use_ber ? sim[i].ber_sigma() : sim[i].ser_sigma();
        const double diff = pc.simulated - pc.analytic;
        if (diff == 0.0)
            pc.z = 0.0;
        else if (pc.sigma > 0.0)
            pc.z = diff / pc.sigma;
        else
            pc.z = std::copysign(std::numeric_limits<double>::infinity(), diff);
        pc.flagged = std::abs(pc.z) > threshold;
        out.push_back(pc);
    }
    return out;
}

}  // namespace twr
