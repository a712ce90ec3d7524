#include <doctest.h>

#include <cmath>
#include <vector>

#include "support.hpp"
#include "twr/channel.hpp"
#include "twr/decoder.hpp"
#include "twr/error.hpp"
#include "twr/estimation.hpp"
#include "twr/relay.hpp"

using namespace twr;

namespace {

struct Setup {
    DecoderInput input;
    std::vector<int> sent;
};

// User 1 receives User 2's codeword over a random channel with the given
// noise scale; CSI is exact when `perfect`, estimated otherwise.
Setup make_trial(const SystemConfig& cfg, bool perfect, double noise_scale, RngStream& rng) {
    const auto ch = sample_channel(cfg.n1, cfg.n2, cfg.nr, rng);
    const int m = cfg.constellation.order();
    std::vector<int> own(2), sent(2);
    for (auto* v : {&own, &sent})
        for (auto& i : *v) i = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(m));
    auto points = [&](const std::vector<int>& idx) {
        return std::vector<cplx>{cfg.constellation.point(idx[0]), cfg.constellation.point(idx[1])};
    };
    const CMat c1 = encode(cfg.code, points(own), cfg.symbol_energy(1));
    const CMat c2 = encode(cfg.code, points(sent), cfg.symbol_energy(2));
    CsiEstimates csi;
    if (perfect) {
        csi = perfect_csi(cfg, 1, ch);
    } else {
        const auto p1 = run_phase1(cfg, ch, rng, noise_scale);
        const auto p2 = run_phase2(cfg, ch, rng, noise_scale);
        const auto p3 = run_phase3(cfg, ch, rng, noise_scale);
        csi = estimate_csi(cfg, 1, p1, p2, p3);
    }
    RngStream relay(rng.next_u64(), 1), user(rng.next_u64(), 2);
    const auto y = run_phase4(cfg, ch, c1, c2, relay, user, noise_scale);
    return {{y.y1, csi, c1, relay_gain(cfg), cfg.symbol_energy(2)}, sent};
}

}  // namespace

TEST_SUITE("decoder") {

TEST_CASE("noiseless reception decodes exactly") {
    RngStream rng(51, 0);
    for (const char* name : {"bpsk", "qpsk", "8psk", "16qam"}) {
        SystemConfig cfg;
        cfg.constellation = Constellation::by_name(name);
        cfg.gamma_bar_1 = cfg.gamma_bar_2 = 3.0;
        for (int t = 0; t < 30; ++t) {
            const auto s = make_trial(cfg, t % 2 == 0, 0.0, rng);
            const auto ex = decode_exhaustive(s.input, cfg.code, cfg.constellation);
            const auto sw = decode_symbolwise(s.input, cfg.code, cfg.constellation);
            CHECK(ex.symbols == s.sent);
            CHECK(sw.symbols == s.sent);
            CHECK(ex.metric < 1e-18 * (1 + s.input.y.squaredNorm()));
            CHECK(codeword_metric(s.input, cfg.code, cfg.constellation, s.sent) == doctest::Approx(ex.metric));
        }
    }
}

TEST_CASE("noiseless statistics are the transmitted symbols scaled by sqrt(E)") {
    RngStream rng(52, 0);
    SystemConfig cfg;
    cfg.constellation = Constellation::qam(16);
    cfg.gamma_bar_2 = 7.0;
    const auto s = make_trial(cfg, true, 0.0, rng);
    const auto stats = symbolwise_statistics(s.input, cfg.code);
    REQUIRE(stats.size() == 2);
    for (int n = 0; n < 2; ++n)
        CHECK(std::abs(stats[n] - std::sqrt(cfg.symbol_energy(2)) * cfg.constellation.point(s.sent[n])) < 1e-10);
}

TEST_CASE("exhaustive decision minimizes the metric over all candidates") {
    RngStream rng(53, 0);
    SystemConfig cfg;
    cfg.constellation = Constellation::psk(4);
    for (int t = 0; t < 20; ++t) {
        const auto s = make_trial(cfg, false, 1.0, rng);
        const auto d = decode_exhaustive(s.input, cfg.code, cfg.constellation);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(codeword_metric(s.input, cfg.code, cfg.constellation, {i, j}) >= d.metric);
    }
}

TEST_CASE("symbol-wise and exhaustive decoders agree on noisy estimated-CSI trials") {
    RngStream rng(54, 0);
    SystemConfig cfg;
    cfg.constellation = Constellation::psk(4);
    cfg.gamma_bar_1 = cfg.gamma_bar_2 = 3.0;
    int disagreements = 0;
    for (int t = 0; t < 2000; ++t) {
        const auto s = make_trial(cfg, false, 1.0, rng);
        const auto ex = decode_exhaustive(s.input, cfg.code, cfg.constellation);
        const auto sw = decode_symbolwise(s.input, cfg.code, cfg.constellation);
        if (ex.symbols != sw.symbols) {
            ++disagreements;
            CHECK(std::abs(ex.metric - sw.metric) < 1e-9);
        }
    }
    CHECK(disagreements <= 2);
}

TEST_CASE("exhaustive search refuses oversized candidate sets") {
    OstbcCode big = OstbcCode::alamouti();
    big.m_symbols = 3;
    big.a.push_back(big.a[0]);
    big.b.push_back(big.b[0]);
    DecoderInput in{CMat::Zero(2, 2), {}, CMat::Zero(2, 2), 1.0, 1.0};
    CHECK_THROWS_AS(decode_exhaustive(in, big, Constellation::qam(64)), SearchSpaceTooLarge);
}

}
