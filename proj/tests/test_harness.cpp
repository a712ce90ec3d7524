#include <doctest.h>

#include <cmath>
#include <vector>

#include "twr/analytic.hpp"
#include "twr/harness.hpp"

using namespace twr;

TEST_SUITE("harness") {

TEST_CASE("zero noise gives zero errors at every SNR") {
    SystemConfig cfg;
    cfg.constellation = Constellation::qam(16);
    const std::vector<double> grid{0.0, 10.0, 20.0};
    CampaignOptions copt;
    copt.stop.max_trials = 3000;
    copt.batch_trials = 500;
    for (auto csi : {CsiMode::perfect, CsiMode::estimated}) {
        SimOptions opt{csi, DecoderKind::symbolwise, 2, 0.0};
        for (const auto& st : run_campaign(cfg, grid, opt, copt)) {
            CHECK(st.trials == 3000);
            CHECK(st.symbol_errors == 0);
            CHECK(st.bit_errors == 0);
        }
    }
}

TEST_CASE("results do not depend on the worker count") {
    SystemConfig cfg = at_snr(SystemConfig{}, 6.0);
    cfg.constellation = Constellation::psk(4);
    CampaignOptions copt;
    copt.seed = 99;
    copt.stop = {40000, 300};
    copt.batch_trials = 256;
    const SimOptions opt{CsiMode::estimated, DecoderKind::symbolwise, 1, 1.0};
    copt.workers = 1;
    const auto a = run_point(cfg, opt, copt, 6.0);
    copt.workers = 4;
    const auto b = run_point(cfg, opt, copt, 6.0);
    CHECK(a.trials == b.trials);
    CHECK(a.bit_errors == b.bit_errors);
    CHECK(a.symbol_errors == b.symbol_errors);
    CHECK(a.bit_errors_sq == b.bit_errors_sq);
    CHECK(a.symbol_errors >= 300);
    // Stops on the first batch boundary that reaches the error target.
    CHECK(a.trials % 256 == 0);
}

TEST_CASE("perfect-CSI BPSK at 8 dB matches the analytic BER") {
    const SystemConfig cfg = at_snr(SystemConfig{}, 8.0);
    CampaignOptions copt;
    copt.seed = 2024;
    copt.stop = {2'000'000, 400};
    const auto st = run_point(cfg, {CsiMode::perfect, DecoderKind::symbolwise, 1, 1.0}, copt, 8.0);
    const double analytic = error_rate(SnrModel::from_config(cfg, 1, true), cfg.constellation);
    CHECK(std::abs(st.ber() - analytic) <= 3 * st.ber_sigma());
}

TEST_CASE("error statistics invariants") {
    SystemConfig cfg = at_snr(SystemConfig{}, 0.0);
    cfg.constellation = Constellation::qam(16);
    CampaignOptions copt;
    copt.stop = {2000, 1'000'000};
    const auto st = run_point(cfg, {CsiMode::estimated, DecoderKind::symbolwise, 1, 1.0}, copt, 0.0);
    CHECK(st.trials == 2000);
    CHECK(st.symbols == 2 * st.trials);
    CHECK(st.bits == 8 * st.trials);
    CHECK(st.symbol_errors <= st.symbols);
    CHECK(st.bit_errors <= st.bits);
    CHECK(st.bit_errors >= st.symbol_errors);
    CHECK(st.ser() >= 0.0);
    CHECK(st.ser() <= 1.0);
    CHECK(st.ber() <= st.ser());
}

TEST_CASE("confidence half-width shrinks as 1/sqrt(trials)") {
    const SystemConfig cfg = at_snr(SystemConfig{}, 4.0);
    CampaignOptions copt;
    copt.stop = {5000, 1'000'000'000};
    const SimOptions opt{CsiMode::estimated, DecoderKind::symbolwise, 1, 1.0};
    const auto small = run_point(cfg, opt, copt, 4.0);
    copt.stop.max_trials = 20000;
    const auto large = run_point(cfg, opt, copt, 4.0);
    CHECK(small.ber_ci95() / large.ber_ci95() == doctest::Approx(2.0).epsilon(0.1));
    CHECK(small.ber_ci95() == doctest::Approx(1.96 * small.ber_sigma()));
}

TEST_CASE("compare flags deviations beyond three sigma") {
    const SystemConfig cfg = SystemConfig{};
    const std::vector<double> grid{0.0, 4.0};
    CampaignOptions copt;
    copt.stop = {400000, 300};
    const auto sim = run_campaign(cfg, grid, {CsiMode::perfect, DecoderKind::symbolwise, 1, 1.0}, copt);

    std::vector<double> same;
    for (const auto& st : sim) same.push_back(st.ber());
    for (const auto& pc : compare(sim, same, true)) {
        CHECK(pc.z == 0.0);
        CHECK_FALSE(pc.flagged);
    }

    std::vector<double> analytic, doubled;
    for (double db : grid) {
        analytic.push_back(error_rate(SnrModel::from_config(at_snr(cfg, db), 1, true), cfg.constellation));
        doubled.push_back(2 * analytic.back());
    }
    for (const auto& pc : compare(sim, analytic, true)) CHECK_FALSE(pc.flagged);
    for (const auto& pc : compare(sim, doubled, true)) CHECK(pc.flagged);
}

}
