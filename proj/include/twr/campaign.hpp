#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twr/analytic.hpp"
#include "twr/config.hpp"
#include "twr/harness.hpp"

namespace twr {

inline constexpr int kResultSchemaVersion = 1;
inline constexpr std::string_view kArtifactVersion = "1.0.0";

enum class OutputFormat { csv, jsonl };

/// Curve kinds a campaign can produce.
enum class Mode {
    sim_perfect_csi,
    sim_estimated_csi,
    analytic_perfect_csi,
    analytic_estimated_csi,
    analytic_asymptotic,
};

std::string_view mode_name(Mode m);
std::optional<Mode> mode_from_name(std::string_view name);
bool mode_uses_estimated_csi(Mode m);

struct CampaignSpec {
    SystemConfig scenario;
    int user = 1;
    std::vector<double> snr_db;
    std::vector<Mode> modes;
    std::vector<int> np_sweep;  ///< empty: use scenario np1/np2 as given
    std::uint64_t seed = 1;
    StopRule stop;
    DecoderKind decoder = DecoderKind::symbolwise;
    int workers = 1;
    std::string output = "results.csv";
    OutputFormat format = OutputFormat::csv;

    /// ConfigError (line 0) on cross-field problems.
    void validate() const;
};

/// Parses the sectioned key = value format documented in the README.
/// Throws ConfigError carrying the offending line number.
CampaignSpec parse_spec(std::string_view text);
CampaignSpec load_spec(const std::string& path);

/// Canonical spec text; parse_spec(write_spec(s)) describes the same run.
/// Also carries schema and artifact versions, so it doubles as the run manifest.
std::string write_spec(const CampaignSpec& spec);

struct ResultRecord {
    double snr_db = 0.0;
    Mode mode = Mode::sim_perfect_csi;
    int np = 1;
    std::optional<double> ber;  ///< absent for analytic non-BPSK curves
    double ser = 0.0;
    double ci95 = 0.0;          ///< 0 for analytic curves
    std::uint64_t trials = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t symbol_errors = 0;
};

/// Runs every (np, mode, SNR) combination; `on_record` sees records as they
/// are produced.
std::vector<ResultRecord> execute(const CampaignSpec& spec,
                                  const std::function<void(const ResultRecord&)>& on_record = {});

std::string format_csv(const std::vector<ResultRecord>& records);
std::string format_jsonl(const std::vector<ResultRecord>& records);

/// Reads a result file written by format_csv or format_jsonl.
std::vector<ResultRecord> parse_results(std::string_view text);

struct SlopeLine {
    Mode mode;
    int np;
    double slope;
    int points;
    std::optional<DiversityOrder> theory;
};

/// Slope of each (mode, np) curve over its `points` highest SNRs, using BER
/// when present and SER otherwise. `scenario` enables the q = 1 theoretical
/// value. InsufficientData if a curve has fewer than two usable points.
std::vector<SlopeLine> slope_report(const std::vector<ResultRecord>& records, int points,
                                    const std::optional<CampaignSpec>& scenario);

/// Quick numerical self-checks. Writes one line per check to `out`.
bool run_selftest(std::ostream& out);

}  // namespace twr
