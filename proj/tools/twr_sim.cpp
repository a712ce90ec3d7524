// Command-line front end: run campaigns, report slopes, validate specs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twr/campaign.hpp"
#include "twr/error.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitCrossCheck = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw twr::ConfigError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw twr::ConfigError("cannot write '" + path + "'");
    out << text;
}

std::string manifest_path(const std::string& result_path) { return result_path + ".manifest.ini"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-way AF MIMO relay OSTBC simulator and analytic performance tool"};
    app.require_subcommand(1);

    std::string spec_path;
    std::uint64_t seed = 0;
    int workers = 0;
    std::string out_path;
    std::string format;

    auto* run = app.add_subcommand("run", "Run a campaign spec and write results plus a manifest");
    run->add_option("--spec", spec_path, "Campaign spec file")->required()->check(CLI::ExistingFile);
    auto* seed_opt = run->add_option("--seed", seed, "Override the spec seed");
    run->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    run->add_option("--out", out_path, "Result file (default: spec output)");
    run->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
    bool quiet = false;
    run->add_flag("--quiet", quiet, "Do not stream records to stderr");

    std::string result_path;
    int points = 2;
    auto* slope = app.add_subcommand("slope", "High-SNR slope of every curve in a result file");
    slope->add_option("results", result_path, "Result file written by 'run'")->required()->check(CLI::ExistingFile);
    slope->add_option("--points,-k", points, "Number of highest-SNR points to fit")->check(CLI::Range(2, 1000));

    auto* validate = app.add_subcommand("validate", "Parse and validate a spec without running it");
    validate->add_option("--spec", spec_path, "Campaign spec file")->required()->check(CLI::ExistingFile);

    auto* selftest = app.add_subcommand("selftest", "Run the built-in numerical self-checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            twr::CampaignSpec spec = twr::load_spec(spec_path);
            if (*seed_opt) spec.seed = seed;
            if (workers > 0) spec.workers = workers;
            if (!out_path.empty()) spec.output = out_path;
            if (!format.empty()) spec.format = format == "csv" ? twr::OutputFormat::csv : twr::OutputFormat::jsonl;
            const auto records = twr::execute(spec, [&](const twr::ResultRecord& r) {
                if (quiet) return;
                std::fprintf(stderr, "%-24s np=%-3d snr=%7.2f dB  ber=%-12.5g ser=%-12.5g trials=%llu\n",
                             std::string(twr::mode_name(r.mode)).c_str(), r.np, r.snr_db, r.ber.value_or(NAN), r.ser,
                             static_cast<unsigned long long>(r.trials));
            });
            write_file(spec.output, spec.format == twr::OutputFormat::csv ? twr::format_csv(records)
                                                                          : twr::format_jsonl(records));
            write_file(manifest_path(spec.output), twr::write_spec(spec));
            std::cout << "wrote " << records.size() << " records to " << spec.output << "\n";
        } else if (*slope) {
            const auto records = twr::parse_results(read_file(result_path));
            std::optional<twr::CampaignSpec> scenario;
            if (std::filesystem::exists(manifest_path(result_path)))
                scenario = twr::load_spec(manifest_path(result_path));
            for (const auto& line : twr::slope_report(records, points, scenario)) {
                std::printf("%-24s np=%-3d slope=%.3f (top %d points)", std::string(twr::mode_name(line.mode)).c_str(),
                            line.np, line.slope, line.points);
                if (line.theory)
                    std::printf("  theory=%d%s", line.theory->order, line.theory->extrapolated ? " (extrapolated)" : "");
                std::printf("\n");
            }
        } else if (*validate) {
            const auto spec = twr::load_spec(spec_path);
            std::cout << "ok: " << spec.modes.size() << " mode(s), " << spec.snr_db.size() << " SNR point(s)\n";
        } else if (*selftest) {
            return twr::run_selftest(std::cout) ? kExitOk : kExitCrossCheck;
        }
    } catch (const twr::CrossCheckFailure& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return kExitCrossCheck;
    } catch (const twr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}
