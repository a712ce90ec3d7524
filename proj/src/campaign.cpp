#include "twr/campaign.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twr/analytic.hpp"
#include "twr/error.hpp"
#include "twr/relay.hpp"
#include "twr/specfun.hpp"

namespace twr {

namespace {

constexpr Mode kAllModes[] = {Mode::sim_perfect_csi, Mode::sim_estimated_csi, Mode::analytic_perfect_csi,
                              Mode::analytic_estimated_csi, Mode::analytic_asymptotic};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
    T value{};
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

struct LineContext {
    int line;
    std::string key;

    [[noreturn]] void fail(const std::string& msg) const { throw ConfigError(key + ": " + msg, line); }

    template <class T>
    T number(std::string_view s) const {
        const auto v = parse_number<T>(s);
        if (!v) fail("'" + std::string(s) + "' is not a valid number");
        return *v;
    }

    int positive_int(std::string_view s) const {
        const int v = number<int>(s);
        if (v < 1) fail("must be a positive integer");
        return v;
    }

    /// Comma-separated items; an item "start:step:stop" expands to an inclusive range.
    std::vector<double> real_list(std::string_view s) const {
        std::vector<double> out;
        if (trim(s).empty()) return out;
        for (auto item : split(s, ',')) {
            const auto parts = split(item, ':');
            if (parts.size() == 1) {
                out.push_back(number<double>(parts[0]));
            } else if (parts.size() == 3) {
                const double start = number<double>(parts[0]);
                const double step = number<double>(parts[1]);
                const double stop = number<double>(parts[2]);
                if (!(step > 0.0)) fail("range step must be positive");
                const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
                for (long k = 0; k <= count; ++k) out.push_back(start + static_cast<double>(k) * step);
            } else {
                fail("malformed list item '" + std::string(item) + "'");
            }
        }
        return out;
    }
};

void apply_scenario_key(CampaignSpec& spec, const LineContext& ctx, std::string_view value) {
    SystemConfig& c = spec.scenario;
    const std::string& k = ctx.key;
    if (k == "n1") {
        c.n1 = ctx.positive_int(value);
    } else if (k == "n2") {
        c.n2 = ctx.positive_int(value);
    } else if (k == "nr") {
        c.nr = ctx.positive_int(value);
    } else if (k == "mp") {
        c.mp = ctx.positive_int(value);
    } else if (k == "np1") {
        c.np1 = ctx.positive_int(value);
    } else if (k == "np2") {
        c.np2 = ctx.positive_int(value);
    } else if (k == "np") {
        c.np1 = c.np2 = ctx.positive_int(value);
    } else if (k == "relay_gain") {
        if (value == "auto") {
            c.fixed_gain.reset();
        } else {
            const double a = ctx.number<double>(value);
            if (!(a > 0.0)) ctx.fail("must be positive or 'auto'");
            c.fixed_gain = a;
        }
    } else if (k == "relay_power") {
        c.relay_power = ctx.number<double>(value);
        if (!(c.relay_power > 0.0)) ctx.fail("must be positive");
    } else if (k == "code") {
        try {
            c.code = OstbcCode::by_name(std::string(value));
        } catch (const Error& e) {
            ctx.fail(e.what());
        }
    } else if (k == "constellation") {
        try {
            c.constellation = Constellation::by_name(std::string(value));
        } catch (const Error& e) {
            ctx.fail(e.what());
        }
    } else if (k == "pilot_power") {
        if (value == "matched")
            c.pilot_power = PilotPower::matched;
        else if (value == "unit")
            c.pilot_power = PilotPower::unit;
        else
            ctx.fail("expected 'matched' or 'unit'");
    } else if (k == "user") {
        spec.user = ctx.number<int>(value);
        if (spec.user != 1 && spec.user != 2) ctx.fail("must be 1 or 2");
    } else {
        ctx.fail("unknown key in [scenario]");
    }
}

void apply_campaign_key(CampaignSpec& spec, const LineContext& ctx, std::string_view value) {
    const std::string& k = ctx.key;
    if (k == "snr_db") {
        spec.snr_db = ctx.real_list(value);
        if (spec.snr_db.empty()) ctx.fail("SNR grid is empty");
        for (std::size_t i = 1; i < spec.snr_db.size(); ++i)
            if (!(spec.snr_db[i] > spec.snr_db[i - 1])) ctx.fail("SNR grid must be strictly increasing");
    } else if (k == "modes") {
        spec.modes.clear();
        for (auto item : split(value, ',')) {
            std::vector<Mode> add;
            if (item == "all")
                add = {Mode::sim_perfect_csi, Mode::sim_estimated_csi, Mode::analytic_perfect_csi,
                       Mode::analytic_estimated_csi};
            else if (item == "analytic")
                add = {Mode::analytic_perfect_csi, Mode::analytic_estimated_csi};
            else if (auto m = mode_from_name(item))
                add = {*m};
            else
                ctx.fail("unknown mode '" + std::string(item) + "'");
            for (Mode m : add)
                if (std::find(spec.modes.begin(), spec.modes.end(), m) == spec.modes.end()) spec.modes.push_back(m);
        }
        if (spec.modes.empty()) ctx.fail("at least one mode is required");
    } else if (k == "np_sweep") {
        spec.np_sweep.clear();
        for (double v : ctx.real_list(value)) {
            if (v < 1.0 || v != std::floor(v)) ctx.fail("pilot repetitions must be positive integers");
            spec.np_sweep.push_back(static_cast<int>(v));
        }
    } else if (k == "seed") {
        spec.seed = ctx.number<std::uint64_t>(value);
    } else if (k == "max_trials") {
        spec.stop.max_trials = ctx.number<std::uint64_t>(value);
        if (spec.stop.max_trials == 0) ctx.fail("must be positive");
    } else if (k == "min_errors") {
        spec.stop.min_errors = ctx.number<std::uint64_t>(value);
    } else if (k == "decoder") {
        if (value == "symbolwise")
            spec.decoder = DecoderKind::symbolwise;
        else if (value == "exhaustive")
            spec.decoder = DecoderKind::exhaustive;
        else
            ctx.fail("expected 'symbolwise' or 'exhaustive'");
    } else if (k == "workers") {
        spec.workers = ctx.positive_int(value);
    } else if (k == "output") {
        if (value.empty()) ctx.fail("must not be empty");
        spec.output = std::string(value);
    } else if (k == "format") {
        if (value == "csv")
            spec.format = OutputFormat::csv;
        else if (value == "jsonl")
            spec.format = OutputFormat::jsonl;
        else
            ctx.fail("expected 'csv' or 'jsonl'");
    } else {
        ctx.fail("unknown key in [campaign]");
    }
}

void apply_manifest_key(const LineContext& ctx, std::string_view value) {
    if (ctx.key == "schema_version") {
        if (ctx.number<int>(value) != kResultSchemaVersion) ctx.fail("unsupported schema version");
    } else if (ctx.key != "artifact_version") {
        ctx.fail("unknown key in [manifest]");
    }
}

bool is_bpsk(const Constellation& c) { return c.modulation() == Modulation::psk && c.order() == 2; }

bool is_q1(const CampaignSpec& spec) { return std::min(spec.scenario.nr, spec.scenario.n(spec.user)) == 1; }

double rate_from_mgf(const std::function<double(double)>& m, const Constellation& cons) {
    return cons.modulation() == Modulation::psk ? ser_mpsk(m, cons.order()) : ser_mqam(m, cons.order());
}

}  // namespace

std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::sim_perfect_csi: return "sim-perfect-csi";
        case Mode::sim_estimated_csi: return "sim-estimated-csi";
        case Mode::analytic_perfect_csi: return "analytic-perfect-csi";
        case Mode::analytic_estimated_csi: return "analytic-estimated-csi";
        case Mode::analytic_asymptotic: return "analytic-asymptotic";
    }
    return "?";
}

std::optional<Mode> mode_from_name(std::string_view name) {
    for (Mode m : kAllModes)
        if (mode_name(m) == name) return m;
    return std::nullopt;
}

bool mode_uses_estimated_csi(Mode m) {
    return m == Mode::sim_estimated_csi || m == Mode::analytic_estimated_csi || m == Mode::analytic_asymptotic;
}

void CampaignSpec::validate() const {
    if (modes.empty()) throw ConfigError("modes: at least one mode is required");
    if (snr_db.empty()) throw ConfigError("snr_db: SNR grid is empty");
    for (std::size_t i = 1; i < snr_db.size(); ++i)
        if (!(snr_db[i] > snr_db[i - 1])) throw ConfigError("snr_db: SNR grid must be strictly increasing");
    if (user != 1 && user != 2) throw ConfigError("user: must be 1 or 2");
    if (!scenario.fixed_gain && !(scenario.relay_power > 0.0))
        throw ConfigError("relay_gain: 'auto' needs a positive relay_power");
    try {
        scenario.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("scenario: ") + e.what());
    }
    if (std::find(modes.begin(), modes.end(), Mode::analytic_asymptotic) != modes.end() && !is_q1(*this))
        throw ConfigError("modes: analytic-asymptotic needs min(nr, n_user) = 1");
    if (decoder == DecoderKind::exhaustive) {
        const double candidates = std::pow(scenario.constellation.order(), scenario.code.m_symbols);
        if (candidates > 65536.0) throw ConfigError("decoder: exhaustive search space too large");
    }
}

CampaignSpec parse_spec(std::string_view text) {
    CampaignSpec spec;
    spec.modes.clear();
    std::string section;
    std::set<std::string> seen;
    int line_no = 0;
    bool have_grid = false;
    bool have_modes = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("malformed section header", line_no);
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "scenario" && section != "campaign" && section != "manifest")
                throw ConfigError("unknown section [" + section + "]", line_no);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
        LineContext ctx{line_no, std::string(trim(line.substr(0, eq)))};
        const auto value = trim(line.substr(eq + 1));
        if (ctx.key.empty()) throw ConfigError("missing key", line_no);
        if (section.empty()) ctx.fail("key outside of any section");
        if (!seen.insert(section + "." + ctx.key).second) ctx.fail("duplicate key");
        if (section == "scenario") {
            apply_scenario_key(spec, ctx, value);
        } else if (section == "campaign") {
            apply_campaign_key(spec, ctx, value);
            have_grid |= ctx.key == "snr_db";
            have_modes |= ctx.key == "modes";
        } else {
            apply_manifest_key(ctx, value);
        }
    }
    if (!have_grid) throw ConfigError("snr_db: missing");
    if (!have_modes) throw ConfigError("modes: missing");
    spec.validate();
    return spec;
}

CampaignSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open spec file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

std::string write_spec(const CampaignSpec& spec) {
    const SystemConfig& c = spec.scenario;
    std::ostringstream o;
    auto join = [](const auto& xs, auto fmt) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + fmt(xs[i]);
        return s;
    };
    o << "[manifest]\n"
      << "schema_version = " << kResultSchemaVersion << "\n"
      << "artifact_version = " << kArtifactVersion << "\n\n"
      << "[scenario]\n"
      << "n1 = " << c.n1 << "\n"
      << "n2 = " << c.n2 << "\n"
      << "nr = " << c.nr << "\n"
      << "mp = " << c.mp << "\n"
      << "np1 = " << c.np1 << "\n"
      << "np2 = " << c.np2 << "\n"
      << "relay_gain = " << (c.fixed_gain ? format_double(*c.fixed_gain) : std::string("auto")) << "\n";
    if (c.relay_power > 0.0) o << "relay_power = " << format_double(c.relay_power) << "\n";
    o << "code = " << c.code.name << "\n"
      << "constellation = " << c.constellation.name() << "\n"
      << "pilot_power = " << (c.pilot_power == PilotPower::matched ? "matched" : "unit") << "\n"
      << "user = " << spec.user << "\n\n"
      << "[campaign]\n"
      << "snr_db = " << join(spec.snr_db, format_double) << "\n"
      << "modes = " << join(spec.modes, [](Mode m) { return std::string(mode_name(m)); }) << "\n";
    if (!spec.np_sweep.empty())
        o << "np_sweep = " << join(spec.np_sweep, [](int v) { return std::to_string(v); }) << "\n";
    o << "seed = " << spec.seed << "\n"
      << "max_trials = " << spec.stop.max_trials << "\n"
      << "min_errors = " << spec.stop.min_errors << "\n"
      << "decoder = " << (spec.decoder == DecoderKind::symbolwise ? "symbolwise" : "exhaustive") << "\n"
      << "workers = " << spec.workers << "\n"
      << "output = " << spec.output << "\n"
      << "format = " << (spec.format == OutputFormat::csv ? "csv" : "jsonl") << "\n";
    return o.str();
}

std::vector<ResultRecord> execute(const CampaignSpec& spec, const std::function<void(const ResultRecord&)>& on_record) {
    spec.validate();
    std::vector<ResultRecord> out;
    auto emit = [&](ResultRecord r) {
        if (on_record) on_record(r);
        out.push_back(std::move(r));
    };

    const std::vector<int> sweep = spec.np_sweep.empty() ? std::vector<int>{0} : spec.np_sweep;
    const Constellation& cons = spec.scenario.constellation;
    const bool bpsk = is_bpsk(cons);

    for (std::size_t si = 0; si < sweep.size(); ++si) {
        SystemConfig cfg = spec.scenario;
        if (sweep[si] > 0) cfg.np1 = cfg.np2 = sweep[si];
        const int np = cfg.np(spec.user);
        for (Mode mode : spec.modes) {
            // Perfect-CSI curves do not depend on the pilot length; emit them once.
            if (si > 0 && !mode_uses_estimated_csi(mode)) continue;
            if (mode == Mode::sim_perfect_csi || mode == Mode::sim_estimated_csi) {
                SimOptions opt;
                opt.csi = mode == Mode::sim_perfect_csi ? CsiMode::perfect : CsiMode::estimated;
                opt.decoder = spec.decoder;
                opt.user = spec.user;
                CampaignOptions copt;
                copt.seed = spec.seed;
                copt.workers = spec.workers;
                copt.stop = spec.stop;
                run_campaign(cfg, spec.snr_db, opt, copt, [&](const ErrorStats& st) {
                    ResultRecord r;
                    r.snr_db = st.snr_db;
                    r.mode = mode;
                    r.np = np;
                    r.ber = st.ber();
                    r.ser = st.ser();
                    r.ci95 = bpsk ? st.ber_ci95() : st.ser_ci95();
                    r.trials = st.trials;
                    r.bit_errors = st.bit_errors;
                    r.symbol_errors = st.symbol_errors;
                    emit(r);
                });
                continue;
            }
            for (double db : spec.snr_db) {
                const SystemConfig at = at_snr(cfg, db);
                const SnrModel model = SnrModel::from_config(at, spec.user, mode == Mode::analytic_perfect_csi);
                double rate;
                if (mode == Mode::analytic_asymptotic)
                    rate = rate_from_mgf([&](double s) { return mgf_asymptotic_q1(model, s); }, cons);
                else
                    rate = error_rate(model, cons);
                ResultRecord r;
                r.snr_db = db;
                r.mode = mode;
                r.np = np;
                if (bpsk) r.ber = rate;
                r.ser = rate;
                emit(r);
            }
        }
    }
    return out;
}

std::string format_csv(const std::vector<ResultRecord>& records) {
    std::string s = "# twr-results schema " + std::to_string(kResultSchemaVersion) + "\n";
    s += "snr_db,mode,np,ber,ser,ci95,trials,bit_errors,symbol_errors\n";
    for (const auto& r : records) {
        s += format_double(r.snr_db) + ',' + std::string(mode_name(r.mode)) + ',' + std::to_string(r.np) + ',' +
             (r.ber ? format_double(*r.ber) : std::string()) + ',' + format_double(r.ser) + ',' +
             format_double(r.ci95) + ',' + std::to_string(r.trials) + ',' + std::to_string(r.bit_errors) + ',' +
             std::to_string(r.symbol_errors) + '\n';
    }
    return s;
}

std::string format_jsonl(const std::vector<ResultRecord>& records) {
    std::string s;
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["schema"] = kResultSchemaVersion;
        j["snr_db"] = r.snr_db;
        j["mode"] = mode_name(r.mode);
        j["np"] = r.np;
        j["ber"] = r.ber ? nlohmann::ordered_json(*r.ber) : nlohmann::ordered_json(nullptr);
        j["ser"] = r.ser;
        j["ci95"] = r.ci95;
        j["trials"] = r.trials;
        j["bit_errors"] = r.bit_errors;
        j["symbol_errors"] = r.symbol_errors;
        s += j.dump() + '\n';
    }
    return s;
}

std::vector<ResultRecord> parse_results(std::string_view text) {
    std::vector<ResultRecord> out;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return out;
    const bool jsonl = text[first] == '{';
    bool header_seen = jsonl;
    int line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        ResultRecord r;
        try {
            if (jsonl) {
                const auto j = nlohmann::json::parse(line);
                if (j.at("schema").get<int>() != kResultSchemaVersion)
                    throw ConfigError("unsupported schema version", line_no);
                r.snr_db = j.at("snr_db").get<double>();
                const auto m = mode_from_name(j.at("mode").get<std::string>());
                if (!m) throw ConfigError("unknown mode", line_no);
                r.mode = *m;
                r.np = j.at("np").get<int>();
                if (!j.at("ber").is_null()) r.ber = j.at("ber").get<double>();
                r.ser = j.at("ser").get<double>();
                r.ci95 = j.at("ci95").get<double>();
                r.trials = j.at("trials").get<std::uint64_t>();
                r.bit_errors = j.at("bit_errors").get<std::uint64_t>();
                r.symbol_errors = j.at("symbol_errors").get<std::uint64_t>();
            } else {
                if (!header_seen) {
                    if (line != "snr_db,mode,np,ber,ser,ci95,trials,bit_errors,symbol_errors")
                        throw ConfigError("unexpected CSV header", line_no);
                    header_seen = true;
                    continue;
                }
                const auto f = split(line, ',');
                if (f.size() != 9) throw ConfigError("expected 9 fields", line_no);
                LineContext ctx{line_no, "record"};
                r.snr_db = ctx.number<double>(f[0]);
                const auto m = mode_from_name(f[1]);
                if (!m) throw ConfigError("unknown mode", line_no);
                r.mode = *m;
                r.np = ctx.number<int>(f[2]);
                if (!f[3].empty()) r.ber = ctx.number<double>(f[3]);
                r.ser = ctx.number<double>(f[4]);
                r.ci95 = ctx.number<double>(f[5]);
                r.trials = ctx.number<std::uint64_t>(f[6]);
                r.bit_errors = ctx.number<std::uint64_t>(f[7]);
                r.symbol_errors = ctx.number<std::uint64_t>(f[8]);
            }
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("bad JSON record: ") + e.what(), line_no);
        }
        out.push_back(r);
    }
    return out;
}

std::vector<SlopeLine> slope_report(const std::vector<ResultRecord>& records, int points,
                                    const std::optional<CampaignSpec>& scenario) {
    std::vector<std::pair<Mode, int>> order;
    std::map<std::pair<Mode, int>, std::vector<CurvePoint>> curves;
    for (const auto& r : records) {
        const auto key = std::make_pair(r.mode, r.np);
        if (!curves.count(key)) order.push_back(key);
        const double rate = r.ber ? *r.ber : r.ser;
        auto& curve = curves[key];
        if (rate > 0.0) curve.push_back({r.snr_db, rate});
    }
    std::optional<DiversityOrder> theory;
    if (scenario && is_q1(*scenario)) {
        SystemConfig cfg = scenario->scenario;
        theory = diversity_order(SnrModel::from_config(cfg, scenario->user, true));
    }
    std::vector<SlopeLine> out;
    for (const auto& key : order) {
        const auto& curve = curves[key];
        if (curve.size() < 2)
            throw InsufficientData(std::string(mode_name(key.first)) + ": fewer than two nonzero points");
        const int k = std::min(points, static_cast<int>(curve.size()));
        out.push_back({key.first, key.second, slope_estimate(curve, k), k, theory});
    }
    return out;
}

bool run_selftest(std::ostream& out) {
    bool all = true;
    auto check = [&](const std::string& name, bool ok, double detail) {
        out << (ok ? "PASS " : "FAIL ") << name << " (" << detail << ")\n";
        all &= ok;
    };

    const SnrModel m222 = SnrModel::estimated(2, 2, 2, 1.0, 10.0, 1.0, 1, 1);
    const double m0 = mgf(m222, 0.0);
    check("mgf(0) = 1", std::abs(m0 - 1.0) <= 1e-9, m0);

    const MgfEvaluator ev(m222, {1e-12, false, 1e-6});
    double worst = 0.0;
    for (double s : {0.01, 1.0, 100.0})
        for (int t = 1; t <= 2; ++t)
            for (int v = 1; v <= 2; ++v) {
                const double qa = ev.entry_quadrature(t, v, s);
                const double cf = ev.entry_closed_form(t, v, s);
                worst = std::max(worst, std::abs(qa - cf) / std::abs(cf));
            }
    check("hankel entries: quadrature vs closed form", worst <= 1e-6, worst);

    // e E1(1), from the series E1(1) = -gamma - sum (-1)^k / (k k!).
    double e1 = -0.57721566490153286;
    double term = 1.0;
    for (int k = 1; k < 40; ++k) {
        term /= k;
        e1 -= ((k % 2) ? -1.0 : 1.0) * term / k;
    }
    const double u111 = tricomi_u(1.0, 1.0, 1.0);
    check("U(1,1,1) = e E1(1)", std::abs(u111 - std::exp(1.0) * e1) <= 1e-8, u111);

    const SnrModel m212 = SnrModel::estimated(2, 1, 2, 1.0, 10.0, 1.0, 1, 1);
    const double cf = bpsk_q1_closed_form(m212);
    const double qd = ser_mpsk(m212, 2);
    check("BPSK closed form vs quadrature", std::abs(cf - qd) <= 1e-8, cf - qd);

    SystemConfig cfg;
    cfg.constellation = Constellation::psk(4);
    cfg = at_snr(cfg, 10.0);
    int errors = 0;
    for (std::uint64_t t = 0; t < 64; ++t) {
        errors += run_trial(cfg, {CsiMode::estimated, DecoderKind::symbolwise, 1, 0.0}, 7, t).symbol_errors;
        errors += run_trial(cfg, {CsiMode::perfect, DecoderKind::exhaustive, 2, 0.0}, 7, t).symbol_errors;
    }
    check("noiseless pipeline decodes without error", errors == 0, errors);
    return all;
}

}  // namespace twr
