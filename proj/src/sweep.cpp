#include "nomacov/sweep.hpp"

#include "nomacov/analytics_aerial.hpp"
#include "nomacov/analytics_terrestrial.hpp"
#include "nomacov/quadrature.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace nomacov {

std::string to_string(Tier t) {
    return t == Tier::Terrestrial ? "terrestrial" : "aerial";
}

std::string to_string(Estimator e) {
    switch (e) {
        case Estimator::Exact: return "exact";
        case Estimator::GaussChebyshev: return "gauss-chebyshev";
        case Estimator::LowRate: return "low-rate";
        case Estimator::Oma: return "oma";
        case Estimator::MonteCarlo: return "monte-carlo";
        case Estimator::OutageSumRate: return "outage-sum-rate";
        case Estimator::Throughput: return "throughput";
        case Estimator::MeanSinr: return "mean-sinr";
    }
    return "?";
}

Estimator estimator_from_string(const std::string& s) {
    if (s == "exact") return Estimator::Exact;
    if (s == "gauss-chebyshev") return Estimator::GaussChebyshev;
    if (s == "low-rate") return Estimator::LowRate;
    if (s == "oma") return Estimator::Oma;
    if (s == "monte-carlo") return Estimator::MonteCarlo;
    if (s == "outage-sum-rate") return Estimator::OutageSumRate;
    if (s == "throughput") return Estimator::Throughput;
    if (s == "mean-sinr") return Estimator::MeanSinr;
    throw config_error("unknown estimator: " + s);
}

std::string to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::Tau: return "tau";
        case SweepVariable::Pg: return "P_g";
        case SweepVariable::Pu: return "P_u";
        case SweepVariable::Radius: return "R";
        case SweepVariable::FadingM: return "m";
        case SweepVariable::PacketLength: return "N_f";
        case SweepVariable::Devices: return "M";
        case SweepVariable::Point: return "point";
    }
    return "?";
}

SweepVariable sweep_variable_from_string(const std::string& s) {
    if (s == "tau") return SweepVariable::Tau;
    if (s == "P_g") return SweepVariable::Pg;
    if (s == "P_u") return SweepVariable::Pu;
    if (s == "R") return SweepVariable::Radius;
    if (s == "m") return SweepVariable::FadingM;
    if (s == "N_f") return SweepVariable::PacketLength;
    if (s == "M") return SweepVariable::Devices;
    if (s == "point") return SweepVariable::Point;
    throw config_error("unknown sweep variable: " + s);
}

void SweepSpec::validate() const {
    scenario.validate();
    if (grid.empty()) throw config_error("sweep: grid must be nonempty");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw config_error("sweep: grid must be sorted ascending");
    if (estimators.empty()) throw config_error("sweep: estimators must be nonempty");
    if (tiers.empty()) throw config_error("sweep: tiers must be nonempty");
    const bool needs_mc =
        std::any_of(estimators.begin(), estimators.end(), [](Estimator e) {
            return e == Estimator::MonteCarlo || e == Estimator::OutageSumRate ||
                   e == Estimator::Throughput || e == Estimator::MeanSinr;
        });
    if (needs_mc && trials < 1)
        throw config_error("sweep: trials must be >= 1 when a Monte Carlo estimator is selected");
    if (gc_order < 1) throw config_error("sweep: gc_order must be >= 1");
}

namespace {

std::string trim_copy(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        item = trim_copy(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

SweepSpec parse_sweep_spec(const std::string& text, const std::string& origin) {
    SweepSpec spec;
    spec.scenario = parse_config(text, origin);

    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim_copy(line);
        if (line.rfind("sweep.", 0) != 0) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(origin + ": malformed sweep key line: " + line);
        kv[trim_copy(line.substr(6, eq - 6))] = trim_copy(line.substr(eq + 1));
    }

    if (kv.count("variable")) spec.variable = sweep_variable_from_string(kv["variable"]);
    if (kv.count("grid")) {
        spec.grid.clear();
        for (const auto& it : split_list(kv["grid"]))
            spec.grid.push_back(it == "inf" ? std::numeric_limits<double>::infinity()
                                            : std::stod(it));
    }
    if (kv.count("estimators")) {
        spec.estimators.clear();
        for (const auto& it : split_list(kv["estimators"]))
            spec.estimators.push_back(estimator_from_string(it));
    }
    if (kv.count("tiers")) {
        spec.tiers.clear();
        for (const auto& it : split_list(kv["tiers"])) {
            if (it == "terrestrial") spec.tiers.push_back(Tier::Terrestrial);
            else if (it == "aerial") spec.tiers.push_back(Tier::Aerial);
            else throw config_error(origin + ": unknown tier " + it);
        }
    }
    if (kv.count("trials")) spec.trials = std::stoull(kv["trials"]);
    if (kv.count("seed")) spec.seed = std::stoull(kv["seed"]);
    if (kv.count("output")) spec.output_path = kv["output"];
    if (kv.count("couple_powers")) spec.couple_powers = kv["couple_powers"] == "true";
    if (kv.count("nf"))
        spec.packet_length = kv["nf"] == "inf" ? std::numeric_limits<double>::infinity()
                                               : std::stod(kv["nf"]);
    if (kv.count("sinr_mode")) {
        if (kv["sinr_mode"] == "threshold") spec.sinr_convention = SinrConvention::Threshold;
        else if (kv["sinr_mode"] == "mean") spec.sinr_convention = SinrConvention::MeanConditional;
        else throw config_error(origin + ": sweep.sinr_mode must be threshold|mean");
    }
    if (kv.count("gc_order")) spec.gc_order = std::stoi(kv["gc_order"]);
    if (kv.count("timing")) spec.timing = kv["timing"] == "true";

    spec.validate();
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open sweep spec: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sweep_spec(ss.str(), path);
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string opt_fmt(const std::optional<double>& x) {
    return x ? fmt(*x) : std::string();
}

NetworkConfig apply_value(const SweepSpec& spec, double v) {
    NetworkConfig cfg = spec.scenario;
    switch (spec.variable) {
        case SweepVariable::Tau:
            for (double& r : cfg.rates) r = cfg.B * std::log2(1.0 + v);
            break;
        case SweepVariable::Pg:
            cfg.P_g = dbm_to_watt(v);
            if (spec.couple_powers) cfg.P_u = dbm_to_watt(v);
            break;
        case SweepVariable::Pu:
            cfg.P_u = dbm_to_watt(v);
            if (spec.couple_powers) cfg.P_g = dbm_to_watt(v);
            break;
        case SweepVariable::Radius:
            cfg.R = v;
            break;
        case SweepVariable::FadingM:
            cfg.m.assign(cfg.M, static_cast<int>(v));
            break;
        case SweepVariable::PacketLength:
        case SweepVariable::Point:
            break; // consumed downstream / no-op
        case SweepVariable::Devices: {
            const int M = static_cast<int>(v);
            const int keep_m = cfg.m.empty() ? 1 : cfg.m.front();
            const double keep_rate = cfg.rates.empty() ? 1.5 * cfg.B : cfg.rates.front();
            cfg.M = M;
            cfg.m.assign(M, 1);
            cfg.m[0] = keep_m;
            cfg.rates.assign(M, 1.0 * cfg.B);
            cfg.rates[0] = keep_rate;
            break;
        }
    }
    cfg.validate();
    return cfg;
}

bool needs_sim(Estimator e) {
    return e == Estimator::MonteCarlo || e == Estimator::OutageSumRate ||
           e == Estimator::Throughput || e == Estimator::MeanSinr;
}

} // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult out;

    for (size_t gi = 0; gi < spec.grid.size(); ++gi) {
        const double value = spec.grid[gi];
        NetworkConfig cfg = apply_value(spec, value);
        const std::uint64_t cell_seed = spec.seed + 0x9E3779B9u * gi;

        std::optional<SimResult> sim;
        const bool any_sim =
            std::any_of(spec.estimators.begin(), spec.estimators.end(), needs_sim);
        std::string sim_error;
        if (any_sim) {
            try {
                sim = run_coverage_sim(cfg, spec.trials, cell_seed);
            } catch (const std::exception& e) {
                sim_error = e.what();
            }
        }

        for (Tier tier : spec.tiers) {
            for (Estimator est : spec.estimators) {
                const auto t_start = std::chrono::steady_clock::now();
                std::vector<SweepRow> rows;
                auto emit = [&](int device, std::optional<double> cond,
                                std::optional<double> cum, std::optional<double> se,
                                std::optional<double> extra, std::string status = "ok") {
                    SweepRow r;
                    r.value = value;
                    r.tier = tier;
                    r.device = device;
                    r.estimator = est;
                    r.conditional = cond;
                    r.cumulative = cum;
                    r.std_error = se;
                    r.extra = extra;
                    r.status = std::move(status);
                    rows.push_back(std::move(r));
                };
                auto emit_error = [&](int device, const std::string& what) {
                    emit(device, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                         "error: " + what);
                };

                try {
                    switch (est) {
                        case Estimator::Exact: {
                            std::vector<double> per(cfg.M);
                            for (int i = 1; i <= cfg.M; ++i)
                                per[i - 1] = tier == Tier::Terrestrial
                                                 ? coverage_exact(i, cfg)
                                                 : coverage_aerial_rayleigh(i, cfg);
                            const CoverageReport rep = make_report(
                                cfg, CoverageMethod::ExactQuadrature, std::move(per));
                            for (int i = 1; i <= cfg.M; ++i)
                                emit(i, rep.per_device[i - 1], rep.cumulative[i - 1],
                                     std::nullopt, std::nullopt);
                            break;
                        }
                        case Estimator::GaussChebyshev: {
                            if (tier == Tier::Aerial) break; // terrestrial corollary only
                            std::vector<double> per(cfg.M);
                            for (int i = 1; i <= cfg.M; ++i)
                                per[i - 1] = coverage_gc(i, cfg, spec.gc_order);
                            const CoverageReport rep = make_report(
                                cfg, CoverageMethod::GaussChebyshev, std::move(per));
                            for (int i = 1; i <= cfg.M; ++i)
                                emit(i, rep.per_device[i - 1], rep.cumulative[i - 1],
                                     std::nullopt, std::nullopt);
                            break;
                        }
                        case Estimator::LowRate: {
                            if (tier == Tier::Aerial) break;
                            std::vector<double> per(cfg.M);
                            for (int i = 1; i <= cfg.M; ++i)
                                per[i - 1] = coverage_low_rate(i, cfg);
                            const CoverageReport rep = make_report(
                                cfg, CoverageMethod::LowRateClosedForm, std::move(per));
                            for (int i = 1; i <= cfg.M; ++i)
                                emit(i, rep.per_device[i - 1], rep.cumulative[i - 1],
                                     std::nullopt, std::nullopt);
                            break;
                        }
                        case Estimator::Oma: {
                            if (tier == Tier::Aerial) break;
                            std::vector<double> per(cfg.M);
                            for (int i = 1; i <= cfg.M; ++i)
                                per[i - 1] = coverage_oma(i, cfg);
                            const CoverageReport rep =
                                make_report(cfg, CoverageMethod::Oma, std::move(per));
                            for (int i = 1; i <= cfg.M; ++i)
                                emit(i, rep.per_device[i - 1], rep.cumulative[i - 1],
                                     std::nullopt, std::nullopt);
                            break;
                        }
                        case Estimator::MonteCarlo: {
                            if (!sim) throw std::runtime_error(sim_error);
                            const TierSim& ts =
                                tier == Tier::Terrestrial ? sim->terrestrial : sim->aerial;
                            for (int i = 1; i <= cfg.M; ++i)
                                emit(i, ts.report.per_device[i - 1],
                                     ts.report.cumulative[i - 1],
                                     ts.report.std_error[i - 1], std::nullopt);
                            break;
                        }
                        case Estimator::OutageSumRate: {
                            if (!sim) throw std::runtime_error(sim_error);
                            const TierSim& ts =
                                tier == Tier::Terrestrial ? sim->terrestrial : sim->aerial;
                            double sum = 0.0;
                            for (int i = 1; i <= cfg.M; ++i) {
                                const double r =
                                    ts.report.cumulative[i - 1] * cfg.rate_bpcu(i);
                                sum += r;
                                emit(i, ts.report.per_device[i - 1],
                                     ts.report.cumulative[i - 1], std::nullopt, r);
                            }
                            emit(0, std::nullopt, std::nullopt, std::nullopt, sum);
                            break;
                        }
                        case Estimator::Throughput: {
                            if (!sim) throw std::runtime_error(sim_error);
                            const double nf = spec.variable == SweepVariable::PacketLength
                                                  ? value
                                                  : spec.packet_length;
                            const ThroughputReport rep = network_throughput(
                                cfg, tier, nf, spec.trials, cell_seed,
                                spec.sinr_convention);
                            const TierSim& ts =
                                tier == Tier::Terrestrial ? sim->terrestrial : sim->aerial;
                            for (int i = 1; i <= cfg.M; ++i)
                                emit(i, ts.report.per_device[i - 1],
                                     ts.report.cumulative[i - 1], std::nullopt,
                                     rep.per_device_rate[i - 1]);
                            emit(0, std::nullopt, std::nullopt, std::nullopt, rep.sum_rate);
                            break;
                        }
                        case Estimator::MeanSinr: {
                            if (!sim) throw std::runtime_error(sim_error);
                            const TierSim& ts =
                                tier == Tier::Terrestrial ? sim->terrestrial : sim->aerial;
                            for (int i = 1; i <= cfg.M; ++i)
                                emit(i, ts.report.per_device[i - 1],
                                     ts.report.cumulative[i - 1], std::nullopt,
                                     ts.mean_cond_sinr[i - 1]);
                            break;
                        }
                    }
                } catch (const std::exception& e) {
                    rows.clear();
                    emit_error(0, e.what());
                }

                const auto t_end = std::chrono::steady_clock::now();
                const double ms =
                    std::chrono::duration<double, std::milli>(t_end - t_start).count();
                for (SweepRow& r : rows) r.wall_ms = ms;
                out.rows.insert(out.rows.end(), rows.begin(), rows.end());
            }
        }
    }

    out.csv = format_rows_csv(spec, out.rows);
    if (!spec.output_path.empty()) {
        std::ofstream f(spec.output_path, std::ios::binary);
        if (!f) throw config_error("cannot write output file: " + spec.output_path);
        f << out.csv;
    }
    return out;
}

std::string format_rows_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    const NetworkConfig& c = spec.scenario;
    os << "# variable: " << to_string(spec.variable) << "\n";
    os << "# trials: " << spec.trials << "\n";
    os << "# seed: " << spec.seed << "\n";
    os << "# M: " << c.M << "\n";
    os << "# R_m: " << fmt(c.R) << "\n";
    os << "# r0_m: " << fmt(c.r0) << "\n";
    os << "# alpha_g: " << fmt(c.alpha_g) << "\n";
    os << "# alpha_u: " << fmt(c.alpha_u) << "\n";
    os << "# Pg_W: " << fmt(c.P_g) << "\n";
    os << "# Pu_W: " << fmt(c.P_u) << "\n";
    os << "# sigma2_W: " << fmt(c.sigma2) << "\n";
    os << "# B_Hz: " << fmt(c.B) << "\n";
    os << "# m_list: ";
    for (size_t i = 0; i < c.m.size(); ++i) os << (i ? "," : "") << c.m[i];
    os << "\n# rates_bps_list: ";
    for (size_t i = 0; i < c.rates.size(); ++i) os << (i ? "," : "") << fmt(c.rates[i]);
    os << "\n";
    os << "variable,value,tier,device,estimator,conditional,cumulative,std_error,extra,status";
    if (spec.timing) os << ",wall_ms";
    os << "\n";
    for (const SweepRow& r : rows) {
        os << to_string(spec.variable) << ',' << fmt(r.value) << ',' << to_string(r.tier)
           << ',' << r.device << ',' << to_string(r.estimator) << ','
           << opt_fmt(r.conditional) << ',' << opt_fmt(r.cumulative) << ','
           << opt_fmt(r.std_error) << ',' << opt_fmt(r.extra) << ',' << r.status;
        if (spec.timing) os << ',' << fmt(r.wall_ms);
        os << "\n";
    }
    return os.str();
}

} // namespace nomacov
