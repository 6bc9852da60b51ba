// Command-line front end: scenario evaluation, figure sweeps, config
// validation and the analytic-vs-simulation selftest.
//
// Exit codes: 0 success, 1 validation failure, 2 numerical-convergence
// failure.

#include "nomacov/analytics_aerial.hpp"
#include "nomacov/analytics_terrestrial.hpp"
#include "nomacov/montecarlo.hpp"
#include "nomacov/quadrature.hpp"
#include "nomacov/selftest.hpp"
#include "nomacov/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace nomacov;

namespace {

NetworkConfig config_from(const std::string& path) {
    return path.empty() ? default_config() : load_config(path);
}

std::vector<Estimator> parse_estimators(const std::string& csv) {
    std::vector<Estimator> out;
    std::string item;
    std::istringstream is(csv);
    while (std::getline(is, item, ',')) {
        if (!item.empty()) out.push_back(estimator_from_string(item));
    }
    if (out.empty()) throw config_error("no estimators given");
    return out;
}

int run_eval(const std::string& config_path, const std::string& estimators,
             std::uint64_t trials, std::uint64_t seed, const std::string& out_path,
             bool timing) {
    SweepSpec spec;
    spec.scenario = config_from(config_path);
    spec.variable = SweepVariable::Point; // no-op: evaluate the scenario as-is
    spec.grid = {0.0};
    spec.estimators = parse_estimators(estimators);
    spec.trials = trials;
    spec.seed = seed;
    spec.output_path = out_path;
    spec.timing = timing;
    const SweepResult res = run_sweep(spec);
    if (out_path.empty()) std::cout << res.csv;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uplink NOMA IoT coverage analytics and Monte Carlo simulator"};
    app.require_subcommand(1);

    std::string config_path, spec_path, out_path, estimators = "exact,monte-carlo";
    std::uint64_t trials = 100000, seed = 1;
    bool timing = false;

    auto* eval = app.add_subcommand("eval", "evaluate one scenario and print CSV rows");
    eval->add_option("--config", config_path, "key-value scenario file");
    eval->add_option("--estimators", estimators, "comma list of estimators");
    eval->add_option("--trials", trials, "Monte Carlo trials");
    eval->add_option("--seed", seed, "Monte Carlo seed");
    eval->add_option("--out", out_path, "write CSV here instead of stdout");
    eval->add_flag("--timing", timing, "append a wall_ms column (breaks hash stability)");

    auto* sweep = app.add_subcommand("sweep", "run a declarative parameter sweep");
    sweep->add_option("--spec", spec_path, "sweep spec file")->required();
    sweep->add_option("--config", config_path, "base scenario (spec keys win)");
    sweep->add_option("--trials", trials, "override sweep.trials");
    sweep->add_option("--seed", seed, "override sweep.seed");
    sweep->add_option("--out", out_path, "override sweep.output");
    sweep->add_flag("--timing", timing, "append a wall_ms column");

    auto* validate = app.add_subcommand("validate", "check a scenario file");
    validate->add_option("--config", config_path, "key-value scenario file")->required();

    auto* selftest = app.add_subcommand("selftest",
                                        "analytic-vs-Monte-Carlo regression grid");
    selftest->add_option("--trials", trials, "trials per grid point");
    selftest->add_option("--seed", seed, "simulation seed");
    selftest->add_option("--out", out_path, "also write the report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) {
            return run_eval(config_path, estimators, trials, seed, out_path, timing);
        }
        if (sweep->parsed()) {
            SweepSpec spec = load_sweep_spec(spec_path);
            if (!config_path.empty()) {
                // --config provides the scenario; spec file keys already
                // overrode defaults when the spec was parsed, so only the
                // scenario base is replaced here.
                spec.scenario = load_config(config_path);
                spec.validate();
            }
            if (sweep->count("--trials")) spec.trials = trials;
            if (sweep->count("--seed")) spec.seed = seed;
            if (!out_path.empty()) spec.output_path = out_path;
            if (timing) spec.timing = true;
            const SweepResult res = run_sweep(spec);
            if (spec.output_path.empty()) std::cout << res.csv;
            return 0;
        }
        if (validate->parsed()) {
            load_config(config_path);
            std::cout << "ok\n";
            return 0;
        }
        if (selftest->parsed()) {
            const SelftestResult res =
                run_selftest(selftest->count("--trials") ? trials : 200000, seed);
            std::cout << res.report;
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::binary);
                f << res.report;
            }
            return res.failures == 0 ? 0 : 1;
        }
    } catch (const config_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const convergence_error& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
