#pragma once

#include "nomacov/config.hpp"
#include "nomacov/montecarlo.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace nomacov {

enum class Estimator {
    Exact,
    GaussChebyshev,
    LowRate,
    Oma,
    MonteCarlo,
    OutageSumRate,
    Throughput,
    MeanSinr,
};

std::string to_string(Estimator e);
Estimator estimator_from_string(const std::string& s);

enum class SweepVariable {
    Tau,
    Pg,
    Pu,
    Radius,
    FadingM,
    PacketLength,
    Devices,
    Point, // no-op variable used for single-point evaluations
};

std::string to_string(SweepVariable v);
SweepVariable sweep_variable_from_string(const std::string& s);

/// Declarative parameter sweep driving the CLI. Grid values are applied on
/// top of the scenario config; rows come out in deterministic grid order.
struct SweepSpec {
    NetworkConfig scenario;
    SweepVariable variable = SweepVariable::Tau;
    std::vector<double> grid;
    std::vector<Estimator> estimators;
    std::vector<Tier> tiers{Tier::Terrestrial, Tier::Aerial};
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string output_path;
    bool couple_powers = false;   // P_g sweep also sets P_u (and vice versa)
    double packet_length = std::numeric_limits<double>::infinity();
    SinrConvention sinr_convention = SinrConvention::Threshold;
    int gc_order = 100;
    bool timing = false; // wall-clock column breaks byte-reproducibility; off by default

    void validate() const;
};

/// Parse a sweep spec file: ordinary config keys plus sweep.* keys
/// (variable, grid, estimators, tiers, trials, seed, output, couple_powers,
/// nf, sinr_mode, gc_order, timing).
SweepSpec load_sweep_spec(const std::string& path);
SweepSpec parse_sweep_spec(const std::string& text, const std::string& origin = "<string>");

struct SweepRow {
    double value = 0.0;
    Tier tier = Tier::Terrestrial;
    int device = 0; // 0 is the tier aggregate (sum rate rows)
    Estimator estimator = Estimator::Exact;
    std::optional<double> conditional;
    std::optional<double> cumulative;
    std::optional<double> std_error;
    std::optional<double> extra; // rate (BPCU) or mean SINR, per estimator
    std::string status = "ok";
    double wall_ms = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::string csv;
};

/// Run the sweep; when spec.output_path is set the CSV is also written there.
SweepResult run_sweep(const SweepSpec& spec);

/// Canonical row formatting shared by `eval` and `sweep` so that a
/// single-point sweep and a standalone evaluation emit identical bytes.
std::string format_rows_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);

std::string to_string(Tier t);

} // namespace nomacov
