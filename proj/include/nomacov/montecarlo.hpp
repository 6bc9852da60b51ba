#pragma once

#include "nomacov/analytics_terrestrial.hpp"
#include "nomacov/channel.hpp"
#include "nomacov/config.hpp"

#include <cstdint>
#include <vector>

namespace nomacov {

enum class Tier { Terrestrial, Aerial };

struct SimEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct degenerate_coverage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-tier outcome of the SIC decoding-chain simulation.
/// per-device "conditional" coverage is the marginal per-stage frequency
/// P(SINR_i > tau_i); cumulative is its running product (the overall
/// coverage). joint_successes counts trials where every stage b <= i
/// succeeded; mean_cond_sinr is the SINR average over own-stage successes.
struct TierSim {
    CoverageReport report;
    std::vector<std::uint64_t> stage_successes;
    std::vector<std::uint64_t> joint_successes;
    std::vector<double> mean_cond_sinr;
};

struct SimResult {
    TierSim terrestrial;
    TierSim aerial;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct SimOptions {
    bool parallel = true;
    std::uint64_t block = 8192; // trials per reduction block (fixed, so that
                                // results do not depend on the worker count)
};

/// Full-network SIC simulation: per trial draw distances and gains for both
/// tiers, evaluate every decode stage's SINR against its threshold
/// (interference = farther same-tier devices + the whole other tier + noise).
SimResult run_coverage_sim(const NetworkConfig& cfg, std::uint64_t trials,
                           std::uint64_t seed, const SimOptions& opts = {});

/// Straight-line serial implementation kept as the reference for the
/// OpenMP path; must produce bit-identical results.
SimResult run_coverage_sim_serial(const NetworkConfig& cfg, std::uint64_t trials,
                                  std::uint64_t seed);

/// Monte Carlo estimate of E[exp(-s I)] where I is the received
/// interference power from the devices of `tier` with zone index >=
/// first_zone (same samplers the analytics are cross-checked against).
SimEstimate estimate_laplace_mc(double s, Tier tier, int first_zone,
                                const NetworkConfig& cfg, std::uint64_t trials,
                                std::uint64_t seed);

/// Monte Carlo OMA coverage (noise-only SNR event at 1/M bandwidth share).
std::vector<SimEstimate> mc_oma_coverage(const NetworkConfig& cfg,
                                         std::uint64_t trials, std::uint64_t seed);

enum class ThroughputMode { OutageSumRate, FiniteBlocklength };
enum class SinrConvention { Threshold, MeanConditional };

struct ThroughputReport {
    std::vector<double> per_device_rate; // BPCU
    double sum_rate = 0.0;               // BPCU
    double packet_length = 0.0;          // symbols; may be infinity
    ThroughputMode mode = ThroughputMode::OutageSumRate;
    Tier tier = Tier::Terrestrial;
    SinrConvention convention = SinrConvention::Threshold;
};

/// Outage sum rate: sum_i (overall coverage of i) x (target rate in BPCU).
ThroughputReport outage_sum_rate(const NetworkConfig& cfg, Tier tier,
                                 std::uint64_t trials, std::uint64_t seed);

/// Finite-blocklength achievable rate (normal approximation):
///   log2(1+sinr) - sqrt(V/N_f) Qinv(P_i) / ln 2,  V = 1 - (1+sinr)^-2,
/// clamped at zero from below. N_f may be infinity (no penalty).
double finite_blocklength_rate(double sinr, double packet_length, double p_outage);

/// Network throughput: per-device finite-blocklength rates summed, with
/// P_i = 1 - overall coverage and the SINR operand chosen by `convention`
/// (the decode threshold tau_i, or the simulated own-stage conditional mean).
ThroughputReport network_throughput(const NetworkConfig& cfg, Tier tier,
                                    double packet_length, std::uint64_t trials,
                                    std::uint64_t seed,
                                    SinrConvention convention = SinrConvention::Threshold);

} // namespace nomacov
