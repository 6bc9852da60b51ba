#pragma once

#include "nomacov/config.hpp"
#include "nomacov/geometry.hpp"
#include "nomacov/rng.hpp"

#include <cstdint>
#include <vector>

namespace nomacov {

/// Bounded path-loss law: d^-alpha for d > r0, r0^-alpha otherwise.
double path_loss(double d, double alpha, double r0);

/// Exponential(1) power gain (Rayleigh amplitude) from a uniform u in (0,1].
double sample_rayleigh_power(double u);

/// Unit-mean Gamma(m) power gain (Nakagami-m amplitude), integer m >= 1,
/// realized as the mean of m exponential(1) draws pulled from the given
/// (trial, stream0...stream0+m-1) substreams.
double sample_nakagami_power(int m, const CounterRng& rng, std::uint64_t trial,
                             std::uint64_t stream0);

/// One network realization: per-tier distances and small-scale power gains.
struct ChannelDraw {
    std::vector<double> d_g; // terrestrial distances, size M
    std::vector<double> d_u; // aerial distances, size M
    std::vector<double> g_g; // Rayleigh power gains |h_g,i|^2
    std::vector<double> g_u; // Nakagami power gains |h_u,i|^2
};

ChannelDraw draw_channel(const NetworkConfig& cfg,
                         const std::vector<ZoneGeometry>& zones_g,
                         const std::vector<ZoneGeometry>& zones_u,
                         const CounterRng& rng, std::uint64_t trial);

} // namespace nomacov
