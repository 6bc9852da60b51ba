#include "nomacov/channel.hpp"

#include <cmath>

namespace nomacov {

double path_loss(double d, double alpha, double r0) {
    if (!(d > 0.0)) throw std::domain_error("path_loss: d must be > 0");
    if (!(alpha > 0.0)) throw std::domain_error("path_loss: alpha must be > 0");
    if (!(r0 > 0.0)) throw std::domain_error("path_loss: r0 must be > 0");
    return d > r0 ? std::pow(d, -alpha) : std::pow(r0, -alpha);
}

double sample_rayleigh_power(double u) { return -std::log(u); }

double sample_nakagami_power(int m, const CounterRng& rng, std::uint64_t trial,
                             std::uint64_t stream0) {
    if (m < 1) throw std::domain_error("sample_nakagami_power: m must be >= 1");
    double sum = 0.0;
    for (int k = 0; k < m; ++k)
        sum += sample_rayleigh_power(rng.uniform(trial, stream0 + k));
    return sum / m;
}

ChannelDraw draw_channel(const NetworkConfig& cfg,
                         const std::vector<ZoneGeometry>& zones_g,
                         const std::vector<ZoneGeometry>& zones_u,
                         const CounterRng& rng, std::uint64_t trial) {
    ChannelDraw out;
    const int M = cfg.M;
    out.d_g.resize(M);
    out.d_u.resize(M);
    out.g_g.resize(M);
    out.g_u.resize(M);
    for (int i = 1; i <= M; ++i) {
        out.d_g[i - 1] =
            sample_distance(zones_g[i - 1], rng.uniform(trial, CounterRng::stream_id(0, i, 0)));
        out.g_g[i - 1] =
            sample_rayleigh_power(rng.uniform(trial, CounterRng::stream_id(0, i, 1)));
        out.d_u[i - 1] =
            sample_distance(zones_u[i - 1], rng.uniform(trial, CounterRng::stream_id(1, i, 0)));
        out.g_u[i - 1] =
            sample_nakagami_power(cfg.m[i - 1], rng, trial, CounterRng::stream_id(1, i, 1));
    }
    return out;
}

} // namespace nomacov
