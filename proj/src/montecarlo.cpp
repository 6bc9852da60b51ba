#include "nomacov/montecarlo.hpp"

#include "nomacov/specfun.hpp"

#include <cmath>
#include <limits>

namespace nomacov {

namespace {

struct BlockAccum {
    std::vector<std::uint64_t> stage_ok[2];
    std::vector<std::uint64_t> joint_ok[2];
    std::vector<double> sinr_sum[2]; // over own-stage successes
    explicit BlockAccum(int M) {
        for (int t = 0; t < 2; ++t) {
            stage_ok[t].assign(M, 0);
            joint_ok[t].assign(M, 0);
            sinr_sum[t].assign(M, 0.0);
        }
    }
};

struct SimContext {
    const NetworkConfig& cfg;
    std::vector<ZoneGeometry> zones_g, zones_u;
    std::vector<double> tau;
    CounterRng rng;
    SimContext(const NetworkConfig& c, std::uint64_t seed)
        : cfg(c),
          zones_g(make_zones(c, ZoneKind::TerrestrialAnnulus)),
          zones_u(make_zones(c, ZoneKind::AerialShell)),
          rng(seed) {
        tau.resize(c.M);
        for (int i = 1; i <= c.M; ++i) tau[i - 1] = c.tau(i);
    }
};

void simulate_block(const SimContext& ctx, std::uint64_t t0, std::uint64_t t1,
                    BlockAccum& acc) {
    const NetworkConfig& cfg = ctx.cfg;
    const int M = cfg.M;
    std::vector<double> P[2], suffix[2];
    for (int t = 0; t < 2; ++t) {
        P[t].resize(M);
        suffix[t].resize(M + 1);
    }
    for (std::uint64_t trial = t0; trial < t1; ++trial) {
        const ChannelDraw d = draw_channel(cfg, ctx.zones_g, ctx.zones_u, ctx.rng, trial);
        double tier_total[2] = {0.0, 0.0};
        for (int i = 0; i < M; ++i) {
            P[0][i] = cfg.P_g * path_loss(d.d_g[i], cfg.alpha_g, cfg.r0) * d.g_g[i];
            P[1][i] = cfg.P_u * path_loss(d.d_u[i], cfg.alpha_u, cfg.r0) * d.g_u[i];
            tier_total[0] += P[0][i];
            tier_total[1] += P[1][i];
        }
        for (int t = 0; t < 2; ++t) {
            suffix[t][M] = 0.0; // suffix[i] = sum of same-tier powers beyond stage i
            for (int i = M - 1; i >= 0; --i) suffix[t][i] = suffix[t][i + 1] + P[t][i];
        }
        for (int t = 0; t < 2; ++t) {
            const double cross = tier_total[1 - t];
            bool joint = true;
            for (int i = 0; i < M; ++i) {
                const double denom = suffix[t][i + 1] + cross + cfg.sigma2;
                const double sinr =
                    denom > 0.0 ? P[t][i] / denom : std::numeric_limits<double>::infinity();
                const bool ok = sinr > ctx.tau[i];
                if (ok) {
                    acc.stage_ok[t][i] += 1;
                    acc.sinr_sum[t][i] += sinr;
                }
                joint = joint && ok;
                if (joint) acc.joint_ok[t][i] += 1;
            }
        }
    }
}

TierSim finalize_tier(const NetworkConfig& cfg, const std::vector<BlockAccum>& blocks,
                      int tier, std::uint64_t trials, std::uint64_t seed) {
    const int M = cfg.M;
    TierSim out;
    out.stage_successes.assign(M, 0);
    out.joint_successes.assign(M, 0);
    out.mean_cond_sinr.assign(M, 0.0);
    std::vector<double> sums(M, 0.0);
    for (const BlockAccum& b : blocks) { // fixed block order: deterministic sums
        for (int i = 0; i < M; ++i) {
            out.stage_successes[i] += b.stage_ok[tier][i];
            out.joint_successes[i] += b.joint_ok[tier][i];
            sums[i] += b.sinr_sum[tier][i];
        }
    }
    std::vector<double> per(M), se(M);
    for (int i = 0; i < M; ++i) {
        const double p = static_cast<double>(out.stage_successes[i]) / trials;
        per[i] = p;
        se[i] = std::sqrt(p * (1.0 - p) / trials);
        out.mean_cond_sinr[i] =
            out.stage_successes[i] > 0 ? sums[i] / out.stage_successes[i] : 0.0;
    }
    out.report = make_report(cfg, CoverageMethod::MonteCarlo, std::move(per));
    out.report.std_error = std::move(se);
    out.report.trials = trials;
    out.report.seed = seed;
    return out;
}

SimResult run_sim_impl(const NetworkConfig& cfg, std::uint64_t trials,
                       std::uint64_t seed, bool parallel, std::uint64_t block) {
    cfg.validate();
    if (trials < 1) throw std::domain_error("run_coverage_sim: trials must be >= 1");
    SimContext ctx(cfg, seed);
    const std::uint64_t nblocks = (trials + block - 1) / block;
    std::vector<BlockAccum> blocks(nblocks, BlockAccum(cfg.M));

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
            const std::uint64_t t0 = static_cast<std::uint64_t>(b) * block;
            const std::uint64_t t1 = std::min(trials, t0 + block);
            simulate_block(ctx, t0, t1, blocks[b]);
        }
    } else {
        for (std::uint64_t b = 0; b < nblocks; ++b) {
            const std::uint64_t t0 = b * block;
            const std::uint64_t t1 = std::min(trials, t0 + block);
            simulate_block(ctx, t0, t1, blocks[b]);
        }
    }

    SimResult res;
    res.trials = trials;
    res.seed = seed;
    res.terrestrial = finalize_tier(cfg, blocks, 0, trials, seed);
    res.aerial = finalize_tier(cfg, blocks, 1, trials, seed);
    return res;
}

} // namespace

SimResult run_coverage_sim(const NetworkConfig& cfg, std::uint64_t trials,
                           std::uint64_t seed, const SimOptions& opts) {
    return run_sim_impl(cfg, trials, seed, opts.parallel, opts.block);
}

SimResult run_coverage_sim_serial(const NetworkConfig& cfg, std::uint64_t trials,
                                  std::uint64_t seed) {
    return run_sim_impl(cfg, trials, seed, false, SimOptions{}.block);
}

SimEstimate estimate_laplace_mc(double s, Tier tier, int first_zone,
                                const NetworkConfig& cfg, std::uint64_t trials,
                                std::uint64_t seed) {
    if (s < 0.0) throw std::domain_error("estimate_laplace_mc: s must be >= 0");
    SimContext ctx(cfg, seed);
    const std::uint64_t block = 8192;
    const std::uint64_t nblocks = (trials + block - 1) / block;
    std::vector<double> bsum(nblocks, 0.0), bsum2(nblocks, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
        const std::uint64_t t0 = static_cast<std::uint64_t>(b) * block;
        const std::uint64_t t1 = std::min(trials, t0 + block);
        double acc = 0.0, acc2 = 0.0;
        for (std::uint64_t trial = t0; trial < t1; ++trial) {
            const ChannelDraw d = draw_channel(cfg, ctx.zones_g, ctx.zones_u, ctx.rng, trial);
            double interference = 0.0;
            for (int i = first_zone; i <= cfg.M; ++i) {
                if (tier == Tier::Terrestrial)
                    interference += cfg.P_g * path_loss(d.d_g[i - 1], cfg.alpha_g, cfg.r0) *
                                    d.g_g[i - 1];
                else
                    interference += cfg.P_u * path_loss(d.d_u[i - 1], cfg.alpha_u, cfg.r0) *
                                    d.g_u[i - 1];
            }
            const double x = std::exp(-s * interference);
            acc += x;
            acc2 += x * x;
        }
        bsum[b] = acc;
        bsum2[b] = acc2;
    }
    double sum = 0.0, sum2 = 0.0;
    for (std::uint64_t b = 0; b < nblocks; ++b) {
        sum += bsum[b];
        sum2 += bsum2[b];
    }
    SimEstimate est;
    est.trials = trials;
    est.seed = seed;
    est.value = sum / trials;
    const double var = std::max(0.0, sum2 / trials - est.value * est.value);
    est.std_error = std::sqrt(var / trials);
    return est;
}

std::vector<SimEstimate> mc_oma_coverage(const NetworkConfig& cfg, std::uint64_t trials,
                                         std::uint64_t seed) {
    SimContext ctx(cfg, seed);
    std::vector<std::uint64_t> ok(cfg.M, 0);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        for (int i = 1; i <= cfg.M; ++i) {
            const double r =
                sample_distance(ctx.zones_g[i - 1],
                                ctx.rng.uniform(trial, CounterRng::stream_id(0, i, 0)));
            const double g =
                sample_rayleigh_power(ctx.rng.uniform(trial, CounterRng::stream_id(0, i, 1)));
            const double snr =
                cfg.P_g * path_loss(r, cfg.alpha_g, cfg.r0) * g / cfg.sigma2;
            if (snr > cfg.tau_oma(i)) ++ok[i - 1];
        }
    }
    std::vector<SimEstimate> out(cfg.M);
    for (int i = 0; i < cfg.M; ++i) {
        out[i].trials = trials;
        out[i].seed = seed;
        out[i].value = static_cast<double>(ok[i]) / trials;
        out[i].std_error = std::sqrt(out[i].value * (1.0 - out[i].value) / trials);
    }
    return out;
}

ThroughputReport outage_sum_rate(const NetworkConfig& cfg, Tier tier,
                                 std::uint64_t trials, std::uint64_t seed) {
    const SimResult sim = run_coverage_sim(cfg, trials, seed);
    const TierSim& ts = tier == Tier::Terrestrial ? sim.terrestrial : sim.aerial;
    ThroughputReport rep;
    rep.tier = tier;
    rep.mode = ThroughputMode::OutageSumRate;
    rep.packet_length = std::numeric_limits<double>::infinity();
    rep.per_device_rate.resize(cfg.M);
    for (int i = 1; i <= cfg.M; ++i) {
        rep.per_device_rate[i - 1] = ts.report.cumulative[i - 1] * cfg.rate_bpcu(i);
        rep.sum_rate += rep.per_device_rate[i - 1];
    }
    return rep;
}

double finite_blocklength_rate(double sinr, double packet_length, double p_outage) {
    if (!(sinr > 0.0)) throw std::domain_error("finite_blocklength_rate: sinr must be > 0");
    if (!(packet_length >= 1.0))
        throw std::domain_error("finite_blocklength_rate: N_f must be >= 1");
    const double shannon = std::log2(1.0 + sinr);
    if (std::isinf(packet_length)) return shannon;
    if (!(p_outage > 0.0 && p_outage < 1.0))
        throw std::domain_error("finite_blocklength_rate: P_i must be in (0,1)");
    const double V = 1.0 - std::pow(1.0 + sinr, -2.0);
    const double rate =
        shannon - std::sqrt(V / packet_length) * inverse_q(p_outage) / std::log(2.0);
    return std::max(rate, 0.0);
}

ThroughputReport network_throughput(const NetworkConfig& cfg, Tier tier,
                                    double packet_length, std::uint64_t trials,
                                    std::uint64_t seed, SinrConvention convention) {
    if (!(packet_length >= 1.0))
        throw std::domain_error("network_throughput: N_f must be >= 1");
    const SimResult sim = run_coverage_sim(cfg, trials, seed);
    const TierSim& ts = tier == Tier::Terrestrial ? sim.terrestrial : sim.aerial;
    ThroughputReport rep;
    rep.tier = tier;
    rep.mode = ThroughputMode::FiniteBlocklength;
    rep.packet_length = packet_length;
    rep.convention = convention;
    rep.per_device_rate.resize(cfg.M);
    const bool finite = !std::isinf(packet_length);
    for (int i = 1; i <= cfg.M; ++i) {
        const double cov = ts.report.cumulative[i - 1];
        if (finite && (cov == 0.0 || cov == 1.0))
            throw degenerate_coverage_error(
                "network_throughput: overall coverage of device " + std::to_string(i) +
                " is exactly " + std::to_string(cov) + "; Qinv undefined");
        const double sinr = convention == SinrConvention::Threshold
                                ? cfg.tau(i)
                                : ts.mean_cond_sinr[i - 1];
        if (!(sinr > 0.0))
            throw degenerate_coverage_error(
                "network_throughput: no successful decode of device " + std::to_string(i) +
                " to condition the SINR statistic on");
        const double shannon = std::log2(1.0 + sinr);
        double rate = shannon;
        if (finite) {
            // Qinv(1 - cov) = -Qinv(cov); evaluate through whichever side is
            // representable (cov can be within 1e-300 of 0).
            const double qinv =
                cov >= 0.5 ? inverse_q(1.0 - cov) : -inverse_q(cov);
            const double V = 1.0 - std::pow(1.0 + sinr, -2.0);
            rate = std::max(0.0, shannon - std::sqrt(V / packet_length) * qinv / std::log(2.0));
        }
        rep.per_device_rate[i - 1] = rate;
        rep.sum_rate += rate;
    }
    return rep;
}

} // namespace nomacov
