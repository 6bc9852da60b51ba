#include "nomacov/selftest.hpp"

#include "nomacov/analytics_aerial.hpp"
#include "nomacov/analytics_terrestrial.hpp"
#include "nomacov/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace nomacov {

namespace {

struct GridPoint {
    std::string id;
    NetworkConfig cfg;
    Tier tier;
    std::string estimator; // exact | gauss-chebyshev | low-rate | oma
    std::vector<int> devices;
};

NetworkConfig base(int M, double tau, double pg_watt, double pu_watt,
                   std::vector<int> m = {}) {
    NetworkConfig cfg = default_config(M);
    cfg.P_g = pg_watt;
    cfg.P_u = pu_watt;
    cfg.rates.assign(M, cfg.B * std::log2(1.0 + tau));
    if (!m.empty()) cfg.m = std::move(m);
    cfg.validate();
    return cfg;
}

std::vector<int> all_devices(int M) {
    std::vector<int> v(M);
    for (int i = 0; i < M; ++i) v[i] = i + 1;
    return v;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

} // namespace

SelftestResult run_selftest(std::uint64_t trials, std::uint64_t seed) {
    std::vector<GridPoint> grid;
    int n = 0;
    auto add = [&](NetworkConfig cfg, Tier tier, std::string est, std::vector<int> devs) {
        char id[8];
        std::snprintf(id, sizeof id, "p%02d", ++n);
        grid.push_back({id, std::move(cfg), tier, std::move(est), std::move(devs)});
    };

    const double mw = dbm_to_watt(0.0); // 0 dBm

    // 1-12: terrestrial exact over M x tau, P_u = 0; two cells move P_g off 0 dBm
    for (int M : {2, 3, 5}) {
        for (double tau : {0.1, 0.5, 1.0, 2.0}) {
            double pg = mw;
            if (M == 2 && tau == 0.5) pg = dbm_to_watt(-10.0);
            if (M == 3 && tau == 1.0) pg = dbm_to_watt(10.0);
            add(base(M, tau, pg, 0.0), Tier::Terrestrial, "exact", all_devices(M));
        }
    }
    // 13-14: terrestrial exact with live aerial tier (Nakagami cross-interference)
    add(base(2, 0.5, mw, mw, {1, 2}), Tier::Terrestrial, "exact", all_devices(2));
    add(base(2, 0.5, mw, dbm_to_watt(10.0), {2, 3}), Tier::Terrestrial, "exact",
        all_devices(2));
    // 15-16: Gauss-Chebyshev curve
    add(base(2, 0.5, mw, 0.0), Tier::Terrestrial, "gauss-chebyshev", all_devices(2));
    add(base(3, 2.0, mw, 0.0), Tier::Terrestrial, "gauss-chebyshev", all_devices(3));
    // 17: low-rate closed form
    add(base(3, 0.5, mw, 0.0), Tier::Terrestrial, "low-rate", all_devices(3));
    // 18: OMA benchmark
    add(base(2, 1.0, mw, 0.0), Tier::Terrestrial, "oma", all_devices(2));
    // 19-20: aerial Rayleigh path (second one with terrestrial cross-interference
    // and Nakagami interferers; only the m=1 device is comparable)
    add(base(2, 0.5, 0.0, mw, {1, 1}), Tier::Aerial, "exact", all_devices(2));
    add(base(3, 1.0, dbm_to_watt(-10.0), mw, {1, 2, 3}), Tier::Aerial, "exact", {1});

    SelftestResult out;
    std::ostringstream os;
    os << "selftest grid: " << grid.size() << " points, trials=" << trials
       << ", seed=" << seed << "\n";

    for (const GridPoint& gp : grid) {
        const SimResult sim = run_coverage_sim(gp.cfg, trials, seed);
        const TierSim& ts = gp.tier == Tier::Terrestrial ? sim.terrestrial : sim.aerial;
        std::vector<SimEstimate> oma_mc;
        if (gp.estimator == "oma") oma_mc = mc_oma_coverage(gp.cfg, trials, seed);

        for (int i : gp.devices) {
            double analytic = 0.0;
            if (gp.estimator == "exact") {
                analytic = gp.tier == Tier::Terrestrial ? coverage_exact(i, gp.cfg)
                                                        : coverage_aerial_rayleigh(i, gp.cfg);
            } else if (gp.estimator == "gauss-chebyshev") {
                analytic = coverage_gc(i, gp.cfg, 200);
            } else if (gp.estimator == "low-rate") {
                analytic = coverage_low_rate(i, gp.cfg);
            } else if (gp.estimator == "oma") {
                analytic = coverage_oma(i, gp.cfg);
            }
            const double mc = gp.estimator == "oma" ? oma_mc[i - 1].value
                                                    : ts.report.per_device[i - 1];
            const double se = gp.estimator == "oma" ? oma_mc[i - 1].std_error
                                                    : ts.report.std_error[i - 1];
            const double gap = std::abs(analytic - mc);
            // 3 standard errors, with a floor so that near-certain
            // coverage (se -> 0) is not an automatic failure
            const double tol = std::max(3.0 * se, 2e-6);
            const bool ok = gap <= tol;
            ++out.comparisons;
            if (!ok) ++out.failures;
            os << gp.id << " " << (gp.tier == Tier::Terrestrial ? "terr" : "aeri") << " " << gp.estimator << " i=" << i
               << " analytic=" << fmt(analytic) << " mc=" << fmt(mc) << " se=" << fmt(se)
               << " " << (ok ? "ok" : "FAIL") << "\n";
        }
    }
    os << (out.failures == 0 ? "SELFTEST PASS" : "SELFTEST FAIL") << " ("
       << out.comparisons - out.failures << "/" << out.comparisons << ")\n";
    out.report = os.str();
    return out;
}

} // namespace nomacov
