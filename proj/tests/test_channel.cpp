#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nomacov/channel.hpp"
#include "oracle_utils.hpp"

#include <cmath>

using namespace nomacov;

TEST_CASE("path_loss clamp and power law") {
    CHECK(path_loss(0.5, 4.0, 1.0) == doctest::Approx(1.0)); // clamp branch: r0^-a
    CHECK(path_loss(10.0, 4.0, 1.0) == doctest::Approx(1e-4).epsilon(1e-12));
    CHECK(path_loss(1000.0, 3.0, 1.0) == doctest::Approx(1e-9).epsilon(1e-12));
    CHECK_THROWS_AS(path_loss(0.0, 4.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(path_loss(-1.0, 4.0, 1.0), std::domain_error);
}

TEST_CASE("path_loss times d^alpha is exactly 1 beyond r0") {
    oracle::TestRng rng(5);
    for (int k = 0; k < 100; ++k) {
        const double d = rng.uniform(1.5, 2000.0);
        const double a = rng.uniform(2.1, 6.0);
        CHECK(path_loss(d, a, 1.0) * std::pow(d, a) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("rayleigh power inverse CDF point") {
    CHECK(sample_rayleigh_power(std::exp(-1.0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rayleigh power moments at 1e6 draws") {
    const CounterRng rng(11);
    const int n = 1000000;
    double sum = 0.0, sum2 = 0.0;
    for (int t = 0; t < n; ++t) {
        const double x = sample_rayleigh_power(rng.uniform(t, 1));
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(mean == doctest::Approx(1.0).epsilon(0.005));
    CHECK(var == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("nakagami m=1 equals rayleigh in distribution (two-sample KS)") {
    const CounterRng rng(12);
    const int n = 1000000;
    std::vector<double> a(n), b(n);
    for (int t = 0; t < n; ++t) {
        a[t] = sample_rayleigh_power(rng.uniform(t, 100));
        b[t] = sample_nakagami_power(1, rng, t, 200);
    }
    CHECK(oracle::ks2_pvalue(std::move(a), std::move(b)) > 0.01);
}

TEST_CASE("nakagami m=3 moments: mean 1, variance 1/3") {
    const CounterRng rng(13);
    const int n = 1000000;
    double sum = 0.0, sum2 = 0.0;
    for (int t = 0; t < n; ++t) {
        const double x = sample_nakagami_power(3, rng, t, 300);
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    CHECK(mean == doctest::Approx(1.0).epsilon(0.005));
    CHECK(sum2 / n - mean * mean == doctest::Approx(1.0 / 3.0).epsilon(0.03));
}

TEST_CASE("nakagami m=2 CDF point equals the incomplete-gamma value") {
    // P(X < 0.5) = gamma(2, 2*0.5)/Gamma(2) = 1 - 2 e^-1
    const CounterRng rng(14);
    const int n = 1000000;
    int below = 0;
    for (int t = 0; t < n; ++t)
        if (sample_nakagami_power(2, rng, t, 400) < 0.5) ++below;
    CHECK(static_cast<double>(below) / n ==
          doctest::Approx(1.0 - 2.0 * std::exp(-1.0)).epsilon(0.02));
    CHECK(std::abs(static_cast<double>(below) / n - 0.2642411176571153) < 0.005);
}

TEST_CASE("nakagami rejects m < 1") {
    const CounterRng rng(15);
    CHECK_THROWS_AS(sample_nakagami_power(0, rng, 0, 0), std::domain_error);
}

TEST_CASE("unit-mean fading within 5 sigma for all m") {
    const CounterRng rng(16);
    const int n = 200000;
    for (int m : {1, 2, 3, 5}) {
        double sum = 0.0;
        for (int t = 0; t < n; ++t) sum += sample_nakagami_power(m, rng, t, 500 + 10 * m);
        const double mean = sum / n;
        const double sigma = std::sqrt(1.0 / m / n); // Var = 1/m
        CHECK(std::abs(mean - 1.0) < 5.0 * sigma);
    }
}

TEST_CASE("draw_channel is deterministic in (seed, trial) and within bounds") {
    const NetworkConfig cfg = [] {
        NetworkConfig c = default_config(3);
        c.m = {1, 2, 3};
        return c;
    }();
    const auto zg = make_zones(cfg, ZoneKind::TerrestrialAnnulus);
    const auto zu = make_zones(cfg, ZoneKind::AerialShell);
    const CounterRng rng1(77), rng2(77), rng3(78);
    for (std::uint64_t t : {0ull, 5ull, 123456ull}) {
        const ChannelDraw a = draw_channel(cfg, zg, zu, rng1, t);
        const ChannelDraw b = draw_channel(cfg, zg, zu, rng2, t);
        CHECK(a.d_g == b.d_g);
        CHECK(a.d_u == b.d_u);
        CHECK(a.g_g == b.g_g);
        CHECK(a.g_u == b.g_u);
        const ChannelDraw c = draw_channel(cfg, zg, zu, rng3, t);
        CHECK(a.d_g != c.d_g); // different seed, different stream
        for (int i = 0; i < cfg.M; ++i) {
            CHECK(a.d_g[i] >= zg[i].inner);
            CHECK(a.d_g[i] <= zg[i].outer);
            CHECK(a.d_u[i] >= zu[i].inner);
            CHECK(a.d_u[i] <= zu[i].outer);
            CHECK(a.g_g[i] >= 0.0);
            CHECK(a.g_u[i] >= 0.0);
        }
    }
}

TEST_CASE("distinct (trial, device, tier) substreams decorrelate") {
    // same trial, different devices / tiers must not reuse draws
    const NetworkConfig cfg = default_config(2);
    const auto zg = make_zones(cfg, ZoneKind::TerrestrialAnnulus);
    const auto zu = make_zones(cfg, ZoneKind::AerialShell);
    const CounterRng rng(79);
    const ChannelDraw d = draw_channel(cfg, zg, zu, rng, 42);
    CHECK(d.g_g[0] != d.g_g[1]);
    CHECK(d.g_g[0] != d.g_u[0]);
}
