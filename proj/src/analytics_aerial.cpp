#include "nomacov/analytics_aerial.hpp"

#include "analytics_common.hpp"
#include "nomacov/geometry.hpp"
#include "nomacov/quadrature.hpp"

#include <cmath>

namespace nomacov {

double laplace_aerial_i(double s, int i, const NetworkConfig& cfg) {
    if (s < 0.0) throw std::domain_error("laplace_aerial_i: s must be >= 0");
    if (i < 1 || i > cfg.M) throw std::domain_error("laplace_aerial_i: i out of [1, M]");
    double out = 1.0;
    for (int c = i + 1; c <= cfg.M; ++c)
        out *= detail::aerial_zone_laplace_factor(s, c, cfg, cfg.m[c - 1]);
    return out;
}

double laplace_terr_into_aerial(double s, const NetworkConfig& cfg) {
    if (s < 0.0) throw std::domain_error("laplace_terr_into_aerial: s must be >= 0");
    double out = 1.0;
    for (int a = 1; a <= cfg.M; ++a)
        out *= detail::terr_zone_laplace_factor(s, a, cfg, cfg.P_g);
    return out;
}

double coverage_aerial_rayleigh(int i, const NetworkConfig& cfg) {
    if (i < 1 || i > cfg.M)
        throw std::domain_error("coverage_aerial_rayleigh: i out of [1, M]");
    if (cfg.m[i - 1] != 1)
        throw std::domain_error(
            "coverage_aerial_rayleigh: device's own fading must be m = 1");
    if (cfg.P_u == 0.0)
        throw std::domain_error("coverage_aerial_rayleigh: P_u must be > 0");
    const ZoneGeometry z = make_zone(cfg, ZoneKind::AerialShell, i);
    const double tau = cfg.tau(i);
    IntegrateOptions opts;
    opts.abs_tol = 1e-8;
    opts.rel_tol = 1e-8;
    opts.max_intervals = 10000;
    return integrate(
        [&](double r) {
            const double rho = tau * std::pow(r, cfg.alpha_u) / cfg.P_u;
            return pdf_aerial(cfg, z, r) * std::exp(-rho * cfg.sigma2) *
                   laplace_aerial_i(rho, i, cfg) * laplace_terr_into_aerial(rho, cfg);
        },
        z.inner, z.outer, opts);
}

namespace {

// k-th central-difference derivative of f at x.
template <typename F>
double central_diff(const F& f, double x, int k, double h) {
    switch (k) {
        case 1: return (f(x + h) - f(x - h)) / (2.0 * h);
        case 2: return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        case 3:
            return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) /
                   (2.0 * h * h * h);
    }
    throw std::domain_error("central_diff: order must be in {1,2,3}");
}

// Derivative of x^m at x = 1 per the stencil; Richardson extrapolates the
// O(h^2) central estimate and flags disagreement beyond 1e-4.
double power_derivative_at_one(int m, int k, const DerivativeStencil& st) {
    if (!(st.h >= 1e-6 && st.h <= 1e-2))
        throw std::domain_error("DerivativeStencil: h must be in [1e-6, 1e-2]");
    const auto f = [m](double x) { return std::pow(x, static_cast<double>(m)); };
    const double d_h = central_diff(f, 1.0, k, st.h);
    if (st.scheme == DerivativeStencil::Scheme::Central) return d_h;
    const double d_h2 = central_diff(f, 1.0, k, st.h / 2.0);
    const double rich = (4.0 * d_h2 - d_h) / 3.0;
    if (std::abs(rich - d_h2) > 1e-4)
        throw convergence_error("DerivativeStencil: Richardson disagreement > 1e-4");
    return rich;
}

} // namespace

double coverage_aerial_nearest_gamma(const NetworkConfig& cfg, int m,
                                     const DerivativeStencil& stencil) {
    if (cfg.M != 2)
        throw config_error("coverage_aerial_nearest_gamma: derived for M = 2");
    if (m < 1 || m > 3)
        throw std::domain_error("coverage_aerial_nearest_gamma: m must be in {1,2,3}");
    if (cfg.P_u == 0.0)
        throw std::domain_error("coverage_aerial_nearest_gamma: P_u must be > 0");

    // Binomial weights of the m-th power of the composite transform,
    // computed as stencil derivatives of x^m at x = 1: the coverage kernel
    // is 1 - (1 - L)^m = sum_{k=1..m} (-1)^(k+1) L^k f_k / k!.
    double fk[4] = {1.0, 0.0, 0.0, 0.0};
    double kfact = 1.0;
    for (int k = 1; k <= m; ++k) {
        fk[k] = power_derivative_at_one(m, k, stencil);
        kfact *= k;
    }

    const ZoneGeometry z = make_zone(cfg, ZoneKind::AerialShell, 1);
    const double tau = cfg.tau(1);
    IntegrateOptions opts;
    opts.abs_tol = 1e-9;
    opts.rel_tol = 1e-9;
    opts.max_intervals = 10000;
    return integrate(
        [&](double r) {
            const double s = tau * std::pow(r, cfg.alpha_u) / cfg.P_u;
            const double L = laplace_aerial_i(s, 1, cfg) * laplace_terr_into_aerial(s, cfg);
            double kernel = 0.0, fact = 1.0, Lk = 1.0;
            for (int k = 1; k <= m; ++k) {
                fact *= k;
                Lk *= L;
                kernel += ((k % 2 == 1) ? 1.0 : -1.0) * Lk * fk[k] / fact;
            }
            return pdf_aerial(cfg, z, r) * kernel;
        },
        z.inner, z.outer, opts);
}

double coverage_aerial_nearest_closed(const NetworkConfig& cfg, int m, int quad_order) {
    if (cfg.M != 2)
        throw config_error("coverage_aerial_nearest_closed: derived for M = 2");
    if (cfg.P_g != 0.0)
        throw std::domain_error("coverage_aerial_nearest_closed: requires P_g = 0");
    if (m != 2 && m != 3)
        throw std::domain_error("coverage_aerial_nearest_closed: m must be 2 or 3");
    if (cfg.P_u == 0.0)
        throw std::domain_error("coverage_aerial_nearest_closed: P_u must be > 0");

    const QuadratureRule rule = chebyshev_rule(quad_order);
    const double tau = cfg.tau(1);
    const double R = cfg.R;
    double sum = 0.0;
    for (int n = 0; n < rule.order; ++n) {
        const double nu = rule.nodes[n];
        const double xi = std::sqrt(1.0 - nu * nu);
        const double t = R * (nu + 1.0) / 4.0;
        const double rho = tau * std::pow(t, cfg.alpha_u) / cfg.P_u;
        const double L = laplace_aerial_i(rho, 1, cfg);
        const double poly = m == 2 ? (-L * L + 2.0 * L) : (L * L * L - 3.0 * L * L + 3.0 * L);
        sum += rule.weights[n] * xi * t * t * poly;
    }
    const double value = 6.0 / (R * R) * sum;
    if (!(value >= 0.0 && value <= 1.0))
        throw std::runtime_error(
            "coverage_aerial_nearest_closed: result escaped [0,1] (invariant violation)");
    return value;
}

} // namespace nomacov
