#pragma once

// Internal zone-factor helpers shared by the terrestrial and aerial
// analytics translation units.

#include "nomacov/config.hpp"
#include "nomacov/geometry.hpp"
#include "nomacov/quadrature.hpp"
#include "nomacov/specfun.hpp"

#include <cmath>

namespace nomacov::detail {

// E[ 1 / (1 + s P d^-alpha) ] for a device confined to one annulus.
// Uses the convergent part of the hypergeometric representation: the
// w^delta terms of the two endpoint evaluations cancel exactly, so they
// are never formed.
inline double terr_zone_laplace_factor(double s, int a, const NetworkConfig& cfg,
                                       double P) {
    if (s == 0.0 || P == 0.0) return 1.0;
    const double dg = cfg.delta_g();
    const double M = cfg.M, R = cfg.R;
    const auto G = [&](double D) {
        return D * D * gauss_2f1_neg_reg(dg, -s * P * std::pow(D, -cfg.alpha_g));
    };
    if (a == 1)
        return (M * M) * (G(R / M) - G(cfg.r0)) / zone_norm_terrestrial(cfg, 1);
    return (M * M) * (G(a * R / M) - G((a - 1) * R / M)) / zone_norm_terrestrial(cfg, a);
}

// E[ (1 + s P_u d^-alpha_u / m)^-m ] for a device confined to one shell,
// by direct quadrature of the pre-substitution integral (valid for every
// alpha_u >= 3, including delta_u = 1 where the Beta form degenerates).
inline double aerial_zone_laplace_factor(double s, int a, const NetworkConfig& cfg,
                                         int m_a) {
    if (s == 0.0 || cfg.P_u == 0.0) return 1.0;
    const ZoneGeometry z = make_zone(cfg, ZoneKind::AerialShell, a);
    const double coef = 3.0 * std::pow(static_cast<double>(cfg.M), 3) /
                        zone_norm_aerial(cfg, a);
    const double q = s * cfg.P_u / m_a;
    IntegrateOptions opts;
    opts.abs_tol = 1e-11;
    opts.rel_tol = 1e-10;
    return integrate(
        [&](double x) {
            return coef * x * x *
                   std::pow(1.0 + q * std::pow(x, -cfg.alpha_u), -static_cast<double>(m_a));
        },
        z.inner, z.outer, opts);
}

// Same expectation through the generalized incomplete Beta identity
// (cross-check path; needs delta_u < 1, i.e. alpha_u > 3).
inline double aerial_zone_laplace_factor_beta(double s, int a, const NetworkConfig& cfg,
                                              int m_a) {
    if (s == 0.0 || cfg.P_u == 0.0) return 1.0;
    const double du = cfg.delta_u();
    const ZoneGeometry z = make_zone(cfg, ZoneKind::AerialShell, a);
    const double q = s * cfg.P_u / m_a;
    const double t_hi = -q * std::pow(z.outer, -cfg.alpha_u);
    const double t_lo = -q * std::pow(z.inner, -cfg.alpha_u);
    const double pref = 3.0 * std::pow(static_cast<double>(cfg.M), 3) * std::pow(q, du) /
                        (zone_norm_aerial(cfg, a) * (-cfg.alpha_u));
    const double b = 1.0 - m_a;
    return pref * (inc_beta_gen(t_hi, -du, b) - inc_beta_gen(t_lo, -du, b));
}

} // namespace nomacov::detail
