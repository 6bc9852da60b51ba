#pragma once

#include "nomacov/analytics_terrestrial.hpp"
#include "nomacov/config.hpp"

namespace nomacov {

/// Laplace transform of same-tier aerial interference seen while decoding
/// aerial device i: product over shells c = i+1..M (empty product = 1),
/// each factor by direct quadrature with that interferer's Nakagami m_c.
double laplace_aerial_i(double s, int i, const NetworkConfig& cfg);

/// Laplace transform of the whole terrestrial tier's interference into an
/// aerial decode: product over all M annuli of the hypergeometric factor.
double laplace_terr_into_aerial(double s, const NetworkConfig& cfg);

/// Coverage of aerial device i when its own link is Rayleigh (m_i = 1);
/// interferers may be arbitrary Nakagami. Shell-pdf-weighted quadrature of
/// exp(-rho sigma^2) L_u,i(rho) L_g(rho), rho = tau_i r^a_u / P_u.
double coverage_aerial_rayleigh(int i, const NetworkConfig& cfg);

/// Numerical differentiation settings for the Gamma-fading coverage path.
struct DerivativeStencil {
    enum class Scheme { Central, Richardson };
    double h = 1e-4; // relative step, in [1e-6, 1e-2]
    Scheme scheme = Scheme::Richardson;
};

/// Nearest-device (i = 1) coverage with Gamma(m) desired fading in the
/// two-device network, m in {1, 2, 3}. The composite interference Laplace
/// transform is the product L_u,1(s) L_g(s); the binomial weights of its
/// m-th power are obtained from stencil derivatives of x^m at x = 1, so the
/// m = 1 case coincides with the Rayleigh path and m = 2, 3 reproduce the
/// closed forms below.
double coverage_aerial_nearest_gamma(const NetworkConfig& cfg, int m,
                                     const DerivativeStencil& stencil = {});

/// Closed forms for m = 2 and m = 3 at P_g = 0 (Gauss-Chebyshev sum over
/// the first shell): -L^2 + 2L and L^3 - 3L^2 + 3L with L = L_u,1(rho).
/// The result must land in [0,1] on its own; anything else throws.
double coverage_aerial_nearest_closed(const NetworkConfig& cfg, int m, int quad_order);

} // namespace nomacov
