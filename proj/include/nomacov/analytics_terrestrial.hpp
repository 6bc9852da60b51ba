#pragma once

#include "nomacov/config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nomacov {

enum class CoverageMethod {
    ExactQuadrature,
    GaussChebyshev,
    LowRateClosedForm,
    Oma,
    MonteCarlo,
};

std::string to_string(CoverageMethod m);

/// Per-device conditional coverage P_i(tau_i) plus the cumulative (overall)
/// values, which are the running products P_{i,cov} = prod_{b<=i} P_b.
struct CoverageReport {
    std::vector<double> per_device;
    std::vector<double> cumulative; // running product of per_device
    std::vector<double> std_error;  // only for Monte Carlo estimates
    CoverageMethod method = CoverageMethod::ExactQuadrature;
    NetworkConfig cfg;
    std::string settings;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Fill `cumulative` from `per_device`.
CoverageReport make_report(const NetworkConfig& cfg, CoverageMethod method,
                           std::vector<double> per_device, std::string settings = {});

/// Laplace transform of same-tier terrestrial interference seen while
/// decoding terrestrial device i: product over zones c = i+1..M of the
/// hypergeometric zone factor (empty product = 1 at i = M).
double laplace_terr(double s, int i, const NetworkConfig& cfg);

/// Two-device closed form of laplace_terr(s, 1, .): (4/3) 2F1(...) - (1/3) 2F1(...).
double laplace_terr_closed_M2(double s, const NetworkConfig& cfg);

/// Laplace transform of the whole aerial tier's interference (all M shells,
/// Nakagami-m gains), evaluated by direct quadrature of the shell integral.
double laplace_aerial_into_terr(double s, const NetworkConfig& cfg);

/// Cross-check route for the above through the generalized incomplete Beta
/// identity; requires alpha_u > 3 so that |delta_u| < 1.
double laplace_aerial_into_terr_beta(double s, const NetworkConfig& cfg);

/// Coverage probability of terrestrial device i by adaptive radial
/// quadrature of r exp(-rho sigma^2) L_g,i(rho) L_u(rho), rho = tau_i r^a / P_g.
double coverage_exact(int i, const NetworkConfig& cfg);

/// Gauss-Chebyshev evaluation of the same integral (the "asymptotic" curve).
double coverage_gc(int i, const NetworkConfig& cfg, int quad_order);

/// Low-target-rate closed form (tau_i < 1, P_u = 0): the hypergeometric
/// zone factors are expanded as one power series (factors convolved) and
/// integrated termwise against incomplete-gamma differences. Throws on
/// violated preconditions; never falls back silently.
double coverage_low_rate(int i, const NetworkConfig& cfg, int series_terms = 500);

/// OMA (TDMA, equal 1/M shares) coverage of device i: noise-only event at
/// threshold 2^(M R_i / B) - 1.
double coverage_oma(int i, const NetworkConfig& cfg);

enum class AccessMode { Oma, Scma, Noma };

/// Required number of resource blocks to serve n_devices.
int required_rbs(AccessMode mode, int n_devices, int M);

} // namespace nomacov
