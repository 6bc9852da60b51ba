#include "nomacov/analytics_terrestrial.hpp"

#include "analytics_common.hpp"
#include "nomacov/geometry.hpp"
#include "nomacov/quadrature.hpp"
#include "nomacov/specfun.hpp"

#include <cmath>

namespace nomacov {

std::string to_string(CoverageMethod m) {
    switch (m) {
        case CoverageMethod::ExactQuadrature: return "exact-quadrature";
        case CoverageMethod::GaussChebyshev: return "gauss-chebyshev";
        case CoverageMethod::LowRateClosedForm: return "low-rate-closed-form";
        case CoverageMethod::Oma: return "oma";
        case CoverageMethod::MonteCarlo: return "monte-carlo";
    }
    return "?";
}

CoverageReport make_report(const NetworkConfig& cfg, CoverageMethod method,
                           std::vector<double> per_device, std::string settings) {
    CoverageReport rep;
    rep.cfg = cfg;
    rep.method = method;
    rep.settings = std::move(settings);
    rep.per_device = std::move(per_device);
    rep.cumulative.resize(rep.per_device.size());
    double prod = 1.0;
    for (size_t i = 0; i < rep.per_device.size(); ++i) {
        prod *= rep.per_device[i];
        rep.cumulative[i] = prod;
    }
    return rep;
}

double laplace_terr(double s, int i, const NetworkConfig& cfg) {
    if (s < 0.0) throw std::domain_error("laplace_terr: s must be >= 0");
    if (i < 1 || i > cfg.M) throw std::domain_error("laplace_terr: i out of [1, M]");
    double out = 1.0;
    for (int c = i + 1; c <= cfg.M; ++c)
        out *= detail::terr_zone_laplace_factor(s, c, cfg, cfg.P_g);
    return out;
}

double laplace_terr_closed_M2(double s, const NetworkConfig& cfg) {
    if (cfg.M != 2) throw config_error("laplace_terr_closed_M2: requires M = 2");
    if (s < 0.0) throw std::domain_error("laplace_terr_closed_M2: s must be >= 0");
    const double dg = cfg.delta_g();
    const double sp = s * cfg.P_g;
    const double f1 = gauss_2f1_neg(dg, -sp * std::pow(cfg.R, -cfg.alpha_g));
    const double f2 =
        gauss_2f1_neg(dg, -sp * std::pow(2.0, cfg.alpha_g) * std::pow(cfg.R, -cfg.alpha_g));
    return (4.0 / 3.0) * f1 - (1.0 / 3.0) * f2;
}

double laplace_aerial_into_terr(double s, const NetworkConfig& cfg) {
    if (s < 0.0) throw std::domain_error("laplace_aerial_into_terr: s must be >= 0");
    double out = 1.0;
    for (int a = 1; a <= cfg.M; ++a)
        out *= detail::aerial_zone_laplace_factor(s, a, cfg, cfg.m[a - 1]);
    return out;
}

double laplace_aerial_into_terr_beta(double s, const NetworkConfig& cfg) {
    if (s < 0.0) throw std::domain_error("laplace_aerial_into_terr_beta: s must be >= 0");
    if (!(cfg.alpha_u > 3.0))
        throw std::domain_error(
            "laplace_aerial_into_terr_beta: needs alpha_u > 3 (delta_u < 1); "
            "use the quadrature path at alpha_u = 3");
    double out = 1.0;
    for (int a = 1; a <= cfg.M; ++a)
        out *= detail::aerial_zone_laplace_factor_beta(s, a, cfg, cfg.m[a - 1]);
    return out;
}

double coverage_exact(int i, const NetworkConfig& cfg) {
    if (i < 1 || i > cfg.M) throw std::domain_error("coverage_exact: i out of [1, M]");
    if (cfg.P_g == 0.0)
        throw std::domain_error("coverage_exact: P_g must be > 0 (rho undefined)");
    const ZoneGeometry z = make_zone(cfg, ZoneKind::TerrestrialAnnulus, i);
    const double tau = cfg.tau(i);
    const double pre = 2.0 * cfg.M * cfg.M / zone_norm_terrestrial(cfg, i);
    IntegrateOptions opts;
    opts.abs_tol = 1e-8;
    opts.rel_tol = 1e-8;
    opts.max_intervals = 10000;
    return pre * integrate(
                     [&](double r) {
                         const double rho = tau * std::pow(r, cfg.alpha_g) / cfg.P_g;
                         return r * std::exp(-rho * cfg.sigma2) * laplace_terr(rho, i, cfg) *
                                laplace_aerial_into_terr(rho, cfg);
                     },
                     z.inner, z.outer, opts);
}

double coverage_gc(int i, const NetworkConfig& cfg, int quad_order) {
    if (i < 1 || i > cfg.M) throw std::domain_error("coverage_gc: i out of [1, M]");
    if (cfg.P_g == 0.0) throw std::domain_error("coverage_gc: P_g must be > 0");
    const QuadratureRule rule = chebyshev_rule(quad_order);
    const double tau = cfg.tau(i);
    const double M = cfg.M, R = cfg.R;
    double sum = 0.0;
    for (int n = 0; n < rule.order; ++n) {
        const double nu = rule.nodes[n];
        const double xi = std::sqrt(1.0 - nu * nu);
        double l;
        if (i > 1) {
            l = R * (nu + 2.0 * i - 1.0) / (2.0 * M);
        } else {
            l = (R - M * cfg.r0) * (nu + 2.0 * R / (R - M * cfg.r0) - 1.0) / (2.0 * M);
        }
        const double rho = tau * std::pow(l, cfg.alpha_g) / cfg.P_g;
        sum += rule.weights[n] * xi * l * std::exp(-rho * cfg.sigma2) *
               laplace_terr(rho, i, cfg) * laplace_aerial_into_terr(rho, cfg);
    }
    const double pre = i > 1 ? M / ((2.0 * i - 1.0) * R) : M / (R + M * cfg.r0);
    return pre * sum;
}

namespace {

// ln( gamma(s, u_b) - gamma(s, u_a) ) for 0 <= u_a < u_b, stable for the
// very small u / large s combinations the low-rate series produces.
double log_gamma_diff(double s, double u_a, double u_b) {
    if (u_b < s + 1.0) {
        // gamma(s,u) = u^s S(s,u), S via the canonical series
        const auto S = [s](double u) {
            if (u == 0.0) return 0.0;
            double term = 1.0 / s, sum = term;
            for (int n = 1; n < 500; ++n) {
                term *= u / (s + n);
                sum += term;
                if (term < 1e-17 * sum) return sum * std::exp(-u);
            }
            throw convergence_error("log_gamma_diff: series did not converge");
        };
        const double ratio = u_a > 0.0 ? std::exp(s * std::log(u_a / u_b)) : 0.0;
        const double bracket = S(u_b) - ratio * S(u_a);
        return s * std::log(u_b) + std::log(bracket);
    }
    double diff;
    if (u_a > s + 1.0) {
        diff = reg_upper_gamma(s, u_a) - reg_upper_gamma(s, u_b);
    } else {
        diff = reg_lower_gamma(s, u_b) - reg_lower_gamma(s, u_a);
    }
    return std::lgamma(s) + std::log(diff);
}

} // namespace

double coverage_low_rate(int i, const NetworkConfig& cfg, int series_terms) {
    if (i < 1 || i > cfg.M) throw std::domain_error("coverage_low_rate: i out of [1, M]");
    if (cfg.P_g == 0.0) throw std::domain_error("coverage_low_rate: P_g must be > 0");
    if (cfg.P_u != 0.0)
        throw std::domain_error("coverage_low_rate: valid only for P_u = 0");
    const double tau = cfg.tau(i);
    if (!(tau < 1.0))
        throw std::domain_error("coverage_low_rate: requires tau_i < 1");
    if (series_terms < 1) throw std::domain_error("coverage_low_rate: series_terms >= 1");

    const double ag = cfg.alpha_g;
    const double dg = cfg.delta_g();
    const double M = cfg.M, R = cfg.R;
    const double phi2 = tau * cfg.sigma2 / cfg.P_g;
    const ZoneGeometry z = make_zone(cfg, ZoneKind::TerrestrialAnnulus, i);
    const double pre = 2.0 * M * M / zone_norm_terrestrial(cfg, i);

    if (phi2 == 0.0) return 1.0; // noise-free, no aerial tier: certain coverage

    const int N = series_terms;
    // Per-interferer series in X = tau (M r / R)^a-ish powers: factor_c =
    // sum_n beta_n (-1)^n (c^(2-n a) - (c-1)^(2-n a)) / (2c-1) X^n.
    // All factors are convolved into a single power series.
    std::vector<double> C{1.0};
    for (int c = i + 1; c <= cfg.M; ++c) {
        std::vector<double> A(N + 1);
        for (int n = 0; n <= N; ++n) {
            const double beta = pochhammer(-dg, n) / pochhammer(1.0 - dg, n);
            const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
            A[n] = sgn * beta *
                   (std::pow(static_cast<double>(c), 2.0 - n * ag) -
                    std::pow(static_cast<double>(c - 1), 2.0 - n * ag)) /
                   (2.0 * c - 1.0);
        }
        std::vector<double> next(N + 1, 0.0);
        for (size_t n1 = 0; n1 < C.size(); ++n1) {
            if (C[n1] == 0.0) continue;
            for (int n2 = 0; n2 + static_cast<int>(n1) <= N; ++n2)
                next[n1 + n2] += C[n1] * A[n2];
        }
        C = std::move(next);
    }

    const double lnW = std::log(tau) + ag * std::log(M / R);
    const double u_a = phi2 * std::pow(z.inner, ag);
    const double u_b = phi2 * std::pow(z.outer, ag);
    const double ln_phi2 = std::log(phi2);

    double sum = 0.0;
    int quiet = 0;
    for (int n = 0; n < static_cast<int>(C.size()); ++n) {
        double term = 0.0;
        if (C[n] != 0.0) {
            const double ln_mag = std::log(std::abs(C[n])) + n * lnW -
                                  (n + dg) * ln_phi2 + log_gamma_diff(n + dg, u_a, u_b) -
                                  std::log(ag);
            term = (C[n] < 0.0 ? -1.0 : 1.0) * std::exp(ln_mag);
        }
        sum += term;
        if (n > 2 && std::abs(term) < 1e-12 * std::abs(sum)) {
            if (++quiet >= 3) return pre * sum;
        } else {
            quiet = 0;
        }
    }
    if (i == cfg.M) return pre * sum; // empty interferer product: single exact term
    throw convergence_error("coverage_low_rate: series not converged within cap");
}

double coverage_oma(int i, const NetworkConfig& cfg) {
    if (i < 1 || i > cfg.M) throw std::domain_error("coverage_oma: i out of [1, M]");
    if (!(cfg.P_g > 0.0)) throw std::domain_error("coverage_oma: P_g must be > 0");
    const double phi = cfg.tau_oma(i) * cfg.sigma2 / cfg.P_g;
    if (phi == 0.0) return 1.0;
    const ZoneGeometry z = make_zone(cfg, ZoneKind::TerrestrialAnnulus, i);
    const double dg = cfg.delta_g();
    const double pre = 2.0 * cfg.M * cfg.M / zone_norm_terrestrial(cfg, i);
    const double u_a = phi * std::pow(z.inner, cfg.alpha_g);
    const double u_b = phi * std::pow(z.outer, cfg.alpha_g);
    return pre * std::exp(-dg * std::log(phi) + log_gamma_diff(dg, u_a, u_b) -
                          std::log(cfg.alpha_g));
}

int required_rbs(AccessMode mode, int n_devices, int M) {
    if (n_devices < 1) throw std::domain_error("required_rbs: n_devices must be >= 1");
    if (M < 1) throw std::domain_error("required_rbs: M must be >= 1");
    switch (mode) {
        case AccessMode::Oma: return n_devices;
        case AccessMode::Scma: return (2 * n_devices + 2) / 3;
        case AccessMode::Noma: return (n_devices + M - 1) / M;
    }
    throw std::domain_error("required_rbs: bad mode");
}

} // namespace nomacov
