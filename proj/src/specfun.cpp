#include "nomacov/specfun.hpp"

#include <cmath>
#include <limits>

namespace nomacov {

namespace {
const double kPi = std::acos(-1.0);

std::vector<double> layered_points(double lo, double hi, double layer) {
    // breakpoints clustered around a boundary layer at `layer`
    std::vector<double> pts{lo, hi};
    for (double p : {layer, 4.0 * layer, 16.0 * layer, 64.0 * layer})
        if (p > lo && p < hi) pts.push_back(p);
    return pts;
}
} // namespace

double gauss_2f1_neg_reg(double delta, double z) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::domain_error("gauss_2f1_neg: delta must be in (0,1)");
    if (z > 0.0) throw std::domain_error("gauss_2f1_neg: z must be <= 0");
    const double w = -z;
    if (w == 0.0) return 1.0;
    const double p = 2.0 / (1.0 + delta);
    // int_0^1 y / (y^p + w) dy with a layer where y^p ~ w
    const double layer = std::pow(w, 1.0 / p);
    IntegrateOptions opts;
    opts.abs_tol = 1e-13;
    opts.rel_tol = 1e-12;
    const double integral = integrate_segmented(
        [p, w](double y) { return y / (std::pow(y, p) + w); },
        layered_points(0.0, 1.0, layer), opts);
    return delta * p * integral;
}

double gauss_2f1_neg(double delta, double z) {
    const double reg = gauss_2f1_neg_reg(delta, z);
    const double w = -z;
    if (w == 0.0) return reg;
    return reg + delta * kPi / std::sin(kPi * delta) * std::pow(w, delta);
}

double inc_beta_gen(double x, double a, double b) {
    if (a == 0.0 || std::abs(a) >= 1.0)
        throw std::domain_error("inc_beta_gen: need 0 < |a| < 1");
    if (x == 0.0) return 0.0;
    if (x >= 1.0) throw std::domain_error("inc_beta_gen: x must be < 1");

    const double ax = std::abs(x);
    const double sign = x < 0.0 ? 1.0 : -1.0; // sign inside (1 -+ u)
    // Finite part: int_0^ax u^(a-1) [(1 -+ u)^(b-1) - 1] du + ax^a / a.
    // Substituting u = y^q with q = 2/(1+a) makes the integrand O(y) at 0.
    const double q = 2.0 / (1.0 + a);
    IntegrateOptions opts;
    opts.abs_tol = 1e-13;
    opts.rel_tol = 1e-11;
    const double yhi = std::pow(ax, 1.0 / q);
    const double integral = integrate(
        [a, b, q, sign](double y) {
            if (y <= 0.0) return 0.0;
            const double u = std::pow(y, q);
            const double bracket = std::expm1((b - 1.0) * std::log1p(sign * u));
            return q * std::pow(y, q * a - 1.0) * bracket;
        },
        0.0, yhi, opts);
    return integral + std::pow(ax, a) / a;
}

namespace {

// regularized lower incomplete gamma by series, x < s+1
double gamma_p_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
            return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw convergence_error("reg_lower_gamma: series did not converge");
}

// regularized upper incomplete gamma by Lentz continued fraction, x >= s+1
double gamma_q_cf(double s, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw convergence_error("reg_upper_gamma: continued fraction did not converge");
}

} // namespace

double reg_lower_gamma(double s, double x) {
    if (s <= 0.0) throw std::domain_error("reg_lower_gamma: s must be > 0");
    if (x < 0.0) throw std::domain_error("reg_lower_gamma: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < s + 1.0) return gamma_p_series(s, x);
    return 1.0 - gamma_q_cf(s, x);
}

double reg_upper_gamma(double s, double x) { return 1.0 - reg_lower_gamma(s, x); }

double lower_inc_gamma(double s, double x) {
    return reg_lower_gamma(s, x) * std::tgamma(s);
}

double pochhammer(double x, int n) {
    if (n < 0) throw std::domain_error("pochhammer: n must be >= 0");
    double out = 1.0;
    for (int k = 0; k < n; ++k) out *= x + k;
    return out;
}

namespace {

// Acklam-style rational approximation of the standard normal quantile.
double probit_guess(double p) {
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

} // namespace

double inverse_q(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("inverse_q: p must be in (0,1)");
    // Q(x) = 0.5*erfc(x/sqrt(2)); solve for x with Halley refinement.
    double x = -probit_guess(p); // Q^-1(p) = -Phi^-1(p) ... Phi^-1(1-p)
    for (int it = 0; it < 3; ++it) {
        const double e = 0.5 * std::erfc(x / std::sqrt(2.0)) - p;
        const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
        if (pdf == 0.0) break;
        const double u = e / (-pdf);
        x = x - u / (1.0 + 0.5 * x * u);
    }
    return x;
}

} // namespace nomacov
