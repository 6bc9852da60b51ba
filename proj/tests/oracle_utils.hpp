#pragma once

// Test-side numerical oracles, deliberately independent of the library's
// Gauss-Kronrod integrator: adaptive Simpson quadrature plus the usual
// goodness-of-fit statistics.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

inline double simpson_panel(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                                   double fa, double b, double fb, double m, double fm,
                                   double whole, double eps, double rel, int depth,
                                   long& budget) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    if ((budget -= 2) < 0)
        throw std::runtime_error("adaptive_simpson: evaluation budget exhausted");
    const double left = simpson_panel(a, fa, m, fm, flm);
    const double right = simpson_panel(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * (eps + rel * std::abs(left + right)) || depth <= 0)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, eps / 2.0, rel, depth - 1,
                                budget) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, eps / 2.0, rel, depth - 1,
                                budget);
}

/// Adaptive Simpson integration (independent of the library integrator).
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-11, double rel = 1e-13, int depth = 48) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson_panel(a, fa, b, fb, fm);
    long budget = 4000000;
    return adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, eps, rel, depth, budget);
}

/// Integrate with the interval split at the given interior breakpoints.
inline double integrate_pieces(const std::function<double(double)>& f,
                               std::vector<double> pts, double eps = 1e-11) {
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] < pts[i + 1]) total += integrate(f, pts[i], pts[i + 1], eps);
    return total;
}

/// One-sample Kolmogorov-Smirnov statistic against a CDF.
inline double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double c = cdf(xs[i]);
        d = std::max(d, std::abs(c - (i + 1) / n));
        d = std::max(d, std::abs(c - i / n));
    }
    return d;
}

/// Asymptotic Kolmogorov p-value, P(D > d) for sample size n.
inline double ks_pvalue(double d, double n_effective) {
    const double lambda = (std::sqrt(n_effective) + 0.12 + 0.11 / std::sqrt(n_effective)) * d;
    double p = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = 2.0 * std::pow(-1.0, k - 1) * std::exp(-2.0 * k * k * lambda * lambda);
        p += term;
        if (std::abs(term) < 1e-12) break;
    }
    return std::clamp(p, 0.0, 1.0);
}

/// Two-sample KS p-value.
inline double ks2_pvalue(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i;
        else ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                                 static_cast<double>(j) / b.size()));
    }
    const double ne = static_cast<double>(a.size()) * b.size() / (a.size() + b.size());
    return ks_pvalue(d, ne);
}

/// Chi-square upper tail via the regularized incomplete gamma (Lentz /
/// series, independent of the library implementation).
inline double chi2_pvalue(double stat, int dof) {
    const double s = dof / 2.0, x = stat / 2.0;
    if (x <= 0.0) return 1.0;
    // series for P(s,x) when x < s+1, else continued fraction for Q
    if (x < s + 1.0) {
        double term = 1.0 / s, sum = term;
        for (int n = 1; n < 1000; ++n) {
            term *= x / (s + n);
            sum += term;
            if (term < 1e-16 * sum) break;
        }
        const double P = sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
        return 1.0 - P;
    }
    const double tiny = 1e-300;
    double bb = x + 1.0 - s, c = 1.0 / tiny, dd = 1.0 / bb, h = dd;
    for (int i = 1; i < 1000; ++i) {
        const double an = -i * (i - s);
        bb += 2.0;
        dd = an * dd + bb;
        if (std::abs(dd) < tiny) dd = tiny;
        c = bb + an / c;
        if (std::abs(c) < tiny) c = tiny;
        dd = 1.0 / dd;
        const double del = dd * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

/// Chi-square goodness-of-fit p-value of samples against a CDF, using
/// equal-probability bins.
inline double chi2_gof_pvalue(const std::vector<double>& xs,
                              const std::function<double(double)>& quantile, int bins) {
    std::vector<std::int64_t> counts(bins, 0);
    std::vector<double> edges(bins + 1);
    for (int b = 0; b <= bins; ++b)
        edges[b] = b == 0 ? -1e300 : (b == bins ? 1e300 : quantile(static_cast<double>(b) / bins));
    for (double x : xs) {
        const auto it = std::upper_bound(edges.begin(), edges.end(), x);
        const int b = std::clamp(static_cast<int>(it - edges.begin()) - 1, 0, bins - 1);
        counts[b] += 1;
    }
    const double expect = static_cast<double>(xs.size()) / bins;
    double stat = 0.0;
    for (int b = 0; b < bins; ++b) {
        const double diff = counts[b] - expect;
        stat += diff * diff / expect;
    }
    return chi2_pvalue(stat, bins - 1);
}

/// Deterministic uniform stream for property tests.
struct TestRng {
    std::mt19937_64 eng;
    explicit TestRng(std::uint64_t seed) : eng(seed) {}
    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(eng);
    }
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
};

} // namespace oracle
