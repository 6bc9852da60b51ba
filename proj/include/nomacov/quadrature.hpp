#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace nomacov {

/// Gauss-Chebyshev rule of the first kind on (-1,1).
/// Nodes are cos((2n-1)pi/(2N)); every weight equals pi/N.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order = 0;
};

QuadratureRule chebyshev_rule(int order);

/// Raised when an adaptive integral or a series fails to converge within
/// its budget. The CLI maps this to exit code 2.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegrateOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_intervals = 10000;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over (a, b).
/// Throws convergence_error if the interval budget is exhausted before the
/// requested tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const IntegrateOptions& opts = {});

/// Same, but the caller supplies interior breakpoints (useful when the
/// integrand has a known boundary layer).
double integrate_segmented(const std::function<double(double)>& f,
                           std::vector<double> points,
                           const IntegrateOptions& opts = {});

} // namespace nomacov
