#include "nomacov/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace nomacov {

QuadratureRule chebyshev_rule(int order) {
    if (order < 1) throw std::domain_error("chebyshev_rule: order must be >= 1");
    QuadratureRule rule;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const double pi = std::acos(-1.0);
    for (int n = 1; n <= order; ++n) {
        rule.nodes[n - 1] = std::cos((2.0 * n - 1.0) * pi / (2.0 * order));
        rule.weights[n - 1] = pi / order;
    }
    return rule;
}

namespace {

// QUADPACK dqk15 abscissae/weights. xgk holds the positive Kronrod nodes,
// wgk the Kronrod weights, wg the embedded 7-point Gauss weights.
constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k = wgk[7] * fc;
    double g = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * xgk[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        k += wgk[j] * (f1 + f2);
        if (j % 2 == 1) g += wg[j / 2] * (f1 + f2);
    }
    const double value = k * h;
    const double err = std::abs((k - g) * h);
    return {a, b, value, err};
}

} // namespace

double integrate_segmented(const std::function<double(double)>& f,
                           std::vector<double> points,
                           const IntegrateOptions& opts) {
    if (points.size() < 2) throw std::invalid_argument("integrate: need at least two points");
    std::sort(points.begin(), points.end());
    std::priority_queue<Panel> heap;
    double total = 0.0, total_err = 0.0;
    int n_panels = 0;
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i] == points[i + 1]) continue;
        Panel p = eval_panel(f, points[i], points[i + 1]);
        total += p.value;
        total_err += p.error;
        heap.push(p);
        ++n_panels;
    }
    while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
        if (n_panels >= opts.max_intervals)
            throw convergence_error("integrate: interval budget exhausted");
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw convergence_error("integrate: interval underflow before tolerance met");
        Panel l = eval_panel(f, worst.a, mid);
        Panel r = eval_panel(f, mid, worst.b);
        total += l.value + r.value - worst.value;
        total_err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        ++n_panels;
    }
    return total;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const IntegrateOptions& opts) {
    if (a == b) return 0.0;
    return integrate_segmented(f, {a, b}, opts);
}

} // namespace nomacov
