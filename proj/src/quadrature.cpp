#include "varex/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace varex {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1].
// Rows: |node|, Gauss weight (0 for Kronrod-only nodes), Kronrod weight.
constexpr double kNodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct Panel {
    double a, b;
    double value;
    double error;
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double m = 0.5 * (b - a);
    bool bad = false;
    auto safe = [&](double x) {
        const double y = f(x);
        if (!std::isfinite(y)) {
            bad = true;
            return 0.0;
        }
        return y;
    };
    const double y0 = safe(c);
    double g7 = kNodes[0][1] * y0;
    double k15 = kNodes[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = m * kNodes[i][0];
        const double yi = safe(c + dx) + safe(c - dx);
        g7 += kNodes[i][1] * yi;
        k15 += kNodes[i][2] * yi;
    }
    g7 *= m;
    k15 *= m;
    double err = std::abs(k15 - g7);
    if (bad) err = std::max(err, std::abs(k15)) + 1.0;  // keep splitting near a singular spot
    return Panel{a, b, k15, err};
}

bool worse(const Panel& x, const Panel& y) { return x.error < y.error; }

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg, std::span<const double> breakpoints) {
    QuadratureResult out;
    if (!(b > a)) {
        out.converged = true;
        return out;
    }
    std::vector<double> edges;
    edges.push_back(a);
    for (double x : breakpoints)
        if (std::isfinite(x) && x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](double x, double y) { return y - x < 1e-300; }),
                edges.end());

    // Each seed segment starts with several panels so narrow features inside
    // a wide segment register in the error estimates at all.
    int per_segment = 8;
    while (per_segment > 1 &&
           per_segment * static_cast<int>(edges.size() - 1) > cfg.max_subdivisions)
        per_segment /= 2;

    std::vector<Panel> heap;
    heap.reserve(static_cast<std::size_t>(cfg.max_subdivisions) + 8);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double lo = edges[i], hi = edges[i + 1];
        const double step = (hi - lo) / per_segment;
        for (int k = 0; k < per_segment; ++k) {
            const double pa = lo + k * step;
            const double pb = k + 1 == per_segment ? hi : lo + (k + 1) * step;
            heap.push_back(eval_panel(f, pa, pb));
        }
    }
    std::make_heap(heap.begin(), heap.end(), worse);

    auto totals = [&heap]() {
        double v = 0.0, e = 0.0;
        for (const Panel& p : heap) {
            v += p.value;
            e += p.error;
        }
        return std::pair<double, double>(v, e);
    };

    auto [value, error] = totals();
    int splits = static_cast<int>(heap.size());
    while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value)) &&
           splits < cfg.max_subdivisions) {
        std::pop_heap(heap.begin(), heap.end(), worse);
        const Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {  // interval at floating resolution
            heap.push_back(Panel{worst.a, worst.b, worst.value, 0.0});
            std::push_heap(heap.begin(), heap.end(), worse);
            continue;
        }
        heap.push_back(eval_panel(f, worst.a, mid));
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(eval_panel(f, mid, worst.b));
        std::push_heap(heap.begin(), heap.end(), worse);
        ++splits;
        std::tie(value, error) = totals();
    }

    // Deterministic final reduction: sum panels in interval order.
    std::sort(heap.begin(), heap.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::vector<double> vals(heap.size()), errs(heap.size());
    for (std::size_t i = 0; i < heap.size(); ++i) {
        vals[i] = heap[i].value;
        errs[i] = heap[i].error;
    }
    out.value = pairwise_sum(vals);
    out.est_abs_error = pairwise_sum(errs);
    out.subdivisions = splits;
    out.converged =
        out.est_abs_error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
    return out;
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, Interval domain,
                                    const QuadratureConfig& cfg,
                                    std::span<const double> breakpoints) {
    const double lo = domain.lo, hi = domain.hi;
    if (std::isfinite(lo) && std::isfinite(hi)) return integrate(f, lo, hi, cfg, breakpoints);

    if (std::isfinite(lo) && !std::isfinite(hi)) {
        // x = lo + t/(1-t), dx = dt/(1-t)^2
        auto g = [&f, lo](double t) {
            const double s = 1.0 - t;
            return f(lo + t / s) / (s * s);
        };
        std::vector<double> bps;
        for (double x : breakpoints)
            if (std::isfinite(x) && x > lo) bps.push_back((x - lo) / (1.0 + x - lo));
        return integrate(g, 0.0, 1.0, cfg, bps);
    }
    if (!std::isfinite(lo) && std::isfinite(hi)) {
        auto g = [&f, hi](double t) {
            const double s = 1.0 - t;
            return f(hi - t / s) / (s * s);
        };
        std::vector<double> bps;
        for (double x : breakpoints)
            if (std::isfinite(x) && x < hi) bps.push_back((hi - x) / (1.0 + hi - x));
        return integrate(g, 0.0, 1.0, cfg, bps);
    }

    // Doubly infinite: split at zero, halve the panel budget per side.
    QuadratureConfig half = cfg;
    half.max_subdivisions = std::max(16, cfg.max_subdivisions / 2);
    half.abs_tol = 0.5 * cfg.abs_tol;
    const QuadratureResult left = integrate_interval(f, Interval{-kInf, 0.0}, half, breakpoints);
    const QuadratureResult right = integrate_interval(f, Interval{0.0, kInf}, half, breakpoints);
    QuadratureResult out;
    out.value = left.value + right.value;
    out.est_abs_error = left.est_abs_error + right.est_abs_error;
    out.converged = left.converged && right.converged;
    out.subdivisions = left.subdivisions + right.subdivisions;
    return out;
}

}  // namespace varex
