#include "varex/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace varex {

double epanechnikov(double u) { return std::abs(u) < 1.0 ? 0.75 * (1.0 - u * u) : 0.0; }

std::string to_string(EstimatorKind k) {
    switch (k) {
        case EstimatorKind::plugin: return "plugin";
        case EstimatorKind::resub: return "resub";
        default: return "quantile";
    }
}

EstimatorKind estimator_from_string(const std::string& name) {
    if (name == "plugin") return EstimatorKind::plugin;
    if (name == "resub") return EstimatorKind::resub;
    if (name == "quantile") return EstimatorKind::quantile;
    throw std::invalid_argument("unknown estimator '" + name + "'");
}

double bandwidth_default(const SampleData& sample) {
    if (sample.n() < 2) throw std::domain_error("bandwidth: need at least 2 observations");
    if (!(sample.std_dev > 0.0)) throw std::domain_error("bandwidth: sample has zero variance");
    return 1.06 * sample.std_dev * std::pow(static_cast<double>(sample.n()), -0.2);
}

double bandwidth_reference(const SampleData& sample, std::size_t count) {
    if (sample.n() < 2 || count < 1)
        throw std::domain_error("bandwidth: need at least 2 observations");
    if (!(sample.std_dev > 0.0)) throw std::domain_error("bandwidth: sample has zero variance");
    constexpr double kRoot5 = 2.2360679774997896964;
    return kRoot5 * 1.06 * sample.std_dev * std::pow(static_cast<double>(count), -0.2);
}

namespace {

// Sum of kernel contributions to x from the sorted points within one half-width.
double kernel_window_sum(const std::vector<double>& sorted, double x, double h) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), x - h);
    const auto hi = std::upper_bound(sorted.begin(), sorted.end(), x + h);
    double s = 0.0;
    for (auto it = lo; it != hi; ++it) s += epanechnikov((x - *it) / h);
    return s;
}

std::size_t step_quantile_index(std::size_t n, double u) {
    const double nd = static_cast<double>(n);
    auto idx = static_cast<long>(std::ceil(nd * u - 1e-12));
    if (idx < 1) idx = 1;
    if (idx > static_cast<long>(n)) idx = static_cast<long>(n);
    return static_cast<std::size_t>(idx);
}

// Composite Simpson weights applied to grid samples g_0..g_m, m even.
double simpson(const std::vector<double>& g, double step) {
    const std::size_t m = g.size() - 1;
    double odd = 0.0, even = 0.0;
    for (std::size_t k = 1; k < m; k += 2) odd += g[k];
    for (std::size_t k = 2; k < m; k += 2) even += g[k];
    return step / 3.0 * (g[0] + g[m] + 4.0 * odd + 2.0 * even);
}

}  // namespace

double kde_eval(const SampleData& sample, const KernelSpec& kernel, double x) {
    if (!(kernel.bandwidth > 0.0)) throw std::domain_error("kde: bandwidth must be positive");
    const double h = kernel.bandwidth;
    return kernel_window_sum(sample.sorted, x, h) / (static_cast<double>(sample.n()) * h);
}

double kde_loo_eval(const SampleData& sample, std::size_t i, std::optional<double> bandwidth) {
    if (i >= sample.n()) throw std::out_of_range("kde_loo: index out of range");
    if (sample.n() < 2) throw std::domain_error("kde_loo: need at least 2 observations");
    const double h = bandwidth ? *bandwidth : bandwidth_reference(sample, sample.n() - 1);
    const double xi = sample.values[i];
    const double s = kernel_window_sum(sample.sorted, xi, h) - epanechnikov(0.0);
    return std::max(0.0, s) / (static_cast<double>(sample.n() - 1) * h);
}

double empirical_quantile(const SampleData& sample, double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("empirical quantile: u outside [0,1]");
    if (u == 0.0) return sample.sorted.front();
    return sample.sorted[step_quantile_index(sample.n(), u) - 1];
}

double quantile_density_estimate(const SampleData& sample, double u,
                                 std::optional<double> bandwidth) {
    const double h = bandwidth ? *bandwidth : bandwidth_reference(sample, sample.n());
    const std::size_t n = sample.n();
    const KernelSpec kern{h};
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double si = static_cast<double>(i + 1) / static_cast<double>(n);
        const double k = epanechnikov((si - u) / h);
        if (k == 0.0) continue;
        s += k / kde_eval(sample, kern, sample.sorted[i]);
    }
    return s / (static_cast<double>(n) * h);
}

EstimateResult plugin_estimate(const SampleData& sample, std::optional<double> bandwidth,
                               Interval support) {
    if (sample.n() < 2) throw std::domain_error("plugin estimator: need at least 2 observations");
    const double h = bandwidth ? *bandwidth : bandwidth_reference(sample, sample.n());
    const std::size_t n = sample.n();

    const double a = std::max(support.lo, sample.sorted.front() - h);
    const double b = std::min(support.hi, sample.sorted.back() + h);
    EstimateResult out{0.0, EstimatorKind::plugin, h, n};
    if (!(b > a)) return out;

    constexpr std::size_t kPanels = 4096;
    const double step = (b - a) / kPanels;
    std::vector<double> fgrid(kPanels + 1, 0.0);
    const double scale = 1.0 / (static_cast<double>(n) * h);
    for (double x : sample.sorted) {
        auto k_lo = static_cast<long>(std::ceil((x - h - a) / step));
        auto k_hi = static_cast<long>(std::floor((x + h - a) / step));
        if (k_lo < 0) k_lo = 0;
        if (k_hi > static_cast<long>(kPanels)) k_hi = static_cast<long>(kPanels);
        for (long k = k_lo; k <= k_hi; ++k)
            fgrid[static_cast<std::size_t>(k)] += epanechnikov((a + k * step - x) / h) * scale;
    }
    std::vector<double> g1(kPanels + 1), g2(kPanels + 1);
    for (std::size_t k = 0; k <= kPanels; ++k) {
        const double x = a + k * step;
        const double f = fgrid[k];
        g1[k] = x * f * f;
        g2[k] = x * x * f * f * f;
    }
    const double i1 = simpson(g1, step);
    const double i2 = simpson(g2, step);
    out.value = 0.25 * (i2 - i1 * i1);
    return out;
}

EstimateResult resub_estimate(const SampleData& sample, std::optional<double> bandwidth) {
    if (sample.n() < 2) throw std::domain_error("resub estimator: need at least 2 observations");
    const double h = bandwidth ? *bandwidth : bandwidth_reference(sample, sample.n() - 1);
    const std::size_t n = sample.n();
    const double denom = static_cast<double>(n - 1) * h;
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = sample.sorted[i];
        const double loo =
            std::max(0.0, kernel_window_sum(sample.sorted, xi, h) - epanechnikov(0.0)) / denom;
        s1 += xi * loo;
        s2 += xi * xi * loo * loo;
    }
    const double nd = static_cast<double>(n);
    EstimateResult out{0.0, EstimatorKind::resub, h, n};
    out.value = s2 / (4.0 * nd) - 0.25 * (s1 / nd) * (s1 / nd);
    return out;
}

EstimateResult quantile_estimate(const SampleData& sample, std::optional<double> bandwidth) {
    if (sample.n() < 2)
        throw std::domain_error("quantile estimator: need at least 2 observations");
    const double h = bandwidth ? *bandwidth : bandwidth_reference(sample, sample.n());
    const std::size_t n = sample.n();
    const double nd = static_cast<double>(n);

    // Full-sample KDE at the order statistics; strictly positive since each
    // point covers itself.
    const KernelSpec kern{h};
    std::vector<double> fn(n);
    for (std::size_t i = 0; i < n; ++i) fn[i] = kde_eval(sample, kern, sample.sorted[i]);

    // Step quantile, integration over [1/(2n), 1-1/(2n)]: the step function
    // and the quantile density both misbehave in the outermost half-spacing.
    const double eps = 1.0 / (2.0 * nd);
    constexpr std::size_t kPanels = 2048;
    const double lo = eps, hi = 1.0 - eps;
    const double step = (hi - lo) / kPanels;

    std::vector<double> g1(kPanels + 1), g2(kPanels + 1);
    for (std::size_t k = 0; k <= kPanels; ++k) {
        const double u = lo + static_cast<double>(k) * step;
        // kernel covers S_i in (u-h, u+h); S_i = (i+1)/n
        auto i_lo = static_cast<long>(std::ceil(nd * (u - h))) - 1;
        auto i_hi = static_cast<long>(std::floor(nd * (u + h))) - 1;
        if (i_lo < 0) i_lo = 0;
        if (i_hi > static_cast<long>(n - 1)) i_hi = static_cast<long>(n - 1);
        double q = 0.0;
        for (long i = i_lo; i <= i_hi; ++i) {
            const double si = static_cast<double>(i + 1) / nd;
            const double kv = epanechnikov((si - u) / h);
            if (kv != 0.0) q += kv / fn[static_cast<std::size_t>(i)];
        }
        q /= nd * h;
        if (q > 0.0) {
            const double qn = sample.sorted[step_quantile_index(n, u) - 1];
            g1[k] = qn / q;
            g2[k] = qn * qn / (q * q);
        } else {
            g1[k] = 0.0;
            g2[k] = 0.0;
        }
    }
    const double i1 = simpson(g1, step);
    const double i2 = simpson(g2, step);
    EstimateResult out{0.0, EstimatorKind::quantile, h, n};
    out.value = 0.25 * (i2 - i1 * i1);
    return out;
}

EstimateResult estimate(const SampleData& sample, EstimatorKind kind,
                        std::optional<double> bandwidth, Interval support) {
    switch (kind) {
        case EstimatorKind::plugin: return plugin_estimate(sample, bandwidth, support);
        case EstimatorKind::resub: return resub_estimate(sample, bandwidth);
        default: return quantile_estimate(sample, bandwidth);
    }
}

}  // namespace varex
