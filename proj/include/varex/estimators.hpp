#pragma once

#include <optional>
#include <string>

#include "varex/common.hpp"
#include "varex/sample.hpp"

namespace varex {

/// Epanechnikov kernel 3/4 (1-x^2) on |x| < 1.
double epanechnikov(double u);

/// Kernel with its half-width; the kernel shape is fixed to Epanechnikov.
struct KernelSpec {
    double bandwidth;
};

enum class EstimatorKind { plugin, resub, quantile };
std::string to_string(EstimatorKind k);
EstimatorKind estimator_from_string(const std::string& name);

struct EstimateResult {
    double value;
    EstimatorKind estimator;
    double bandwidth_used;  // kernel half-width actually applied
    std::size_t n;
};

/// Textbook reference rule 1.06 s n^(-1/5). Throws for degenerate samples.
double bandwidth_default(const SampleData& sample);

/// Half-width the estimators use by default: sqrt(5) * 1.06 s count^(-1/5).
/// The reference rule sets the kernel's standard deviation, and an
/// Epanechnikov kernel with unit sd spans (-sqrt(5), sqrt(5)).
double bandwidth_reference(const SampleData& sample, std::size_t count);

/// Kernel density estimate at x with an explicit half-width.
double kde_eval(const SampleData& sample, const KernelSpec& kernel, double x);

/// Leave-one-out density at the i-th observation (0-based, original order).
/// The default half-width uses count n-1 with the full-sample deviation.
double kde_loo_eval(const SampleData& sample, std::size_t i,
                    std::optional<double> bandwidth = {});

/// Q_n(u) = X_(ceil(n u)); u = 0 maps to the sample minimum.
double empirical_quantile(const SampleData& sample, double u);

/// Kernel quantile-density estimate at u in (0,1).
double quantile_density_estimate(const SampleData& sample, double u,
                                 std::optional<double> bandwidth = {});

/// Plug-in estimator: Simpson integration of the KDE moments over the
/// declared support (default [0, inf)) intersected with where the estimate
/// is nonzero.
EstimateResult plugin_estimate(const SampleData& sample, std::optional<double> bandwidth = {},
                               Interval support = {0.0, kInf});

/// Resubstitution estimator: empirical moments of the leave-one-out KDE;
/// no numerical integration.
EstimateResult resub_estimate(const SampleData& sample, std::optional<double> bandwidth = {});

/// Quantile estimator: Simpson integration of interpolated-quantile /
/// quantile-density moments over (0,1), zero where the density vanishes.
EstimateResult quantile_estimate(const SampleData& sample, std::optional<double> bandwidth = {});

EstimateResult estimate(const SampleData& sample, EstimatorKind kind,
                        std::optional<double> bandwidth = {}, Interval support = {0.0, kInf});

}  // namespace varex
