#pragma once

#include <functional>
#include <span>

#include "varex/common.hpp"

namespace varex {

/// Tolerances for the adaptive integrator.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 2000;
};

struct QuadratureResult {
    double value = 0.0;
    double est_abs_error = 0.0;
    bool converged = false;
    int subdivisions = 0;
};

/// Globally adaptive Gauss-Kronrod (G7,K15) over a finite interval.
/// `breakpoints` become mandatory panel boundaries; points outside (a,b)
/// are ignored. The worst panel is bisected until the summed error
/// estimate meets max(abs_tol, rel_tol*|value|) or the panel budget runs out.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {},
                           std::span<const double> breakpoints = {});

/// Same, over a possibly unbounded interval. Infinite tails are mapped onto
/// (0,1) with x = t/(1-t); a doubly infinite domain is split at zero.
QuadratureResult integrate_interval(const std::function<double(double)>& f, Interval domain,
                                    const QuadratureConfig& cfg = {},
                                    std::span<const double> breakpoints = {});

}  // namespace varex
