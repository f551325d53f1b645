#pragma once

#include <functional>

#include "varex/bivariate.hpp"
#include "varex/distribution.hpp"
#include "varex/quadrature.hpp"
#include "varex/weight.hpp"

namespace varex {

/// How a measure value was produced, with the integration error estimate
/// (0 for closed forms).
struct MeasureValue {
    enum class Method { closed_form, quadrature };
    double value = 0.0;
    Method method = Method::quadrature;
    double est_abs_error = 0.0;
};

/// Knobs shared by all measure computations. Closed forms declared by the
/// catalogue are used when available unless `use_closed_forms` is off.
struct MeasureOptions {
    QuadratureConfig quad{};
    bool use_closed_forms = true;
};

/// J(X) = -1/2 int f^2.
MeasureValue extropy(const Distribution& d, const MeasureOptions& opt = {});

/// J_phi(X) = -1/2 int phi f^2.
MeasureValue weighted_extropy(const Distribution& d, const WeightFunction& phi,
                              const MeasureOptions& opt = {});

/// VJ(X) = 1/4 int f^3 - J(X)^2; a variance, hence >= 0.
MeasureValue varextropy(const Distribution& d, const MeasureOptions& opt = {});

/// VJ_phi(X) = 1/4 int phi^2 f^3 - J_phi(X)^2.
MeasureValue weighted_varextropy(const Distribution& d, const WeightFunction& phi,
                                 const MeasureOptions& opt = {});

/// Weight-x weighted varextropy evaluated through the quantile density,
/// 1/4 (int_0^1 (Q/q)^2 - (int_0^1 Q/q)^2) with q = 1/f(Q): the engine's
/// internal cross-check path. Always quadrature.
MeasureValue weighted_varextropy_quantile_form(const Distribution& d,
                                               const MeasureOptions& opt = {});

/// Weight-x weighted varextropy of the equilibrium law, density (1-F)/mean.
/// Requires nonnegative support and a finite mean.
MeasureValue equilibrium_weighted_varextropy(const Distribution& d,
                                             const MeasureOptions& opt = {});

/// Weight-x weighted varextropy of the delta-weighted law with density
/// delta(x) f(x) / E[delta(X)], via the variance identity
/// Var_Y[Y delta(Y) f(Y)] / (4 E[delta(X)]^2).
MeasureValue weighted_law_varextropy(const Distribution& d, const WeightFunction& delta,
                                     const MeasureOptions& opt = {});

/// Weight-x weighted varextropy of Y = g(X) for strictly increasing g:
/// 1/4 Var[g(X) f(X) / g'(X)]. Monotonicity is checked on a quantile grid.
MeasureValue transform_weighted_varextropy(const Distribution& d,
                                           const std::function<double(double)>& g,
                                           const std::function<double(double)>& g_prime,
                                           const MeasureOptions& opt = {});

/// 1/16 [ int int x^2 y^2 f^3 - (int int x y f^2)^2 ] by nested quadrature.
MeasureValue bivariate_weighted_varextropy(const BivariateModel& m,
                                           const MeasureOptions& opt = {});

/// Weighted varextropy of the residual life at t (law of X | X > t).
MeasureValue residual_weighted_varextropy(const Distribution& d, const WeightFunction& phi,
                                          double t, const MeasureOptions& opt = {});

/// Weighted varextropy of the past life at t (law of X | X <= t).
MeasureValue past_weighted_varextropy(const Distribution& d, const WeightFunction& phi,
                                      double t, const MeasureOptions& opt = {});

/// Threshold whose comparison against the residual weighted varextropy
/// classifies its local monotonicity in t: the residual measure is locally
/// increasing iff it is >= this value.
double residual_monotonicity_rhs(const Distribution& d, const WeightFunction& phi, double t,
                                 const MeasureOptions& opt = {});

/// Mean-residual-life upper bound for the residual weighted varextropy.
/// Requires a differentiable weight and finite mean residual life.
double residual_mrl_upper_bound(const Distribution& d, const WeightFunction& phi, double t,
                                const MeasureOptions& opt = {});

/// Closed-form lower bound for the weight-x weighted varextropy of a normal
/// law: 11/(512 pi) + mu^2 / (128 sigma^2 pi).
double normal_lower_bound(double mu, double sigma);

/// Closed-form lower bound for the weight-x weighted varextropy of an
/// inverse gamma law; free of the scale parameter. Requires alpha > 3/2.
double invgamma_lower_bound(double alpha, double beta);

}  // namespace varex
