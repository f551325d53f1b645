#pragma once

#include <string_view>
#include <vector>

#include "varex/distribution.hpp"
#include "varex/measures.hpp"

namespace varex {

/// Coherent-system signature: probability weights over the component order
/// statistics. Entries are nonnegative and sum to one.
class SignatureVector {
public:
    explicit SignatureVector(std::vector<double> s);
    /// Parses comma-separated rationals or decimals, e.g. "0,1/6,7/12,1/4".
    /// Rejects entries that are negative or do not sum to 1 within 1e-9.
    static SignatureVector parse(std::string_view text);

    const std::vector<double>& values() const { return s_; }
    int order() const { return static_cast<int>(s_.size()); }

private:
    std::vector<double> s_;
};

/// System of iid components with the given signature.
struct SystemModel {
    SignatureVector signature;
    Distribution component_law;
};

/// Density of the i-th order statistic out of n.
double order_stat_pdf(const Distribution& d, int i, int n, double x);

/// Mixture density of the system lifetime expressed on the quantile scale:
/// g_V(u) = sum_i s_i * beta_pdf(u; i, n-i+1).
double system_mixture_density(const SignatureVector& s, double u);

struct SystemMeasures {
    double extropy;
    double varextropy;
    double weighted_varextropy;
    double est_abs_error;
};

/// Extropy, varextropy and weight-x weighted varextropy of the system
/// lifetime, via quantile-scale integrals of g_V.
SystemMeasures system_varextropy(const SystemModel& sys, const MeasureOptions& opt = {});

/// Upper bound for the system extropy from the classical Hardy inequality;
/// requires nonnegative component support.
double hardy_extropy_bound(const SystemModel& sys, const MeasureOptions& opt = {});

/// Companion upper bound for the system varextropy.
double hardy_varextropy_bound(const SystemModel& sys, const MeasureOptions& opt = {});

/// Weight-x weighted varextropy of the r-th order statistic of an n-sample,
/// through the beta-expectation identity on the quantile scale.
double order_stat_weighted_varextropy(const Distribution& d, int r, int n,
                                      const MeasureOptions& opt = {});

enum class DispersiveVerdict { f_leq_g, g_leq_f, both, incomparable };

/// Grid test of f(F^-1(v)) against g(G^-1(v)); ties within 1e-12 satisfy
/// both directions.
DispersiveVerdict dispersive_order_check(const Distribution& f, const Distribution& g,
                                         int grid_points = 1000);

}  // namespace varex
