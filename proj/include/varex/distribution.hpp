#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varex/common.hpp"

namespace varex {

class RandomStream;

/// Density derivative together with a flag for evaluations that land on a
/// kink, where only a one-sided value exists.
struct DerivativeValue {
    double value;
    bool one_sided;
};

/// One catalogued law: density, distribution function, quantile, density
/// derivative and inverse-CDF sampling. Instances are immutable after
/// construction and cheap to copy; sharing across threads is safe.
class Distribution {
public:
    const std::string& name() const;
    const std::vector<std::pair<std::string, double>>& params() const;
    Interval support() const;

    /// Density; exactly 0 outside the support.
    double pdf(double x) const;
    double cdf(double x) const;
    /// Q(u) = inf{x : F(x) >= u}. Q(0)/Q(1) are the support edges (possibly
    /// infinite). Throws std::domain_error outside [0,1].
    double quantile(double u) const;
    /// Analytic derivative where the entry provides one, otherwise a central
    /// difference with step max(1e-6, 1e-6|x|). At a registered kink the
    /// right-sided value is returned and flagged.
    DerivativeValue pdf_derivative(double x) const;
    /// Interior points where the density is not smooth.
    const std::vector<double>& kinks() const;

    double sample(RandomStream& rng) const;
    std::vector<double> sample_many(std::size_t n, RandomStream& rng) const;

    // Closed-form measures declared by the catalogue entry (weighted forms
    // are for weight x). Empty when the entry declares none.
    std::optional<double> closed_extropy() const;
    std::optional<double> closed_weighted_extropy() const;
    std::optional<double> closed_varextropy() const;
    std::optional<double> closed_weighted_varextropy() const;

    // --- catalogue -----------------------------------------------------
    static Distribution uniform(double a, double b);
    static Distribution exponential(double lambda);
    static Distribution weibull(double alpha, double lambda);  // F = 1-exp(-lambda x^alpha)
    static Distribution laplace(double beta);                  // symmetric about 0
    static Distribution normal(double mu, double sigma);
    static Distribution beta(double a, double b);
    static Distribution gamma(double shape, double scale);
    static Distribution inverse_gamma(double alpha, double beta);
    static Distribution reciprocal(double a, double b);  // density prop. to 1/x
    static Distribution piecewise_constant(std::vector<double> weights);  // bins [j-1,j)
    static Distribution power_law(double beta);  // f = (b/2)(x/2)^(b-1) on (0,2)
    static Distribution log_logistic();          // f = 8x/(4x^2+1)^2 on (0,inf)
    static Distribution pareto2();               // f = (5/3)(1+x/3)^(-6) on (0,inf)
    static Distribution alt_k(double a, double k);  // F = 1-(1-x)^k/(1-a)^k on (a,1)
    static Distribution truncated_lognormal(double a, double b);

    /// Arbitrary law from closures (tests, derived laws). A missing quantile
    /// falls back to bisection on the CDF.
    static Distribution custom(std::string name, Interval support,
                               std::function<double(double)> pdf,
                               std::function<double(double)> cdf,
                               std::function<double(double)> quantile = {},
                               std::vector<double> kinks = {});

    /// Parses the model spec syntax used by the CLI and config files,
    /// e.g. "exp lambda=1", "reciprocal a=0.25 b=1",
    /// "piecewise w=0.2,0.3,0.5". Throws std::invalid_argument naming the
    /// offending token.
    static Distribution parse(std::string_view spec);

    /// One line per entry: name, parameters, support.
    static std::vector<std::string> catalog();

private:
    struct Impl;
    explicit Distribution(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace varex
