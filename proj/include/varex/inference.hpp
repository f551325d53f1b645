#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "varex/distribution.hpp"
#include "varex/estimators.hpp"
#include "varex/sample.hpp"

namespace varex {

struct GofResult {
    double statistic;
    double critical_value;
    double alpha;
    bool reject;  // statistic >= critical_value
    EstimatorKind estimator;
};

/// One simulated quantity. Reports serialize as flat CSV rows or as JSON.
struct ReportRow {
    std::string estimator;
    int n = 0;
    std::string alternative;
    std::string metric;
    double value = 0.0;
    double mc_se = 0.0;
    long reps = 0;
    std::uint64_t seed = 0;
};

struct SimulationReport {
    std::string name;
    std::vector<ReportRow> rows;
    std::string to_csv() const;
    std::string to_json_string() const;
    const ReportRow* find(const std::string& estimator, int n, const std::string& alternative,
                          const std::string& metric) const;
};

struct BiasMseResult {
    double bias = 0.0;
    double mse = 0.0;
    double bias_se = 0.0;
    double mse_se = 0.0;
    double true_value = 0.0;
    long reps = 0;
    long failures = 0;
};

/// Bias and MSE of one estimator against the model's weight-x weighted
/// varextropy, over `reps` samples of size n. Bit-reproducible from
/// (seed, configuration) at any worker count.
BiasMseResult mc_bias_mse(const Distribution& model, EstimatorKind kind, int n, long reps,
                          std::uint64_t seed, unsigned threads = 0);

/// Same replications evaluated by all three estimators on shared samples.
std::array<BiasMseResult, 3> mc_bias_mse_all(const Distribution& model, int n, long reps,
                                             std::uint64_t seed, unsigned threads = 0);

/// Empirical (1-alpha) quantile of the estimator under the reciprocal(a,b)
/// null; order statistic at index ceil((1-alpha) reps).
double reciprocal_critical_value(EstimatorKind kind, int n, double alpha, double a, double b,
                                 long reps, std::uint64_t seed, unsigned threads = 0);

/// Critical values for the three estimators plus the KS statistic, from one
/// shared set of null samples.
struct NullCriticalValues {
    double plugin, resub, quantile, ks;
};
NullCriticalValues null_critical_values(int n, double alpha, double a, double b, long reps,
                                        std::uint64_t seed, unsigned threads = 0);

/// Kolmogorov-Smirnov statistic after the probability integral transform
/// U = F0(X).
double ks_statistic(const SampleData& sample, const std::function<double(double)>& null_cdf);

/// JSON-backed cache of simulated critical values keyed by
/// (estimator, n, alpha, a, b, reps, seed).
class CritCache {
public:
    static CritCache load(const std::string& path);  // missing file -> empty cache
    void save(const std::string& path) const;
    std::optional<double> lookup(const std::string& estimator, int n, double alpha, double a,
                                 double b, long reps, std::uint64_t seed) const;
    void store(const std::string& estimator, int n, double alpha, double a, double b, long reps,
               std::uint64_t seed, double value);
    std::size_t size() const { return entries_.size(); }

private:
    struct Entry {
        std::string estimator;
        int n;
        double alpha, a, b;
        long reps;
        std::uint64_t seed;
        double value;
    };
    std::vector<Entry> entries_;
};

/// Goodness-of-fit decision for the reciprocal(a,b) null. Observations must
/// lie inside [a,b]. The critical value comes from `cache` when present,
/// otherwise from a fresh simulation (which is stored back into the cache).
GofResult gof_test(const SampleData& sample, EstimatorKind kind, double alpha, double a, double b,
                   long reps, std::uint64_t seed, CritCache* cache = nullptr,
                   unsigned threads = 0);

/// Bias/MSE table for one model over the sample sizes in `n_list`.
SimulationReport bias_mse_table(const Distribution& model, const std::string& label,
                                std::span<const int> n_list, long reps, std::uint64_t seed,
                                unsigned threads = 0);

/// Critical-value table over `n_list` for the three estimators.
SimulationReport critical_value_table(std::span<const int> n_list, double alpha, double a,
                                      double b, long reps, std::uint64_t seed,
                                      unsigned threads = 0);

struct PowerScenario {
    std::string name;
    double a, b;  // reciprocal null parameters
    std::vector<Distribution> alternatives;
    std::vector<std::string> alternative_names;
    static PowerScenario scenario1();  // a=1/4, b=1; A_1.5 and A_2
    static PowerScenario scenario2();  // a=1/4, b=10; truncated lognormal
};

/// Rejection frequencies of the three estimator tests and KS against each
/// alternative, with critical values simulated under the null at reps_crit.
SimulationReport power_study(const PowerScenario& sc, std::span<const int> n_list, double alpha,
                             long reps_power, long reps_crit, std::uint64_t seed,
                             unsigned threads = 0);

}  // namespace varex
