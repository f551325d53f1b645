#include "varex/inference.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "varex/common.hpp"
#include "varex/measures.hpp"
#include "varex/rng.hpp"
#include "varex/weight.hpp"

namespace varex {

namespace {

enum StreamPurpose : std::uint64_t {
    kPurposeBiasMse = 1,
    kPurposeCritical = 2,
    kPurposePower = 3,
};

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xCBF29CE484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::uint64_t hash_double(std::uint64_t h, double x) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(x));
    std::memcpy(&bits, &x, sizeof(bits));
    h ^= bits;
    h *= 0x100000001B3ull;
    return h;
}

std::uint64_t model_context(const Distribution& model, int n) {
    std::uint64_t h = fnv1a(model.name());
    for (const auto& [k, v] : model.params()) {
        h = fnv1a(k, h);
        h = hash_double(h, v);
    }
    h ^= static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ull;
    return h;
}

std::uint64_t derive_stream(std::uint64_t purpose, std::uint64_t context, std::uint64_t rep) {
    return RandomStream::mix64(purpose * 0xD1B54A32D192ED03ull + context) ^ rep;
}

double mc_standard_error(std::span<const double> v) {
    if (v.size() < 2) return 0.0;
    return sample_std_dev(v) / std::sqrt(static_cast<double>(v.size()));
}

double true_weighted_varextropy(const Distribution& model) {
    return weighted_varextropy(model, WeightFunction::identity()).value;
}

// Replication loop shared by the bias/MSE entry points. A failed replication
// leaves NaN in its column slots.
void run_bias_reps(const Distribution& model, std::span<const EstimatorKind> kinds, int n,
                   long reps, std::uint64_t seed, unsigned threads,
                   std::vector<std::vector<double>>& est) {
    const std::uint64_t ctx = model_context(model, n);
    const Interval support{std::max(0.0, model.support().lo), model.support().hi};
    est.assign(kinds.size(), std::vector<double>(static_cast<std::size_t>(reps)));
    parallel_for(static_cast<std::size_t>(reps), threads, [&](std::size_t rep) {
        RandomStream rng(seed, derive_stream(kPurposeBiasMse, ctx, rep));
        const SampleData sample =
            SampleData::from_values(model.sample_many(static_cast<std::size_t>(n), rng));
        for (std::size_t k = 0; k < kinds.size(); ++k) {
            try {
                est[k][rep] = estimate(sample, kinds[k], {}, support).value;
            } catch (const std::exception&) {
                est[k][rep] = std::numeric_limits<double>::quiet_NaN();
            }
        }
    });
}

BiasMseResult summarize_bias(std::span<const double> values, double true_value, long reps) {
    std::vector<double> ok, sq;
    ok.reserve(values.size());
    sq.reserve(values.size());
    long failures = 0;
    for (double v : values) {
        if (std::isnan(v)) {
            ++failures;
            continue;
        }
        ok.push_back(v);
        sq.push_back((v - true_value) * (v - true_value));
    }
    BiasMseResult r;
    r.true_value = true_value;
    r.reps = reps;
    r.failures = failures;
    if (!ok.empty()) {
        r.bias = mean(ok) - true_value;
        r.mse = mean(sq);
        r.bias_se = mc_standard_error(ok);
        r.mse_se = mc_standard_error(sq);
    }
    return r;
}

}  // namespace

BiasMseResult mc_bias_mse(const Distribution& model, EstimatorKind kind, int n, long reps,
                          std::uint64_t seed, unsigned threads) {
    if (reps < 100) throw std::invalid_argument("mc_bias_mse: need at least 100 replications");
    const double truth = true_weighted_varextropy(model);
    std::vector<std::vector<double>> est;
    const EstimatorKind kinds[] = {kind};
    run_bias_reps(model, kinds, n, reps, seed, threads, est);
    return summarize_bias(est[0], truth, reps);
}

std::array<BiasMseResult, 3> mc_bias_mse_all(const Distribution& model, int n, long reps,
                                             std::uint64_t seed, unsigned threads) {
    if (reps < 100) throw std::invalid_argument("mc_bias_mse: need at least 100 replications");
    const double truth = true_weighted_varextropy(model);
    std::vector<std::vector<double>> est;
    const EstimatorKind kinds[] = {EstimatorKind::plugin, EstimatorKind::resub,
                                   EstimatorKind::quantile};
    run_bias_reps(model, kinds, n, reps, seed, threads, est);
    return {summarize_bias(est[0], truth, reps), summarize_bias(est[1], truth, reps),
            summarize_bias(est[2], truth, reps)};
}

namespace {

std::uint64_t null_context(int n, double a, double b) {
    std::uint64_t h = fnv1a("reciprocal-null");
    h = hash_double(h, a);
    h = hash_double(h, b);
    h ^= static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ull;
    return h;
}

double empirical_upper_quantile(std::vector<double>& v, double alpha) {
    for (double x : v)
        if (std::isnan(x))
            throw NumericalError("critical value simulation had failed replications", 0.0, 0.0);
    std::sort(v.begin(), v.end());
    const auto reps = static_cast<double>(v.size());
    auto idx = static_cast<long>(std::ceil((1.0 - alpha) * reps));
    if (idx < 1) idx = 1;
    if (idx > static_cast<long>(v.size())) idx = static_cast<long>(v.size());
    return v[static_cast<std::size_t>(idx - 1)];
}

void check_null_params(double a, double b, double alpha) {
    if (!(a > 0.0 && b > a)) throw std::invalid_argument("null requires 0 < a < b");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
}

}  // namespace

double ks_statistic(const SampleData& sample, const std::function<double(double)>& null_cdf) {
    std::vector<double> u(sample.n());
    for (std::size_t i = 0; i < sample.n(); ++i) u[i] = null_cdf(sample.sorted[i]);
    std::sort(u.begin(), u.end());
    const double nd = static_cast<double>(sample.n());
    double stat = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double hi = (static_cast<double>(i) + 1.0) / nd - u[i];
        const double lo = u[i] - static_cast<double>(i) / nd;
        stat = std::max(stat, std::max(hi, lo));
    }
    return stat;
}

double reciprocal_critical_value(EstimatorKind kind, int n, double alpha, double a, double b,
                                 long reps, std::uint64_t seed, unsigned threads) {
    check_null_params(a, b, alpha);
    const Distribution null_model = Distribution::reciprocal(a, b);
    const std::uint64_t ctx = null_context(n, a, b);
    std::vector<double> values(static_cast<std::size_t>(reps));
    parallel_for(static_cast<std::size_t>(reps), threads, [&](std::size_t rep) {
        RandomStream rng(seed, derive_stream(kPurposeCritical, ctx, rep));
        const SampleData sample =
            SampleData::from_values(null_model.sample_many(static_cast<std::size_t>(n), rng));
        try {
            values[rep] = estimate(sample, kind, {}, Interval{a, b}).value;
        } catch (const std::exception&) {
            values[rep] = std::numeric_limits<double>::quiet_NaN();
        }
    });
    return empirical_upper_quantile(values, alpha);
}

NullCriticalValues null_critical_values(int n, double alpha, double a, double b, long reps,
                                        std::uint64_t seed, unsigned threads) {
    check_null_params(a, b, alpha);
    const Distribution null_model = Distribution::reciprocal(a, b);
    const std::uint64_t ctx = null_context(n, a, b);
    std::vector<std::vector<double>> v(4, std::vector<double>(static_cast<std::size_t>(reps)));
    parallel_for(static_cast<std::size_t>(reps), threads, [&](std::size_t rep) {
        RandomStream rng(seed, derive_stream(kPurposeCritical, ctx, rep));
        const SampleData sample =
            SampleData::from_values(null_model.sample_many(static_cast<std::size_t>(n), rng));
        try {
            v[0][rep] = plugin_estimate(sample, {}, Interval{a, b}).value;
            v[1][rep] = resub_estimate(sample).value;
            v[2][rep] = quantile_estimate(sample).value;
            v[3][rep] = ks_statistic(sample, [&](double x) { return null_model.cdf(x); });
        } catch (const std::exception&) {
            for (auto& col : v) col[rep] = std::numeric_limits<double>::quiet_NaN();
        }
    });
    NullCriticalValues out{};
    out.plugin = empirical_upper_quantile(v[0], alpha);
    out.resub = empirical_upper_quantile(v[1], alpha);
    out.quantile = empirical_upper_quantile(v[2], alpha);
    out.ks = empirical_upper_quantile(v[3], alpha);
    return out;
}

// --- critical value cache --------------------------------------------------

CritCache CritCache::load(const std::string& path) {
    CritCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    nlohmann::json j;
    in >> j;
    for (const auto& e : j) {
        cache.entries_.push_back(Entry{e.at("estimator").get<std::string>(), e.at("n").get<int>(),
                                       e.at("alpha").get<double>(), e.at("a").get<double>(),
                                       e.at("b").get<double>(), e.at("reps").get<long>(),
                                       e.at("seed").get<std::uint64_t>(),
                                       e.at("value").get<double>()});
    }
    return cache;
}

void CritCache::save(const std::string& path) const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : entries_) {
        j.push_back({{"estimator", e.estimator},
                     {"n", e.n},
                     {"alpha", e.alpha},
                     {"a", e.a},
                     {"b", e.b},
                     {"reps", e.reps},
                     {"seed", e.seed},
                     {"value", e.value}});
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write critical value cache: " + path);
    out << j.dump(2) << "\n";
}

std::optional<double> CritCache::lookup(const std::string& estimator, int n, double alpha,
                                        double a, double b, long reps,
                                        std::uint64_t seed) const {
    for (const auto& e : entries_)
        if (e.estimator == estimator && e.n == n && e.alpha == alpha && e.a == a && e.b == b &&
            e.reps == reps && e.seed == seed)
            return e.value;
    return std::nullopt;
}

void CritCache::store(const std::string& estimator, int n, double alpha, double a, double b,
                      long reps, std::uint64_t seed, double value) {
    entries_.push_back(Entry{estimator, n, alpha, a, b, reps, seed, value});
}

GofResult gof_test(const SampleData& sample, EstimatorKind kind, double alpha, double a, double b,
                   long reps, std::uint64_t seed, CritCache* cache, unsigned threads) {
    check_null_params(a, b, alpha);
    for (double x : sample.values)
        if (x < a || x > b)
            throw std::invalid_argument("observation " + std::to_string(x) +
                                        " lies outside the null support [" + std::to_string(a) +
                                        ", " + std::to_string(b) + "]");
    const int n = static_cast<int>(sample.n());
    double cv;
    const std::string kname = to_string(kind);
    if (cache) {
        if (auto hit = cache->lookup(kname, n, alpha, a, b, reps, seed)) {
            cv = *hit;
        } else {
            cv = reciprocal_critical_value(kind, n, alpha, a, b, reps, seed, threads);
            cache->store(kname, n, alpha, a, b, reps, seed, cv);
        }
    } else {
        cv = reciprocal_critical_value(kind, n, alpha, a, b, reps, seed, threads);
    }
    const double stat = estimate(sample, kind, {}, Interval{a, b}).value;
    return GofResult{stat, cv, alpha, stat >= cv, kind};
}

// --- reports ----------------------------------------------------------------

std::string SimulationReport::to_csv() const {
    std::ostringstream out;
    out << "estimator,n,alternative,metric,value,mc_se,reps,seed\n";
    char buf[64];
    for (const auto& r : rows) {
        out << r.estimator << ',' << r.n << ',' << r.alternative << ',' << r.metric << ',';
        std::snprintf(buf, sizeof buf, "%.17g", r.value);
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.17g", r.mc_se);
        out << buf << ',' << r.reps << ',' << r.seed << '\n';
    }
    return out.str();
}

std::string SimulationReport::to_json_string() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"estimator", r.estimator},
                             {"n", r.n},
                             {"alternative", r.alternative},
                             {"metric", r.metric},
                             {"value", r.value},
                             {"mc_se", r.mc_se},
                             {"reps", r.reps},
                             {"seed", r.seed}});
    }
    nlohmann::json j{{"name", name}, {"rows", rows_json}};
    return j.dump(2);
}

const ReportRow* SimulationReport::find(const std::string& estimator, int n,
                                        const std::string& alternative,
                                        const std::string& metric) const {
    for (const auto& r : rows)
        if (r.estimator == estimator && r.n == n && r.alternative == alternative &&
            r.metric == metric)
            return &r;
    return nullptr;
}

SimulationReport bias_mse_table(const Distribution& model, const std::string& label,
                                std::span<const int> n_list, long reps, std::uint64_t seed,
                                unsigned threads) {
    SimulationReport report;
    report.name = "bias_mse:" + label;
    const char* names[] = {"plugin", "resub", "quantile"};
    for (int n : n_list) {
        const auto results = mc_bias_mse_all(model, n, reps, seed, threads);
        for (int k = 0; k < 3; ++k) {
            const auto& r = results[static_cast<std::size_t>(k)];
            report.rows.push_back(
                ReportRow{names[k], n, label, "bias", r.bias, r.bias_se, reps, seed});
            report.rows.push_back(
                ReportRow{names[k], n, label, "mse", r.mse, r.mse_se, reps, seed});
        }
    }
    return report;
}

SimulationReport critical_value_table(std::span<const int> n_list, double alpha, double a,
                                      double b, long reps, std::uint64_t seed, unsigned threads) {
    SimulationReport report;
    report.name = "critical_values";
    for (int n : n_list) {
        const auto cv = null_critical_values(n, alpha, a, b, reps, seed, threads);
        const std::pair<const char*, double> cells[] = {
            {"plugin", cv.plugin}, {"resub", cv.resub}, {"quantile", cv.quantile}, {"ks", cv.ks}};
        for (const auto& [name, value] : cells)
            report.rows.push_back(
                ReportRow{name, n, "reciprocal-null", "critical_value", value, 0.0, reps, seed});
    }
    return report;
}

PowerScenario PowerScenario::scenario1() {
    PowerScenario sc;
    sc.name = "scenario1";
    sc.a = 0.25;
    sc.b = 1.0;
    sc.alternatives = {Distribution::alt_k(0.25, 1.5), Distribution::alt_k(0.25, 2.0)};
    sc.alternative_names = {"A1.5", "A2"};
    return sc;
}

PowerScenario PowerScenario::scenario2() {
    PowerScenario sc;
    sc.name = "scenario2";
    sc.a = 0.25;
    sc.b = 10.0;
    sc.alternatives = {Distribution::truncated_lognormal(0.25, 10.0)};
    sc.alternative_names = {"TL"};
    return sc;
}

SimulationReport power_study(const PowerScenario& sc, std::span<const int> n_list, double alpha,
                             long reps_power, long reps_crit, std::uint64_t seed,
                             unsigned threads) {
    SimulationReport report;
    report.name = "power:" + sc.name;
    const Distribution null_model = Distribution::reciprocal(sc.a, sc.b);
    const char* names[] = {"plugin", "resub", "quantile", "ks"};

    for (int n : n_list) {
        const auto cv = null_critical_values(n, alpha, sc.a, sc.b, reps_crit, seed, threads);
        const double crit[] = {cv.plugin, cv.resub, cv.quantile, cv.ks};
        for (int k = 0; k < 4; ++k)
            report.rows.push_back(ReportRow{names[k], n, "reciprocal-null", "critical_value",
                                            crit[k], 0.0, reps_crit, seed});

        for (std::size_t alt = 0; alt < sc.alternatives.size(); ++alt) {
            const Distribution& alt_model = sc.alternatives[alt];
            const std::uint64_t ctx = model_context(alt_model, n) ^ fnv1a(sc.name);
            std::vector<std::vector<double>> rejects(
                4, std::vector<double>(static_cast<std::size_t>(reps_power)));
            parallel_for(static_cast<std::size_t>(reps_power), threads, [&](std::size_t rep) {
                RandomStream rng(seed, derive_stream(kPurposePower, ctx, rep));
                const SampleData sample = SampleData::from_values(
                    alt_model.sample_many(static_cast<std::size_t>(n), rng));
                const double stats[] = {
                    plugin_estimate(sample, {}, Interval{sc.a, sc.b}).value,
                    resub_estimate(sample).value, quantile_estimate(sample).value,
                    ks_statistic(sample, [&](double x) { return null_model.cdf(x); })};
                for (int k = 0; k < 4; ++k) rejects[k][rep] = stats[k] >= crit[k] ? 1.0 : 0.0;
            });
            for (int k = 0; k < 4; ++k) {
                const double p = mean(rejects[k]);
                const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(reps_power));
                report.rows.push_back(ReportRow{names[k], n, sc.alternative_names[alt], "power",
                                                p, se, reps_power, seed});
            }
        }
    }
    return report;
}

}  // namespace varex
