#include "varex/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "varex/bivariate.hpp"
#include "varex/distribution.hpp"
#include "varex/estimators.hpp"
#include "varex/inference.hpp"
#include "varex/measures.hpp"
#include "varex/reliability.hpp"
#include "varex/sample.hpp"
#include "varex/weight.hpp"

namespace varex::cli {

namespace {

std::string fmt6(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("VAREX_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 42;
}

struct Output {
    std::string format = "text";  // text | json | csv
    std::string path;             // empty -> stdout

    void emit(const std::string& text_body, const nlohmann::json& json_body,
              const std::string& csv_body) const {
        const std::string& body =
            format == "json" ? json_body.dump(2) : (format == "csv" ? csv_body : text_body);
        if (path.empty()) {
            std::cout << body;
            if (!body.empty() && body.back() != '\n') std::cout << '\n';
        } else {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot write output file: " + path);
            out << body;
            if (!body.empty() && body.back() != '\n') out << '\n';
        }
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", out.path, "write output to this file instead of stdout");
}

std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ostringstream s;
    s << "key,value\n";
    for (const auto& [k, v] : kv) s << k << ',' << v << '\n';
    return s.str();
}

const WeightFunction& weight_from_flag(const std::string& phi) {
    return phi == "one" ? WeightFunction::one() : WeightFunction::identity();
}

int run_compute(const std::string& model_spec, const std::string& measure,
                const std::string& phi, std::optional<double> t, const Output& out) {
    nlohmann::json j{{"model", model_spec}, {"measure", measure}};
    std::vector<std::pair<std::string, std::string>> kv{{"model", model_spec},
                                                        {"measure", measure}};
    std::ostringstream text;
    text << "model: " << model_spec << "\nmeasure: " << measure << "\n";

    auto emit_measure = [&](const MeasureValue& m) {
        const char* method =
            m.method == MeasureValue::Method::closed_form ? "closed_form" : "quadrature";
        text << "value = " << fmt6(m.value) << "\nmethod: " << method
             << "\nest_abs_error: " << fmt6(m.est_abs_error) << "\n";
        j["value"] = m.value;
        j["method"] = method;
        j["est_abs_error"] = m.est_abs_error;
        kv.emplace_back("value", fmt6(m.value));
        kv.emplace_back("method", method);
        kv.emplace_back("est_abs_error", fmt6(m.est_abs_error));
    };

    if (measure == "bivariate") {
        const BivariateModel m = BivariateModel::parse(model_spec);
        emit_measure(bivariate_weighted_varextropy(m));
        out.emit(text.str(), j, kv_csv(kv));
        return 0;
    }

    const Distribution d = Distribution::parse(model_spec);
    const WeightFunction& w = weight_from_flag(phi);

    if (measure == "extropy") {
        emit_measure(extropy(d));
    } else if (measure == "wextropy") {
        emit_measure(weighted_extropy(d, w));
    } else if (measure == "varextropy") {
        emit_measure(varextropy(d));
    } else if (measure == "wvarextropy") {
        emit_measure(weighted_varextropy(d, w));
    } else if (measure == "equilibrium") {
        emit_measure(equilibrium_weighted_varextropy(d));
    } else if (measure == "residual" || measure == "past") {
        if (!t) throw std::invalid_argument("--t is required for residual/past measures");
        emit_measure(measure == "residual" ? residual_weighted_varextropy(d, w, *t)
                                           : past_weighted_varextropy(d, w, *t));
    } else if (measure == "bounds") {
        double bound;
        if (d.name() == "normal") {
            bound = normal_lower_bound(d.params()[0].second, d.params()[1].second);
        } else if (d.name() == "invgamma") {
            bound = invgamma_lower_bound(d.params()[0].second, d.params()[1].second);
        } else {
            throw std::invalid_argument(
                "--measure bounds supports only the normal and invgamma models");
        }
        const MeasureValue exact = weighted_varextropy(d, WeightFunction::identity());
        text << "lower_bound = " << fmt6(bound) << "\nexact = " << fmt6(exact.value) << "\n";
        j["lower_bound"] = bound;
        j["exact"] = exact.value;
        kv.emplace_back("lower_bound", fmt6(bound));
        kv.emplace_back("exact", fmt6(exact.value));
    } else {
        throw std::invalid_argument("unknown measure '" + measure + "'");
    }
    out.emit(text.str(), j, kv_csv(kv));
    return 0;
}

int run_system(const std::string& signature_text, const std::string& model_spec, bool bounds,
               const Output& out) {
    const SystemModel sys{SignatureVector::parse(signature_text),
                          Distribution::parse(model_spec)};
    const SystemMeasures m = system_varextropy(sys);
    std::ostringstream text;
    text << "signature: " << signature_text << "\nmodel: " << model_spec << "\n"
         << "J = " << fmt6(m.extropy) << "\nVJ = " << fmt6(m.varextropy)
         << "\nVJw = " << fmt6(m.weighted_varextropy) << "\n";
    nlohmann::json j{{"signature", signature_text},
                     {"model", model_spec},
                     {"J", m.extropy},
                     {"VJ", m.varextropy},
                     {"VJw", m.weighted_varextropy},
                     {"est_abs_error", m.est_abs_error}};
    std::vector<std::pair<std::string, std::string>> kv{{"J", fmt6(m.extropy)},
                                                        {"VJ", fmt6(m.varextropy)},
                                                        {"VJw", fmt6(m.weighted_varextropy)}};
    if (bounds) {
        const double bj = hardy_extropy_bound(sys);
        const double bvj = hardy_varextropy_bound(sys);
        text << "J_upper_bound = " << fmt6(bj) << "\nVJ_upper_bound = " << fmt6(bvj) << "\n";
        j["J_upper_bound"] = bj;
        j["VJ_upper_bound"] = bvj;
        kv.emplace_back("J_upper_bound", fmt6(bj));
        kv.emplace_back("VJ_upper_bound", fmt6(bvj));
    }
    out.emit(text.str(), j, kv_csv(kv));
    return 0;
}

int run_estimate(const std::string& data_path, const std::string& estimator,
                 std::optional<double> bandwidth, const Output& out) {
    const SampleData sample = SampleData::from_file(data_path);
    const EstimateResult r = estimate(sample, estimator_from_string(estimator), bandwidth);
    std::ostringstream text;
    text << "estimator: " << to_string(r.estimator) << "\nn: " << r.n
         << "\nbandwidth = " << fmt6(r.bandwidth_used) << "\nvalue = " << fmt6(r.value) << "\n";
    nlohmann::json j{{"estimator", to_string(r.estimator)},
                     {"n", r.n},
                     {"bandwidth", r.bandwidth_used},
                     {"value", r.value}};
    out.emit(text.str(), j,
             kv_csv({{"estimator", to_string(r.estimator)},
                     {"n", std::to_string(r.n)},
                     {"bandwidth", fmt6(r.bandwidth_used)},
                     {"value", fmt6(r.value)}}));
    return 0;
}

int run_gof(const std::string& data_path, double a, double b, const std::string& estimator,
            double alpha, long reps, std::uint64_t seed, const std::string& cache_path,
            unsigned threads, const Output& out) {
    const SampleData sample = SampleData::from_file(data_path);
    CritCache cache;
    if (!cache_path.empty()) cache = CritCache::load(cache_path);
    const GofResult r =
        gof_test(sample, estimator_from_string(estimator), alpha, a, b, reps, seed,
                 cache_path.empty() ? nullptr : &cache, threads);
    if (!cache_path.empty()) cache.save(cache_path);
    std::ostringstream text;
    text << "decision: " << (r.reject ? "reject" : "accept")
         << " the reciprocal null at level " << fmt6(alpha) << "\n"
         << "statistic = " << fmt6(r.statistic) << "\ncritical_value = "
         << fmt6(r.critical_value) << "\n";
    nlohmann::json j{{"reject", r.reject},
                     {"alpha", r.alpha},
                     {"statistic", r.statistic},
                     {"critical_value", r.critical_value},
                     {"estimator", to_string(r.estimator)}};
    out.emit(text.str(), j,
             kv_csv({{"reject", r.reject ? "1" : "0"},
                     {"statistic", fmt6(r.statistic)},
                     {"critical_value", fmt6(r.critical_value)}}));
    return 0;
}

std::string bias_table_text(const SimulationReport& rep, const std::string& label,
                            std::span<const int> n_list) {
    std::ostringstream text;
    text << "bias and MSE of the weighted varextropy estimators, " << label << "\n";
    text << "n      B^plugin    B~resub     B-quantile  M^plugin    M~resub     M-quantile\n";
    for (int n : n_list) {
        text << n;
        for (const char* metric : {"bias", "mse"})
            for (const char* est : {"plugin", "resub", "quantile"}) {
                const ReportRow* r = rep.find(est, n, label, metric);
                text << "  " << (r ? fmt6(r->value) : "-");
            }
        text << "\n";
    }
    return text.str();
}

int run_simulate(int table, long reps, std::uint64_t seed, unsigned threads, const Output& out) {
    const Distribution model =
        table == 1 ? Distribution::gamma(2.0, 1.0) : Distribution::beta(2.0, 1.0);
    const std::string label = table == 1 ? "gamma(2,1)" : "beta(2,1)";
    const int n_list[] = {10, 20, 30, 50, 100};
    const SimulationReport rep = bias_mse_table(model, label, n_list, reps, seed, threads);
    out.emit(bias_table_text(rep, label, n_list), nlohmann::json::parse(rep.to_json_string()),
             rep.to_csv());
    return 0;
}

int run_power(int scenario, long reps_power, long reps_crit, std::uint64_t seed, unsigned threads,
              const Output& out) {
    const PowerScenario sc =
        scenario == 1 ? PowerScenario::scenario1() : PowerScenario::scenario2();
    const int crit_n[] = {10, 20, 30, 40, 50, 75, 100};
    const int power_n[] = {10, 20, 30, 40, 50};

    SimulationReport crit_rep =
        critical_value_table(crit_n, 0.05, sc.a, sc.b, reps_crit, seed, threads);
    const SimulationReport power_rep =
        power_study(sc, power_n, 0.05, reps_power, reps_crit, seed, threads);

    std::ostringstream text;
    text << "percentage points at level 0.05 for a=" << fmt6(sc.a) << ", b=" << fmt6(sc.b)
         << "\n";
    text << "n      G^plugin    G~resub     G-quantile  KS\n";
    for (int n : crit_n) {
        text << n;
        for (const char* est : {"plugin", "resub", "quantile", "ks"}) {
            const ReportRow* r = crit_rep.find(est, n, "reciprocal-null", "critical_value");
            text << "  " << (r ? fmt6(r->value) : "-");
        }
        text << "\n";
    }
    text << "\npower comparisons at level 0.05\n";
    text << "n   alternative  G^plugin    G~resub     G-quantile  KS\n";
    for (int n : power_n)
        for (const auto& alt : sc.alternative_names) {
            text << n << "  " << alt;
            for (const char* est : {"plugin", "resub", "quantile", "ks"}) {
                const ReportRow* r = power_rep.find(est, n, alt, "power");
                text << "  " << (r ? fmt6(r->value) : "-");
            }
            text << "\n";
        }

    SimulationReport combined;
    combined.name = "power:" + sc.name;
    combined.rows = crit_rep.rows;
    for (const auto& r : power_rep.rows)
        if (r.metric == "power") combined.rows.push_back(r);
    out.emit(text.str(), nlohmann::json::parse(combined.to_json_string()), combined.to_csv());
    return 0;
}

int run_catalog(const Output& out) {
    std::ostringstream text;
    nlohmann::json j = nlohmann::json::array();
    std::ostringstream csv;
    csv << "entry\n";
    for (const auto& line : Distribution::catalog()) {
        text << line << "\n";
        j.push_back(line);
        csv << '"' << line << "\"\n";
    }
    const std::string biexp = "biexp theta=         bivariate exponential (0 <= theta <= 1)";
    text << biexp << "\n";
    j.push_back(biexp);
    csv << '"' << biexp << "\"\n";
    out.emit(text.str(), j, csv.str());
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"weighted varextropy measures, estimators and tests"};
    app.require_subcommand(1);

    std::string model_spec, measure, phi = "x", signature_text, data_path, estimator;
    std::optional<double> t_value, bandwidth;
    double a = 0.0, b = 0.0, alpha = 0.05;
    bool bounds = false;
    long reps = -1, crit_reps = 100000;
    std::uint64_t seed = default_seed();
    unsigned threads = 0;
    int table = 1, scenario = 1;
    Output out;

    CLI::App* compute = app.add_subcommand("compute", "evaluate a measure for a model");
    compute->add_option("--model", model_spec, "model spec, e.g. \"exp lambda=1\"")->required();
    compute
        ->add_option("--measure", measure,
                     "one of extropy, wextropy, varextropy, wvarextropy, residual, past, "
                     "equilibrium, bivariate, bounds")
        ->required();
    compute->add_option("--phi", phi, "weight: x (default) or one")
        ->check(CLI::IsMember({"x", "one"}));
    double t_raw = 0.0;
    CLI::Option* t_opt = compute->add_option("--t", t_raw, "time point for residual/past");
    add_output_flags(compute, out);

    CLI::App* system = app.add_subcommand("system", "coherent-system measures");
    system->add_option("--signature", signature_text, "e.g. \"0,1/6,7/12,1/4\"")->required();
    system->add_option("--model", model_spec, "component law")->required();
    system->add_flag("--bounds", bounds, "also print the Hardy upper bounds");
    add_output_flags(system, out);

    CLI::App* est_cmd = app.add_subcommand("estimate", "run an estimator on a data file");
    est_cmd->add_option("--data", data_path, "one observation per line")->required();
    est_cmd->add_option("--estimator", estimator, "plugin, resub or quantile")->required();
    double bw_raw = 0.0;
    CLI::Option* bw_opt = est_cmd->add_option("--bandwidth", bw_raw, "kernel bandwidth override");
    add_output_flags(est_cmd, out);

    CLI::App* gof = app.add_subcommand("gof", "goodness-of-fit test for the reciprocal law");
    gof->add_option("--data", data_path)->required();
    gof->add_option("--a", a, "null support lower end")->required();
    gof->add_option("--b", b, "null support upper end")->required();
    gof->add_option("--estimator", estimator)->required();
    gof->add_option("--alpha", alpha, "test level")->required();
    gof->add_option("--reps", reps, "critical value replications (default 100000)");
    gof->add_option("--seed", seed, "RNG seed (default: VAREX_SEED or 42)");
    std::string cache_path;
    gof->add_option("--crit-cache", cache_path, "critical value cache file");
    gof->add_option("--threads", threads, "worker cap (0 = all cores)");
    add_output_flags(gof, out);

    CLI::App* simulate = app.add_subcommand("simulate", "reproduce a bias/MSE table");
    simulate->add_option("--table", table, "1 = gamma(2,1), 2 = beta(2,1)")
        ->check(CLI::IsMember({1, 2}));
    simulate->add_option("--reps", reps, "replications (default 10000)");
    simulate->add_option("--seed", seed);
    simulate->add_option("--threads", threads);
    add_output_flags(simulate, out);

    CLI::App* power = app.add_subcommand("power", "critical values and power tables");
    power->add_option("--scenario", scenario, "1: a=1/4,b=1; 2: a=1/4,b=10")
        ->check(CLI::IsMember({1, 2}));
    power->add_option("--reps", reps, "power replications (default 20000)");
    power->add_option("--crit-reps", crit_reps, "critical value replications (default 100000)");
    power->add_option("--seed", seed);
    power->add_option("--threads", threads);
    add_output_flags(power, out);

    CLI::App* catalog = app.add_subcommand("catalog", "list the model catalogue");
    add_output_flags(catalog, out);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (compute->parsed()) {
            if (*t_opt) t_value = t_raw;
            return run_compute(model_spec, measure, phi, t_value, out);
        }
        if (system->parsed()) return run_system(signature_text, model_spec, bounds, out);
        if (est_cmd->parsed()) {
            if (*bw_opt) bandwidth = bw_raw;
            return run_estimate(data_path, estimator, bandwidth, out);
        }
        if (gof->parsed())
            return run_gof(data_path, a, b, estimator, alpha, reps < 0 ? 100000 : reps, seed,
                           cache_path, threads, out);
        if (simulate->parsed())
            return run_simulate(table, reps < 0 ? 10000 : reps, seed, threads, out);
        if (power->parsed())
            return run_power(scenario, reps < 0 ? 20000 : reps, crit_reps, seed, threads, out);
        if (catalog->parsed()) return run_catalog(out);
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace varex::cli
