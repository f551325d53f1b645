#include "varex/measures.hpp"

#include <cmath>
#include <vector>

namespace varex {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNegClamp = -1e-9;

// Panel seeds: registered kinks plus quantile knots, so adaptive splitting
// starts near the mass of the law.
std::vector<double> seed_points(const Distribution& d) {
    std::vector<double> bps = d.kinks();
    static constexpr double us[] = {0.001, 0.01, 0.05, 0.1, 0.25, 0.5,
                                    0.75,  0.9,  0.95, 0.99, 0.999};
    for (double u : us) {
        try {
            const double x = d.quantile(u);
            if (std::isfinite(x)) bps.push_back(x);
        } catch (const std::exception&) {
            break;
        }
    }
    return bps;
}

QuadratureResult domain_integral(const Distribution& d, Interval dom,
                                 const std::function<double(double)>& g,
                                 const QuadratureConfig& cfg) {
    return integrate_interval(g, dom, cfg, seed_points(d));
}

void require_converged(const QuadratureResult& r, const char* what) {
    if (!r.converged)
        throw NumericalError(std::string(what) + ": quadrature did not converge", r.value,
                             r.est_abs_error);
}

// 1/4 (A - B^2) with the cancellation guard for variance-form results.
MeasureValue quarter_variance(const QuadratureResult& a, const QuadratureResult& b,
                              const char* what) {
    double v = 0.25 * (a.value - b.value * b.value);
    const double err =
        0.25 * (a.est_abs_error + 2.0 * std::abs(b.value) * b.est_abs_error +
                b.est_abs_error * b.est_abs_error);
    if (v < 0.0) {
        if (v >= kNegClamp)
            v = 0.0;
        else
            throw NumericalError(std::string(what) + ": variance form came out negative", v, err);
    }
    return {v, MeasureValue::Method::quadrature, err};
}

QuadratureResult int_phi_f2(const Distribution& d, const WeightFunction& phi, Interval dom,
                            const QuadratureConfig& cfg) {
    auto g = [&d, &phi](double x) {
        const double f = d.pdf(x);
        return f == 0.0 ? 0.0 : phi(x) * f * f;
    };
    return domain_integral(d, dom, g, cfg);
}

QuadratureResult int_phi2_f3(const Distribution& d, const WeightFunction& phi, Interval dom,
                             const QuadratureConfig& cfg) {
    auto g = [&d, &phi](double x) {
        const double f = d.pdf(x);
        if (f == 0.0) return 0.0;
        const double w = phi(x);
        return w * w * f * f * f;
    };
    return domain_integral(d, dom, g, cfg);
}

}  // namespace

MeasureValue extropy(const Distribution& d, const MeasureOptions& opt) {
    if (opt.use_closed_forms && d.closed_extropy())
        return {*d.closed_extropy(), MeasureValue::Method::closed_form, 0.0};
    const auto r = int_phi_f2(d, WeightFunction::one(), d.support(), opt.quad);
    require_converged(r, "extropy");
    return {-0.5 * r.value, MeasureValue::Method::quadrature, 0.5 * r.est_abs_error};
}

MeasureValue weighted_extropy(const Distribution& d, const WeightFunction& phi,
                              const MeasureOptions& opt) {
    if (phi.kind() == WeightFunction::Kind::constant_one) return extropy(d, opt);
    if (phi.kind() == WeightFunction::Kind::identity && opt.use_closed_forms &&
        d.closed_weighted_extropy())
        return {*d.closed_weighted_extropy(), MeasureValue::Method::closed_form, 0.0};
    const auto r = int_phi_f2(d, phi, d.support(), opt.quad);
    require_converged(r, "weighted extropy");
    return {-0.5 * r.value, MeasureValue::Method::quadrature, 0.5 * r.est_abs_error};
}

MeasureValue varextropy(const Distribution& d, const MeasureOptions& opt) {
    if (opt.use_closed_forms && d.closed_varextropy())
        return {*d.closed_varextropy(), MeasureValue::Method::closed_form, 0.0};
    const auto a = int_phi2_f3(d, WeightFunction::one(), d.support(), opt.quad);
    const auto b = int_phi_f2(d, WeightFunction::one(), d.support(), opt.quad);
    require_converged(a, "varextropy");
    require_converged(b, "varextropy");
    return quarter_variance(a, b, "varextropy");
}

MeasureValue weighted_varextropy(const Distribution& d, const WeightFunction& phi,
                                 const MeasureOptions& opt) {
    if (phi.kind() == WeightFunction::Kind::constant_one) return varextropy(d, opt);
    if (phi.kind() == WeightFunction::Kind::identity && opt.use_closed_forms &&
        d.closed_weighted_varextropy())
        return {*d.closed_weighted_varextropy(), MeasureValue::Method::closed_form, 0.0};
    const auto a = int_phi2_f3(d, phi, d.support(), opt.quad);
    const auto b = int_phi_f2(d, phi, d.support(), opt.quad);
    require_converged(a, "weighted varextropy");
    require_converged(b, "weighted varextropy");
    return quarter_variance(a, b, "weighted varextropy");
}

MeasureValue weighted_varextropy_quantile_form(const Distribution& d,
                                               const MeasureOptions& opt) {
    auto qf = [&d](double u) {
        const double x = d.quantile(u);
        return std::isfinite(x) ? x * d.pdf(x) : 0.0;
    };
    auto a = integrate(
        [&qf](double u) {
            const double t = qf(u);
            return t * t;
        },
        0.0, 1.0, opt.quad);
    auto b = integrate(qf, 0.0, 1.0, opt.quad);
    require_converged(a, "quantile-form weighted varextropy");
    require_converged(b, "quantile-form weighted varextropy");
    return quarter_variance(a, b, "quantile-form weighted varextropy");
}

MeasureValue equilibrium_weighted_varextropy(const Distribution& d, const MeasureOptions& opt) {
    if (d.support().lo < 0.0)
        throw std::domain_error("equilibrium law requires nonnegative support");
    const auto mu_r = integrate([&d](double u) { return d.quantile(u); }, 0.0, 1.0, opt.quad);
    if (!mu_r.converged || !std::isfinite(mu_r.value) || mu_r.value <= 0.0)
        throw std::domain_error("equilibrium law requires a finite positive mean");
    const double mu = mu_r.value;

    auto ratio = [&d](double u) {
        const double x = d.quantile(u);
        const double f = d.pdf(x);
        return f > 0.0 ? 1.0 / f : 0.0;
    };
    auto a = integrate(
        [&d, &ratio](double u) {
            const double s = 1.0 - u;
            const double x = d.quantile(u);
            return s * s * s * x * x * ratio(u);
        },
        0.0, 1.0, opt.quad);
    auto b = integrate(
        [&d, &ratio](double u) {
            const double s = 1.0 - u;
            return s * s * d.quantile(u) * ratio(u);
        },
        0.0, 1.0, opt.quad);
    require_converged(a, "equilibrium weighted varextropy");
    require_converged(b, "equilibrium weighted varextropy");
    QuadratureResult an{a.value / (mu * mu * mu), a.est_abs_error / (mu * mu * mu), true, 0};
    QuadratureResult bn{b.value / (mu * mu), b.est_abs_error / (mu * mu), true, 0};
    return quarter_variance(an, bn, "equilibrium weighted varextropy");
}

MeasureValue weighted_law_varextropy(const Distribution& d, const WeightFunction& delta,
                                     const MeasureOptions& opt) {
    const Interval dom = d.support();
    const auto e_delta = domain_integral(
        d, dom, [&d, &delta](double x) { return delta(x) * d.pdf(x); }, opt.quad);
    require_converged(e_delta, "weighted law");
    if (!(e_delta.value > 0.0) || !std::isfinite(e_delta.value))
        throw std::domain_error("weighted law requires 0 < E[delta(X)] < inf");
    const double ed = e_delta.value;

    const auto a = domain_integral(
        d, dom,
        [&d, &delta](double x) {
            const double f = d.pdf(x);
            if (f == 0.0) return 0.0;
            const double t = delta(x);
            return x * x * t * t * t * f * f * f;
        },
        opt.quad);
    const auto b = domain_integral(
        d, dom,
        [&d, &delta](double x) {
            const double f = d.pdf(x);
            if (f == 0.0) return 0.0;
            const double t = delta(x);
            return x * t * t * f * f;
        },
        opt.quad);
    require_converged(a, "weighted law varextropy");
    require_converged(b, "weighted law varextropy");
    QuadratureResult an{a.value / (ed * ed * ed), a.est_abs_error / (ed * ed * ed), true, 0};
    QuadratureResult bn{b.value / (ed * ed), b.est_abs_error / (ed * ed), true, 0};
    return quarter_variance(an, bn, "weighted law varextropy");
}

MeasureValue transform_weighted_varextropy(const Distribution& d,
                                           const std::function<double(double)>& g,
                                           const std::function<double(double)>& g_prime,
                                           const MeasureOptions& opt) {
    double prev = -kInf;
    for (int i = 1; i < 200; ++i) {
        const double x = d.quantile(i / 200.0);
        if (!std::isfinite(x)) continue;
        if (!(g_prime(x) > 0.0) || !(g(x) > prev))
            throw std::domain_error("transform requires a strictly increasing map");
        prev = g(x);
    }
    auto h = [&d, &g, &g_prime](double x) {
        const double f = d.pdf(x);
        return f == 0.0 ? 0.0 : g(x) * f / g_prime(x);
    };
    const Interval dom = d.support();
    const auto a = domain_integral(
        d, dom,
        [&h, &d](double x) {
            const double t = h(x);
            return t * t * d.pdf(x);
        },
        opt.quad);
    const auto b = domain_integral(d, dom, [&h, &d](double x) { return h(x) * d.pdf(x); },
                                   opt.quad);
    require_converged(a, "transform weighted varextropy");
    require_converged(b, "transform weighted varextropy");
    return quarter_variance(a, b, "transform weighted varextropy");
}

MeasureValue bivariate_weighted_varextropy(const BivariateModel& m, const MeasureOptions& opt) {
    QuadratureConfig inner = opt.quad;
    inner.abs_tol = std::min(1e-12, opt.quad.abs_tol * 1e-2);
    inner.rel_tol = std::min(1e-10, opt.quad.rel_tol);
    inner.max_subdivisions = std::max(64, opt.quad.max_subdivisions / 4);

    static constexpr double knots[] = {0.05, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
    auto inner_int = [&](const std::function<double(double)>& f) {
        return integrate_interval(f, m.support_y(), inner, knots);
    };
    auto outer_int = [&](const std::function<double(double)>& f) {
        return integrate_interval(f, m.support_x(), opt.quad, knots);
    };

    const auto a = outer_int([&](double x) {
        return inner_int([&m, x](double y) {
                   const double f = m.joint_pdf(x, y);
                   if (f == 0.0) return 0.0;
                   const double w = x * y;
                   return w * w * f * f * f;
               })
            .value;
    });
    const auto b = outer_int([&](double x) {
        return inner_int([&m, x](double y) {
                   const double f = m.joint_pdf(x, y);
                   return f == 0.0 ? 0.0 : x * y * f * f;
               })
            .value;
    });
    require_converged(a, "bivariate weighted varextropy");
    require_converged(b, "bivariate weighted varextropy");
    double v = (a.value - b.value * b.value) / 16.0;
    const double err = (a.est_abs_error + 2.0 * std::abs(b.value) * b.est_abs_error) / 16.0;
    if (v < 0.0) {
        if (v >= kNegClamp)
            v = 0.0;
        else
            throw NumericalError("bivariate weighted varextropy: negative variance form", v, err);
    }
    return {v, MeasureValue::Method::quadrature, err};
}

MeasureValue residual_weighted_varextropy(const Distribution& d, const WeightFunction& phi,
                                          double t, const MeasureOptions& opt) {
    if (d.support().lo < 0.0)
        throw std::domain_error("residual measure requires nonnegative support");
    const double surv = 1.0 - d.cdf(t);
    if (!(surv > 0.0)) throw std::domain_error("residual measure undefined: survival is 0 at t");
    const Interval dom{std::max(t, d.support().lo), d.support().hi};
    const auto a = int_phi2_f3(d, phi, dom, opt.quad);
    const auto b = int_phi_f2(d, phi, dom, opt.quad);
    require_converged(a, "residual weighted varextropy");
    require_converged(b, "residual weighted varextropy");
    const double s3 = surv * surv * surv;
    QuadratureResult an{a.value / s3, a.est_abs_error / s3, true, 0};
    QuadratureResult bn{b.value / (surv * surv), b.est_abs_error / (surv * surv), true, 0};
    return quarter_variance(an, bn, "residual weighted varextropy");
}

MeasureValue past_weighted_varextropy(const Distribution& d, const WeightFunction& phi, double t,
                                      const MeasureOptions& opt) {
    if (d.support().lo < 0.0)
        throw std::domain_error("past measure requires nonnegative support");
    const double prob = d.cdf(t);
    if (!(prob > 0.0)) throw std::domain_error("past measure undefined: F(t) is 0");
    const Interval dom{d.support().lo, std::min(t, d.support().hi)};
    const auto a = int_phi2_f3(d, phi, dom, opt.quad);
    const auto b = int_phi_f2(d, phi, dom, opt.quad);
    require_converged(a, "past weighted varextropy");
    require_converged(b, "past weighted varextropy");
    const double p3 = prob * prob * prob;
    QuadratureResult an{a.value / p3, a.est_abs_error / p3, true, 0};
    QuadratureResult bn{b.value / (prob * prob), b.est_abs_error / (prob * prob), true, 0};
    return quarter_variance(an, bn, "past weighted varextropy");
}

double residual_monotonicity_rhs(const Distribution& d, const WeightFunction& phi, double t,
                                 const MeasureOptions& opt) {
    const double surv = 1.0 - d.cdf(t);
    if (!(surv > 0.0)) throw std::domain_error("monotonicity threshold undefined: survival is 0");
    const double hazard = d.pdf(t) / surv;
    const Interval dom{std::max(t, d.support().lo), d.support().hi};
    const auto b = int_phi_f2(d, phi, dom, opt.quad);
    require_converged(b, "residual monotonicity threshold");
    const double jw_res = -0.5 * b.value / (surv * surv);
    const double w = phi(t);
    return w * w * hazard * hazard / 12.0 + jw_res * (jw_res + w * hazard) / 3.0;
}

namespace {

double mean_residual_life(const Distribution& d, double s, const QuadratureConfig& cfg) {
    const double surv = 1.0 - d.cdf(s);
    if (!(surv > 0.0)) return 0.0;
    const auto r = integrate_interval([&d](double x) { return 1.0 - d.cdf(x); },
                                      Interval{s, d.support().hi}, cfg, {});
    if (!r.converged || !std::isfinite(r.value))
        throw std::domain_error("mean residual life diverges");
    return r.value / surv;
}

}  // namespace

double residual_mrl_upper_bound(const Distribution& d, const WeightFunction& phi, double t,
                                const MeasureOptions& opt) {
    if (d.support().lo < 0.0)
        throw std::domain_error("residual bound requires nonnegative support");
    const double surv = 1.0 - d.cdf(t);
    if (!(surv > 0.0)) throw std::domain_error("residual bound undefined: survival is 0 at t");

    QuadratureConfig inner = opt.quad;
    inner.abs_tol = std::max(1e-11, opt.quad.abs_tol);
    inner.rel_tol = 1e-8;
    inner.max_subdivisions = std::max(64, opt.quad.max_subdivisions / 4);
    const double m_t = mean_residual_life(d, t, inner);

    auto integrand = [&](double y) {
        const double f = d.pdf(y);
        const double sy = 1.0 - d.cdf(y);
        if (sy <= 0.0) return 0.0;
        const double a = phi(y) * d.pdf_derivative(y).value + phi.derivative(y) * f;
        return a * a * sy * (mean_residual_life(d, y, inner) - m_t + (y - t));
    };
    const auto r = integrate_interval(integrand, Interval{t, d.support().hi}, opt.quad,
                                      seed_points(d));
    require_converged(r, "residual upper bound");
    return r.value / (surv * surv * surv);
}

double normal_lower_bound(double mu, double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("normal bound requires sigma > 0");
    return 11.0 / (512.0 * kPi) + mu * mu / (128.0 * sigma * sigma * kPi);
}

double invgamma_lower_bound(double alpha, double beta) {
    if (!(alpha > 1.5)) throw std::domain_error("inverse gamma bound requires alpha > 3/2");
    if (!(beta > 0.0)) throw std::domain_error("inverse gamma bound requires beta > 0");
    const double a = alpha;
    const double poly =
        4.0 * std::pow(a, 5) + 15.0 * std::pow(a, 4) - 961.0 * std::pow(a, 3) +
        7575.0 * a * a - 22317.0 * a + 21636.0;
    const double lg = 2.0 * (std::lgamma(a - 1.5) - std::lgamma(a));
    return poly * std::exp(lg) / (512.0 * kPi * (a - 1.0));
}

}  // namespace varex
