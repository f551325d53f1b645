#include "varex/reliability.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "varex/special.hpp"

namespace varex {

SignatureVector::SignatureVector(std::vector<double> s) : s_(std::move(s)) {
    if (s_.empty()) throw std::invalid_argument("signature: empty");
    double total = 0.0;
    for (double x : s_) {
        if (x < 0.0) throw std::invalid_argument("signature: entries must be nonnegative");
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("signature: entries must sum to 1");
    for (double& x : s_) x /= total;
}

SignatureVector SignatureVector::parse(std::string_view text) {
    std::vector<double> s;
    std::istringstream in{std::string(text)};
    std::string piece;
    while (std::getline(in, piece, ',')) {
        const auto slash = piece.find('/');
        try {
            if (slash == std::string::npos) {
                s.push_back(std::stod(piece));
            } else {
                const double num = std::stod(piece.substr(0, slash));
                const double den = std::stod(piece.substr(slash + 1));
                if (den == 0.0) throw std::invalid_argument("zero denominator");
                s.push_back(num / den);
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("signature: bad entry '" + piece + "'");
        }
    }
    return SignatureVector(std::move(s));
}

double order_stat_pdf(const Distribution& d, int i, int n, double x) {
    if (i < 1 || i > n) throw std::invalid_argument("order statistic index out of range");
    const double u = d.cdf(x);
    return beta_pdf(u, static_cast<double>(i), static_cast<double>(n - i + 1)) * d.pdf(x);
}

double system_mixture_density(const SignatureVector& s, double u) {
    const int n = s.order();
    double g = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double w = s.values()[static_cast<std::size_t>(i - 1)];
        if (w != 0.0)
            g += w * beta_pdf(u, static_cast<double>(i), static_cast<double>(n - i + 1));
    }
    return g;
}

SystemMeasures system_varextropy(const SystemModel& sys, const MeasureOptions& opt) {
    const Distribution& d = sys.component_law;
    const SignatureVector& s = sys.signature;

    auto fq = [&d](double u) { return d.pdf(d.quantile(u)); };
    auto gv = [&s](double u) { return system_mixture_density(s, u); };

    const auto i2 = integrate(
        [&](double u) {
            const double g = gv(u);
            return g * g * fq(u);
        },
        0.0, 1.0, opt.quad);
    const auto i3 = integrate(
        [&](double u) {
            const double g = gv(u);
            const double f = fq(u);
            return g * g * g * f * f;
        },
        0.0, 1.0, opt.quad);
    const auto w1 = integrate(
        [&](double u) {
            const double g = gv(u);
            const double x = d.quantile(u);
            return std::isfinite(x) ? x * g * g * fq(u) : 0.0;
        },
        0.0, 1.0, opt.quad);
    const auto w2 = integrate(
        [&](double u) {
            const double g = gv(u);
            const double f = fq(u);
            const double x = d.quantile(u);
            return std::isfinite(x) ? x * x * g * g * g * f * f : 0.0;
        },
        0.0, 1.0, opt.quad);
    for (const auto* r : {&i2, &i3, &w1, &w2})
        if (!r->converged)
            throw NumericalError("system measures: quadrature did not converge", r->value,
                                 r->est_abs_error);

    SystemMeasures out{};
    out.extropy = -0.5 * i2.value;
    out.varextropy = 0.25 * (i3.value - i2.value * i2.value);
    out.weighted_varextropy = 0.25 * (w2.value - w1.value * w1.value);
    out.est_abs_error = 0.25 * (i3.est_abs_error + w2.est_abs_error) +
                        0.5 * (i2.est_abs_error + w1.est_abs_error);
    return out;
}

namespace {

// P(X_{i:n} <= x) at quantile level u: tail of the binomial CDF.
double order_stat_cdf_at_level(int i, int n, double u) {
    double g = 0.0;
    for (int j = i; j <= n; ++j)
        g += binom_coeff(n, j) * std::pow(u, j) * std::pow(1.0 - u, n - j);
    return g;
}

double signature_mixture_cdf(const SignatureVector& s, double u) {
    const int n = s.order();
    double total = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double w = s.values()[static_cast<std::size_t>(i - 1)];
        if (w != 0.0) total += w * order_stat_cdf_at_level(i, n, u);
    }
    return total;
}

void require_nonnegative_support(const SystemModel& sys, const char* what) {
    if (sys.component_law.support().lo < 0.0)
        throw std::domain_error(std::string(what) + " requires nonnegative component support");
}

}  // namespace

double hardy_extropy_bound(const SystemModel& sys, const MeasureOptions& opt) {
    require_nonnegative_support(sys, "Hardy extropy bound");
    const Distribution& d = sys.component_law;
    const auto r = integrate(
        [&](double u) {
            const double x = d.quantile(u);
            const double f = d.pdf(x);
            if (!(x > 0.0) || !(f > 0.0)) return 0.0;
            const double g = signature_mixture_cdf(sys.signature, u);
            return g * g / (x * x * f);
        },
        0.0, 1.0, opt.quad);
    if (!r.converged)
        throw NumericalError("Hardy extropy bound: quadrature did not converge", r.value,
                             r.est_abs_error);
    return -0.125 * r.value;
}

double hardy_varextropy_bound(const SystemModel& sys, const MeasureOptions& opt) {
    require_nonnegative_support(sys, "Hardy varextropy bound");
    const Distribution& d = sys.component_law;
    const auto cube = integrate(
        [&](double u) {
            const double x = d.quantile(u);
            const double f = d.pdf(x);
            if (!(x > 0.0) || !(f > 0.0)) return 0.0;
            const double g = signature_mixture_cdf(sys.signature, u);
            return g * g * g / (x * x * x * f);
        },
        0.0, 1.0, opt.quad);
    if (!cube.converged)
        throw NumericalError("Hardy varextropy bound: quadrature did not converge", cube.value,
                             cube.est_abs_error);
    const double uj = hardy_extropy_bound(sys, opt);
    return 2.0 / 27.0 * cube.value - uj * uj;
}

double order_stat_weighted_varextropy(const Distribution& d, int r, int n,
                                      const MeasureOptions& opt) {
    if (r < 1 || r > n) throw std::invalid_argument("order statistic index out of range");
    const double a1 = 3.0 * r - 2.0, b1 = 3.0 * (n - r) + 1.0;
    const double a2 = 2.0 * r - 1.0, b2 = 2.0 * (n - r) + 1.0;

    auto qf = [&d](double u) {
        const double x = d.quantile(u);
        return std::isfinite(x) ? x * d.pdf(x) : 0.0;
    };
    const auto e1 = integrate(
        [&](double u) {
            const double t = qf(u);
            return beta_pdf(u, a1, b1) * t * t;
        },
        0.0, 1.0, opt.quad);
    const auto e2 = integrate([&](double u) { return beta_pdf(u, a2, b2) * qf(u); }, 0.0, 1.0,
                              opt.quad);
    for (const auto* q : {&e1, &e2})
        if (!q->converged)
            throw NumericalError("order statistic weighted varextropy: no convergence",
                                 q->value, q->est_abs_error);

    // 1/4 int x^2 f_{r:n}^3 carries 1/B^3; the squared 1/4 (int x f_{r:n}^2)^2
    // term carries 1/B^4.
    const double lb = lbeta(static_cast<double>(r), static_cast<double>(n - r + 1));
    const double c1 = std::exp(lbeta(a1, b1) - 3.0 * lb);
    const double c2 = std::exp(2.0 * lbeta(a2, b2) - 4.0 * lb);
    return 0.25 * (c1 * e1.value - c2 * e2.value * e2.value);
}

DispersiveVerdict dispersive_order_check(const Distribution& f, const Distribution& g,
                                         int grid_points) {
    if (grid_points < 100) throw std::invalid_argument("dispersive check needs >= 100 points");
    bool f_le = true, g_le = true;
    for (int k = 1; k <= grid_points; ++k) {
        const double v = static_cast<double>(k) / (grid_points + 1.0);
        const double a = f.pdf(f.quantile(v));
        const double b = g.pdf(g.quantile(v));
        if (a < b - 1e-12) f_le = false;   // f(F^-1) >= g(G^-1) fails here
        if (b < a - 1e-12) g_le = false;
        if (!f_le && !g_le) return DispersiveVerdict::incomparable;
    }
    if (f_le && g_le) return DispersiveVerdict::both;
    return f_le ? DispersiveVerdict::f_leq_g : DispersiveVerdict::g_leq_f;
}

}  // namespace varex
