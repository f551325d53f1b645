#include "varex/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "varex/rng.hpp"
#include "varex/special.hpp"

namespace varex {

struct Distribution::Impl {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    Interval sup{0.0, 1.0};
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    std::function<double(double)> quant;       // null -> bisection on cdf
    std::function<double(double)> pdf_deriv;   // null -> finite difference
    std::vector<double> kinks;
    std::optional<double> cf_extropy, cf_wextropy, cf_varextropy, cf_wvarextropy;
};

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

double bisect_cdf(const std::function<double(double)>& cdf, double u, Interval sup) {
    double lo = sup.lo, hi = sup.hi;
    if (!std::isfinite(lo)) {
        lo = std::isfinite(hi) ? hi - 1.0 : -1.0;
        double step = 1.0;
        while (cdf(lo) > u && step < 1e300) {
            step *= 2.0;
            lo -= step;
        }
    }
    if (!std::isfinite(hi)) {
        hi = std::isfinite(sup.lo) ? sup.lo + 1.0 : 1.0;
        double step = 1.0;
        while (cdf(hi) < u && step < 1e300) {
            step *= 2.0;
            hi += step;
        }
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (cdf(mid) >= u)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 1e-14 * std::max(1.0, std::abs(lo) + std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

const std::string& Distribution::name() const { return impl_->name; }

const std::vector<std::pair<std::string, double>>& Distribution::params() const {
    return impl_->params;
}

Interval Distribution::support() const { return impl_->sup; }

double Distribution::pdf(double x) const {
    if (x < impl_->sup.lo || x > impl_->sup.hi || !std::isfinite(x)) return 0.0;
    return impl_->pdf(x);
}

double Distribution::cdf(double x) const {
    if (x <= impl_->sup.lo) return 0.0;
    if (x >= impl_->sup.hi) return 1.0;
    return impl_->cdf(x);
}

double Distribution::quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile: u outside [0,1]");
    if (u == 0.0) return impl_->sup.lo;
    if (u == 1.0) return impl_->sup.hi;
    if (impl_->quant) return impl_->quant(u);
    return bisect_cdf(impl_->cdf, u, impl_->sup);
}

DerivativeValue Distribution::pdf_derivative(double x) const {
    const double h = std::max(1e-6, 1e-6 * std::abs(x));
    for (double k : impl_->kinks) {
        if (std::abs(x - k) <= 1e-9 * std::max(1.0, std::abs(x))) {
            const double d =
                (-3.0 * pdf(x) + 4.0 * pdf(x + h) - pdf(x + 2.0 * h)) / (2.0 * h);
            return {d, true};
        }
    }
    if (impl_->pdf_deriv) return {impl_->pdf_deriv(x), false};
    return {(pdf(x + h) - pdf(x - h)) / (2.0 * h), false};
}

const std::vector<double>& Distribution::kinks() const { return impl_->kinks; }

double Distribution::sample(RandomStream& rng) const { return quantile(rng.uniform()); }

std::vector<double> Distribution::sample_many(std::size_t n, RandomStream& rng) const {
    std::vector<double> out(n);
    for (auto& x : out) x = quantile(rng.uniform());
    return out;
}

std::optional<double> Distribution::closed_extropy() const { return impl_->cf_extropy; }
std::optional<double> Distribution::closed_weighted_extropy() const { return impl_->cf_wextropy; }
std::optional<double> Distribution::closed_varextropy() const { return impl_->cf_varextropy; }
std::optional<double> Distribution::closed_weighted_varextropy() const {
    return impl_->cf_wvarextropy;
}

// --- catalogue entries ---------------------------------------------------

Distribution Distribution::uniform(double a, double b) {
    require(b > a, "uniform: requires b > a");
    auto im = std::make_shared<Impl>();
    im->name = "uniform";
    im->params = {{"a", a}, {"b", b}};
    im->sup = {a, b};
    const double d = b - a;
    im->pdf = [d](double) { return 1.0 / d; };
    im->cdf = [a, d](double x) { return (x - a) / d; };
    im->quant = [a, d](double u) { return a + u * d; };
    im->pdf_deriv = [](double) { return 0.0; };
    im->cf_extropy = -0.5 / d;
    im->cf_wextropy = -(a + b) / (4.0 * d);
    im->cf_varextropy = 0.0;
    im->cf_wvarextropy = 1.0 / 48.0;
    return Distribution(im);
}

Distribution Distribution::exponential(double lambda) {
    require(lambda > 0, "exp: requires lambda > 0");
    auto im = std::make_shared<Impl>();
    im->name = "exp";
    im->params = {{"lambda", lambda}};
    im->sup = {0.0, kInf};
    im->pdf = [lambda](double x) { return lambda * std::exp(-lambda * x); };
    im->cdf = [lambda](double x) { return -std::expm1(-lambda * x); };
    im->quant = [lambda](double u) { return -std::log1p(-u) / lambda; };
    im->pdf_deriv = [lambda](double x) { return -lambda * lambda * std::exp(-lambda * x); };
    im->cf_extropy = -lambda / 4.0;
    im->cf_wextropy = -1.0 / 8.0;
    im->cf_varextropy = lambda * lambda / 48.0;
    im->cf_wvarextropy = 5.0 / 1728.0;
    return Distribution(im);
}

Distribution Distribution::weibull(double alpha, double lambda) {
    require(alpha > 0 && lambda > 0, "weibull: requires alpha > 0 and lambda > 0");
    auto im = std::make_shared<Impl>();
    im->name = "weibull";
    im->params = {{"alpha", alpha}, {"lambda", lambda}};
    im->sup = {0.0, kInf};
    im->pdf = [alpha, lambda](double x) {
        if (x == 0.0) return alpha == 1.0 ? lambda : (alpha > 1.0 ? 0.0 : kInf);
        return lambda * alpha * std::pow(x, alpha - 1.0) * std::exp(-lambda * std::pow(x, alpha));
    };
    im->cdf = [alpha, lambda](double x) { return -std::expm1(-lambda * std::pow(x, alpha)); };
    im->quant = [alpha, lambda](double u) {
        return std::pow(-std::log1p(-u) / lambda, 1.0 / alpha);
    };
    im->pdf_deriv = [alpha, lambda, im_pdf = im->pdf](double x) {
        return im_pdf(x) * ((alpha - 1.0) / x - lambda * alpha * std::pow(x, alpha - 1.0));
    };
    // alpha^2/54 - alpha^2/64: the weighted extropy is -alpha/8, so the
    // subtracted square scales with alpha^2. Free of lambda.
    im->cf_wextropy = -alpha / 8.0;
    im->cf_wvarextropy = 5.0 * alpha * alpha / 1728.0;
    return Distribution(im);
}

Distribution Distribution::laplace(double beta) {
    require(beta > 0, "laplace: requires beta > 0");
    auto im = std::make_shared<Impl>();
    im->name = "laplace";
    im->params = {{"beta", beta}};
    im->sup = {-kInf, kInf};
    im->kinks = {0.0};
    im->pdf = [beta](double x) { return std::exp(-std::abs(x) / beta) / (2.0 * beta); };
    im->cdf = [beta](double x) {
        return x < 0.0 ? 0.5 * std::exp(x / beta) : 1.0 - 0.5 * std::exp(-x / beta);
    };
    im->quant = [beta](double u) {
        return u < 0.5 ? beta * std::log(2.0 * u) : -beta * std::log(2.0 * (1.0 - u));
    };
    im->pdf_deriv = [beta, im_pdf = im->pdf](double x) {
        return (x < 0.0 ? 1.0 : -1.0) * im_pdf(x) / beta;
    };
    im->cf_extropy = -1.0 / (8.0 * beta);
    im->cf_wextropy = 0.0;
    im->cf_varextropy = 1.0 / (192.0 * beta * beta);
    im->cf_wvarextropy = 1.0 / 216.0;
    return Distribution(im);
}

Distribution Distribution::normal(double mu, double sigma) {
    require(sigma > 0, "normal: requires sigma > 0");
    auto im = std::make_shared<Impl>();
    im->name = "normal";
    im->params = {{"mu", mu}, {"sigma", sigma}};
    im->sup = {-kInf, kInf};
    im->pdf = [mu, sigma](double x) { return norm_pdf((x - mu) / sigma) / sigma; };
    im->cdf = [mu, sigma](double x) { return norm_cdf((x - mu) / sigma); };
    im->quant = [mu, sigma](double u) { return mu + sigma * norm_quantile(u); };
    im->pdf_deriv = [mu, sigma, im_pdf = im->pdf](double x) {
        return -(x - mu) / (sigma * sigma) * im_pdf(x);
    };
    const double pi = 3.14159265358979323846;
    const double vz = std::sqrt(3.0) / (24.0 * pi) - 1.0 / (16.0 * pi);
    im->cf_extropy = -1.0 / (4.0 * sigma * std::sqrt(pi));
    im->cf_wextropy = -mu / (4.0 * sigma * std::sqrt(pi));
    im->cf_varextropy = vz / (sigma * sigma);
    im->cf_wvarextropy = std::sqrt(3.0) / (72.0 * pi) + (mu * mu) / (sigma * sigma) * vz;
    return Distribution(im);
}

Distribution Distribution::beta(double a, double b) {
    require(a > 0 && b > 0, "beta: requires a > 0 and b > 0");
    auto im = std::make_shared<Impl>();
    im->name = "beta";
    im->params = {{"a", a}, {"b", b}};
    im->sup = {0.0, 1.0};
    im->pdf = [a, b](double x) { return beta_pdf(x, a, b); };
    im->cdf = [a, b](double x) { return reg_beta_i(x, a, b); };
    if (b == 1.0)
        im->quant = [a](double u) { return std::pow(u, 1.0 / a); };
    else if (a == 1.0)
        im->quant = [b](double u) { return 1.0 - std::pow(1.0 - u, 1.0 / b); };
    im->pdf_deriv = [a, b, im_pdf = im->pdf](double x) {
        return im_pdf(x) * ((a - 1.0) / x - (b - 1.0) / (1.0 - x));
    };
    if (b == 1.0) {
        if (a > 0.5) im->cf_extropy = -a * a / (2.0 * (2.0 * a - 1.0));
        if (a > 2.0 / 3.0)
            im->cf_varextropy = a * a * a * (a - 1.0) * (a - 1.0) /
                                (4.0 * (3.0 * a - 2.0) * (2.0 * a - 1.0) * (2.0 * a - 1.0));
        im->cf_wextropy = -a / 4.0;
        im->cf_wvarextropy = a * a / 48.0;
    } else if (a == 1.0) {
        if (b > 0.5) im->cf_extropy = -b * b / (2.0 * (2.0 * b - 1.0));
        if (b > 2.0 / 3.0) {
            im->cf_varextropy = b * b * b * (b - 1.0) * (b - 1.0) /
                                (4.0 * (3.0 * b - 2.0) * (2.0 * b - 1.0) * (2.0 * b - 1.0));
            im->cf_wvarextropy = b * b * (5.0 * b * b - 5.0 * b + 2.0) /
                                 (48.0 * (9.0 * b * b - 9.0 * b + 2.0) * (2.0 * b - 1.0) *
                                  (2.0 * b - 1.0));
        }
    }
    return Distribution(im);
}

Distribution Distribution::gamma(double shape, double scale) {
    require(shape > 0 && scale > 0, "gamma: requires shape > 0 and scale > 0");
    auto im = std::make_shared<Impl>();
    im->name = "gamma";
    im->params = {{"shape", shape}, {"scale", scale}};
    im->sup = {0.0, kInf};
    const double lognorm = std::lgamma(shape) + shape * std::log(scale);
    im->pdf = [shape, scale, lognorm](double x) {
        if (x <= 0.0) return shape == 1.0 ? 1.0 / scale : (shape > 1.0 ? 0.0 : kInf);
        return std::exp((shape - 1.0) * std::log(x) - x / scale - lognorm);
    };
    im->cdf = [shape, scale](double x) { return reg_gamma_p(shape, x / scale); };
    im->pdf_deriv = [shape, scale, im_pdf = im->pdf](double x) {
        return im_pdf(x) * ((shape - 1.0) / x - 1.0 / scale);
    };
    return Distribution(im);
}

Distribution Distribution::inverse_gamma(double alpha, double beta) {
    require(alpha > 0 && beta > 0, "invgamma: requires alpha > 0 and beta > 0");
    auto im = std::make_shared<Impl>();
    im->name = "invgamma";
    im->params = {{"alpha", alpha}, {"beta", beta}};
    im->sup = {0.0, kInf};
    const double lognorm = alpha * std::log(beta) - std::lgamma(alpha);
    im->pdf = [alpha, beta, lognorm](double x) {
        if (x <= 0.0) return 0.0;
        return std::exp(lognorm - (alpha + 1.0) * std::log(x) - beta / x);
    };
    im->cdf = [alpha, beta](double x) {
        return x <= 0.0 ? 0.0 : 1.0 - reg_gamma_p(alpha, beta / x);
    };
    im->pdf_deriv = [alpha, beta, im_pdf = im->pdf](double x) {
        return im_pdf(x) * (beta / (x * x) - (alpha + 1.0) / x);
    };
    return Distribution(im);
}

Distribution Distribution::reciprocal(double a, double b) {
    require(a > 0 && b > a, "reciprocal: requires 0 < a < b");
    auto im = std::make_shared<Impl>();
    im->name = "reciprocal";
    im->params = {{"a", a}, {"b", b}};
    im->sup = {a, b};
    const double len = std::log(b / a);
    im->pdf = [len](double x) { return 1.0 / (x * len); };
    im->cdf = [a, len](double x) { return std::log(x / a) / len; };
    im->quant = [a, b, len](double u) { return a * std::exp(u * len); };
    im->pdf_deriv = [len](double x) { return -1.0 / (x * x * len); };
    const double j = -0.5 / (len * len) * (1.0 / a - 1.0 / b);
    im->cf_extropy = j;
    im->cf_wextropy = -0.5 / len;
    im->cf_varextropy =
        (1.0 / (a * a) - 1.0 / (b * b)) / (8.0 * len * len * len) - j * j;
    im->cf_wvarextropy = 0.0;
    return Distribution(im);
}

Distribution Distribution::piecewise_constant(std::vector<double> weights) {
    require(!weights.empty(), "piecewise: requires at least one weight");
    double total = 0.0;
    for (double w : weights) {
        require(w >= 0.0, "piecewise: weights must be nonnegative");
        total += w;
    }
    require(std::abs(total - 1.0) <= 1e-9, "piecewise: weights must sum to 1");
    for (double& w : weights) w /= total;
    const std::size_t n = weights.size();

    auto im = std::make_shared<Impl>();
    im->name = "piecewise";
    for (std::size_t j = 0; j < n; ++j)
        im->params.emplace_back("w" + std::to_string(j + 1), weights[j]);
    im->sup = {0.0, static_cast<double>(n)};
    for (std::size_t j = 1; j < n; ++j) im->kinks.push_back(static_cast<double>(j));

    std::vector<double> cum(n + 1, 0.0);
    for (std::size_t j = 0; j < n; ++j) cum[j + 1] = cum[j] + weights[j];
    cum[n] = 1.0;

    im->pdf = [weights, n](double x) {
        const auto j = static_cast<std::size_t>(std::floor(x));
        return j < n ? weights[j] : (x == static_cast<double>(n) ? weights[n - 1] : 0.0);
    };
    im->cdf = [weights, cum, n](double x) {
        const auto j = static_cast<std::size_t>(std::floor(x));
        if (j >= n) return 1.0;
        return cum[j] + weights[j] * (x - static_cast<double>(j));
    };
    im->quant = [weights, cum, n](double u) {
        for (std::size_t j = 0; j < n; ++j)
            if (cum[j + 1] >= u && weights[j] > 0.0)
                return static_cast<double>(j) + (u - cum[j]) / weights[j];
        return static_cast<double>(n);
    };
    im->pdf_deriv = [](double) { return 0.0; };

    double s2 = 0.0, s3 = 0.0, w2 = 0.0, w3 = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
        const double w = weights[j - 1];
        const double jd = static_cast<double>(j);
        s2 += w * w;
        s3 += w * w * w;
        w2 += (2.0 * jd - 1.0) * w * w;
        w3 += (3.0 * jd * jd - 3.0 * jd + 1.0) * w * w * w;
    }
    im->cf_extropy = -0.5 * s2;
    im->cf_wextropy = -0.25 * w2;
    im->cf_varextropy = 0.25 * (s3 - s2 * s2);
    im->cf_wvarextropy = w3 / 12.0 - (0.25 * w2) * (0.25 * w2);
    return Distribution(im);
}

Distribution Distribution::power_law(double beta) {
    require(beta > 0, "power: requires beta > 0");
    auto im = std::make_shared<Impl>();
    im->name = "power";
    im->params = {{"beta", beta}};
    im->sup = {0.0, 2.0};
    im->pdf = [beta](double x) {
        if (x == 0.0) return beta == 1.0 ? 0.5 : (beta > 1.0 ? 0.0 : kInf);
        return 0.5 * beta * std::pow(0.5 * x, beta - 1.0);
    };
    im->cdf = [beta](double x) { return std::pow(0.5 * x, beta); };
    im->quant = [beta](double u) { return 2.0 * std::pow(u, 1.0 / beta); };
    im->pdf_deriv = [beta](double x) {
        return 0.25 * beta * (beta - 1.0) * std::pow(0.5 * x, beta - 2.0);
    };
    return Distribution(im);
}

Distribution Distribution::log_logistic() {
    auto im = std::make_shared<Impl>();
    im->name = "loglogistic";
    im->sup = {0.0, kInf};
    im->pdf = [](double x) {
        const double d = 4.0 * x * x + 1.0;
        return 8.0 * x / (d * d);
    };
    im->cdf = [](double x) { return 1.0 - 1.0 / (4.0 * x * x + 1.0); };
    im->quant = [](double u) { return 0.5 * std::sqrt(u / (1.0 - u)); };
    im->pdf_deriv = [](double x) {
        const double d = 4.0 * x * x + 1.0;
        return 8.0 * (1.0 - 12.0 * x * x) / (d * d * d);
    };
    return Distribution(im);
}

Distribution Distribution::pareto2() {
    auto im = std::make_shared<Impl>();
    im->name = "pareto2";
    im->sup = {0.0, kInf};
    im->pdf = [](double x) { return 5.0 / 3.0 * std::pow(1.0 + x / 3.0, -6.0); };
    im->cdf = [](double x) { return 1.0 - std::pow(1.0 + x / 3.0, -5.0); };
    im->quant = [](double u) { return 3.0 * (std::pow(1.0 - u, -0.2) - 1.0); };
    im->pdf_deriv = [](double x) { return -10.0 / 3.0 * std::pow(1.0 + x / 3.0, -7.0); };
    return Distribution(im);
}

Distribution Distribution::alt_k(double a, double k) {
    require(a > 0 && a < 1, "ak: requires 0 < a < 1");
    require(k > 0, "ak: requires k > 0");
    auto im = std::make_shared<Impl>();
    im->name = "ak";
    im->params = {{"a", a}, {"k", k}};
    im->sup = {a, 1.0};
    const double scale = std::pow(1.0 - a, k);
    im->pdf = [k, scale](double x) { return k * std::pow(1.0 - x, k - 1.0) / scale; };
    im->cdf = [k, scale](double x) { return 1.0 - std::pow(1.0 - x, k) / scale; };
    im->quant = [a, k](double u) { return 1.0 - (1.0 - a) * std::pow(1.0 - u, 1.0 / k); };
    im->pdf_deriv = [k, scale](double x) {
        return -k * (k - 1.0) * std::pow(1.0 - x, k - 2.0) / scale;
    };
    return Distribution(im);
}

Distribution Distribution::truncated_lognormal(double a, double b) {
    require(a > 0 && b > a, "tlognorm: requires 0 < a < b");
    auto im = std::make_shared<Impl>();
    im->name = "tlognorm";
    im->params = {{"a", a}, {"b", b}};
    im->sup = {a, b};
    const double c_lo = norm_cdf(std::log(a));
    const double z = norm_cdf(std::log(b)) - c_lo;
    im->pdf = [z](double x) { return norm_pdf(std::log(x)) / (x * z); };
    im->cdf = [c_lo, z](double x) { return (norm_cdf(std::log(x)) - c_lo) / z; };
    im->quant = [c_lo, z](double u) { return std::exp(norm_quantile(c_lo + u * z)); };
    im->pdf_deriv = [z](double x) {
        const double lx = std::log(x);
        return -norm_pdf(lx) * (lx + 1.0) / (x * x * z);
    };
    return Distribution(im);
}

Distribution Distribution::custom(std::string name, Interval support,
                                  std::function<double(double)> pdf,
                                  std::function<double(double)> cdf,
                                  std::function<double(double)> quantile,
                                  std::vector<double> kinks) {
    auto im = std::make_shared<Impl>();
    im->name = std::move(name);
    im->sup = support;
    im->pdf = std::move(pdf);
    im->cdf = std::move(cdf);
    im->quant = std::move(quantile);
    im->kinks = std::move(kinks);
    return Distribution(im);
}

// --- model spec parsing ---------------------------------------------------

namespace {

std::vector<std::string> tokenize(std::string_view spec) {
    std::vector<std::string> toks;
    std::istringstream in{std::string(spec)};
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

struct KeyValues {
    std::vector<std::pair<std::string, std::string>> kv;
    std::string get(const std::string& key) const {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        throw std::invalid_argument("model spec: missing parameter '" + key + "'");
    }
    double get_num(const std::string& key) const {
        const std::string v = get(key);
        std::size_t pos = 0;
        double x = 0.0;
        try {
            x = std::stod(v, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("model spec: bad value '" + v + "' for '" + key + "'");
        }
        if (pos != v.size())
            throw std::invalid_argument("model spec: bad value '" + v + "' for '" + key + "'");
        return x;
    }
    void check_known(std::initializer_list<const char*> known) const {
        for (const auto& [k, v] : kv) {
            bool ok = false;
            for (const char* name : known) ok = ok || k == name;
            if (!ok) throw std::invalid_argument("model spec: unknown parameter '" + k + "'");
        }
    }
};

}  // namespace

Distribution Distribution::parse(std::string_view spec) {
    const auto toks = tokenize(spec);
    if (toks.empty()) throw std::invalid_argument("model spec: empty");
    const std::string& name = toks[0];
    KeyValues kv;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto eq = toks[i].find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("model spec: expected key=value, got '" + toks[i] + "'");
        kv.kv.emplace_back(toks[i].substr(0, eq), toks[i].substr(eq + 1));
    }

    if (name == "uniform") {
        kv.check_known({"a", "b"});
        return uniform(kv.get_num("a"), kv.get_num("b"));
    }
    if (name == "exp") {
        kv.check_known({"lambda"});
        return exponential(kv.get_num("lambda"));
    }
    if (name == "weibull") {
        kv.check_known({"alpha", "lambda"});
        return weibull(kv.get_num("alpha"), kv.get_num("lambda"));
    }
    if (name == "laplace") {
        kv.check_known({"beta"});
        return laplace(kv.get_num("beta"));
    }
    if (name == "normal") {
        kv.check_known({"mu", "sigma"});
        return normal(kv.get_num("mu"), kv.get_num("sigma"));
    }
    if (name == "beta") {
        kv.check_known({"a", "b"});
        return beta(kv.get_num("a"), kv.get_num("b"));
    }
    if (name == "gamma") {
        kv.check_known({"shape", "scale"});
        return gamma(kv.get_num("shape"), kv.get_num("scale"));
    }
    if (name == "invgamma") {
        kv.check_known({"alpha", "beta"});
        return inverse_gamma(kv.get_num("alpha"), kv.get_num("beta"));
    }
    if (name == "reciprocal") {
        kv.check_known({"a", "b"});
        return reciprocal(kv.get_num("a"), kv.get_num("b"));
    }
    if (name == "piecewise") {
        kv.check_known({"w"});
        std::vector<double> w;
        std::istringstream in(kv.get("w"));
        std::string piece;
        while (std::getline(in, piece, ',')) {
            try {
                w.push_back(std::stod(piece));
            } catch (const std::exception&) {
                throw std::invalid_argument("model spec: bad weight '" + piece + "'");
            }
        }
        return piecewise_constant(std::move(w));
    }
    if (name == "power") {
        kv.check_known({"beta"});
        return power_law(kv.get_num("beta"));
    }
    if (name == "loglogistic") {
        kv.check_known({});
        return log_logistic();
    }
    if (name == "pareto2") {
        kv.check_known({});
        return pareto2();
    }
    if (name == "ak") {
        kv.check_known({"a", "k"});
        return alt_k(kv.get_num("a"), kv.get_num("k"));
    }
    if (name == "tlognorm") {
        kv.check_known({"a", "b"});
        return truncated_lognormal(kv.get_num("a"), kv.get_num("b"));
    }
    throw std::invalid_argument("model spec: unknown model '" + name + "'");
}

std::vector<std::string> Distribution::catalog() {
    return {
        "uniform a= b=          uniform on (a,b)",
        "exp lambda=            exponential, rate lambda",
        "weibull alpha= lambda= F(x) = 1 - exp(-lambda x^alpha)",
        "laplace beta=          double exponential, symmetric about 0",
        "normal mu= sigma=      Gaussian",
        "beta a= b=             beta on (0,1)",
        "gamma shape= scale=    gamma",
        "invgamma alpha= beta=  inverse gamma",
        "reciprocal a= b=       density prop. to 1/x on (a,b), 0 < a < b",
        "piecewise w=w1,...,wn  histogram density on [0,n), bins [j-1,j)",
        "power beta=            f = (beta/2)(x/2)^(beta-1) on (0,2)",
        "loglogistic            f = 8x/(4x^2+1)^2 on (0,inf)",
        "pareto2                f = (5/3)(1+x/3)^(-6) on (0,inf)",
        "ak a= k=               F = 1-(1-x)^k/(1-a)^k on (a,1)",
        "tlognorm a= b=         standard lognormal truncated to (a,b)",
    };
}

}  // namespace varex
