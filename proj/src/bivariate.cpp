#include "varex/bivariate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace varex {

BivariateModel BivariateModel::bivariate_exponential(double theta) {
    if (!(theta >= 0.0 && theta <= 1.0))
        throw std::invalid_argument("biexp: requires 0 <= theta <= 1");
    BivariateModel m;
    m.name_ = "biexp";
    m.params_ = {{"theta", theta}};
    m.sx_ = m.sy_ = {0.0, kInf};
    m.pdf_ = [theta](double x, double y) {
        if (x < 0.0 || y < 0.0) return 0.0;
        return ((1.0 + theta * x) * (1.0 + theta * y) - theta) *
               std::exp(-(x + y + theta * x * y));
    };
    return m;
}

BivariateModel BivariateModel::product(const Distribution& x, const Distribution& y) {
    BivariateModel m;
    m.name_ = "product(" + x.name() + "," + y.name() + ")";
    m.sx_ = x.support();
    m.sy_ = y.support();
    m.pdf_ = [x, y](double u, double v) { return x.pdf(u) * y.pdf(v); };
    return m;
}

BivariateModel BivariateModel::parse(std::string_view spec) {
    std::istringstream in{std::string(spec)};
    std::string name, tok;
    in >> name;
    if (name != "biexp")
        throw std::invalid_argument("bivariate model spec: unknown model '" + name + "'");
    double theta = -1.0;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || tok.substr(0, eq) != "theta")
            throw std::invalid_argument("bivariate model spec: expected theta=, got '" + tok +
                                        "'");
        theta = std::stod(tok.substr(eq + 1));
    }
    if (theta < 0.0) throw std::invalid_argument("bivariate model spec: missing theta=");
    return bivariate_exponential(theta);
}

}  // namespace varex
