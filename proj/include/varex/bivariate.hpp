#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varex/common.hpp"
#include "varex/distribution.hpp"

namespace varex {

/// Joint law on a product region, for the bivariate measures.
class BivariateModel {
public:
    const std::string& name() const { return name_; }
    const std::vector<std::pair<std::string, double>>& params() const { return params_; }
    double joint_pdf(double x, double y) const { return pdf_(x, y); }
    Interval support_x() const { return sx_; }
    Interval support_y() const { return sy_; }

    /// f(x,y) = ((1+tx)(1+ty)-t) exp(-(x+y+txy)) on (0,inf)^2, 0 <= t <= 1.
    static BivariateModel bivariate_exponential(double theta);

    /// Independent product of two univariate laws.
    static BivariateModel product(const Distribution& x, const Distribution& y);

    /// Parses e.g. "biexp theta=0.5".
    static BivariateModel parse(std::string_view spec);

private:
    std::string name_;
    std::vector<std::pair<std::string, double>> params_;
    std::function<double(double, double)> pdf_;
    Interval sx_{0.0, kInf}, sy_{0.0, kInf};
};

}  // namespace varex
