#pragma once

#include <functional>
#include <stdexcept>
#include <utility>

namespace varex {

/// Weight (utility) function entering the weighted measures. The two built-in
/// kinds evaluate exactly; custom weights carry their own derivative when the
/// caller needs one.
class WeightFunction {
public:
    enum class Kind { constant_one, identity, custom };

    static const WeightFunction& one() {
        static const WeightFunction w(Kind::constant_one);
        return w;
    }
    static const WeightFunction& identity() {
        static const WeightFunction w(Kind::identity);
        return w;
    }
    static WeightFunction custom(std::function<double(double)> eval,
                                 std::function<double(double)> deriv = {}) {
        WeightFunction w(Kind::custom);
        w.eval_ = std::move(eval);
        w.deriv_ = std::move(deriv);
        return w;
    }

    double operator()(double x) const {
        switch (kind_) {
            case Kind::constant_one: return 1.0;
            case Kind::identity: return x;
            default: return eval_(x);
        }
    }

    double derivative(double x) const {
        switch (kind_) {
            case Kind::constant_one: return 0.0;
            case Kind::identity: return 1.0;
            default:
                if (!deriv_) throw std::domain_error("weight function has no derivative");
                return deriv_(x);
        }
    }

    Kind kind() const { return kind_; }

private:
    explicit WeightFunction(Kind k) : kind_(k) {}
    Kind kind_;
    std::function<double(double)> eval_;
    std::function<double(double)> deriv_;
};

}  // namespace varex
