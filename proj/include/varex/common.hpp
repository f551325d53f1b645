#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace varex {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Support interval; either bound may be infinite.
struct Interval {
    double lo;
    double hi;
    bool contains(double x) const { return x > lo && x < hi; }
    bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }
};

/// Thrown when an iterative routine cannot reach its tolerance. Carries the
/// best value obtained and the error estimate actually achieved.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double partial, double achieved)
        : std::runtime_error(what), partial_value(partial), achieved_tolerance(achieved) {}
    double partial_value;
    double achieved_tolerance;
};

/// Order-insensitive pairwise summation: the result depends only on the
/// element order of `v`, never on how work was scheduled.
double pairwise_sum(std::span<const double> v);

double mean(std::span<const double> v);
double sample_std_dev(std::span<const double> v);  // divisor n-1

/// Runs body(0..count-1) on `threads` workers (0 = hardware concurrency).
/// Callers own determinism: write to per-index slots, reduce afterwards.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace varex
