#pragma once

#include <string>
#include <vector>

namespace varex {

/// Observations plus the sorted view and derived quantities the estimators
/// consume. Immutable once built.
struct SampleData {
    std::vector<double> values;  // as given
    std::vector<double> sorted;  // ascending
    double std_dev = 0.0;        // divisor n-1; 0 when n < 2

    std::size_t n() const { return values.size(); }

    static SampleData from_values(std::vector<double> v);
    /// One value per line; '#' starts a comment; a single-column CSV with an
    /// optional non-numeric header also loads.
    static SampleData from_file(const std::string& path);
};

}  // namespace varex
