#include "varex/sample.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "varex/common.hpp"

namespace varex {

SampleData SampleData::from_values(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("sample: empty");
    SampleData s;
    s.values = std::move(v);
    s.sorted = s.values;
    std::sort(s.sorted.begin(), s.sorted.end());
    s.std_dev = s.values.size() >= 2 ? sample_std_dev(s.values) : 0.0;
    return s;
}

SampleData SampleData::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    std::vector<double> v;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // strip blanks and a trailing comma (single-column CSV)
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                                 line.back() == '\r' || line.back() == ','))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        const std::string tok = line.substr(start);
        try {
            std::size_t pos = 0;
            const double x = std::stod(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            v.push_back(x);
        } catch (const std::exception&) {
            if (lineno == 1 && v.empty()) continue;  // CSV header
            throw std::runtime_error("bad value '" + tok + "' at " + path + ":" +
                                     std::to_string(lineno));
        }
    }
    return from_values(std::move(v));
}

}  // namespace varex
