#pragma once

#include <vector>

#include "diam_ramsey/checker.hpp"
#include "diam_ramsey/coloring.hpp"
#include "oracles.hpp"

namespace support {

inline diam_ramsey::Coloring to_coloring(const oracle::Colors& col, int r) {
    std::vector<diam_ramsey::Color> v(col.begin(), col.end());
    return diam_ramsey::Coloring(v, r);
}

inline oracle::Colors to_colors(const diam_ramsey::Coloring& c) {
    oracle::Colors out;
    for (auto x : c.to_vector()) out.push_back(x);
    return out;
}

inline oracle::Problem to_problem(const diam_ramsey::ProblemSpec& spec) {
    return {spec.sizes(), spec.strict()};
}

inline std::vector<int> elements(const diam_ramsey::IntSet& s) { return s.elements(); }

}  // namespace support
