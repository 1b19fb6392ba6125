#include "diam_ramsey/constructions.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace diam_ramsey {

std::string to_string(LowerBoundVariant v) {
    switch (v) {
        case LowerBoundVariant::general: return "general";
        case LowerBoundVariant::special_m2: return "special_m2";
        case LowerBoundVariant::special_m5: return "special_m5";
    }
    return "unknown";
}

LowerBoundVariant default_variant(int m) {
    if (m == 2) return LowerBoundVariant::special_m2;
    if (m == 5) return LowerBoundVariant::special_m5;
    return LowerBoundVariant::general;
}

std::vector<std::pair<Color, long long>> lower_bound_runs(int m, std::optional<LowerBoundVariant> variant) {
    if (m < 2) throw std::domain_error("constructions need m >= 2, got " + std::to_string(m));
    const auto v = variant.value_or(default_variant(m));
    switch (v) {
        case LowerBoundVariant::special_m2:
            if (m != 2) throw std::invalid_argument("special_m2 applies only to m = 2");
            // 10101101110
            return {{1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 2}, {0, 1}, {1, 3}, {0, 1}};
        case LowerBoundVariant::special_m5:
            if (m != 5) throw std::invalid_argument("special_m5 applies only to m = 5");
            // 0 1^4 0^4 1^4 0^8 1^4 0^2 1^7 0^3
            return {{0, 1}, {1, 4}, {0, 4}, {1, 4}, {0, 8}, {1, 4}, {0, 2}, {1, 7}, {0, 3}};
        case LowerBoundVariant::general: break;
    }
    const long long mm = m;
    const long long q = (2 * mm - 2) / 3;
    if (mm - q - 1 < 0) throw std::logic_error("construction run length went negative");
    return {{0, 1},     {1, mm - 1},     {0, mm - 1},         {1, mm - 1}, {0, q},
            {1, mm - q - 1}, {0, mm - 1}, {1, 2 * mm - 1 + q}, {0, mm - 1}};
}

Coloring lower_bound_coloring(int m, std::optional<LowerBoundVariant> variant) {
    std::vector<Color> v;
    for (const auto& [color, len] : lower_bound_runs(m, variant)) v.insert(v.end(), static_cast<std::size_t>(len), color);
    return Coloring(v, 2);
}

VerificationReport verify_avoiding(const Coloring& c, const ProblemSpec& spec) {
    auto w = exists_solution(c, spec);
    const bool avoids = !w.has_value();
    return VerificationReport{avoids, std::move(w), c.length(), spec};
}

}  // namespace diam_ramsey
