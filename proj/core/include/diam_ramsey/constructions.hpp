#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diam_ramsey/checker.hpp"
#include "diam_ramsey/coloring.hpp"

namespace diam_ramsey {

enum class LowerBoundVariant { general, special_m2, special_m5 };

std::string to_string(LowerBoundVariant v);

/// The variant used for m when the caller does not force one.
[[nodiscard]] LowerBoundVariant default_variant(int m);

/// Avoiding 2-coloring for (m,m,m;2) of length formula_f_mmm2(m) - 1.
///
/// The general family is
///   0 1^{m-1} 0^{m-1} 1^{m-1} 0^{q} 1^{m-q-1} 0^{m-1} 1^{2m-1+q} 0^{m-1},
/// q = floor((2m-2)/3); m = 2 and m = 5 have their own one-longer strings.
/// Forcing `general` at m in {2, 5} yields the general string, one short of
/// optimal there.
[[nodiscard]] Coloring lower_bound_coloring(int m, std::optional<LowerBoundVariant> variant = std::nullopt);

/// The same coloring as (color, run length) pairs.
[[nodiscard]] std::vector<std::pair<Color, long long>> lower_bound_runs(
    int m, std::optional<LowerBoundVariant> variant = std::nullopt);

struct VerificationReport {
    bool avoids = false;
    std::optional<Witness> witness;
    int length = 0;
    ProblemSpec spec;
};

[[nodiscard]] VerificationReport verify_avoiding(const Coloring& c, const ProblemSpec& spec);

}  // namespace diam_ramsey
