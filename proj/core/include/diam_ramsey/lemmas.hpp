#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diam_ramsey/coloring.hpp"

namespace diam_ramsey {

// Structural facts about 2-colorings of [1, 3m-2], checked as executable
// predicates. Everything here assumes r = 2 and length 3m - 2.

/// Monochromatic m-set with diameter >= 2m-2 whose max is as small as
/// possible, and whose diameter is as small as possible given that max.
///   max(b1)  = 3m - 2 - beta
///   diam(b1) = 2m - 2 + alpha
struct ExtremalB1 {
    IntSet b1;
    Color color = 0;
    int beta = 0;
    int alpha = 0;
};

/// Throws std::domain_error unless c is a 2-coloring of length 3m - 2.
[[nodiscard]] std::optional<ExtremalB1> find_extremal_b1(const Coloring& c, int m);

enum class ExtremalCase { one = 0, two = 1, three = 2 };

std::string to_string(ExtremalCase k);

/// A substring of the coloring together with the position of its first
/// character (positions are 1-based; an empty segment still has a start).
struct Segment {
    int start = 1;
    std::vector<Color> colors;
};

/// Which of the three structural cases a coloring falls into. Colors are read
/// after relabeling so that the extremal set has color 1.
struct ExtremalCaseMatch {
    ExtremalCase tag = ExtremalCase::one;
    /// bit k set iff case k holds (cases overlap)
    unsigned mask = 0;
    bool relabeled = false;
    // run parameters of the first admissible decomposition in case one
    int mu = 0;
    int nu = 0;
    /// smallest mu over every admissible decomposition in case one
    int min_mu = 0;
    std::optional<Segment> h0;
    std::optional<Segment> h1;
    std::optional<Segment> h2;

    [[nodiscard]] bool holds(ExtremalCase k) const noexcept { return (mask >> static_cast<unsigned>(k)) & 1U; }
};

/// A structural statement failed on a concrete coloring.
class LemmaViolation : public std::runtime_error {
public:
    LemmaViolation(const std::string& what, std::string coloring);

    [[nodiscard]] const std::string& coloring() const noexcept { return coloring_; }

private:
    std::string coloring_;
};

/// Tries every case and every (nu, mu) decomposition; throws LemmaViolation
/// when no case holds.
[[nodiscard]] ExtremalCaseMatch classify_extremal_case(const Coloring& c, const ExtremalB1& b1, int m);

/// Small-diameter sets that every 2-coloring of [1, 3m-2] provides.
///
/// Without a monochromatic m-set of diameter >= 2m-2 there are two
/// consecutive monochromatic m-intervals d1 < d2. Otherwise a1 = a2 is a
/// smallest-diameter monochromatic m-set in [1, 3m-2-alpha-beta] meeting
///   diam <= 2m-2-alpha,  diam <= m + floor((m-1+beta)/2) - 1,
/// tightened to m-1+beta in case three (or case two with alpha >= 1) and to
/// 2m-2-alpha-mu in case one, where a3 within [1, m+alpha+beta] with
/// diam <= m+alpha+beta-1 must also exist.
struct SmallDiameterFinding {
    enum class Branch { no_big_set, big_set };

    Branch branch = Branch::no_big_set;
    std::optional<IntSet> d1, d2;
    std::optional<IntSet> a1, a2, a3;
    std::optional<ExtremalB1> b1;
    std::optional<ExtremalCaseMatch> match;
    int a1_bound = 0;
    int a2_bound = 0;
    int a3_bound = 0;
};

[[nodiscard]] SmallDiameterFinding find_small_diameter_sets(const Coloring& c, int m);

/// Smallest-diameter monochromatic m-set inside [1, hi], any color, ties to
/// the smallest max and then the smallest color.
[[nodiscard]] std::optional<IntSet> tightest_set(const Coloring& c, int hi, int m);

struct SweepReport {
    int m = 0;
    std::uint64_t instances = 0;
    std::uint64_t without_b1 = 0;
    std::array<std::uint64_t, 3> first_case{};
    std::array<std::uint64_t, 8> case_masks{};
    std::uint64_t no_big_set = 0;
    std::uint64_t big_set = 0;
    std::uint64_t violations = 0;
    std::optional<std::string> first_violation;
};

enum class StructureCheck { extremal_case, small_diameter };

/// Runs the check on all 2^(3m-2) colorings, split by prefix across workers.
[[nodiscard]] SweepReport exhaustive_sweep(StructureCheck which, int m, int workers = 1);

}  // namespace diam_ramsey
