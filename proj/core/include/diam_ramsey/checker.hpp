#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diam_ramsey/coloring.hpp"

namespace diam_ramsey {

/// Which chains count as solutions: t monochromatic sets of sizes
/// m_1..m_t, each entirely before the next, with nondecreasing (or, when
/// strict, strictly increasing) diameters.
class ProblemSpec {
public:
    ProblemSpec(std::vector<int> sizes, int num_colors, bool strict = false);

    [[nodiscard]] int t() const noexcept { return static_cast<int>(sizes_.size()); }
    [[nodiscard]] const std::vector<int>& sizes() const noexcept { return sizes_; }
    [[nodiscard]] int size(int stage) const { return sizes_.at(static_cast<std::size_t>(stage)); }
    [[nodiscard]] int num_colors() const noexcept { return num_colors_; }
    [[nodiscard]] bool strict() const noexcept { return strict_; }

    /// All sizes equal; returns that size, otherwise nullopt.
    [[nodiscard]] std::optional<int> diagonal_size() const;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;

private:
    std::vector<int> sizes_;
    int num_colors_;
    bool strict_;
};

/// "(2,2,2;2)", or "*(2,2;2)" for the strict variant.
std::string to_string(const ProblemSpec& spec);

struct Witness {
    std::vector<IntSet> chain;
    std::vector<Color> colors;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Re-checks monochromaticity, sizes, precedence and the diameter order
/// directly from the coloring.
[[nodiscard]] bool is_valid_witness(const Coloring& c, const ProblemSpec& spec, const Witness& w);

/// Polynomial-time existence check, O(t * N log N).
///
/// The returned witness is canonical: it minimizes
/// (max B_1, diam B_1, max B_2, diam B_2, ...) lexicographically, then the
/// color sequence, then the element sets.
[[nodiscard]] std::optional<Witness> exists_solution(const Coloring& c, const ProblemSpec& spec);

class OracleCapExceeded : public std::length_error {
public:
    OracleCapExceeded(int length, int cap);
};

inline constexpr int kDefaultOracleCap = 20;

/// Reference oracle: enumerates chains of (min, max, color) triples straight
/// from the definition. Intended for cross-checking only.
[[nodiscard]] std::optional<Witness> brute_force_exists(const Coloring& c, const ProblemSpec& spec,
                                                        int cap = kDefaultOracleCap);

struct MinMaxHit {
    int end;   ///< smallest feasible max(B)
    int diam;  ///< smallest diameter reachable with that max

    friend bool operator==(const MinMaxHit&, const MinMaxHit&) = default;
};

/// Smallest j such that some monochromatic m-set B within [start, N] has
/// diam(B) >= min_diam and max(B) = j, paired with the smallest such diameter.
[[nodiscard]] std::optional<MinMaxHit> min_max_feasible(const Coloring& c, int start, int min_diam, int m);

/// The lexicographically smallest monochromatic m-set of color col with the
/// given min and max, if one exists.
[[nodiscard]] std::optional<IntSet> set_with_ends(const Coloring& c, Color col, int lo, int hi, int m);

/// Prefix checker used by the depth-first search.
///
/// Keeps, for each stage i < t, the smallest reachable max(B_i) of a valid
/// partial chain B_1..B_i as a function of an upper bound on diam(B_i). Each
/// push only has to consider sets ending at the new position, since the
/// prefix before it held no solution.
class IncrementalChecker {
public:
    /// capacity bounds the number of positions that can be pushed.
    IncrementalChecker(ProblemSpec spec, int capacity);

    /// Appends a position. Returns true iff the extended prefix contains a
    /// solution. Throws std::logic_error when the current prefix already does.
    bool push(Color c);

    /// Removes the last position (also clears a solution flag).
    void pop();

    [[nodiscard]] int length() const noexcept { return static_cast<int>(colors_.size()); }
    [[nodiscard]] bool solved() const noexcept { return solved_; }
    [[nodiscard]] const std::vector<Color>& colors() const noexcept { return colors_; }
    [[nodiscard]] const ProblemSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] int capacity() const noexcept { return capacity_; }

private:
    static constexpr int kUnreachable = 1 << 29;

    // reach_[stage][d]: smallest max(B_stage) with diam(B_stage) <= d.
    [[nodiscard]] int reach(int stage, int d) const;
    int smallest_new_diameter(int stage, Color c) const;

    ProblemSpec spec_;
    int capacity_;
    std::vector<Color> colors_;
    std::vector<std::vector<int>> occurrences_;
    std::vector<std::vector<int>> reach_;
    std::vector<int> first_finite_;
    // t - 1 saved first_finite_ entries per pushed position
    std::vector<int> undo_;
    bool solved_ = false;
};

}  // namespace diam_ramsey
