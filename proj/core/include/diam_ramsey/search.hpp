#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "diam_ramsey/checker.hpp"
#include "diam_ramsey/coloring.hpp"

namespace diam_ramsey {

enum class CertificateMode { value_only, one_certificate, all_certificates };

struct SearchConfig {
    /// Longest prefix the search may build. 0 means "known value + 2", which
    /// requires a closed form for the problem.
    int n_cap = 0;
    CertificateMode mode = CertificateMode::one_certificate;
    /// Restrict to colorings whose colors first appear in the order 0, 1, 2, ...
    bool symmetry_reduction = true;
    int worker_count = 1;
    /// Prefixes of this length are the units of parallel work.
    int split_depth = 12;
    /// Abort after this many expanded nodes; 0 disables the budget.
    std::uint64_t node_budget = 0;
    /// Raise FormulaContradicted when a closed form exists and disagrees.
    bool check_known_value = true;
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    int max_depth = 0;
    std::chrono::duration<double> wall_time{};
    int worker_count = 1;
};

struct Certificate {
    Coloring coloring;
    /// Number of colorings in its color-permutation orbit when symmetry
    /// reduction is on; 1 otherwise.
    std::uint64_t orbit_size = 1;
};

struct SearchResult {
    /// f when the search finished below the cap; nullopt when an avoiding
    /// coloring of length n_cap exists (f > n_cap).
    std::optional<int> f_value;
    int n_cap = 0;
    /// Avoiding colorings of the longest avoiding length, sorted.
    std::vector<Certificate> certificates;
    SearchStats stats;

    [[nodiscard]] bool inconclusive() const noexcept { return !f_value.has_value(); }
};

/// The exhaustive search found a value that disagrees with the closed form.
class FormulaContradicted : public std::runtime_error {
public:
    FormulaContradicted(const ProblemSpec& spec, int expected, const SearchResult& result);

    [[nodiscard]] int expected() const noexcept { return expected_; }
    [[nodiscard]] const SearchResult& result() const noexcept { return result_; }

private:
    int expected_;
    SearchResult result_;
};

/// The node budget ran out; carries the statistics gathered so far.
class SearchAborted : public std::runtime_error {
public:
    explicit SearchAborted(SearchStats partial);

    [[nodiscard]] const SearchStats& partial_stats() const noexcept { return partial_; }

private:
    SearchStats partial_;
};

/// 8m - 5 + floor((2m - 2) / 3) + delta, delta = 1 exactly for m in {2, 5}.
[[nodiscard]] int formula_f_mmm2(int m);

/// Closed forms for the diagonal families (m,m;2), (m,m;3), (m,m;4),
/// (m,m,m;2), and the strict family *(2,2;2^k).
[[nodiscard]] std::optional<int> known_value(const ProblemSpec& spec);

/// Size of the orbit of a coloring using `used` distinct colors under all
/// permutations of `num_colors` colors.
[[nodiscard]] std::uint64_t orbit_size(int used, int num_colors);

/// Exact f(m_1, ..., m_t; r) by exhaustive depth-first extension of avoiding
/// prefixes.
[[nodiscard]] SearchResult compute_f(const ProblemSpec& spec, const SearchConfig& config = {});

/// Up to `limit` avoiding colorings of [1, length] in lexicographic order.
/// With symmetry reduction only the lexicographically smallest member of each
/// color-permutation orbit is listed, along with the orbit size.
[[nodiscard]] std::vector<Certificate> enumerate_avoiding(const ProblemSpec& spec, int length, std::size_t limit,
                                                          bool symmetry_reduction = false);

}  // namespace diam_ramsey
