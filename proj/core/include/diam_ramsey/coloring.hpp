#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diam_ramsey {

using Color = std::uint8_t;

/// Largest palette a Coloring can hold. The run-length codec is narrower
/// (single digit colors), see kMaxCodecColors.
inline constexpr int kMaxColors = 64;
inline constexpr int kMaxCodecColors = 10;

/// Closed integer interval [lo, hi].
struct Interval {
    int lo = 1;
    int hi = 0;

    [[nodiscard]] bool contains(int x) const noexcept { return lo <= x && x <= hi; }
    [[nodiscard]] int size() const noexcept { return hi >= lo ? hi - lo + 1 : 0; }
};

/// A coloring of the positions 1..N by colors 0..r-1.
///
/// Storage is one bit plane per color; range counts go through a prefix table
/// that is built on first use and shared between copies. Values are immutable
/// after construction, so a Coloring may be read from several threads.
class Coloring {
public:
    Coloring(std::span<const Color> colors, int num_colors);
    Coloring(std::initializer_list<int> colors, int num_colors);

    [[nodiscard]] int length() const noexcept { return length_; }
    [[nodiscard]] int num_colors() const noexcept { return num_colors_; }

    /// Color of position pos, 1-based.
    [[nodiscard]] Color at(int pos) const;

    /// Number of positions of color c in [lo, hi] (clamped to [1, N]).
    [[nodiscard]] int count(Color c, int lo, int hi) const;

    [[nodiscard]] std::vector<Color> to_vector() const;

    /// Coloring with every color c replaced by perm[c].
    [[nodiscard]] Coloring permuted(std::span<const Color> perm) const;

    /// Coloring extended by one position.
    [[nodiscard]] Coloring appended(Color c) const;

    friend bool operator==(const Coloring& a, const Coloring& b);
    friend bool operator<(const Coloring& a, const Coloring& b);

private:
    struct PrefixCounts;

    const PrefixCounts& prefix() const;

    int length_ = 0;
    int num_colors_ = 0;
    std::vector<std::vector<std::uint64_t>> planes_;
    std::shared_ptr<PrefixCounts> prefix_;
};

/// Strictly ascending set of positions.
class IntSet {
public:
    IntSet() = default;
    explicit IntSet(std::vector<int> elements);
    IntSet(std::initializer_list<int> elements);

    [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] int min() const;
    [[nodiscard]] int max() const;
    [[nodiscard]] const std::vector<int>& elements() const noexcept { return elements_; }

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    friend bool operator==(const IntSet&, const IntSet&) = default;
    friend auto operator<=>(const IntSet&, const IntSet&) = default;

private:
    std::vector<int> elements_;
};

/// max - min of a nonempty set. Throws std::domain_error on an empty set.
[[nodiscard]] int diam(const IntSet& x);

/// true iff max(x) < min(y).
[[nodiscard]] bool precedes(const IntSet& x, const IntSet& y);

std::string to_string(const IntSet& x);

class RunStringError : public std::invalid_argument {
public:
    RunStringError(const std::string& what, std::string token, std::size_t offset);

    [[nodiscard]] const std::string& token() const noexcept { return token_; }
    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::string token_;
    std::size_t offset_;
};

/// Parses the run-length notation, e.g. "0^210^3", "0^2 1 0^3" or "0^12".
/// A token is a color digit optionally followed by an exponent: ^{k}, or a
/// bare digit run. A bare run counts whole only when whitespace or the end of
/// input follows it; otherwise just its first digit is the exponent, so
/// "0^210^3" reads 0^2 1 0^3.
[[nodiscard]] Coloring parse_run_string(std::string_view s, int num_colors);

/// Canonical maximal-run form without whitespace. Exponents of 10 or more,
/// and exponents that only single positions follow, are written c^{k}.
[[nodiscard]] std::string format_run_string(const Coloring& c);

/// Raised by the first/last selectors when fewer than the requested number of
/// positions carry the color.
class SelectionError : public std::out_of_range {
public:
    SelectionError(int requested, int available);

    [[nodiscard]] int requested() const noexcept { return requested_; }
    [[nodiscard]] int available() const noexcept { return available_; }

private:
    int requested_;
    int available_;
};

// i-th smallest / largest position of color c inside y (i is 1-based).
[[nodiscard]] int nth_first(const Coloring& col, Color c, Interval y, int i);
[[nodiscard]] int nth_last(const Coloring& col, Color c, Interval y, int i);

// The i-th through j-th smallest (resp. largest) positions of color c in y.
[[nodiscard]] IntSet first_range(const Coloring& col, Color c, Interval y, int i, int j);
[[nodiscard]] IntSet last_range(const Coloring& col, Color c, Interval y, int i, int j);

}  // namespace diam_ramsey
