#include "diam_ramsey/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <mutex>

namespace diam_ramsey {

namespace {

constexpr int kWordBits = 64;
constexpr std::size_t kMaxRun = 50'000'000;

void check_palette(int num_colors) {
    if (num_colors < 2 || num_colors > kMaxColors) {
        throw std::invalid_argument("number of colors must be in [2, " + std::to_string(kMaxColors) +
                                    "], got " + std::to_string(num_colors));
    }
}

}  // namespace

struct Coloring::PrefixCounts {
    std::once_flag once;
    // counts[c * (N + 1) + p] = number of positions <= p with color c
    std::vector<int> counts;
};

Coloring::Coloring(std::span<const Color> colors, int num_colors)
    : length_(static_cast<int>(colors.size())), num_colors_(num_colors) {
    check_palette(num_colors);
    if (colors.empty()) {
        throw std::invalid_argument("a coloring needs at least one position");
    }
    const std::size_t words = (colors.size() + kWordBits - 1) / kWordBits;
    planes_.assign(static_cast<std::size_t>(num_colors), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i] >= num_colors) {
            throw std::invalid_argument("color " + std::to_string(colors[i]) + " at position " +
                                        std::to_string(i + 1) + " is outside [0, " +
                                        std::to_string(num_colors - 1) + "]");
        }
        planes_[colors[i]][i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
    }
    prefix_ = std::make_shared<PrefixCounts>();
}

Coloring::Coloring(std::initializer_list<int> colors, int num_colors)
    : Coloring(
          [&] {
              std::vector<Color> v;
              v.reserve(colors.size());
              for (int c : colors) {
                  if (c < 0 || c >= kMaxColors) throw std::invalid_argument("color out of range");
                  v.push_back(static_cast<Color>(c));
              }
              return v;
          }(),
          num_colors) {}

Color Coloring::at(int pos) const {
    if (pos < 1 || pos > length_) {
        throw std::out_of_range("position " + std::to_string(pos) + " outside [1, " +
                                std::to_string(length_) + "]");
    }
    const auto i = static_cast<std::size_t>(pos - 1);
    for (std::size_t c = 0; c < planes_.size(); ++c) {
        if ((planes_[c][i / kWordBits] >> (i % kWordBits)) & 1U) return static_cast<Color>(c);
    }
    throw std::logic_error("corrupt coloring: position without a color");
}

const Coloring::PrefixCounts& Coloring::prefix() const {
    std::call_once(prefix_->once, [this] {
        const std::size_t stride = static_cast<std::size_t>(length_) + 1;
        auto& counts = prefix_->counts;
        counts.assign(stride * planes_.size(), 0);
        for (std::size_t c = 0; c < planes_.size(); ++c) {
            int running = 0;
            for (int p = 1; p <= length_; ++p) {
                const auto i = static_cast<std::size_t>(p - 1);
                running += static_cast<int>((planes_[c][i / kWordBits] >> (i % kWordBits)) & 1U);
                counts[c * stride + static_cast<std::size_t>(p)] = running;
            }
        }
    });
    return *prefix_;
}

int Coloring::count(Color c, int lo, int hi) const {
    if (c >= num_colors_) return 0;
    lo = std::max(lo, 1);
    hi = std::min(hi, length_);
    if (lo > hi) return 0;
    const auto& counts = prefix().counts;
    const std::size_t base = static_cast<std::size_t>(c) * (static_cast<std::size_t>(length_) + 1);
    return counts[base + static_cast<std::size_t>(hi)] - counts[base + static_cast<std::size_t>(lo - 1)];
}

std::vector<Color> Coloring::to_vector() const {
    std::vector<Color> out(static_cast<std::size_t>(length_));
    for (std::size_t c = 0; c < planes_.size(); ++c) {
        for (std::size_t w = 0; w < planes_[c].size(); ++w) {
            std::uint64_t bits = planes_[c][w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                out[w * kWordBits + static_cast<std::size_t>(b)] = static_cast<Color>(c);
                bits &= bits - 1;
            }
        }
    }
    return out;
}

Coloring Coloring::permuted(std::span<const Color> perm) const {
    if (perm.size() != static_cast<std::size_t>(num_colors_)) {
        throw std::invalid_argument("permutation size does not match the palette");
    }
    auto v = to_vector();
    for (auto& c : v) c = perm[c];
    return Coloring(v, num_colors_);
}

Coloring Coloring::appended(Color c) const {
    auto v = to_vector();
    v.push_back(c);
    return Coloring(v, num_colors_);
}

bool operator==(const Coloring& a, const Coloring& b) {
    return a.num_colors_ == b.num_colors_ && a.length_ == b.length_ && a.planes_ == b.planes_;
}

bool operator<(const Coloring& a, const Coloring& b) {
    const auto va = a.to_vector();
    const auto vb = b.to_vector();
    if (va != vb) return va < vb;
    return a.num_colors_ < b.num_colors_;
}

IntSet::IntSet(std::vector<int> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i - 1] >= elements_[i]) {
            throw std::invalid_argument("IntSet elements must be strictly ascending");
        }
    }
}

IntSet::IntSet(std::initializer_list<int> elements) : IntSet(std::vector<int>(elements)) {}

int IntSet::min() const {
    if (elements_.empty()) throw std::domain_error("min of an empty set");
    return elements_.front();
}

int IntSet::max() const {
    if (elements_.empty()) throw std::domain_error("max of an empty set");
    return elements_.back();
}

int diam(const IntSet& x) {
    if (x.empty()) throw std::domain_error("diameter of an empty set");
    return x.max() - x.min();
}

bool precedes(const IntSet& x, const IntSet& y) { return x.max() < y.min(); }

std::string to_string(const IntSet& x) {
    std::string out = "{";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(x.elements()[i]);
    }
    out += '}';
    return out;
}

// ---------------------------------------------------------------------------
// Run-length codec

RunStringError::RunStringError(const std::string& what, std::string token, std::size_t offset)
    : std::invalid_argument(what + " (token '" + token + "' at offset " + std::to_string(offset) + ")"),
      token_(std::move(token)),
      offset_(offset) {}

Coloring parse_run_string(std::string_view s, int num_colors) {
    if (num_colors < 2 || num_colors > kMaxCodecColors) {
        throw std::invalid_argument("run-length strings support 2 to " + std::to_string(kMaxCodecColors) +
                                    " colors, got " + std::to_string(num_colors));
    }
    auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
    auto is_digit = [](char ch) { return ch >= '0' && ch <= '9'; };

    std::vector<Color> colors;
    std::size_t i = 0;
    while (i < s.size()) {
        if (is_space(s[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (!is_digit(s[i])) {
            throw RunStringError("expected a color digit", std::string(s.substr(i, 1)), i);
        }
        const int color = s[i] - '0';
        ++i;
        std::size_t run = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            const bool braced = i < s.size() && s[i] == '{';
            if (braced) ++i;
            const std::size_t digits_begin = i;
            std::size_t run_end = i;
            while (run_end < s.size() && is_digit(s[run_end])) ++run_end;
            if (braced || run_end == s.size() || is_space(s[run_end])) {
                i = run_end;
            } else {
                // "0^210^3" is 0^2 1 0^3: only the first digit is the exponent
                i = std::min(i + 1, run_end);
            }
            if (i == digits_begin) {
                throw RunStringError("missing exponent after '^'", std::string(s.substr(start, i - start + 1)),
                                     start);
            }
            if (braced) {
                if (i >= s.size() || s[i] != '}') {
                    throw RunStringError("unterminated '{' in exponent", std::string(s.substr(start, i - start)),
                                         start);
                }
                ++i;
            }
            const auto digits = s.substr(digits_begin, i - digits_begin - (braced ? 1 : 0));
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), run);
            if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
                throw RunStringError("exponent out of range", std::string(s.substr(start, i - start)), start);
            }
            if (run > kMaxRun) {
                throw RunStringError("run length too large", std::string(s.substr(start, i - start)), start);
            }
            if (run == 0) {
                throw RunStringError("run length must be at least 1", std::string(s.substr(start, i - start)),
                                     start);
            }
        }
        if (color >= num_colors) {
            throw RunStringError("color " + std::to_string(color) + " is not below " + std::to_string(num_colors),
                                 std::string(s.substr(start, i - start)), start);
        }
        colors.insert(colors.end(), run, static_cast<Color>(color));
    }
    if (colors.empty()) {
        throw RunStringError("empty coloring", std::string(s), 0);
    }
    return Coloring(colors, num_colors);
}

std::string format_run_string(const Coloring& c) {
    if (c.num_colors() > kMaxCodecColors) {
        throw std::invalid_argument("run-length strings support at most " + std::to_string(kMaxCodecColors) +
                                    " colors");
    }
    const auto v = c.to_vector();
    std::vector<std::pair<Color, std::size_t>> runs;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        runs.emplace_back(v[i], j - i);
        i = j;
    }
    // A bare exponent followed only by single positions up to the end would
    // be read back as one long exponent, so it gets braces.
    std::vector<bool> singles_after(runs.size() + 1, true);
    for (std::size_t k = runs.size(); k-- > 0;) singles_after[k] = singles_after[k + 1] && runs[k].second == 1;
    std::string out;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        const auto [color, run] = runs[k];
        out += static_cast<char>('0' + color);
        if (run == 1) continue;
        const bool ambiguous = k + 1 < runs.size() && singles_after[k + 1];
        if (run >= 10 || ambiguous) {
            out += "^{" + std::to_string(run) + '}';
        } else {
            out += '^';
            out += static_cast<char>('0' + run);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// first / last selectors

SelectionError::SelectionError(int requested, int available)
    : std::out_of_range("requested element " + std::to_string(requested) + " of a color class with only " +
                        std::to_string(available) + " elements"),
      requested_(requested),
      available_(available) {}

namespace {

std::vector<int> positions_of(const Coloring& col, Color c, Interval y) {
    std::vector<int> out;
    const int lo = std::max(y.lo, 1);
    const int hi = std::min(y.hi, col.length());
    for (int p = lo; p <= hi; ++p) {
        if (col.at(p) == c) out.push_back(p);
    }
    return out;
}

void check_range(int i, int j) {
    if (i < 1 || j < i) {
        throw std::invalid_argument("selector range must satisfy 1 <= i <= j");
    }
}

}  // namespace

int nth_first(const Coloring& col, Color c, Interval y, int i) {
    check_range(i, i);
    const auto pos = positions_of(col, c, y);
    if (static_cast<int>(pos.size()) < i) throw SelectionError(i, static_cast<int>(pos.size()));
    return pos[static_cast<std::size_t>(i - 1)];
}

int nth_last(const Coloring& col, Color c, Interval y, int i) {
    check_range(i, i);
    const auto pos = positions_of(col, c, y);
    if (static_cast<int>(pos.size()) < i) throw SelectionError(i, static_cast<int>(pos.size()));
    return pos[pos.size() - static_cast<std::size_t>(i)];
}

IntSet first_range(const Coloring& col, Color c, Interval y, int i, int j) {
    check_range(i, j);
    const auto pos = positions_of(col, c, y);
    if (static_cast<int>(pos.size()) < j) throw SelectionError(j, static_cast<int>(pos.size()));
    return IntSet(std::vector<int>(pos.begin() + (i - 1), pos.begin() + j));
}

IntSet last_range(const Coloring& col, Color c, Interval y, int i, int j) {
    check_range(i, j);
    const auto pos = positions_of(col, c, y);
    const int n = static_cast<int>(pos.size());
    if (n < j) throw SelectionError(j, n);
    // i-th largest is pos[n - i], j-th largest is pos[n - j]
    return IntSet(std::vector<int>(pos.begin() + (n - j), pos.begin() + (n - i + 1)));
}

}  // namespace diam_ramsey
