#include "diam_ramsey/checker.hpp"

#include <algorithm>
#include <limits>

namespace diam_ramsey {

ProblemSpec::ProblemSpec(std::vector<int> sizes, int num_colors, bool strict)
    : sizes_(std::move(sizes)), num_colors_(num_colors), strict_(strict) {
    if (sizes_.empty()) throw std::invalid_argument("a problem needs at least one set size");
    for (int m : sizes_) {
        if (m < 2) throw std::invalid_argument("set sizes must be at least 2, got " + std::to_string(m));
    }
    if (num_colors_ < 2 || num_colors_ > kMaxColors) {
        throw std::invalid_argument("number of colors must be in [2, " + std::to_string(kMaxColors) + "]");
    }
}

std::optional<int> ProblemSpec::diagonal_size() const {
    if (std::adjacent_find(sizes_.begin(), sizes_.end(), std::not_equal_to<>()) != sizes_.end()) {
        return std::nullopt;
    }
    return sizes_.front();
}

std::string to_string(const ProblemSpec& spec) {
    std::string out = spec.strict() ? "*(" : "(";
    for (int i = 0; i < spec.t(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(spec.size(i));
    }
    out += ';' + std::to_string(spec.num_colors()) + ')';
    return out;
}

bool is_valid_witness(const Coloring& c, const ProblemSpec& spec, const Witness& w) {
    if (static_cast<int>(w.chain.size()) != spec.t() || w.colors.size() != w.chain.size()) return false;
    for (int i = 0; i < spec.t(); ++i) {
        const auto& set = w.chain[static_cast<std::size_t>(i)];
        if (static_cast<int>(set.size()) != spec.size(i)) return false;
        for (int x : set) {
            if (x < 1 || x > c.length() || c.at(x) != w.colors[static_cast<std::size_t>(i)]) return false;
        }
        if (i > 0) {
            const auto& prev = w.chain[static_cast<std::size_t>(i - 1)];
            if (!precedes(prev, set)) return false;
            if (spec.strict() ? !(diam(prev) < diam(set)) : !(diam(prev) <= diam(set))) return false;
        }
    }
    return true;
}

namespace {

constexpr int kNone = -1;
constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

// Per-color occurrence lists and the rank of each position in its list.
struct ColorIndex {
    std::vector<Color> color;  // 1-based, color[0] unused
    std::vector<int> rank;     // 1-based
    std::vector<std::vector<int>> occ;

    explicit ColorIndex(const Coloring& c)
        : color(static_cast<std::size_t>(c.length()) + 1, 0),
          rank(static_cast<std::size_t>(c.length()) + 1, 0),
          occ(static_cast<std::size_t>(c.num_colors())) {
        const auto v = c.to_vector();
        for (int p = 1; p <= c.length(); ++p) {
            const Color col = v[static_cast<std::size_t>(p - 1)];
            color[static_cast<std::size_t>(p)] = col;
            rank[static_cast<std::size_t>(p)] = static_cast<int>(occ[col].size());
            occ[col].push_back(p);
        }
    }

    // Largest position of color col that is <= bound, or kNone.
    [[nodiscard]] int last_at_most(Color col, int bound) const {
        const auto& list = occ[col];
        auto it = std::upper_bound(list.begin(), list.end(), bound);
        return it == list.begin() ? kNone : *std::prev(it);
    }
};

// Smallest (max, diam) of a monochromatic m-set B with min(B) > after,
// lo_diam <= diam(B), and, when ceiling is given, diam(B) + slack <= ceiling(max(B)).
template <typename Ceiling>
std::optional<MinMaxHit> first_feasible(const ColorIndex& idx, int n, int after, int lo_diam, int m,
                                        Ceiling&& ceiling, int slack) {
    lo_diam = std::max(lo_diam, 0);
    for (int b = after + 1; b <= n; ++b) {
        const Color col = idx.color[static_cast<std::size_t>(b)];
        const int r = idx.rank[static_cast<std::size_t>(b)];
        if (r + 1 < m) continue;
        const int widest_min = idx.occ[col][static_cast<std::size_t>(r - (m - 1))];
        const int a = idx.last_at_most(col, std::min(widest_min, b - lo_diam));
        if (a == kNone || a <= after) continue;
        if (b - a + slack > ceiling(b)) continue;
        return MinMaxHit{b, b - a};
    }
    return std::nullopt;
}

IntSet set_from_index(const ColorIndex& idx, int a, int b, int m) {
    const Color col = idx.color[static_cast<std::size_t>(a)];
    const int ra = idx.rank[static_cast<std::size_t>(a)];
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m - 1; ++k) out.push_back(idx.occ[col][static_cast<std::size_t>(ra + k)]);
    out.push_back(b);
    return IntSet(std::move(out));
}

}  // namespace

std::optional<IntSet> set_with_ends(const Coloring& c, Color col, int lo, int hi, int m) {
    if (m < 2 || lo < 1 || hi > c.length() || lo >= hi) return std::nullopt;
    if (c.at(lo) != col || c.at(hi) != col || c.count(col, lo, hi) < m) return std::nullopt;
    std::vector<int> out{lo};
    for (int p = lo + 1; p < hi && static_cast<int>(out.size()) < m - 1; ++p) {
        if (c.at(p) == col) out.push_back(p);
    }
    out.push_back(hi);
    return IntSet(std::move(out));
}

std::optional<MinMaxHit> min_max_feasible(const Coloring& c, int start, int min_diam, int m) {
    if (start < 1 || start > c.length() || m < 2) return std::nullopt;
    const ColorIndex idx(c);
    return first_feasible(idx, c.length(), start - 1, min_diam, m, [](int) { return kUnbounded; }, 0);
}

std::optional<Witness> exists_solution(const Coloring& c, const ProblemSpec& spec) {
    if (c.num_colors() != spec.num_colors()) {
        throw std::invalid_argument("coloring palette does not match the problem");
    }
    const int n = c.length();
    const int t = spec.t();
    const int slack = spec.strict() ? 1 : 0;
    const ColorIndex idx(c);

    // best[s][e] = largest diam(B_s) over completable chains B_s..B_t with
    // min(B_s) > e, or kNone. Nonincreasing in e. best[t] is unbounded.
    std::vector<std::vector<int>> best(static_cast<std::size_t>(t) + 1);
    best[static_cast<std::size_t>(t)].assign(static_cast<std::size_t>(n) + 1, kUnbounded);
    for (int s = t - 1; s >= 0; --s) {
        const int m = spec.size(s);
        const auto& next = best[static_cast<std::size_t>(s) + 1];
        const int need = s + 1 < t ? slack : 0;
        auto& cur = best[static_cast<std::size_t>(s)];
        cur.assign(static_cast<std::size_t>(n) + 1, kNone);
        for (int a = n; a >= 1; --a) {
            int value = kNone;
            const Color col = idx.color[static_cast<std::size_t>(a)];
            const auto& list = idx.occ[col];
            const int lo = idx.rank[static_cast<std::size_t>(a)] + m - 1;
            // b - a + need - next[b] is increasing along the list, so the
            // admissible ends form a prefix; find its last element.
            int l = lo;
            int h = static_cast<int>(list.size()) - 1;
            while (l <= h) {
                const int mid = l + (h - l) / 2;
                const int b = list[static_cast<std::size_t>(mid)];
                const int ceiling = next[static_cast<std::size_t>(b)];
                if (ceiling != kNone && b - a + need <= ceiling) {
                    value = b - a;
                    l = mid + 1;
                } else {
                    h = mid - 1;
                }
            }
            // cur[e] covers min > e, so a contributes to cur[0..a-1].
            const int above = a < n ? cur[static_cast<std::size_t>(a)] : kNone;
            cur[static_cast<std::size_t>(a - 1)] = std::max(value, above);
        }
    }
    if (best[0][0] == kNone) return std::nullopt;

    Witness w;
    int after = 0;
    int lo_diam = 0;
    for (int s = 0; s < t; ++s) {
        const int m = spec.size(s);
        const auto& next = best[static_cast<std::size_t>(s) + 1];
        const int need = s + 1 < t ? slack : 0;
        auto ceiling = [&next](int b) { return next[static_cast<std::size_t>(b)]; };
        const auto hit = first_feasible(idx, n, after, lo_diam, m, ceiling, need);
        if (!hit) throw std::logic_error("canonical witness extraction failed after a positive check");
        const int a = hit->end - hit->diam;
        w.chain.push_back(set_from_index(idx, a, hit->end, m));
        w.colors.push_back(idx.color[static_cast<std::size_t>(hit->end)]);
        after = hit->end;
        lo_diam = hit->diam + slack;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Reference oracle

OracleCapExceeded::OracleCapExceeded(int length, int cap)
    : std::length_error("brute-force oracle refuses length " + std::to_string(length) + " (cap " +
                        std::to_string(cap) + ")") {}

namespace {

struct OracleSearch {
    const std::vector<Color>& v;  // 0-based copy of the coloring
    const ProblemSpec& spec;
    std::vector<IntSet> chain;
    std::vector<Color> colors;

    int n() const { return static_cast<int>(v.size()); }
    Color at(int p) const { return v[static_cast<std::size_t>(p - 1)]; }

    bool run(int stage, int after, int prev_diam) {
        if (stage == spec.t()) return true;
        const int m = spec.size(stage);
        for (int a = after + 1; a <= n(); ++a) {
            for (int b = a + 1; b <= n(); ++b) {
                if (at(a) != at(b)) continue;
                const int d = b - a;
                if (stage > 0 && (spec.strict() ? d <= prev_diam : d < prev_diam)) continue;
                std::vector<int> members{a};
                for (int p = a + 1; p < b && static_cast<int>(members.size()) < m - 1; ++p) {
                    if (at(p) == at(a)) members.push_back(p);
                }
                if (static_cast<int>(members.size()) != m - 1) continue;
                members.push_back(b);
                chain.emplace_back(members);
                colors.push_back(at(a));
                if (run(stage + 1, b, d)) return true;
                chain.pop_back();
                colors.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<Witness> brute_force_exists(const Coloring& c, const ProblemSpec& spec, int cap) {
    if (c.length() > cap) throw OracleCapExceeded(c.length(), cap);
    if (c.num_colors() != spec.num_colors()) {
        throw std::invalid_argument("coloring palette does not match the problem");
    }
    const auto v = c.to_vector();
    OracleSearch search{v, spec, {}, {}};
    if (!search.run(0, 0, 0)) return std::nullopt;
    return Witness{std::move(search.chain), std::move(search.colors)};
}

// ---------------------------------------------------------------------------
// Incremental checker

IncrementalChecker::IncrementalChecker(ProblemSpec spec, int capacity)
    : spec_(std::move(spec)), capacity_(capacity) {
    if (capacity < 1) throw std::invalid_argument("checker capacity must be positive");
    colors_.reserve(static_cast<std::size_t>(capacity));
    occurrences_.resize(static_cast<std::size_t>(spec_.num_colors()));
    for (auto& o : occurrences_) o.reserve(static_cast<std::size_t>(capacity));
    const auto stages = static_cast<std::size_t>(spec_.t() - 1);
    reach_.assign(stages, std::vector<int>(static_cast<std::size_t>(capacity), kUnreachable));
    first_finite_.assign(stages, capacity);
    undo_.reserve(stages * static_cast<std::size_t>(capacity));
}

int IncrementalChecker::reach(int stage, int d) const {
    if (stage < 0) return 0;
    if (d < 0) return kUnreachable;
    const auto& row = reach_[static_cast<std::size_t>(stage)];
    return row[static_cast<std::size_t>(std::min(d, capacity_ - 1))];
}

// Smallest diameter of a set for `stage` that ends at the newest position and
// extends some valid partial chain; -1 when there is none.
int IncrementalChecker::smallest_new_diameter(int stage, Color c) const {
    const auto& occ = occurrences_[c];
    const int m = spec_.size(stage);
    const int cnt = static_cast<int>(occ.size());
    if (cnt < m) return -1;
    const int p = length();
    const int shift = spec_.strict() ? 1 : 0;
    for (int i = cnt - m; i >= 0; --i) {
        const int a = occ[static_cast<std::size_t>(i)];
        const int d = p - a;
        if (a > reach(stage - 1, d - (stage > 0 ? shift : 0))) return d;
    }
    return -1;
}

bool IncrementalChecker::push(Color c) {
    if (solved_) throw std::logic_error("cannot extend a prefix that already contains a solution");
    if (length() >= capacity_) throw std::length_error("incremental checker capacity exceeded");
    if (c >= spec_.num_colors()) throw std::invalid_argument("color outside the palette");

    colors_.push_back(c);
    occurrences_[c].push_back(length());
    const int p = length();
    const int t = spec_.t();

    // Stages only read the row of the previous stage at entries below p, and
    // a new entry of value p never admits a later set, so the order of
    // updates is immaterial.
    for (int s = 0; s + 1 < t; ++s) {
        undo_.push_back(first_finite_[static_cast<std::size_t>(s)]);
    }
    for (int s = 0; s + 1 < t; ++s) {
        const int d = smallest_new_diameter(s, c);
        if (d < 0) continue;
        auto& first = first_finite_[static_cast<std::size_t>(s)];
        auto& row = reach_[static_cast<std::size_t>(s)];
        for (int x = d; x < first; ++x) row[static_cast<std::size_t>(x)] = p;
        first = std::min(first, d);
    }
    solved_ = smallest_new_diameter(t - 1, c) >= 0;
    return solved_;
}

void IncrementalChecker::pop() {
    if (colors_.empty()) throw std::logic_error("pop on an empty prefix");
    const int t = spec_.t();
    for (int s = t - 2; s >= 0; --s) {
        const int old = undo_.back();
        undo_.pop_back();
        auto& first = first_finite_[static_cast<std::size_t>(s)];
        auto& row = reach_[static_cast<std::size_t>(s)];
        for (int x = first; x < old; ++x) row[static_cast<std::size_t>(x)] = kUnreachable;
        first = old;
    }
    occurrences_[colors_.back()].pop_back();
    colors_.pop_back();
    solved_ = false;
}

}  // namespace diam_ramsey
