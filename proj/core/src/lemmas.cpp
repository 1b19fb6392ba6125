#include "diam_ramsey/lemmas.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "diam_ramsey/checker.hpp"

namespace diam_ramsey {

namespace {

void check_domain(const Coloring& c, int m) {
    if (m < 2) throw std::domain_error("m must be at least 2");
    if (c.num_colors() != 2) throw std::domain_error("structure checks need a 2-coloring");
    if (c.length() != 3 * m - 2) {
        throw std::domain_error("expected a coloring of length " + std::to_string(3 * m - 2) + ", got " +
                                std::to_string(c.length()));
    }
}

// 1-based view with range helpers.
struct View {
    std::vector<Color> x;  // x[0] unused

    explicit View(const Coloring& c, bool flip) : x(static_cast<std::size_t>(c.length()) + 1, 0) {
        const auto v = c.to_vector();
        for (std::size_t i = 0; i < v.size(); ++i) x[i + 1] = flip ? static_cast<Color>(1 - v[i]) : v[i];
    }

    [[nodiscard]] int count(Color col, int lo, int hi) const {
        int k = 0;
        for (int p = std::max(lo, 1); p <= hi; ++p) k += x[static_cast<std::size_t>(p)] == col ? 1 : 0;
        return k;
    }
    [[nodiscard]] bool all(Color col, int lo, int hi) const { return count(col, lo, hi) == std::max(0, hi - lo + 1); }
    [[nodiscard]] Segment segment(int lo, int len) const {
        Segment s{lo, {}};
        for (int p = lo; p < lo + len; ++p) s.colors.push_back(x[static_cast<std::size_t>(p)]);
        return s;
    }
    // i-th smallest position of col in [1, hi], or 0.
    [[nodiscard]] int nth(Color col, int hi, int i) const {
        for (int p = 1; p <= hi; ++p) {
            if (x[static_cast<std::size_t>(p)] == col && --i == 0) return p;
        }
        return 0;
    }
};

struct CaseOne {
    int nu;
    int mu;
};

// All (nu, mu) for which R = 1^{m-1-beta-nu} H0 0 H1 1^{1+nu} with the
// prescribed counts in H0 and H1; the first-order pair comes first.
std::vector<CaseOne> case_one_decompositions(const View& v, int m, int alpha, int beta) {
    std::vector<CaseOne> out;
    const int len = 3 * m - 2 - beta;
    if (!(beta <= m - 2 && v.count(0, 1, len) >= m)) return out;
    for (int nu = 0; nu <= m - 1 - beta; ++nu) {
        for (int mu = 0; mu <= m - 1 - alpha; ++mu) {
            if (!(beta == m - 1 - alpha || (nu == 0 && mu == 0))) continue;
            const int lead = m - 1 - beta - nu;
            const int len0 = m - 1 + beta - mu;
            const int len1 = m - 2 - beta + mu;
            if (lead < 0 || len0 < 0 || len1 < 0) continue;
            const int h0 = lead + 1;
            const int zero_at = h0 + len0;
            const int h1 = zero_at + 1;
            const int tail = h1 + len1;
            if (tail + nu != len) continue;
            if (!v.all(1, 1, lead)) continue;
            if (v.count(1, h0, zero_at - 1) != m - 1 - alpha - mu) continue;
            if (v.count(0, h0, zero_at - 1) != alpha + beta) continue;
            if (v.x[static_cast<std::size_t>(zero_at)] != 0) continue;
            if (v.count(1, h1, tail - 1) != mu || v.count(0, h1, tail - 1) != m - 2 - beta) continue;
            if (!v.all(1, tail, len)) continue;
            out.push_back({nu, mu});
        }
    }
    return out;
}

bool case_two(const View& v, int m, int alpha, int beta) {
    const int len = 3 * m - 2 - beta;
    if (!(beta < m - 1 - alpha || beta == m - 1)) return false;
    const int lead = m - alpha - beta - 1;
    const int len2 = m - 2 + beta + alpha;
    if (lead < 0 || len2 < 0) return false;
    if (!v.all(0, 1, lead)) return false;
    if (v.x[static_cast<std::size_t>(lead + 1)] != 1) return false;
    const int h2 = lead + 2;
    const int tail = h2 + len2;
    if (tail + (m - beta) - 1 != len) return false;
    if (!v.all(1, tail, len)) return false;
    if (beta <= m - 2 && v.count(0, 1, len) < m) return false;
    if (alpha > 0 && !(beta >= 1 && v.count(1, h2, tail - 1) == beta - 1)) return false;
    return true;
}

bool case_three(const View& v, int m, int alpha, int beta) {
    const int len = 3 * m - 2 - beta;
    if (beta < alpha) return false;
    if (v.count(0, 1, len) >= m) return false;
    const int first = v.nth(1, len, 1);
    const int mth = v.nth(1, len, m);
    if (first == 0 || mth == 0) return false;
    if (mth > 3 * m - 3 - beta - alpha) return false;
    return v.count(0, first, mth) <= beta;
}

std::string render(const Coloring& c) { return format_run_string(c); }

}  // namespace

std::string to_string(ExtremalCase k) {
    switch (k) {
        case ExtremalCase::one: return "i";
        case ExtremalCase::two: return "ii";
        case ExtremalCase::three: return "iii";
    }
    return "?";
}

LemmaViolation::LemmaViolation(const std::string& what, std::string coloring)
    : std::runtime_error("LEMMA VIOLATION: " + what + " on " + coloring), coloring_(std::move(coloring)) {}

std::optional<ExtremalB1> find_extremal_b1(const Coloring& c, int m) {
    check_domain(c, m);
    const auto hit = min_max_feasible(c, 1, 2 * m - 2, m);
    if (!hit) return std::nullopt;
    const Color col = c.at(hit->end);
    auto set = set_with_ends(c, col, hit->end - hit->diam, hit->end, m);
    if (!set) throw std::logic_error("extremal set endpoints do not admit an m-set");
    return ExtremalB1{std::move(*set), col, 3 * m - 2 - hit->end, hit->diam - (2 * m - 2)};
}

ExtremalCaseMatch classify_extremal_case(const Coloring& c, const ExtremalB1& b1, int m) {
    check_domain(c, m);
    const int alpha = b1.alpha;
    const int beta = b1.beta;
    if (beta < 0 || beta > m - 1 || alpha < 0 || alpha > m - 1 - beta) {
        throw LemmaViolation("extremal parameters out of range (alpha=" + std::to_string(alpha) +
                                 ", beta=" + std::to_string(beta) + ")",
                             render(c));
    }
    const View v(c, b1.color == 0);
    ExtremalCaseMatch out;
    out.relabeled = b1.color == 0;

    const auto ones = case_one_decompositions(v, m, alpha, beta);
    if (!ones.empty()) {
        out.mask |= 1U << 0;
        out.nu = ones.front().nu;
        out.mu = ones.front().mu;
        out.min_mu = std::min_element(ones.begin(), ones.end(), [](auto& a, auto& b) { return a.mu < b.mu; })->mu;
        const int h0 = m - beta - out.nu;
        const int len0 = m - 1 + beta - out.mu;
        out.h0 = v.segment(h0, len0);
        out.h1 = v.segment(h0 + len0 + 1, m - 2 - beta + out.mu);
    }
    if (case_two(v, m, alpha, beta)) {
        out.mask |= 1U << 1;
        out.h2 = v.segment(m - alpha - beta + 1, m - 2 + beta + alpha);
    }
    if (case_three(v, m, alpha, beta)) out.mask |= 1U << 2;

    if (out.mask == 0) {
        throw LemmaViolation("no structural case holds (alpha=" + std::to_string(alpha) +
                                 ", beta=" + std::to_string(beta) + ")",
                             render(c));
    }
    for (unsigned k = 0; k < 3; ++k) {
        if ((out.mask >> k) & 1U) {
            out.tag = static_cast<ExtremalCase>(k);
            break;
        }
    }
    return out;
}

std::optional<IntSet> tightest_set(const Coloring& c, int hi, int m) {
    hi = std::min(hi, c.length());
    std::optional<IntSet> best;
    int best_diam = 0;
    for (int b = 1; b <= hi; ++b) {
        const Color col = c.at(b);
        // walk back to the (m-1)-th earlier position of the same color
        int seen = 1;
        int a = b;
        for (int p = b - 1; p >= 1 && seen < m; --p) {
            if (c.at(p) == col) {
                ++seen;
                a = p;
            }
        }
        if (seen < m) continue;
        if (!best || b - a < best_diam) {
            best = set_with_ends(c, col, a, b, m);
            best_diam = b - a;
        }
    }
    return best;
}

SmallDiameterFinding find_small_diameter_sets(const Coloring& c, int m) {
    check_domain(c, m);
    SmallDiameterFinding out;
    const auto b1 = find_extremal_b1(c, m);
    if (!b1) {
        out.branch = SmallDiameterFinding::Branch::no_big_set;
        // two monochromatic m-intervals, the second after the first
        auto mono_interval = [&](int from) -> std::optional<IntSet> {
            for (int lo = from; lo + m - 1 <= c.length(); ++lo) {
                const Color col = c.at(lo);
                if (c.count(col, lo, lo + m - 1) == m) {
                    std::vector<int> v(static_cast<std::size_t>(m));
                    for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(k)] = lo + k;
                    return IntSet(std::move(v));
                }
            }
            return std::nullopt;
        };
        out.d1 = mono_interval(1);
        if (out.d1) out.d2 = mono_interval(out.d1->max() + 1);
        if (!out.d1 || !out.d2) {
            throw LemmaViolation("no pair of consecutive monochromatic m-intervals", render(c));
        }
        return out;
    }

    out.branch = SmallDiameterFinding::Branch::big_set;
    out.b1 = b1;
    out.match = classify_extremal_case(c, *b1, m);
    const int alpha = b1->alpha;
    const int beta = b1->beta;
    const auto& match = *out.match;

    out.a1_bound = 2 * m - 2 - alpha;
    out.a2_bound = m + (m - 1 + beta) / 2 - 1;
    if (match.holds(ExtremalCase::three) || (alpha >= 1 && match.holds(ExtremalCase::two))) {
        out.a1_bound = std::min(out.a1_bound, m - 1 + beta);
    }
    if (match.holds(ExtremalCase::one)) out.a1_bound = std::min(out.a1_bound, 2 * m - 2 - alpha - match.min_mu);

    const auto a = tightest_set(c, 3 * m - 2 - alpha - beta, m);
    if (!a) throw LemmaViolation("no monochromatic m-set in [1, 3m-2-alpha-beta]", render(c));
    if (diam(*a) > out.a1_bound) {
        throw LemmaViolation("smallest diameter " + std::to_string(diam(*a)) + " exceeds the first-set bound " +
                                 std::to_string(out.a1_bound),
                             render(c));
    }
    if (diam(*a) > out.a2_bound) {
        throw LemmaViolation("smallest diameter " + std::to_string(diam(*a)) + " exceeds the second-set bound " +
                                 std::to_string(out.a2_bound),
                             render(c));
    }
    out.a1 = a;
    out.a2 = a;
    if (match.holds(ExtremalCase::one)) {
        out.a3_bound = m + alpha + beta - 1;
        out.a3 = tightest_set(c, m + alpha + beta, m);
        if (!out.a3 || diam(*out.a3) > out.a3_bound) {
            throw LemmaViolation("no monochromatic m-set in [1, m+alpha+beta] with diameter <= " +
                                     std::to_string(out.a3_bound),
                                 render(c));
        }
    }
    return out;
}

namespace {

void sweep_range(StructureCheck which, int m, std::uint64_t lo, std::uint64_t hi, SweepReport& rep) {
    const int n = 3 * m - 2;
    std::vector<Color> v(static_cast<std::size_t>(n));
    for (std::uint64_t code = lo; code < hi; ++code) {
        // position 1 is the most significant bit, so codes run in lexicographic order
        for (int p = 0; p < n; ++p) v[static_cast<std::size_t>(p)] = static_cast<Color>((code >> (n - 1 - p)) & 1U);
        const Coloring c(v, 2);
        ++rep.instances;
        try {
            if (which == StructureCheck::extremal_case) {
                const auto b1 = find_extremal_b1(c, m);
                if (!b1) {
                    ++rep.without_b1;
                    continue;
                }
                const auto match = classify_extremal_case(c, *b1, m);
                ++rep.first_case[static_cast<std::size_t>(match.tag)];
                ++rep.case_masks[match.mask];
            } else {
                const auto f = find_small_diameter_sets(c, m);
                if (f.branch == SmallDiameterFinding::Branch::no_big_set) {
                    ++rep.no_big_set;
                    ++rep.without_b1;
                } else {
                    ++rep.big_set;
                    ++rep.first_case[static_cast<std::size_t>(f.match->tag)];
                    ++rep.case_masks[f.match->mask];
                }
            }
        } catch (const LemmaViolation& e) {
            ++rep.violations;
            if (!rep.first_violation) rep.first_violation = e.what();
        }
    }
}

}  // namespace

SweepReport exhaustive_sweep(StructureCheck which, int m, int workers) {
    if (m < 2 || 3 * m - 2 > 40) throw std::domain_error("exhaustive sweeps support 2 <= m <= 14");
    workers = std::max(1, workers);
    const std::uint64_t total = std::uint64_t{1} << (3 * m - 2);
    std::vector<SweepReport> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
        auto& part = parts[static_cast<std::size_t>(w)];
        if (workers == 1) {
            sweep_range(which, m, lo, hi, part);
        } else {
            threads.emplace_back([=, &part] { sweep_range(which, m, lo, hi, part); });
        }
    }
    for (auto& th : threads) th.join();

    SweepReport rep;
    rep.m = m;
    for (const auto& p : parts) {
        rep.instances += p.instances;
        rep.without_b1 += p.without_b1;
        rep.no_big_set += p.no_big_set;
        rep.big_set += p.big_set;
        rep.violations += p.violations;
        for (std::size_t k = 0; k < rep.first_case.size(); ++k) rep.first_case[k] += p.first_case[k];
        for (std::size_t k = 0; k < rep.case_masks.size(); ++k) rep.case_masks[k] += p.case_masks[k];
        if (!rep.first_violation && p.first_violation) rep.first_violation = p.first_violation;
    }
    return rep;
}

}  // namespace diam_ramsey
