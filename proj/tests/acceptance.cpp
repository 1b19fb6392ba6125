// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diam_ramsey/checker.hpp"
#include "diam_ramsey/constructions.hpp"
#include "diam_ramsey/lemmas.hpp"
#include "diam_ramsey/search.hpp"

using namespace diam_ramsey;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, const std::function<void(Verdict&)>& body) {
    Verdict v;
    v.detail << std::fixed << std::setprecision(3);
    const auto t0 = Clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!v.pass) ++failures;
    std::printf("[%s] %-4s %s (%.2fs)%s\n", v.pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), secs,
                v.detail.str().c_str());
    std::fflush(stdout);
}

struct Timed {
    SearchResult result;
    double seconds;
};

Timed timed_search(const ProblemSpec& spec, SearchConfig cfg = {}) {
    const auto t0 = Clock::now();
    auto result = compute_f(spec, cfg);
    return {std::move(result), std::chrono::duration<double>(Clock::now() - t0).count()};
}

void expect_value(Verdict& v, const ProblemSpec& spec, int expected, double limit_s, SearchConfig cfg = {}) {
    const auto t = timed_search(spec, cfg);
    v.detail << ' ' << to_string(spec) << '=';
    if (t.result.f_value) {
        v.detail << *t.result.f_value;
    } else {
        v.detail << '>' << t.result.n_cap;
    }
    v.detail << " in " << t.seconds << "s;";
    v.require(t.result.f_value == expected, to_string(spec) + " expected " + std::to_string(expected));
    v.require(t.seconds <= limit_s, to_string(spec) + " over " + std::to_string(limit_s) + "s");
    for (const auto& c : t.result.certificates) {
        v.require(c.coloring.length() == expected - 1 && !exists_solution(c.coloring, spec),
                  "certificate check for " + to_string(spec));
    }
}

std::vector<std::vector<Color>> certificate_set(const SearchResult& r) {
    std::vector<std::vector<Color>> out;
    for (const auto& c : r.certificates) out.push_back(c.coloring.to_vector());
    return out;
}

Coloring decode(std::uint64_t code, int n) {
    std::vector<Color> v(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) v[static_cast<std::size_t>(p)] = static_cast<Color>((code >> p) & 1U);
    return Coloring(v, 2);
}

}  // namespace

int main() {
    SearchConfig single;
    single.worker_count = 1;

    criterion("1", "f(m,m;2) = 5m-3 for m = 2..5, each under 60 s single-threaded", [&](Verdict& v) {
        for (int m = 2; m <= 5; ++m) expect_value(v, ProblemSpec({m, m}, 2), 5 * m - 3, 60.0, single);
    });

    criterion("2", "f(m,m,m;2) = 12, 20, 29 for m = 2, 3, 4", [&](Verdict& v) {
        expect_value(v, ProblemSpec({2, 2, 2}, 2), 12, 3600.0, single);
        expect_value(v, ProblemSpec({3, 3, 3}, 2), 20, 3600.0, single);
        SearchConfig eight;
        eight.worker_count = 8;
        expect_value(v, ProblemSpec({4, 4, 4}, 2), 29, 3600.0, eight);
    });

    criterion("2s", "stretch: f(5,5,5;2) = 38 by exhaustive search", [&](Verdict& v) {
        SearchConfig eight;
        eight.worker_count = 8;
        expect_value(v, ProblemSpec({5, 5, 5}, 2), 38, 3600.0, eight);
        const Coloring c = lower_bound_coloring(5);
        v.require(c.length() == 37 && verify_avoiding(c, ProblemSpec({5, 5, 5}, 2)).avoids,
                  "length-37 certificate via construct+verify");
    });

    criterion("3", "f(2,2;3) = 11 under 10 min", [&](Verdict& v) {
        expect_value(v, ProblemSpec({2, 2}, 3), 11, 600.0, single);
    });

    criterion("3s", "stretch: f(3,3;3) = 20 under 10 min", [&](Verdict& v) {
        expect_value(v, ProblemSpec({3, 3}, 3), 20, 600.0, single);
    });

    criterion("4", "f(2,2;4) = 15 and an avoiding coloring of length 14", [&](Verdict& v) {
        const ProblemSpec spec({2, 2}, 4);
        expect_value(v, spec, 15, 600.0, single);
        const auto found = enumerate_avoiding(spec, 14, 1, true);
        v.require(found.size() == 1 && !exists_solution(found.front().coloring, spec), "length-14 avoider");
        if (!found.empty()) v.detail << " length-14 avoider " << format_run_string(found.front().coloring) << ';';
    });

    criterion("5", "f*(2,2;2) = 9 under 60 s", [&](Verdict& v) {
        expect_value(v, ProblemSpec({2, 2}, 2, true), 9, 60.0, single);
    });

    criterion("6", "lower-bound colorings m = 2..500 avoid, extensions m = 2..200 do not, under 10 min",
              [&](Verdict& v) {
                  const auto t0 = Clock::now();
                  int bad = 0;
                  for (int m = 2; m <= 500; ++m) {
                      const ProblemSpec spec({m, m, m}, 2);
                      const Coloring c = lower_bound_coloring(m);
                      if (c.length() != formula_f_mmm2(m) - 1 || !verify_avoiding(c, spec).avoids) ++bad;
                      if (m > 200) continue;
                      for (Color x : {0, 1}) {
                          const auto rep = verify_avoiding(c.appended(x), spec);
                          if (rep.avoids || !is_valid_witness(c.appended(x), spec, *rep.witness)) ++bad;
                      }
                  }
                  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
                  v.detail << ' ' << bad << " failures;";
                  v.require(bad == 0, "construction checks");
                  v.require(secs <= 600.0, "runtime over 10 min");
              });

    criterion("7", "structure sweeps over all 2^(3m-2) colorings, m = 2..6, zero violations", [&](Verdict& v) {
        for (auto which : {StructureCheck::extremal_case, StructureCheck::small_diameter}) {
            for (int m = 2; m <= 6; ++m) {
                const auto rep = exhaustive_sweep(which, m, 1);
                v.require(rep.instances == (std::uint64_t{1} << (3 * m - 2)), "instance count");
                v.require(rep.violations == 0, rep.first_violation.value_or("violation"));
            }
            v.detail << ' ' << (which == StructureCheck::extremal_case ? "extremal-case" : "small-diameter") << " ok;";
        }
    });

    criterion("8", "exists_solution agrees with brute_force_exists (2^12, 2^14, 10^4 random at N=18)",
              [&](Verdict& v) {
                  std::uint64_t disagreements = 0;
                  std::uint64_t checked = 0;
                  auto compare = [&](const Coloring& c, const ProblemSpec& spec) {
                      ++checked;
                      const auto fast = exists_solution(c, spec);
                      const auto slow = brute_force_exists(c, spec);
                      if (fast.has_value() != slow.has_value()) ++disagreements;
                      if (fast && !is_valid_witness(c, spec, *fast)) ++disagreements;
                  };
                  const ProblemSpec three({2, 2, 2}, 2);
                  const ProblemSpec two({2, 2}, 2);
                  for (std::uint64_t code = 0; code < (1U << 12); ++code) compare(decode(code, 12), three);
                  for (std::uint64_t code = 0; code < (1U << 14); ++code) compare(decode(code, 14), two);
                  const std::vector<ProblemSpec> specs{ProblemSpec({2, 2}, 2), ProblemSpec({3, 3}, 2),
                                                       ProblemSpec({2, 2, 2}, 2)};
                  std::mt19937_64 rng(0x5eed);
                  for (int i = 0; i < 10000; ++i) {
                      compare(decode(rng() & ((1U << 18) - 1), 18), specs[static_cast<std::size_t>(i % 3)]);
                  }
                  v.detail << ' ' << checked << " instances, " << disagreements << " disagreements;";
                  v.require(disagreements == 0, "oracle disagreement");
              });

    criterion("9", "criterion-2 searches give identical values and certificates for 1, 4, 8 workers",
              [&](Verdict& v) {
                  for (int m = 2; m <= 5; ++m) {
                      const ProblemSpec spec({m, m, m}, 2);
                      std::optional<SearchResult> reference;
                      for (int workers : {1, 4, 8}) {
                          SearchConfig cfg;
                          cfg.worker_count = workers;
                          cfg.mode = CertificateMode::all_certificates;
                          const auto r = compute_f(spec, cfg);
                          if (!reference) {
                              reference = r;
                              v.detail << ' ' << to_string(spec) << ": " << r.certificates.size() << " certificates;";
                              continue;
                          }
                          v.require(r.f_value == reference->f_value, "value differs at " + std::to_string(workers));
                          v.require(certificate_set(r) == certificate_set(*reference),
                                    "certificates differ at " + std::to_string(workers));
                      }
                  }
              });

    std::printf("%s: %d criterion line(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
