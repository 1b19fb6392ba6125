#include "diam_ramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>

namespace diam_ramsey {

FormulaContradicted::FormulaContradicted(const ProblemSpec& spec, int expected, const SearchResult& result)
    : std::runtime_error("FORMULA CONTRADICTED for " + to_string(spec) + ": closed form gives " +
                         std::to_string(expected) + ", search " +
                         (result.f_value ? "found f = " + std::to_string(*result.f_value)
                                         : "found an avoiding coloring of length " + std::to_string(result.n_cap))),
      expected_(expected),
      result_(result) {}

SearchAborted::SearchAborted(SearchStats partial)
    : std::runtime_error("search aborted after " + std::to_string(partial.nodes_expanded) +
                         " nodes (node budget exhausted)"),
      partial_(partial) {}

int formula_f_mmm2(int m) {
    if (m < 2) throw std::domain_error("f(m,m,m;2) is defined for m >= 2, got " + std::to_string(m));
    const int delta = (m == 2 || m == 5) ? 1 : 0;
    return 8 * m - 5 + (2 * m - 2) / 3 + delta;
}

std::optional<int> known_value(const ProblemSpec& spec) {
    const auto m = spec.diagonal_size();
    if (!m) return std::nullopt;
    const int r = spec.num_colors();
    if (spec.strict()) {
        // *(2,2;2^k) = 4 * 2^k + 1
        if (spec.t() == 2 && *m == 2 && (r & (r - 1)) == 0) return 4 * r + 1;
        return std::nullopt;
    }
    if (spec.t() == 2) {
        switch (r) {
            case 2: return 5 * *m - 3;
            case 3: return 9 * *m - 7;
            case 4: return 12 * *m - 9;
            default: return std::nullopt;
        }
    }
    if (spec.t() == 3 && r == 2) return formula_f_mmm2(*m);
    return std::nullopt;
}

std::uint64_t orbit_size(int used, int num_colors) {
    std::uint64_t out = 1;
    for (int k = 0; k < used; ++k) {
        const auto factor = static_cast<std::uint64_t>(num_colors - k);
        if (out > std::numeric_limits<std::uint64_t>::max() / factor) return std::numeric_limits<std::uint64_t>::max();
        out *= factor;
    }
    return out;
}

namespace {

struct SharedState {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<int> best_depth{0};
    std::atomic<bool> abort{false};
    std::uint64_t budget = 0;
};

// Depth-first walker over avoiding prefixes. Every node it visits is an
// avoiding coloring; it keeps the longest ones seen.
class Explorer {
public:
    Explorer(const ProblemSpec& spec, const SearchConfig& config, int cap, SharedState& shared)
        : spec_(spec), config_(config), cap_(cap), checker_(spec, cap), shared_(shared) {}

    // Walk below the current prefix. When stop_depth is reached the prefix is
    // handed to on_stop instead of being visited.
    template <typename OnStop>
    void walk(int max_used, int stop_depth, OnStop&& on_stop) {
        if (checker_.length() == stop_depth) {
            on_stop(checker_.colors(), max_used);
            return;
        }
        visit();
        if (checker_.length() == cap_ || shared_.abort.load(std::memory_order_relaxed)) return;
        const int top = config_.symmetry_reduction ? std::min(spec_.num_colors() - 1, max_used + 1)
                                                   : spec_.num_colors() - 1;
        for (int c = 0; c <= top; ++c) {
            if (!checker_.push(static_cast<Color>(c))) walk(std::max(max_used, c), stop_depth, on_stop);
            checker_.pop();
        }
    }

    void run_task(const std::vector<Color>& prefix, int max_used) {
        for (Color c : prefix) {
            if (checker_.push(c)) throw std::logic_error("work item prefix contains a solution");
        }
        walk(max_used, -1, [](const std::vector<Color>&, int) {});
        for (std::size_t i = 0; i < prefix.size(); ++i) checker_.pop();
    }

    void flush_nodes() {
        if (pending_ != 0) {
            shared_.nodes.fetch_add(pending_, std::memory_order_relaxed);
            pending_ = 0;
        }
    }

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
    [[nodiscard]] int best_length() const noexcept { return best_length_; }
    [[nodiscard]] std::vector<std::vector<Color>>& best() noexcept { return best_; }

private:
    void visit() {
        ++nodes_;
        if (++pending_ == 4096) {
            const auto total = shared_.nodes.fetch_add(pending_, std::memory_order_relaxed) + pending_;
            pending_ = 0;
            if (shared_.budget != 0 && total > shared_.budget) shared_.abort.store(true);
        }
        const int len = checker_.length();
        if (len > best_length_) {
            best_length_ = len;
            best_.clear();
            int seen = shared_.best_depth.load(std::memory_order_relaxed);
            while (seen < len && !shared_.best_depth.compare_exchange_weak(seen, len)) {
            }
        }
        if (len == best_length_ && len > 0) {
            switch (config_.mode) {
                case CertificateMode::value_only: break;
                case CertificateMode::one_certificate:
                    if (best_.empty()) best_.push_back(checker_.colors());
                    break;
                case CertificateMode::all_certificates: best_.push_back(checker_.colors()); break;
            }
        }
    }

    const ProblemSpec& spec_;
    const SearchConfig& config_;
    int cap_;
    IncrementalChecker checker_;
    SharedState& shared_;
    std::uint64_t nodes_ = 0;
    std::uint64_t pending_ = 0;
    int best_length_ = 0;
    std::vector<std::vector<Color>> best_;
};

struct WorkItem {
    std::vector<Color> prefix;
    int max_used;
};

int used_colors(const std::vector<Color>& v) {
    std::vector<bool> seen(kMaxColors, false);
    int used = 0;
    for (Color c : v) {
        if (!seen[c]) {
            seen[c] = true;
            ++used;
        }
    }
    return used;
}

}  // namespace

SearchResult compute_f(const ProblemSpec& spec, const SearchConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const auto known = known_value(spec);
    int cap = config.n_cap;
    if (cap == 0) {
        if (!known) {
            throw std::invalid_argument("no closed form for " + to_string(spec) + "; an explicit n_cap is required");
        }
        cap = *known + 2;
    }
    if (cap < 1) throw std::invalid_argument("n_cap must be at least 1");
    if (config.worker_count < 1) throw std::invalid_argument("worker_count must be at least 1");

    SharedState shared;
    shared.budget = config.node_budget;

    // Sequential frontier expansion down to the split depth.
    const int split = std::clamp(config.split_depth, 0, cap);
    std::vector<WorkItem> items;
    Explorer front(spec, config, cap, shared);
    front.walk(-1, split == 0 ? -1 : split, [&items](const std::vector<Color>& prefix, int max_used) {
        items.push_back({prefix, max_used});
    });
    if (split == 0) items.clear();
    front.flush_nodes();

    const int workers = std::max(1, std::min<int>(config.worker_count, static_cast<int>(items.size())));
    std::vector<std::unique_ptr<Explorer>> explorers;
    for (int w = 0; w < workers; ++w) explorers.push_back(std::make_unique<Explorer>(spec, config, cap, shared));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](Explorer& ex) {
        try {
            for (;;) {
                if (shared.abort.load()) break;
                const std::size_t i = next.fetch_add(1);
                if (i >= items.size()) break;
                ex.run_task(items[i].prefix, items[i].max_used);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            shared.abort.store(true);
        }
        ex.flush_nodes();
    };
    if (workers == 1) {
        work(*explorers.front());
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) threads.emplace_back(work, std::ref(*explorers[static_cast<std::size_t>(w)]));
        for (auto& th : threads) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    SearchResult result;
    result.n_cap = cap;
    result.stats.worker_count = workers;
    result.stats.nodes_expanded = front.nodes();
    int best = front.best_length();
    for (const auto& ex : explorers) {
        result.stats.nodes_expanded += ex->nodes();
        best = std::max(best, ex->best_length());
    }
    result.stats.max_depth = best;
    result.stats.wall_time = std::chrono::steady_clock::now() - start;
    if (shared.abort.load()) throw SearchAborted(result.stats);

    std::vector<std::vector<Color>> found;
    auto gather = [&](Explorer& ex) {
        if (ex.best_length() != best) return;
        for (auto& v : ex.best()) found.push_back(std::move(v));
    };
    gather(front);
    for (auto& ex : explorers) gather(*ex);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (config.mode == CertificateMode::one_certificate && found.size() > 1) found.resize(1);

    for (const auto& v : found) {
        Certificate cert{Coloring(v, spec.num_colors()), 1};
        if (config.symmetry_reduction) cert.orbit_size = orbit_size(used_colors(v), spec.num_colors());
        // Every reported certificate is re-checked with the full checker.
        if (exists_solution(cert.coloring, spec)) {
            throw std::logic_error("incremental search reported a coloring that contains a solution");
        }
        result.certificates.push_back(std::move(cert));
    }

    if (best < cap) result.f_value = best + 1;
    if (config.check_known_value && known) {
        const bool contradicted = result.f_value ? *result.f_value != *known : cap >= *known;
        if (contradicted) throw FormulaContradicted(spec, *known, result);
    }
    return result;
}

std::vector<Certificate> enumerate_avoiding(const ProblemSpec& spec, int length, std::size_t limit,
                                            bool symmetry_reduction) {
    if (length < 1) throw std::invalid_argument("length must be at least 1");
    std::vector<Certificate> out;
    if (limit == 0) return out;
    IncrementalChecker checker(spec, length);
    const int r = spec.num_colors();

    auto rec = [&](auto&& self, int max_used) -> bool {
        if (checker.length() == length) {
            out.push_back({Coloring(checker.colors(), r), symmetry_reduction ? orbit_size(max_used + 1, r) : 1});
            return out.size() < limit;
        }
        const int top = symmetry_reduction ? std::min(r - 1, max_used + 1) : r - 1;
        for (int c = 0; c <= top; ++c) {
            bool keep_going = true;
            if (!checker.push(static_cast<Color>(c))) keep_going = self(self, std::max(max_used, c));
            checker.pop();
            if (!keep_going) return false;
        }
        return true;
    };
    rec(rec, -1);
    return out;
}

}  // namespace diam_ramsey
