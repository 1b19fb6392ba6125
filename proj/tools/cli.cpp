#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"

namespace diam_ramsey::cli {

namespace {

using report::json;

struct ProblemFlags {
    std::string sizes;
    int colors = 2;
    bool strict = false;

    ProblemSpec spec() const { return ProblemSpec(report::parse_sizes(sizes), colors, strict); }
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& flags, bool with_strict = true) {
    cmd->add_option("--sizes", flags.sizes, "set sizes m1,m2,...")->required();
    cmd->add_option("--colors", flags.colors, "number of colors r")->check(CLI::Range(2, kMaxColors));
    if (with_strict) cmd->add_flag("--strict", flags.strict, "strictly increasing diameters");
}

int default_workers() {
    if (const char* env = std::getenv("DIAM_RAMSEY_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w >= 1) return w;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::string format_seconds(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s << "s";
    return os.str();
}

Coloring load_coloring(const std::string& text, const std::string& file, int colors) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_run_string(buf.str(), colors);
    }
    return parse_run_string(text, colors);
}

// --- compute ---------------------------------------------------------------

struct ComputeArgs {
    ProblemFlags problem;
    int cap = 0;
    std::string certificates = "one";
    int workers = 0;
    bool json = false;
};

int do_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
    const auto spec = a.problem.spec();
    SearchConfig cfg;
    cfg.n_cap = a.cap;
    cfg.worker_count = a.workers > 0 ? a.workers : default_workers();
    cfg.mode = a.certificates == "none"  ? CertificateMode::value_only
               : a.certificates == "all" ? CertificateMode::all_certificates
                                         : CertificateMode::one_certificate;
    SearchResult result;
    try {
        result = compute_f(spec, cfg);
    } catch (const FormulaContradicted& e) {
        err << e.what() << '\n';
        if (a.json) {
            auto j = report::to_json(e.result());
            j["formula_contradicted"] = true;
            j["expected"] = e.expected();
            out << report::envelope("compute", report::to_json(spec), j, report::to_json(e.result().stats)).dump(2)
                << '\n';
        }
        return kContradiction;
    } catch (const SearchAborted& e) {
        err << e.what() << '\n';
        return kContradiction;
    }

    if (a.json) {
        out << report::envelope("compute", report::to_json(spec), report::to_json(result),
                                report::to_json(result.stats))
                   .dump(2)
            << '\n';
    } else {
        out << "spec: " << to_string(spec) << '\n';
        if (result.f_value) {
            out << "f=" << *result.f_value << '\n';
        } else {
            out << "f>" << result.n_cap << " (inconclusive: an avoiding coloring of length " << result.n_cap
                << " exists)\n";
        }
        if (!result.certificates.empty()) {
            out << "certificates (" << result.certificates.size() << ", length "
                << result.certificates.front().coloring.length() << "):\n";
            for (const auto& c : result.certificates) {
                out << "  " << format_run_string(c.coloring);
                if (cfg.symmetry_reduction) out << "  [orbit " << c.orbit_size << "]";
                out << '\n';
            }
        }
        out << "nodes=" << result.stats.nodes_expanded << " max_depth=" << result.stats.max_depth
            << " workers=" << result.stats.worker_count << " time=" << format_seconds(result.stats.wall_time.count())
            << '\n';
    }
    return result.f_value ? kOk : kInconclusive;
}

// --- construct -------------------------------------------------------------

int do_construct(int m, bool as_json, std::ostream& out) {
    const auto c = lower_bound_coloring(m);
    const auto s = format_run_string(c);
    if (as_json) {
        json result{{"m", m},
                    {"variant", to_string(default_variant(m))},
                    {"coloring", s},
                    {"length", c.length()},
                    {"formula_f", formula_f_mmm2(m)}};
        out << report::envelope("construct", report::to_json(ProblemSpec({m, m, m}, 2)), result, json::object())
                   .dump(2)
            << '\n';
    } else {
        out << s << '\n';
    }
    return kOk;
}

// --- verify / witness ------------------------------------------------------

struct ColoringArgs {
    ProblemFlags problem;
    std::string text;
    std::string file;
    bool json = false;
};

int do_verify(const ColoringArgs& a, std::ostream& out) {
    const auto spec = a.problem.spec();
    const auto c = load_coloring(a.text, a.file, spec.num_colors());
    const auto rep = verify_avoiding(c, spec);
    if (a.json) {
        out << report::envelope("verify", report::to_json(spec), report::to_json(rep), json::object()).dump(2) << '\n';
    } else {
        out << "length " << rep.length << ", spec " << to_string(spec) << ": ";
        if (rep.avoids) {
            out << "avoids (no solution)\n";
        } else {
            out << "contains a solution " << report::describe(*rep.witness) << '\n';
        }
    }
    return kOk;
}

int do_witness(const ColoringArgs& a, std::ostream& out) {
    const auto spec = a.problem.spec();
    const auto c = load_coloring(a.text, a.file, spec.num_colors());
    const auto w = exists_solution(c, spec);
    if (a.json) {
        out << report::envelope("witness", report::to_json(spec), w ? report::to_json(*w) : json(nullptr),
                                json::object())
                   .dump(2)
            << '\n';
    } else {
        out << (w ? report::describe(*w) : std::string("none")) << '\n';
    }
    return kOk;
}

// --- check-lemma -----------------------------------------------------------

struct LemmaArgs {
    std::string which;
    int m = 0;
    bool exhaustive = false;
    std::string text;
    int workers = 0;
    bool json = false;
};

json single_instance(const LemmaArgs& a, const Coloring& c) {
    json j{{"coloring", format_run_string(c)}};
    const auto b1 = find_extremal_b1(c, a.m);
    if (b1) {
        j["b1"] = {{"set", b1->b1.elements()}, {"color", b1->color}, {"beta", b1->beta}, {"alpha", b1->alpha}};
    } else {
        j["b1"] = nullptr;
    }
    if (a.which == "2.1") {
        if (b1) {
            const auto match = classify_extremal_case(c, *b1, a.m);
            j["case"] = to_string(match.tag);
            j["mask"] = match.mask;
            j["relabeled"] = match.relabeled;
            if (match.holds(ExtremalCase::one)) {
                j["mu"] = match.mu;
                j["nu"] = match.nu;
            }
        }
    } else {
        const auto f = find_small_diameter_sets(c, a.m);
        auto set = [](const std::optional<IntSet>& s) { return s ? json(s->elements()) : json(nullptr); };
        if (f.branch == SmallDiameterFinding::Branch::no_big_set) {
            j["branch"] = "no_big_set";
            j["d1"] = set(f.d1);
            j["d2"] = set(f.d2);
        } else {
            j["branch"] = "big_set";
            j["case"] = to_string(f.match->tag);
            j["a1"] = set(f.a1);
            j["a2"] = set(f.a2);
            j["a3"] = set(f.a3);
            j["a1_bound"] = f.a1_bound;
            j["a2_bound"] = f.a2_bound;
        }
    }
    return j;
}

int do_check_lemma(const LemmaArgs& a, std::ostream& out, std::ostream& err) {
    if (a.exhaustive == !a.text.empty()) {
        err << "check-lemma: give exactly one of --exhaustive or --string\n";
        return kUsage;
    }
    const auto which = a.which == "2.1" ? StructureCheck::extremal_case : StructureCheck::small_diameter;
    const json spec{{"m", a.m}, {"which", a.which}};

    if (!a.exhaustive) {
        const auto c = parse_run_string(a.text, 2);
        json result;
        try {
            result = single_instance(a, c);
            result["violation"] = nullptr;
        } catch (const LemmaViolation& e) {
            err << e.what() << '\n';
            if (a.json) {
                out << report::envelope("check-lemma", spec, json{{"violation", e.what()}}, json::object()).dump(2)
                    << '\n';
            }
            return kContradiction;
        }
        if (a.json) {
            out << report::envelope("check-lemma", spec, result, json::object()).dump(2) << '\n';
        } else {
            out << result.dump() << '\n' << "PASS\n";
        }
        return kOk;
    }

    const auto start = std::chrono::steady_clock::now();
    const int workers = a.workers > 0 ? a.workers : default_workers();
    const auto rep = exhaustive_sweep(which, a.m, workers);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (a.json) {
        out << report::envelope("check-lemma", spec, report::to_json(rep),
                                json{{"wall_time_s", elapsed.count()}, {"worker_count", workers}})
                   .dump(2)
            << '\n';
    } else {
        out << "m=" << a.m << " colorings=" << rep.instances << '\n';
        if (which == StructureCheck::small_diameter) {
            out << "  no big set:  " << rep.no_big_set << '\n' << "  big set:     " << rep.big_set << '\n';
        } else {
            out << "  without B1:  " << rep.without_b1 << '\n';
        }
        out << "  first case i:   " << rep.first_case[0] << '\n'
            << "  first case ii:  " << rep.first_case[1] << '\n'
            << "  first case iii: " << rep.first_case[2] << '\n';
        const auto masks = report::to_json(rep)["case_masks"];
        for (const auto& [key, value] : masks.items()) out << "  holds " << key << ": " << value << '\n';
        out << "violations=" << rep.violations << '\n';
        if (rep.first_violation) out << "first violation: " << *rep.first_violation << '\n';
        out << (rep.violations == 0 ? "PASS" : "FAIL") << '\n';
    }
    return rep.violations == 0 ? kOk : kContradiction;
}

// --- table -----------------------------------------------------------------

int do_table(const std::string& family, int m_max, int workers, bool as_json, std::ostream& out) {
    json rows = json::array();
    bool all_match = true;
    bool any_inconclusive = false;
    if (!as_json) out << "family " << family << '\n' << "m  closed_form  computed  match\n";
    for (int m = 2; m <= m_max; ++m) {
        const auto spec = family == "mmm2"  ? ProblemSpec({m, m, m}, 2)
                          : family == "mm3" ? ProblemSpec({m, m}, 3)
                          : family == "mm4" ? ProblemSpec({m, m}, 4)
                                            : ProblemSpec({m, m}, 2);
        const int closed = *known_value(spec);
        SearchConfig cfg;
        cfg.mode = CertificateMode::value_only;
        cfg.worker_count = workers > 0 ? workers : default_workers();
        cfg.check_known_value = false;
        const auto result = compute_f(spec, cfg);
        const bool match = result.f_value && *result.f_value == closed;
        all_match = all_match && (match || result.inconclusive());
        any_inconclusive = any_inconclusive || result.inconclusive();
        json row{{"m", m}, {"closed_form", closed}, {"match", match}};
        row["computed"] = result.f_value ? json(*result.f_value) : json(nullptr);
        rows.push_back(row);
        if (!as_json) {
            out << m << "  " << closed << "  "
                << (result.f_value ? std::to_string(*result.f_value) : ">" + std::to_string(result.n_cap)) << "  "
                << (match ? "yes" : "NO") << '\n';
        }
    }
    if (as_json) {
        out << report::envelope("table", json{{"family", family}, {"m_max", m_max}}, json{{"rows", rows}},
                                json::object())
                   .dump(2)
            << '\n';
    }
    if (!all_match) return kContradiction;
    return any_inconclusive ? kInconclusive : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact values and certificates for nondecreasing-diameter Ramsey functions", "diam_ramsey"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(report::kVersion));

    ComputeArgs compute;
    auto* cmd_compute = app.add_subcommand("compute", "exact value of f by exhaustive search");
    add_problem_flags(cmd_compute, compute.problem);
    cmd_compute->add_option("--cap", compute.cap, "longest length to explore (default: closed form + 2)")
        ->check(CLI::PositiveNumber);
    cmd_compute->add_option("--certificates", compute.certificates, "certificates to report")
        ->check(CLI::IsMember({"none", "one", "all"}));
    cmd_compute->add_option("--workers", compute.workers, "worker threads")->check(CLI::PositiveNumber);
    cmd_compute->add_flag("--json", compute.json, "machine-readable output");

    int construct_m = 0;
    bool construct_json = false;
    auto* cmd_construct = app.add_subcommand("construct", "lower-bound coloring for (m,m,m;2)");
    cmd_construct->add_option("--m", construct_m, "set size m")->required()->check(CLI::Range(2, 1000000));
    cmd_construct->add_flag("--json", construct_json, "machine-readable output");

    ColoringArgs verify;
    auto* cmd_verify = app.add_subcommand("verify", "check whether a coloring avoids all solutions");
    add_problem_flags(cmd_verify, verify.problem);
    auto* verify_string = cmd_verify->add_option("--string", verify.text, "run-length coloring");
    auto* verify_file = cmd_verify->add_option("--file", verify.file, "file holding a run-length coloring");
    verify_string->excludes(verify_file);
    cmd_verify->add_flag("--json", verify.json, "machine-readable output");

    ColoringArgs witness;
    auto* cmd_witness = app.add_subcommand("witness", "canonical solution chain of a coloring");
    add_problem_flags(cmd_witness, witness.problem);
    cmd_witness->add_option("--string", witness.text, "run-length coloring")->required();
    cmd_witness->add_flag("--json", witness.json, "machine-readable output");

    LemmaArgs lemma;
    auto* cmd_lemma = app.add_subcommand("check-lemma", "validate the structure statements on [1, 3m-2]");
    cmd_lemma->add_option("--which", lemma.which, "2.1 (extremal cases) or 2.2 (small-diameter sets)")
        ->required()
        ->check(CLI::IsMember({"2.1", "2.2"}));
    cmd_lemma->add_option("--m", lemma.m, "set size m")->required()->check(CLI::Range(2, 14));
    cmd_lemma->add_flag("--exhaustive", lemma.exhaustive, "all 2^(3m-2) colorings");
    cmd_lemma->add_option("--string", lemma.text, "a single coloring of length 3m-2");
    cmd_lemma->add_option("--workers", lemma.workers, "worker threads")->check(CLI::PositiveNumber);
    cmd_lemma->add_flag("--json", lemma.json, "machine-readable output");

    std::string family;
    int m_max = 0;
    int table_workers = 0;
    bool table_json = false;
    auto* cmd_table = app.add_subcommand("table", "closed form against exhaustive search");
    cmd_table->add_option("--family", family, "mm2, mm3, mm4 or mmm2")
        ->required()
        ->check(CLI::IsMember({"mm2", "mm3", "mm4", "mmm2"}));
    cmd_table->add_option("--m-max", m_max, "largest m")->required()->check(CLI::Range(2, 64));
    cmd_table->add_option("--workers", table_workers, "worker threads")->check(CLI::PositiveNumber);
    cmd_table->add_flag("--json", table_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*cmd_compute) return do_compute(compute, out, err);
        if (*cmd_construct) return do_construct(construct_m, construct_json, out);
        if (*cmd_verify) {
            if (verify.text.empty() && verify.file.empty()) {
                err << "verify: one of --string or --file is required\n";
                return kUsage;
            }
            return do_verify(verify, out);
        }
        if (*cmd_witness) return do_witness(witness, out);
        if (*cmd_lemma) return do_check_lemma(lemma, out, err);
        if (*cmd_table) return do_table(family, m_max, table_workers, table_json, out);
    } catch (const LemmaViolation& e) {
        err << e.what() << '\n';
        return kContradiction;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace diam_ramsey::cli
