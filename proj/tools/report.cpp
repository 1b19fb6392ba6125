#include "report.hpp"

#include <charconv>
#include <stdexcept>

namespace diam_ramsey::report {

json to_json(const ProblemSpec& spec) {
    return json{{"sizes", spec.sizes()}, {"colors", spec.num_colors()}, {"strict", spec.strict()}};
}

json to_json(const Witness& w) {
    json sets = json::array();
    json colors = json::array();
    json diams = json::array();
    for (std::size_t i = 0; i < w.chain.size(); ++i) {
        sets.push_back(w.chain[i].elements());
        colors.push_back(static_cast<int>(w.colors[i]));
        diams.push_back(diam(w.chain[i]));
    }
    return json{{"sets", sets}, {"colors", colors}, {"diams", diams}};
}

json to_json(const SearchStats& stats) {
    return json{{"nodes_expanded", stats.nodes_expanded},
                {"max_depth", stats.max_depth},
                {"wall_time_s", stats.wall_time.count()},
                {"worker_count", stats.worker_count}};
}

json to_json(const SearchResult& result) {
    json certs = json::array();
    json orbits = json::array();
    for (const auto& c : result.certificates) {
        certs.push_back(format_run_string(c.coloring));
        orbits.push_back(c.orbit_size);
    }
    json j{{"status", result.inconclusive() ? "inconclusive" : "exact"},
           {"n_cap", result.n_cap},
           {"certificates", certs},
           {"orbit_sizes", orbits}};
    j["f_value"] = result.f_value ? json(*result.f_value) : json(nullptr);
    j["inconclusive"] = result.inconclusive();
    return j;
}

json to_json(const VerificationReport& report) {
    json j{{"avoids", report.avoids}, {"length", report.length}, {"spec", to_json(report.spec)}};
    j["witness"] = report.witness ? to_json(*report.witness) : json(nullptr);
    return j;
}

json to_json(const SweepReport& report) {
    json masks = json::object();
    for (std::size_t k = 1; k < report.case_masks.size(); ++k) {
        if (report.case_masks[k] == 0) continue;
        std::string key;
        for (unsigned bit = 0; bit < 3; ++bit) {
            if ((k >> bit) & 1U) {
                if (!key.empty()) key += '+';
                key += to_string(static_cast<ExtremalCase>(bit));
            }
        }
        masks[key] = report.case_masks[k];
    }
    json j{{"m", report.m},
           {"instances", report.instances},
           {"without_b1", report.without_b1},
           {"first_case", {{"i", report.first_case[0]}, {"ii", report.first_case[1]}, {"iii", report.first_case[2]}}},
           {"case_masks", masks},
           {"no_big_set", report.no_big_set},
           {"big_set", report.big_set},
           {"violations", report.violations}};
    j["first_violation"] = report.first_violation ? json(*report.first_violation) : json(nullptr);
    return j;
}

ProblemSpec spec_from_json(const json& j) {
    try {
        return ProblemSpec(j.at("sizes").get<std::vector<int>>(), j.at("colors").get<int>(),
                           j.value("strict", false));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed spec record: ") + e.what());
    }
}

Witness witness_from_json(const json& j) {
    try {
        Witness w;
        for (const auto& s : j.at("sets")) w.chain.emplace_back(s.get<std::vector<int>>());
        for (const auto& c : j.at("colors")) w.colors.push_back(static_cast<Color>(c.get<int>()));
        return w;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed witness record: ") + e.what());
    }
}

json envelope(std::string_view command, json spec, json result, json stats) {
    return json{{"command", command},
                {"spec", std::move(spec)},
                {"result", std::move(result)},
                {"stats", std::move(stats)},
                {"version", kVersion}};
}

std::string describe(const Witness& w) {
    std::string out;
    for (std::size_t i = 0; i < w.chain.size(); ++i) {
        if (i != 0) out += ',';
        out += to_string(w.chain[i]);
    }
    return out;
}

std::vector<int> parse_sizes(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i <= text.size()) {
        const std::size_t j = std::min(text.find(',', i), text.size());
        const auto part = text.substr(i, j - i);
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
            throw std::invalid_argument("bad size list '" + std::string(text) + "'");
        }
        out.push_back(value);
        i = j + 1;
    }
    return out;
}

}  // namespace diam_ramsey::report
