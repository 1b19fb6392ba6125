#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "diam_ramsey/checker.hpp"
#include "diam_ramsey/constructions.hpp"
#include "diam_ramsey/lemmas.hpp"
#include "diam_ramsey/search.hpp"

namespace diam_ramsey::report {

inline constexpr std::string_view kVersion = "0.1.0";

using nlohmann::json;

json to_json(const ProblemSpec& spec);
json to_json(const Witness& w);
json to_json(const SearchStats& stats);
/// SearchResult without its stats block.
json to_json(const SearchResult& result);
json to_json(const VerificationReport& report);
json to_json(const SweepReport& report);

/// Inverse of to_json(ProblemSpec); throws std::invalid_argument on a bad record.
ProblemSpec spec_from_json(const json& j);
/// Inverse of to_json(Witness).
Witness witness_from_json(const json& j);

/// The output envelope: {command, spec, result, stats, version}.
json envelope(std::string_view command, json spec, json result, json stats);

/// "{1,2},{3,4},{5,6}"
std::string describe(const Witness& w);

/// Parses "2,2,2" into sizes.
std::vector<int> parse_sizes(std::string_view text);

}  // namespace diam_ramsey::report
