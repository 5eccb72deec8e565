#pragma once

#include <string>

#include "deltacolor/coloring.hpp"
#include "deltacolor/ledger.hpp"
#include "deltacolor/randomized.hpp"
#include "deltacolor/verify.hpp"

#include <json.hpp>

namespace deltacolor {

using json = nlohmann::ordered_json;

json ledger_to_json(const RoundLedger& ledger);
json verification_to_json(const VerificationReport& rep);
json det_stats_to_json(const DetStats& stats);
json rand_stats_to_json(const RandStats& stats);

// {config, seed, ledger entries, totals, verification results}
json run_report(const json& config, std::uint64_t seed, const RoundLedger& ledger,
                const VerificationReport& verification, const json& stats);

void write_text_file(const std::string& path, const std::string& content);
// Lines "v color" keyed by node ID.
std::string coloring_to_text(const Graph& g, const PartialColoring& coloring);
PartialColoring coloring_from_text(const Graph& g, std::istream& in);

}  // namespace deltacolor
