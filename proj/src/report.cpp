#include "deltacolor/report.hpp"

#include <fstream>
#include <sstream>

namespace deltacolor {

json ledger_to_json(const RoundLedger& ledger) {
    json entries = json::array();
    for (const auto& e : ledger.entries()) {
        entries.push_back({{"phase", e.phase},
                           {"mode", to_string(e.mode)},
                           {"native_rounds", e.native_rounds},
                           {"dilation", e.dilation},
                           {"charged_rounds", e.charged_rounds}});
    }
    return entries;
}

json verification_to_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json item = {{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) item["witness"] = c.witness;
        checks.push_back(item);
    }
    return {{"checks", checks}, {"summary", rep.summary()}};
}

json det_stats_to_json(const DetStats& s) {
    json snaps = json::array();
    for (const auto& snap : s.snapshots) {
        snaps.push_back({{"stage", snap.stage},
                         {"iter", snap.iter},
                         {"alive", snap.alive_count},
                         {"conflict_max_degree", snap.conflict_max_degree},
                         {"contention_max_out", snap.contention_max_out},
                         {"contention_max_in", snap.contention_max_in},
                         {"max_elim_hop", snap.max_elim_hop}});
    }
    return {{"n", s.n},
            {"delta", s.delta},
            {"selection_radius", s.selection_radius},
            {"k", s.k},
            {"family_size", s.family_size},
            {"survivor_count", s.survivor_count},
            {"coverage_radius", s.coverage_radius},
            {"chain_bound", s.chain_bound},
            {"h_layers", s.h_layers},
            {"stages", snaps}};
}

json rand_stats_to_json(const RandStats& s) {
    return {{"n", s.n},
            {"delta", s.delta},
            {"d", s.d},
            {"family_size", s.family_size},
            {"survivor_count", s.survivor_count},
            {"participant_count", s.participant_count},
            {"t_node_count", s.t_node_count},
            {"retries_used", s.retries_used},
            {"h_layers", s.h_layers}};
}

json run_report(const json& config, std::uint64_t seed, const RoundLedger& ledger,
                const VerificationReport& verification, const json& stats) {
    return {{"config", config},
            {"seed", seed},
            {"ledger", ledger_to_json(ledger)},
            {"totals", {{"charged_rounds", ledger.total()}}},
            {"stats", stats},
            {"verification", verification_to_json(verification)}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

std::string coloring_to_text(const Graph& g, const PartialColoring& coloring) {
    std::string out;
    for (Vertex v = 0; v < g.size(); ++v) {
        out += std::to_string(g.id(v));
        out += ' ';
        out += std::to_string(coloring.col[v]);
        out += '\n';
    }
    return out;
}

PartialColoring coloring_from_text(const Graph& g, std::istream& in) {
    PartialColoring coloring(g.size());
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        NodeId id;
        int color;
        if (!(ss >> id)) continue;
        if (!(ss >> color))
            throw std::runtime_error("coloring parse error at line " + std::to_string(line_no));
        Vertex v = g.vertex_of(id);
        if (v == kNoVertex)
            throw std::runtime_error("coloring references unknown node " + std::to_string(id));
        coloring.col[v] = color;
    }
    return coloring;
}

}  // namespace deltacolor
