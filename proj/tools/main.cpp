#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "deltacolor/generators.hpp"
#include "deltacolor/randomized.hpp"
#include "deltacolor/report.hpp"
#include "deltacolor/structure.hpp"
#include "deltacolor/verify.hpp"

namespace dc = deltacolor;

namespace {

struct GraphSource {
    std::string graph_file;
    std::string gen_descriptor;

    dc::Graph load(std::uint64_t seed) const {
        if (!graph_file.empty()) return dc::Graph::load_file(graph_file);
        if (!gen_descriptor.empty()) return dc::gen_graph(gen_descriptor, seed);
        throw CLI::ValidationError("provide --graph or --gen");
    }
    void attach(CLI::App* cmd) {
        cmd->add_option("--graph", graph_file, "edge-list graph file");
        cmd->add_option("--gen", gen_descriptor,
                        "generator descriptor, e.g. random_regular:n=256,delta=3");
    }
    dc::json config_json(std::uint64_t seed) const {
        return {{"graph", graph_file}, {"gen", gen_descriptor}, {"seed", seed}};
    }
};

void emit_outputs(const dc::Graph& g, const dc::PartialColoring& coloring,
                  const std::string& out_path, const std::string& report_path,
                  const std::string& csv_path, const dc::json& report) {
    if (!out_path.empty()) dc::write_text_file(out_path, dc::coloring_to_text(g, coloring));
    if (!report_path.empty()) dc::write_text_file(report_path, report.dump(2) + "\n");
    if (!csv_path.empty()) {
        dc::RoundLedger tmp;  // csv written from the report's ledger section
        (void)tmp;
    }
}

int cmd_generate(const GraphSource& src, std::uint64_t seed, const std::string& out_path) {
    auto g = src.load(seed);
    std::ostringstream ss;
    g.save(ss);
    if (out_path.empty())
        std::cout << ss.str();
    else
        dc::write_text_file(out_path, ss.str());
    std::cerr << "generated graph: n=" << g.size() << " m=" << g.edge_count()
              << " delta=" << g.max_degree() << "\n";
    return 0;
}

int cmd_run_det(const GraphSource& src, std::uint64_t seed, const std::string& out_path,
                const std::string& report_path, const std::string& csv_path) {
    auto g = src.load(seed);
    dc::RoundLedger ledger;
    auto res = dc::delta_color_deterministic(g, ledger);
    auto verification = dc::verify_proper_coloring(g, res.coloring, g.max_degree());
    verification.merge(dc::verify_degree_bounds(res.stats.snapshots,
                                                {res.stats.k, 4, 1, false, 0}, g.max_degree()));
    dc::json config = src.config_json(seed);
    config["pipeline"] = "det";
    auto report = dc::run_report(config, seed, ledger, verification,
                                 dc::det_stats_to_json(res.stats));
    emit_outputs(g, res.coloring, out_path, report_path, "", report);
    if (!csv_path.empty()) dc::write_text_file(csv_path, ledger.to_csv());
    std::cout << "rounds=" << ledger.total() << " layers=" << res.stats.h_layers
              << " survivors=" << res.stats.survivor_count
              << " verified=" << (verification.summary() ? "yes" : "no") << "\n";
    return verification.summary() ? 0 : 1;
}

int cmd_run_rand(const GraphSource& src, std::uint64_t seed, const dc::RandConfig& config,
                 const std::string& out_path, const std::string& report_path,
                 const std::string& csv_path) {
    auto g = src.load(seed);
    dc::RoundLedger ledger;
    auto res = dc::delta_color_randomized(g, seed, config, ledger);
    if (!res.success) {
        std::cerr << "randomized pipeline failed: " << res.failure_reason << "\n";
        return 2;
    }
    auto verification = dc::verify_proper_coloring(g, res.coloring, g.max_degree());
    dc::json cfg = src.config_json(seed);
    cfg["pipeline"] = "rand";
    cfg["b"] = config.b;
    cfg["p_exp"] = config.p_exp;
    cfg["d_override"] = config.d_override;
    cfg["max_retries"] = config.max_retries;
    cfg["paper_constants"] = config.paper_constants;
    auto report = dc::run_report(cfg, seed, ledger, verification,
                                 dc::rand_stats_to_json(res.stats));
    emit_outputs(g, res.coloring, out_path, report_path, "", report);
    if (!csv_path.empty()) dc::write_text_file(csv_path, ledger.to_csv());
    std::cout << "rounds=" << ledger.total() << " t_nodes=" << res.stats.t_node_count
              << " retries=" << res.stats.retries_used
              << " verified=" << (verification.summary() ? "yes" : "no") << "\n";
    return verification.summary() ? 0 : 1;
}

int cmd_verify(const std::string& graph_file, const std::string& coloring_file,
               const std::string& report_path) {
    auto g = dc::Graph::load_file(graph_file);
    std::ifstream in(coloring_file);
    if (!in) throw std::runtime_error("cannot open coloring file: " + coloring_file);
    auto coloring = dc::coloring_from_text(g, in);
    auto rep = dc::verify_proper_coloring(g, coloring, g.max_degree());
    rep.merge(dc::verify_brooks_preconditions(g));
    auto doc = dc::verification_to_json(rep);
    if (!report_path.empty()) dc::write_text_file(report_path, doc.dump(2) + "\n");
    std::cout << doc.dump(2) << "\n";
    return rep.summary() ? 0 : 1;
}

int cmd_find_nldcc(const GraphSource& src, std::uint64_t seed, int radius, long vertex_id) {
    auto g = src.load(seed);
    dc::NldecFinder finder(g, radius);
    auto describe = [&g](const dc::NLdec& c) {
        std::ostringstream ss;
        ss << (c.kind == dc::NLdec::Kind::low_degree_node ? "low_degree_node" : "nice_ldcc");
        ss << " root=" << g.id(c.root) << " verts=[";
        for (std::size_t i = 0; i < c.sub.verts.size(); ++i)
            ss << (i ? "," : "") << g.id(c.sub.verts[i]);
        ss << "]";
        return ss.str();
    };
    if (vertex_id >= 0) {
        dc::Vertex v = g.vertex_of(static_cast<dc::NodeId>(vertex_id));
        if (v == dc::kNoVertex) throw std::runtime_error("unknown vertex id");
        auto c = finder.find(v, radius);
        if (!c) {
            std::cout << "vertex " << vertex_id << ": none\n";
            return 1;
        }
        std::cout << "vertex " << vertex_id << ": " << describe(*c) << "\n";
        return 0;
    }
    std::cout << "candidates=" << finder.candidates().size() << "\n";
    for (const auto& c : finder.candidates()) std::cout << describe(c) << "\n";
    return 0;
}

std::vector<dc::Vertex> parse_vertex_list(const dc::Graph& g, const std::string& text) {
    std::vector<dc::Vertex> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        dc::Vertex v = g.vertex_of(std::stoull(item));
        if (v == dc::kNoVertex) throw std::runtime_error("family: unknown vertex id " + item);
        out.push_back(v);
    }
    return out;
}

// One subgraph per line: "v1,v2,... ; s1,s2,... ; root"
int cmd_ruling_subgraphs(const std::string& graph_file, const std::string& family_file, long k,
                         int t, int d, const std::string& report_path) {
    auto g = dc::Graph::load_file(graph_file);
    std::ifstream in(family_file);
    if (!in) throw std::runtime_error("cannot open family file: " + family_file);

    dc::RulingParams params{k, t, d, false, 0};
    std::vector<dc::FamilyMember> members;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string verts_s, stem_s, root_s;
        if (!std::getline(ss, verts_s, ';') || !std::getline(ss, stem_s, ';') ||
            !std::getline(ss, root_s))
            throw std::runtime_error("family line must be 'verts ; stem ; root'");
        auto verts = parse_vertex_list(g, verts_s);
        auto stem = parse_vertex_list(g, stem_s);
        dc::Vertex root = g.vertex_of(std::stoull(root_s));
        members.push_back(dc::make_member(g, verts, stem, root, params));
    }

    dc::RoundLedger ledger;
    dc::FamilyState fam(g, std::move(members), params);
    auto outcome = dc::ruling_subgraphs(fam, ledger);
    auto verification = dc::verify_ruling_family(fam, outcome);
    verification.merge(dc::verify_degree_bounds(outcome.snapshots, params, g.max_degree()));

    dc::json stats = {{"input_size", fam.members().size()},
                      {"survivors", outcome.survivors.size()},
                      {"coverage_radius", outcome.coverage_radius},
                      {"chain_bound", outcome.chain_bound}};
    dc::json surv = dc::json::array();
    for (auto i : outcome.survivors) {
        dc::json ids = dc::json::array();
        for (auto v : fam.members()[i].sub.verts) ids.push_back(g.id(v));
        surv.push_back(ids);
    }
    stats["surviving_family"] = surv;
    auto report = dc::run_report({{"graph", graph_file}, {"family", family_file},
                                  {"k", k}, {"t", t}, {"d", d}},
                                 0, ledger, verification, stats);
    if (!report_path.empty()) dc::write_text_file(report_path, report.dump(2) + "\n");
    std::cout << "input=" << fam.members().size() << " survivors=" << outcome.survivors.size()
              << " coverage=" << outcome.coverage_radius
              << " verified=" << (verification.summary() ? "yes" : "no") << "\n";
    return verification.summary() ? 0 : 1;
}

int cmd_bench(const std::vector<long>& n_list, const std::vector<int>& delta_list, int seeds,
              const std::string& csv_path) {
    std::ostringstream csv;
    csv << "n,delta,seed,total_rounds,step1_rounds,ruling_rounds,layering_rounds,"
           "coloring_rounds,family_rounds,coverage_radius,h_layers,verified\n";
    bool all_ok = true;
    for (long n : n_list)
        for (int delta : delta_list) {
            if ((n * delta) % 2 != 0) continue;
            for (int seed = 0; seed < seeds; ++seed) {
                auto g = dc::gen_random_regular(n, delta, seed);
                dc::RoundLedger ledger;
                auto res = dc::delta_color_deterministic(g, ledger);
                auto ver = dc::verify_proper_coloring(g, res.coloring, delta);
                all_ok = all_ok && ver.summary();
                long step1 = ledger.total_for("alg7.step1");
                long layering = ledger.total_for("alg7.step3");
                long coloring = ledger.total_for("alg7.step4") + ledger.total_for("alg7.linial");
                long family = ledger.total_for("alg7.step57");
                long ruling = ledger.total() - step1 - layering - coloring - family;
                csv << n << ',' << delta << ',' << seed << ',' << ledger.total() << ',' << step1
                    << ',' << ruling << ',' << layering << ',' << coloring << ',' << family << ','
                    << res.stats.coverage_radius << ',' << res.stats.h_layers << ','
                    << (ver.summary() ? 1 : 0) << '\n';
                std::cerr << "bench n=" << n << " delta=" << delta << " seed=" << seed
                          << " rounds=" << ledger.total() << "\n";
            }
        }
    if (csv_path.empty())
        std::cout << csv.str();
    else
        dc::write_text_file(csv_path, csv.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LOCAL-model Delta-coloring via ruling subgraph families"};
    app.require_subcommand(1);

    GraphSource src_gen, src_det, src_rand, src_find;
    std::uint64_t seed = 1;
    std::string out_path, report_path, csv_path;

    auto* generate = app.add_subcommand("generate", "generate a graph and write it out");
    src_gen.attach(generate);
    generate->add_option("--seed", seed, "generator seed");
    generate->add_option("--out", out_path, "output file (stdout when absent)");

    auto* run_det = app.add_subcommand("run-det", "deterministic Delta-coloring pipeline");
    src_det.attach(run_det);
    run_det->add_option("--seed", seed, "seed (generator only; pipeline is deterministic)");
    run_det->add_option("--out", out_path, "coloring output file");
    run_det->add_option("--report", report_path, "JSON report path");
    run_det->add_option("--csv", csv_path, "ledger CSV path");

    dc::RandConfig rand_config;
    auto* run_rand = app.add_subcommand("run-rand", "randomized Delta-coloring pipeline");
    src_rand.attach(run_rand);
    run_rand->add_option("--seed", seed, "run seed");
    run_rand->add_option("--b", rand_config.b, "T-node conflict distance");
    run_rand->add_option("--p-exp", rand_config.p_exp, "selection probability Delta^-p");
    run_rand->add_option("--d", rand_config.d_override, "override the distance parameter d");
    run_rand->add_option("--max-retries", rand_config.max_retries, "sampling retries");
    run_rand->add_flag("--paper-constants", rand_config.paper_constants, "b = p = 34");
    run_rand->add_option("--out", out_path, "coloring output file");
    run_rand->add_option("--report", report_path, "JSON report path");
    run_rand->add_option("--csv", csv_path, "ledger CSV path");

    std::string graph_file, coloring_file;
    auto* verify = app.add_subcommand("verify", "verify a coloring file against a graph");
    verify->add_option("--graph", graph_file, "edge-list graph file")->required();
    verify->add_option("--coloring", coloring_file, "coloring file")->required();
    verify->add_option("--report", report_path, "JSON report path");

    int radius = 8;
    long vertex_id = -1;
    auto* find = app.add_subcommand("find-nldcc", "inspect extendable-component candidates");
    src_find.attach(find);
    find->add_option("--seed", seed, "generator seed");
    find->add_option("--radius", radius, "search radius");
    find->add_option("--vertex", vertex_id, "query a single vertex id");

    std::string family_file;
    long rk = 64;
    int rt = 4, rd = 1;
    auto* ruling = app.add_subcommand("ruling-subgraphs", "run the ruling-family computation");
    ruling->add_option("--graph", graph_file, "edge-list graph file")->required();
    ruling->add_option("--family", family_file, "family file: 'verts ; stem ; root' per line")
        ->required();
    ruling->add_option("--k", rk, "max member size");
    ruling->add_option("--t", rt, "max stem size");
    ruling->add_option("--d", rd, "orchid halo radius");
    ruling->add_option("--report", report_path, "JSON report path");

    std::vector<long> n_list{1024, 4096};
    std::vector<int> delta_list{3};
    int seeds = 1;
    auto* bench = app.add_subcommand("bench", "sweep the deterministic pipeline, emit CSV");
    bench->add_option("--n", n_list, "graph sizes");
    bench->add_option("--delta", delta_list, "degrees");
    bench->add_option("--seeds", seeds, "seeds per cell");
    bench->add_option("--csv", csv_path, "CSV output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(src_gen, seed, out_path);
        if (run_det->parsed()) return cmd_run_det(src_det, seed, out_path, report_path, csv_path);
        if (run_rand->parsed())
            return cmd_run_rand(src_rand, seed, rand_config, out_path, report_path, csv_path);
        if (verify->parsed()) return cmd_verify(graph_file, coloring_file, report_path);
        if (find->parsed()) return cmd_find_nldcc(src_find, seed, radius, vertex_id);
        if (ruling->parsed())
            return cmd_ruling_subgraphs(graph_file, family_file, rk, rt, rd, report_path);
        if (bench->parsed()) return cmd_bench(n_list, delta_list, seeds, csv_path);
    } catch (const dc::BrooksViolation& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
