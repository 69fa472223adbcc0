#include "rlab/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rlab/arrowing.hpp"
#include "rlab/blowup.hpp"
#include "rlab/copy_hypergraph.hpp"
#include "rlab/errors.hpp"
#include "rlab/parallel.hpp"
#include "rlab/recolouring.hpp"
#include "rlab/report.hpp"
#include "rlab/trees.hpp"
#include "rlab/unavoidable.hpp"

namespace rlab::cli {

namespace {

struct Common {
    std::string output = "-";
    std::string format = "json";
    std::uint64_t seed = 0;
    int workers = 1;
    std::uint64_t budget = SearchLimits{}.node_budget;

    void attach(CLI::App* cmd) {
        cmd->add_option("--output", output, "report path, - for stdout");
        cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--seed", seed, "root seed (default 0)");
        cmd->add_option("--workers", workers, "worker threads; RAMSEY_LAB_THREADS overrides")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--budget", budget, "search node budget");
    }
    SearchLimits limits() const { return SearchLimits{budget}; }
};

Json edge_json(Edge e) { return Json::array({e.u, e.v}); }

Json colouring_json(const EdgeColouring& c) {
    Json arr = Json::array();
    for (Edge e : c.coloured_edges()) arr.push_back(Json::array({e.u, e.v, c.get(e)}));
    return arr;
}

Json copy_json(const CopyEmbedding& copy) {
    Json j;
    Json es = Json::array();
    for (Edge e : copy.edge_set) es.push_back(edge_json(e));
    j["edges"] = es;
    j["vertex_map"] = copy.vertex_map;
    return j;
}

Json witness_json(const MonoCanonicalWitness& w) {
    Json j;
    j["colour"] = w.colour;
    j["base_copy"] = copy_json(w.base_copy);
    Json sel = Json::array();
    for (const auto& [base, verts] : w.selection)
        sel.push_back(Json{{"base_vertex", base}, {"blown_vertices", verts}});
    j["selection"] = sel;
    return j;
}

Json girth_json(const Girth& g) {
    Json j;
    j["finite"] = g.finite;
    j["value"] = g.finite ? Json(g.value) : Json(nullptr);
    return j;
}

Json clique_json(const ColouredClique& c) {
    Json j;
    j["order"] = c.order();
    j["colours"] = c.colours();
    Json vc = Json::array();
    for (int v = 0; v < c.order(); ++v) vc.push_back(c.vertex_colour(v));
    j["vertex_colours"] = vc;
    Json ec = Json::array();
    for (int u = 0; u < c.order(); ++u)
        for (int v = u + 1; v < c.order(); ++v) ec.push_back(Json::array({u, v, c.edge_colour(u, v)}));
    j["edge_colours"] = ec;
    return j;
}

Json detection_json(const Detection& d) {
    Json j;
    j["member_index"] = d.member_index;
    j["member"] = clique_json(d.member);
    j["embedding"] = d.embedding;
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Edge parse_edge_flag(const std::string& text) {
    std::istringstream in(text);
    int u, v;
    if (!(in >> u >> v) || u == v) throw InvalidInputError("expected an edge as \"u v\"");
    return Edge(u, v);
}

BlowupSpec load_spec_file(const std::string& path, int base_vertices) {
    BlowupSpec spec;
    spec.multiplicity.assign(base_vertices, 0);
    std::istringstream in(slurp(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t at = line.find_first_not_of(" \t\r");
        if (at == std::string::npos || line[at] == '#') continue;
        std::istringstream row(line);
        int x, m;
        if (!(row >> x >> m) || x < 0 || x >= base_vertices || m < 1)
            throw InvalidInputError(path + ": line " + std::to_string(lineno) +
                                    ": expected \"vertex multiplicity\"");
        spec.multiplicity[x] = m;
    }
    for (int x = 0; x < base_vertices; ++x)
        if (spec.multiplicity[x] == 0)
            throw InvalidInputError(path + ": vertex " + std::to_string(x) + " has no multiplicity");
    return spec;
}

std::map<int, int> load_f_table(const std::string& path) {
    std::map<int, int> table;
    std::istringstream in(slurp(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t at = line.find_first_not_of(" \t\r");
        if (at == std::string::npos || line[at] == '#') continue;
        std::istringstream row(line);
        int m, fm;
        if (!(row >> m >> fm))
            throw InvalidInputError(path + ": line " + std::to_string(lineno) + ": expected \"m f(m)\"");
        table[m] = fm;
    }
    return table;
}

struct Pending {
    Common common;
    std::string name;
    Json inputs = Json::object();
    std::function<void(Report&)> fill;
};

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"combinatorics of blowup Ramsey numbers, recolourings and unavoidable patterns",
                 "ramsey-lab"};
    app.require_subcommand(1);
    Pending job;

    // ---- arrows / minimal / blowup-ramsey ----------------------------------
    struct {
        std::string graph, target;
        int r = 2, t = 2, n_max = 6;
    } arr;

    CLI::App* c_arrows = app.add_subcommand("arrows", "does every r-colouring force the pattern");
    c_arrows->add_option("--graph", arr.graph, "host graph file")->required();
    c_arrows->add_option("--target", arr.target, "pattern graph file")->required();
    c_arrows->add_option("-r,--colours", arr.r, "number of colours")->required();
    job.common.attach(c_arrows);
    c_arrows->callback([&] {
        job.name = "arrows";
        job.inputs = {{"graph", arr.graph}, {"target", arr.target}, {"r", arr.r}};
        job.fill = [&](Report& rep) {
            ArrowingResult res =
                arrows(load_graph_file(arr.graph), load_graph_file(arr.target), arr.r,
                       job.common.limits());
            rep.payload["arrows"] = res.arrows;
            rep.payload["nodes"] = res.nodes_explored;
            if (res.witness) rep.payload["witness"] = colouring_json(*res.witness);
        };
    });

    CLI::App* c_minimal = app.add_subcommand("minimal", "is the host Ramsey-minimal for the pattern");
    c_minimal->add_option("--graph", arr.graph, "host graph file")->required();
    c_minimal->add_option("--target", arr.target, "pattern graph file")->required();
    c_minimal->add_option("-r,--colours", arr.r, "number of colours")->required();
    job.common.attach(c_minimal);
    c_minimal->callback([&] {
        job.name = "minimal";
        job.inputs = {{"graph", arr.graph}, {"target", arr.target}, {"r", arr.r}};
        job.fill = [&](Report& rep) {
            rep.payload["minimal"] = is_ramsey_minimal(
                load_graph_file(arr.graph), load_graph_file(arr.target), arr.r, job.common.limits());
        };
    });

    CLI::App* c_blowup = app.add_subcommand("blowup-ramsey", "least n with g[n] forcing pattern[t]");
    c_blowup->add_option("--graph", arr.graph, "ground graph file")->required();
    c_blowup->add_option("--target", arr.target, "pattern graph file")->required();
    c_blowup->add_option("-r,--colours", arr.r, "number of colours")->required();
    c_blowup->add_option("-t,--blowup", arr.t, "blowup size")->required();
    c_blowup->add_option("--n-max", arr.n_max, "search ceiling")->required();
    job.common.attach(c_blowup);
    c_blowup->callback([&] {
        job.name = "blowup-ramsey";
        job.inputs = {{"graph", arr.graph},
                      {"target", arr.target},
                      {"r", arr.r},
                      {"t", arr.t},
                      {"n_max", arr.n_max}};
        job.fill = [&](Report& rep) {
            BlowupRamseyQuery q{load_graph_file(arr.graph), load_graph_file(arr.target), arr.r,
                                arr.t, arr.n_max, job.common.limits()};
            std::uint64_t nodes = 0;
            std::optional<int> value = blowup_ramsey_number(q, &nodes);
            rep.payload["value"] = value ? Json(*value) : Json(nullptr);
            rep.payload["nodes"] = nodes;
        };
    });

    // ---- girth / check-3cc -------------------------------------------------
    struct {
        std::string graph, pattern, hypergraph, dump;
    } gir;

    CLI::App* c_girth = app.add_subcommand("girth", "girth of the copy hypergraph");
    c_girth->add_option("--graph", gir.graph, "host graph file");
    c_girth->add_option("--pattern", gir.pattern, "pattern graph file (with --graph)");
    c_girth->add_option("--hypergraph", gir.hypergraph, "raw hypergraph file instead");
    c_girth->add_option("--dump", gir.dump, "write the hypergraph to this path");
    job.common.attach(c_girth);
    c_girth->callback([&] {
        job.name = "girth";
        job.inputs = {{"graph", gir.graph}, {"pattern", gir.pattern}, {"hypergraph", gir.hypergraph}};
        job.fill = [&](Report& rep) {
            std::vector<std::vector<int>> hyperedges;
            if (!gir.hypergraph.empty()) {
                hyperedges = parse_hypergraph(slurp(gir.hypergraph));
            } else if (!gir.graph.empty() && !gir.pattern.empty()) {
                CopyHypergraph hg =
                    build_copy_hypergraph(load_graph_file(gir.pattern), load_graph_file(gir.graph));
                hyperedges = hg.hyperedges;
                rep.payload["copy_vertices"] = hg.vertices.size();
            } else {
                throw InvalidInputError("girth needs --hypergraph or both --graph and --pattern");
            }
            if (!gir.dump.empty()) {
                std::ofstream out(gir.dump);
                if (!out) throw InvalidInputError("cannot write " + gir.dump);
                out << hypergraph_to_text(hyperedges);
            }
            GirthResult res = girth_with_witness(hyperedges);
            rep.payload["hyperedges"] = hyperedges.size();
            rep.payload["girth"] = girth_json(res.girth);
            if (res.witness) {
                rep.payload["cycle"] = {{"hyperedges", res.witness->hyperedges},
                                        {"link_vertices", res.witness->link_vertices}};
            }
        };
    });

    std::string cc_graph;
    CLI::App* c_3cc = app.add_subcommand("check-3cc", "3-chromatic connectivity");
    c_3cc->add_option("--graph", cc_graph, "graph file")->required();
    job.common.attach(c_3cc);
    c_3cc->callback([&] {
        job.name = "check-3cc";
        job.inputs = {{"graph", cc_graph}};
        job.fill = [&](Report& rep) {
            rep.payload["three_chromatically_connected"] =
                is_3_chromatically_connected(load_graph_file(cc_graph));
        };
    });

    // ---- recolour / verify -------------------------------------------------
    struct {
        std::string graph, colouring, edge, out_colouring;
        int pivot = 0, s = 2, r = 2;
    } rec;

    CLI::App* c_rec = app.add_subcommand("recolour", "two-stage recolouring of g[s]");
    c_rec->add_option("--graph", rec.graph, "base graph file")->required();
    c_rec->add_option("--edge", rec.edge, "start edge \"u v\"")->required();
    c_rec->add_option("--pivot", rec.pivot, "pivot vertex")->required();
    c_rec->add_option("--colouring", rec.colouring, "base colouring file")->required();
    c_rec->add_option("-s,--steps", rec.s, "step count = blowup size")->required();
    c_rec->add_option("-r,--colours", rec.r, "number of colours");
    c_rec->add_option("--out-colouring", rec.out_colouring, "write the blown colouring here");
    job.common.attach(c_rec);
    c_rec->callback([&] {
        job.name = "recolour";
        job.inputs = {{"graph", rec.graph}, {"edge", rec.edge},           {"pivot", rec.pivot},
                      {"s", rec.s},         {"colouring", rec.colouring}, {"r", rec.r}};
        job.fill = [&](Report& rep) {
            Graph g = load_graph_file(rec.graph);
            EdgeColouring c0 = load_colouring_file(rec.colouring, g.vertex_count(), rec.r);
            try {
                StageOneTrace trace = stage_one(g, parse_edge_flag(rec.edge), rec.pivot, c0, rec.s);
                EdgeColouring blown = stage_two(trace);
                if (!rec.out_colouring.empty()) {
                    std::ofstream out(rec.out_colouring);
                    if (!out) throw InvalidInputError("cannot write " + rec.out_colouring);
                    out << colouring_to_text(blown);
                }
                RecolouringReport ver = verify_recolouring(g, rec.s, blown);
                std::vector<ClaimStepReport> claim = verify_claim_per_step(trace);
                rep.payload["ok"] = true;
                Json steps = Json::array();
                for (int i = 0; i <= trace.steps; ++i)
                    steps.push_back({{"recoloured", trace.recoloured[i].size()},
                                     {"monochromatic_triangles", trace.mono_triangles[i].size()}});
                rep.payload["trace"] = steps;
                rep.payload["verify_pass"] = ver.pass();
                rep.payload["verify_violations"] = ver.violations.size();
                Json cj = Json::array();
                for (const ClaimStepReport& cs : claim)
                    cj.push_back({{"step", cs.step}, {"pass", cs.pass}});
                rep.payload["claim_per_step"] = cj;
            } catch (const DisjointnessError& e) {
                rep.payload["ok"] = false;
                rep.payload["error"] = e.what();
                const DisjointnessViolation& v = *e.certificate.violation;
                Json sh = Json::array();
                for (Edge f : v.shared_edges) sh.push_back(edge_json(f));
                rep.payload["violation"] = {{"first", v.first.vertices},
                                            {"second", v.second.vertices},
                                            {"first_step", v.first_step},
                                            {"second_step", v.second_step},
                                            {"shared_edges", sh}};
            }
        };
    });

    struct {
        std::string graph, colouring;
        int s = 2, r = 2;
    } ver;

    CLI::App* c_verify = app.add_subcommand("verify", "list monochromatic canonical K_3[2] in g[s]");
    c_verify->add_option("--graph", ver.graph, "base graph file")->required();
    c_verify->add_option("-s,--steps", ver.s, "blowup size")->required();
    c_verify->add_option("--colouring", ver.colouring, "colouring of g[s]")->required();
    c_verify->add_option("-r,--colours", ver.r, "number of colours");
    job.common.attach(c_verify);
    c_verify->callback([&] {
        job.name = "verify";
        job.inputs = {{"graph", ver.graph}, {"s", ver.s}, {"colouring", ver.colouring}, {"r", ver.r}};
        job.fill = [&](Report& rep) {
            Graph g = load_graph_file(ver.graph);
            BlownGraph bl = blowup(g, BlowupSpec::uniform(g.vertex_count(), ver.s));
            EdgeColouring c = load_colouring_file(ver.colouring, bl.graph.vertex_count(), ver.r);
            RecolouringReport res = verify_recolouring(g, ver.s, c);
            rep.payload["pass"] = res.pass();
            Json vio = Json::array();
            for (const MonoCanonicalWitness& w : res.violations) vio.push_back(witness_json(w));
            rep.payload["violations"] = vio;
        };
    });

    // ---- unavoidable -------------------------------------------------------
    CLI::App* c_unav = app.add_subcommand("unavoidable", "colour pattern machinery");
    c_unav->require_subcommand(1);
    struct {
        int r = 2, t = 2, n = 0, set_size = 4, trials = 50;
        long long min_edges = 0;
        std::string graph, colouring, sizes;
        int ell = 0;
    } un;

    CLI::App* c_enum = c_unav->add_subcommand("enumerate", "r-minimal coloured cliques");
    c_enum->add_option("-r,--colours", un.r)->required();
    job.common.attach(c_enum);
    c_enum->callback([&] {
        job.name = "unavoidable enumerate";
        job.inputs = {{"r", un.r}};
        job.fill = [&](Report& rep) {
            Json arr2 = Json::array();
            for (const ColouredClique& p : enumerate_r_minimal(un.r)) arr2.push_back(clique_json(p));
            rep.payload["count"] = arr2.size();
            rep.payload["minimal"] = arr2;
        };
    });

    CLI::App* c_family = c_unav->add_subcommand("family", "the unavoidable family");
    c_family->add_option("-r,--colours", un.r)->required();
    c_family->add_option("-t,--blowup", un.t)->required();
    job.common.attach(c_family);
    c_family->callback([&] {
        job.name = "unavoidable family";
        job.inputs = {{"r", un.r}, {"t", un.t}};
        job.fill = [&](Report& rep) {
            UnavoidableFamily fam = unavoidable_family(un.r, un.t);
            Json arr2 = Json::array();
            for (const ColouredClique& m : fam.members) arr2.push_back(clique_json(m));
            rep.payload["count"] = arr2.size();
            rep.payload["members"] = arr2;
        };
    });

    CLI::App* c_detect = c_unav->add_subcommand("detect", "find a family member in a colouring");
    c_detect->add_option("-n,--vertices", un.n)->required();
    c_detect->add_option("-r,--colours", un.r)->required();
    c_detect->add_option("-t,--blowup", un.t)->required();
    c_detect->add_option("--colouring", un.colouring, "total colouring of K_n")->required();
    job.common.attach(c_detect);
    c_detect->callback([&] {
        job.name = "unavoidable detect";
        job.inputs = {{"n", un.n}, {"r", un.r}, {"t", un.t}, {"colouring", un.colouring}};
        job.fill = [&](Report& rep) {
            EdgeColouring host = load_colouring_file(un.colouring, un.n, un.r);
            std::optional<Detection> det = detect_unavoidable(host, un.r, un.t);
            rep.payload["found"] = det.has_value();
            if (det) rep.payload["detection"] = detection_json(*det);
        };
    });

    CLI::App* c_drc = c_unav->add_subcommand("drc", "dependent random choice rich set");
    c_drc->add_option("--graph", un.graph)->required();
    c_drc->add_option("-K,--set-size", un.set_size)->required();
    c_drc->add_option("-t,--subset", un.t)->required();
    c_drc->add_option("--trials", un.trials, "trial budget");
    job.common.attach(c_drc);
    c_drc->callback([&] {
        job.name = "unavoidable drc";
        job.inputs = {{"graph", un.graph}, {"K", un.set_size}, {"t", un.t}, {"trials", un.trials}};
        job.fill = [&](Report& rep) {
            Graph g = load_graph_file(un.graph);
            std::optional<RichSet> rich = drc_rich_set(g, un.set_size, un.t, job.common.seed, un.trials);
            rep.seeds.push_back(seed_string(job.common.seed));
            rep.payload["found"] = rich.has_value();
            if (rich) {
                rep.payload["s"] = rich->s;
                Json ns = Json::array();
                for (const auto& [xs, cx] : rich->neighbourhoods)
                    ns.push_back({{"subset", xs}, {"neighbourhood", cx}});
                rep.payload["neighbourhoods"] = ns;
                rep.payload["verified"] = rich_set_valid(g, *rich, un.set_size, un.t);
            }
        };
    });

    CLI::App* c_pipe = c_unav->add_subcommand("pipeline", "constructive unavoidable search");
    c_pipe->add_option("-n,--vertices", un.n)->required();
    c_pipe->add_option("-r,--colours", un.r)->required();
    c_pipe->add_option("-t,--blowup", un.t)->required();
    c_pipe->add_option("--colouring", un.colouring, "total colouring of K_n")->required();
    c_pipe->add_option("--sizes", un.sizes, "comma-separated |A_i| overrides");
    c_pipe->add_option("--ell", un.ell, "reserved neighbourhood size");
    job.common.attach(c_pipe);
    c_pipe->callback([&] {
        job.name = "unavoidable pipeline";
        job.inputs = {{"n", un.n},       {"r", un.r},         {"t", un.t},
                      {"sizes", un.sizes}, {"ell", un.ell},   {"colouring", un.colouring}};
        job.fill = [&](Report& rep) {
            EdgeColouring host = load_colouring_file(un.colouring, un.n, un.r);
            PipelineParams params;
            if (!un.sizes.empty()) {
                std::istringstream in(un.sizes);
                std::string tok;
                while (std::getline(in, tok, ',')) params.set_sizes.push_back(std::stoi(tok));
            }
            params.neighbourhood_size = un.ell;
            PipelineResult res = constructive_find(host, un.r, un.t, job.common.seed, params);
            rep.seeds.push_back(seed_string(job.common.seed));
            rep.payload["found"] = res.found.has_value();
            if (res.found) rep.payload["detection"] = detection_json(*res.found);
            if (!res.reason.empty()) rep.payload["reason"] = res.reason;
            rep.payload["log"] = res.log;
        };
    });

    CLI::App* c_exp = c_unav->add_subcommand("experiment", "seeded density experiment");
    c_exp->add_option("-n,--vertices", un.n)->required();
    c_exp->add_option("-r,--colours", un.r)->required();
    c_exp->add_option("-t,--blowup", un.t)->required();
    c_exp->add_option("--min-edges", un.min_edges, "minimum edges per colour")->required();
    c_exp->add_option("--trials", un.trials)->required();
    job.common.attach(c_exp);
    c_exp->callback([&] {
        job.name = "unavoidable experiment";
        job.inputs = {{"n", un.n},
                      {"r", un.r},
                      {"t", un.t},
                      {"min_edges", un.min_edges},
                      {"trials", un.trials}};
        job.fill = [&](Report& rep) {
            DensityExperimentConfig cfg;
            cfg.n = un.n;
            cfg.colours = un.r;
            cfg.t = un.t;
            cfg.min_edges_per_colour = un.min_edges;
            cfg.trials = un.trials;
            cfg.seed = job.common.seed;
            cfg.workers = job.common.workers;
            DensityExperimentReport res = density_experiment(cfg);
            rep.payload["effective_min"] = res.effective_min;
            rep.payload["adjusted"] = res.adjusted;
            rep.payload["success_fraction"] = res.success_fraction;
            Json trials = Json::array();
            Json times = Json::array();
            for (const TrialOutcome& t : res.trials) {
                trials.push_back({{"seed", seed_string(t.seed)},
                                  {"attempts", t.attempts},
                                  {"success", t.success},
                                  {"member_index", t.member_index}});
                times.push_back(t.detect_ms);
                rep.seeds.push_back(seed_string(t.seed));
            }
            rep.payload["trials"] = trials;
            rep.timings["trial_detect_ms"] = times;
            rep.timings["mean_detect_ms"] = res.mean_detect_ms;
        };
    });

    // ---- trees -------------------------------------------------------------
    CLI::App* c_trees = app.add_subcommand("trees", "tree blowup machinery");
    c_trees->require_subcommand(1);
    struct {
        std::string tree, graph, colouring, base_colouring, spec, f_table, instance, graphs;
        int colour = 0, r = 2, t = 2, n_max = 6;
    } tr;

    CLI::App* c_copies = c_trees->add_subcommand("copies", "possible monochromatic copies");
    c_copies->add_option("--tree", tr.tree)->required();
    c_copies->add_option("--graph", tr.graph)->required();
    c_copies->add_option("--colouring", tr.colouring, "partial colouring, u v c lines")->required();
    c_copies->add_option("--colour", tr.colour)->required();
    c_copies->add_option("-r,--colours", tr.r);
    job.common.attach(c_copies);
    c_copies->callback([&] {
        job.name = "trees copies";
        job.inputs = {{"tree", tr.tree},
                      {"graph", tr.graph},
                      {"colouring", tr.colouring},
                      {"colour", tr.colour}};
        job.fill = [&](Report& rep) {
            Graph host = load_graph_file(tr.graph);
            PartialColouring c = load_colouring_file(tr.colouring, host.vertex_count(), tr.r);
            std::vector<CopyEmbedding> copies =
                possible_monochromatic_copies(load_graph_file(tr.tree), host, c, tr.colour);
            rep.payload["count"] = copies.size();
            Json arr2 = Json::array();
            for (const CopyEmbedding& copy : copies) arr2.push_back(copy_json(copy));
            rep.payload["copies"] = arr2;
        };
    });

    CLI::App* c_coh = c_trees->add_subcommand("coherent", "f-coherence of a blowup colouring");
    c_coh->add_option("--graph", tr.graph, "base graph")->required();
    c_coh->add_option("--spec", tr.spec, "multiplicities, \"vertex m\" lines")->required();
    c_coh->add_option("--f-table", tr.f_table, "\"m f(m)\" lines")->required();
    c_coh->add_option("--base-colouring", tr.base_colouring, "partial base colouring")->required();
    c_coh->add_option("--colouring", tr.colouring, "total colouring of the blowup")->required();
    job.common.attach(c_coh);
    c_coh->callback([&] {
        job.name = "trees coherent";
        job.inputs = {{"graph", tr.graph},
                      {"spec", tr.spec},
                      {"f_table", tr.f_table},
                      {"base_colouring", tr.base_colouring},
                      {"colouring", tr.colouring}};
        job.fill = [&](Report& rep) {
            Graph base = load_graph_file(tr.graph);
            CoherenceSpec cs;
            cs.spec = load_spec_file(tr.spec, base.vertex_count());
            cs.f_table = load_f_table(tr.f_table);
            cs.base_colouring = load_colouring_file(tr.base_colouring, base.vertex_count(), 2);
            BlownGraph bl = blowup(base, cs.spec);
            EdgeColouring blown = load_colouring_file(tr.colouring, bl.graph.vertex_count(), 2);
            auto [ok, violation] = is_f_coherent(blown, base, cs);
            rep.payload["coherent"] = ok;
            if (violation) {
                rep.payload["violation"] = {{"base_edge", edge_json(violation->base_edge)},
                                            {"base_colour", violation->base_colour},
                                            {"left", violation->left},
                                            {"right", violation->right}};
            }
        };
    });

    CLI::App* c_lem = c_trees->add_subcommand("lemma32", "two-tree recombination witness");
    c_lem->add_option("--instance", tr.instance, "instance JSON")->required();
    job.common.attach(c_lem);
    c_lem->callback([&] {
        job.name = "trees lemma32";
        job.inputs = {{"instance", tr.instance}};
        job.fill = [&](Report& rep) {
            Json j = Json::parse(slurp(tr.instance), nullptr, true, true);
            auto graph_of = [](const Json& g) {
                std::vector<Edge> es;
                for (const auto& e : g.at("edges")) es.emplace_back(e.at(0), e.at(1));
                return Graph(g.at("n"), es);
            };
            Tree2Instance inst;
            inst.tree = graph_of(j.at("tree"));
            inst.subtree_vertices = j.at("subtree_vertices").get<std::vector<int>>();
            inst.attachment = Edge(j.at("attachment").at(0), j.at("attachment").at(1));
            inst.host = graph_of(j.at("host"));
            inst.colouring = EdgeColouring(inst.host.vertex_count(), 2);
            for (const auto& e : j.at("colouring")) inst.colouring.set(e.at(0), e.at(1), e.at(2));
            inst.z = j.at("z");
            for (const auto& m : j.at("copies"))
                inst.copy_maps.push_back(m.get<std::vector<int>>());
            std::optional<std::pair<int, int>> res = lemma_tree2_witness(inst);
            rep.payload["found"] = res.has_value();
            if (res) rep.payload["pair"] = Json::array({res->first, res->second});
        };
    });

    CLI::App* c_table = c_trees->add_subcommand("table", "blowup Ramsey numbers over ground graphs");
    c_table->add_option("--graphs", tr.graphs, "comma-separated ground graph files")->required();
    c_table->add_option("--tree", tr.tree)->required();
    c_table->add_option("-r,--colours", tr.r)->required();
    c_table->add_option("-t,--blowup", tr.t)->required();
    c_table->add_option("--n-max", tr.n_max)->required();
    job.common.attach(c_table);
    c_table->callback([&] {
        job.name = "trees table";
        job.inputs = {{"graphs", tr.graphs},
                      {"tree", tr.tree},
                      {"r", tr.r},
                      {"t", tr.t},
                      {"n_max", tr.n_max}};
        job.fill = [&](Report& rep) {
            std::vector<Graph> grounds;
            std::vector<std::string> names;
            std::istringstream in(tr.graphs);
            std::string tok;
            while (std::getline(in, tok, ',')) {
                names.push_back(tok);
                grounds.push_back(load_graph_file(tok));
            }
            std::vector<TreeTableRow> rows = tree_blowup_ramsey_table(
                grounds, load_graph_file(tr.tree), tr.r, tr.t, tr.n_max, job.common.limits());
            Json arr2 = Json::array();
            for (const TreeTableRow& row : rows)
                arr2.push_back({{"graph", names[row.index]},
                                {"applicable", row.applicable},
                                {"value", row.value ? Json(*row.value) : Json(nullptr)},
                                {"nodes", row.nodes}});
            rep.payload["rows"] = arr2;
        };
    });

    // ---- parse and run -----------------------------------------------------
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep;
    rep.subcommand = job.name;
    rep.inputs = job.inputs;
    rep.inputs["seed"] = seed_string(job.common.seed);
    rep.inputs["workers"] = resolve_workers(job.common.workers);

    auto start = std::chrono::steady_clock::now();
    try {
        job.fill(rep);
    } catch (const InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const RecolouringStructureError& e) {
        std::cerr << "structure: " << e.what() << "\n";
        return 2;
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    write_report(rep, job.common.output, job.common.format);
    return 0;
}

} // namespace rlab::cli
