// Command-line front end: analysis of rooted bidirected graphs in the
// canonical text format, with JSON output for machine use.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bidi/campaign.hpp"
#include "bidi/connectivity.hpp"
#include "bidi/core.hpp"
#include "bidi/decomposition.hpp"
#include "bidi/fixtures.hpp"
#include "bidi/flame.hpp"
#include "bidi/io.hpp"
#include "bidi/linkage.hpp"
#include "bidi/matching.hpp"
#include "bidi/oracle.hpp"
#include "bidi/reachability.hpp"

using nlohmann::json;

namespace {

bidi::RootedBidigraph load(const std::string& path) {
    std::ifstream in(path);
    if (!in) bidi::fail(bidi::Errc::parse_error, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return bidi::parse_text(buf.str());
}

json trail_json(const bidi::Trail& t) {
    json j = json::array();
    for (const auto& tok : bidi::sequence_from_trail(t)) j.push_back(tok);
    return j;
}

std::vector<bidi::Trail> load_family(const bidi::RootedBidigraph& rb, const std::string& path) {
    std::ifstream in(path);
    if (!in) bidi::fail(bidi::Errc::parse_error, "cannot open " + path);
    json j = json::parse(in, nullptr, true, true);
    std::vector<bidi::Trail> fam;
    for (const auto& seq : j.value("paths", json::array()))
        fam.push_back(bidi::trail_from_sequence(rb, seq.get<std::vector<std::string>>()));
    return fam;
}

json cut_json(const bidi::CutWitness& cw) {
    json j;
    j["X"] = cw.X;
    if (cw.kind == bidi::CutKind::vertex || cw.kind == bidi::CutKind::set_vertex) {
        j["epsilon"] = cw.boundary_vertices;
    } else {
        json edges = json::array();
        for (const auto& o : cw.boundary_edges)
            edges.push_back({{"edge", o.edge}, {"tail", o.tail}, {"head", o.head}});
        j["delta"] = edges;
    }
    return j;
}

bidi::WalkMode parse_mode(const std::string& m) {
    if (m == "trail") return bidi::WalkMode::trail;
    if (m == "path") return bidi::WalkMode::path;
    if (m == "almost-path") return bidi::WalkMode::almost_path;
    bidi::fail(bidi::Errc::parse_error, "unknown mode " + m);
}

int run_check(const std::string& file, bool edge_clean, bool clean, const std::string& reach) {
    auto rb = load(file);
    if (edge_clean)
        std::cout << "edge-clean: " << (bidi::is_edge_clean(rb) ? "true" : "false") << "\n";
    if (clean) std::cout << "clean: " << (bidi::is_clean(rb) ? "true" : "false") << "\n";
    if (!reach.empty()) {
        bool ok = bidi::is_reachable(rb, parse_mode(reach));
        std::cout << "reachable(" << reach << "): " << (ok ? "true" : "false") << "\n";
    }
    return 0;
}

int run_classify(const std::string& file, const std::string& regime, bool as_json) {
    auto rb = load(file);
    bidi::Regime r = regime == "trail" ? bidi::Regime::trail : bidi::Regime::almost_path;
    json rows = json::array();
    for (const auto& e : rb.graph.edges()) {
        auto c = bidi::classify_edge(rb, e.id, r);
        std::string status = c.status == bidi::EdgeStatus::unreachable   ? "unreachable"
                             : c.status == bidi::EdgeStatus::directable ? "directable"
                                                                        : "undirectable";
        std::string nat = c.natural ? c.natural->tail + ">" + c.natural->head : "-";
        if (as_json) {
            json row = {{"edge", e.id}, {"status", status}};
            if (c.natural) row["natural"] = {{"tail", c.natural->tail}, {"head", c.natural->head}};
            rows.push_back(row);
        } else {
            std::cout << e.id << "\t" << status << "\t" << nat << "\n";
        }
    }
    if (as_json) std::cout << json({{"regime", regime}, {"edges", rows}}).dump(2) << "\n";
    return 0;
}

json skeleton_sidecar(const bidi::TrailDecomposition& td) {
    json comps = json::array();
    for (const auto& c : td.components) {
        json jc;
        jc["vertices"] = c.vertices;
        jc["edges"] = c.edges;
        jc["anchor"] = c.anchor;
        jc["root_component"] = c.contains_root;
        if (c.entry) jc["entry"] = {{"edge", c.entry->edge}, {"tail", c.entry->tail},
                                    {"head", c.entry->head}};
        comps.push_back(jc);
    }
    json contraction = json::object();
    for (const auto& [v, img] : td.contraction) contraction[v] = img;
    return {{"components", comps}, {"contraction", contraction}};
}

json skeleton_sidecar(const bidi::VertexDecomposition& vd) {
    json comps = json::array();
    for (const auto& c : vd.components) {
        comps.push_back({{"vertices", c.vertices}, {"edges", c.edges}, {"anchor", c.anchor}});
    }
    json contraction = json::object();
    for (const auto& [v, img] : vd.contraction) contraction[v] = img;
    return {{"components", comps}, {"contraction", contraction}, {"plain", vd.plain}};
}

int run_skeleton(const std::string& file, const std::string& kind, bool normalize, bool as_json,
                 const std::string& sidecar_path) {
    auto rb = load(file);
    json sidecar;
    bidi::Digraph skel;
    if (kind == "trail") {
        auto td = bidi::trail_skeleton(bidi::restrict_graph(rb, bidi::WalkMode::trail));
        skel = td.skeleton;
        sidecar = skeleton_sidecar(td);
    } else {
        if (normalize) rb = bidi::normalize_for_skeleton(rb).graph;
        auto vd = bidi::vertex_skeleton(rb);
        skel = vd.skeleton;
        sidecar = skeleton_sidecar(vd);
    }
    if (as_json) {
        sidecar["dot"] = bidi::to_dot(skel);
        std::cout << sidecar.dump(2) << "\n";
    } else {
        std::cout << bidi::to_dot(skel);
    }
    if (!sidecar_path.empty()) {
        std::ofstream out(sidecar_path);
        out << sidecar.dump(2) << "\n";
    }
    return 0;
}

int run_menger(const std::string& file, const std::string& mode, const std::string& target,
               const std::vector<std::string>& sources, const std::vector<std::string>& sinks,
               bool as_json) {
    auto rb = load(file);
    json out;
    bidi::MengerResult res;
    if (mode == "edge-trail") {
        res = bidi::lambda_trail(rb, target);
    } else if (mode == "edge-path") {
        res = bidi::lambda_path(rb, target);
    } else if (mode == "vertex") {
        res = bidi::kappa(rb, target);
    } else if (mode == "set") {
        auto sm = bidi::set_menger(rb.graph, sources, sinks);
        out["value"] = sm.value;
        json fam = json::array();
        for (const auto& t : sm.family) fam.push_back(trail_json(t));
        out["family"] = fam;
        out["cut"] = {{"W", sm.W}, {"epsilon", sm.boundary}};
        if (as_json) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "value: " << sm.value << "\n";
            for (const auto& t : sm.family) std::cout << "path: " << t.to_string() << "\n";
            std::cout << "cut size: " << sm.boundary.size() << "\n";
        }
        return 0;
    } else {
        bidi::fail(bidi::Errc::parse_error, "unknown mode " + mode);
    }
    out["value"] = res.value;
    json fam = json::array();
    for (const auto& t : res.family) fam.push_back(trail_json(t));
    out["family"] = fam;
    if (res.cut) out["cut"] = cut_json(*res.cut);
    if (res.cut_withheld) out["cut_withheld"] = bidi::errc_name(*res.cut_withheld);
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "value: " << res.value << "\n";
        for (const auto& t : res.family) std::cout << "walk: " << t.to_string() << "\n";
        if (res.cut) {
            std::cout << "cut X:";
            for (const auto& v : res.cut->X) std::cout << " " << v;
            std::cout << "\n";
        }
        if (res.cut_withheld)
            std::cout << "cut withheld: " << bidi::errc_name(*res.cut_withheld) << "\n";
    }
    return 0;
}

json flame_report_json(const bidi::FlameReport& rep) {
    json tbl = json::object();
    for (const auto& [sv, pair] : rep.table) {
        tbl[sv.vertex + std::string(1, bidi::sign_char(sv.sign))] = {{"base", pair.first},
                                                                     {"flame", pair.second}};
    }
    return {{"pass", rep.pass},
            {"edges", rep.edges},
            {"budget", rep.budget},
            {"connectivities", tbl},
            {"first_violation", rep.first_violation}};
}

int run_flame(const std::string& file, const std::string& mode, bool verify, bool as_json) {
    auto rb = load(file);
    bidi::FlameReport rep =
        mode == "edge" ? bidi::edge_flame(rb) : bidi::vertex_flame(rb);
    if (verify) {
        rep = bidi::verify_flame(rb, rep.flame,
                                 mode == "edge" ? bidi::FlameKind::edge : bidi::FlameKind::vertex);
    }
    auto frb = bidi::make_rooted(rep.flame, rb.root);
    if (as_json) {
        json out = {{"flame", bidi::to_json(frb)}, {"report", flame_report_json(rep)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << bidi::serialize_text(frb);
        std::cout << "# report " << flame_report_json(rep).dump() << "\n";
    }
    return rep.pass ? 0 : 1;
}

int run_pym(const std::string& file, const std::string& mode, const std::string& target,
            const std::string& pfile, const std::string& qfile,
            const std::vector<std::string>& sources, const std::vector<std::string>& sinks) {
    auto rb = load(file);
    auto P = load_family(rb, pfile);
    auto Q = load_family(rb, qfile);
    std::vector<bidi::Trail> R;
    if (mode == "edge") {
        R = bidi::edge_pym(rb, target, P, Q);
    } else if (mode == "vertex") {
        R = bidi::vertex_pym(rb, target, P, Q);
    } else if (mode == "set") {
        R = bidi::set_pym(rb.graph, sources, sinks, P, Q);
    } else {
        bidi::fail(bidi::Errc::parse_error, "unknown mode " + mode);
    }
    json fam = json::array();
    for (const auto& t : R) fam.push_back(trail_json(t));
    std::cout << json({{"paths", fam}}).dump(2) << "\n";
    return 0;
}

int run_translate(const std::string& file, bool to_matching, bool from_matching) {
    if (to_matching) {
        auto rb = load(file);
        auto mg = bidi::to_matched_graph(rb.graph);
        json nodes = json::array();
        for (const auto& n : mg.graph.nodes()) nodes.push_back(n);
        json edges = json::array();
        for (const auto& e : mg.graph.edges())
            edges.push_back({{"id", e.id}, {"a", e.a}, {"b", e.b}});
        json prov = json::object();
        for (const auto& [node, origin] : mg.node_origin)
            prov[node] = {{"vertex", origin.vertex},
                          {"sign", std::string(1, bidi::sign_char(origin.sign))}};
        std::cout << json({{"version", 1},
                           {"nodes", nodes},
                           {"edges", edges},
                           {"matching", mg.matching},
                           {"provenance", prov}})
                         .dump(2)
                  << "\n";
        return 0;
    }
    if (from_matching) {
        std::ifstream in(file);
        if (!in) bidi::fail(bidi::Errc::parse_error, "cannot open " + file);
        json j = json::parse(in, nullptr, true, true);
        std::vector<std::string> nodes;
        for (const auto& n : j.value("nodes", json::array())) nodes.push_back(n.get<std::string>());
        std::vector<bidi::UEdge> edges;
        for (const auto& e : j.at("edges"))
            edges.push_back(bidi::UEdge{e.at("id").get<std::string>(), e.at("a").get<std::string>(),
                                        e.at("b").get<std::string>()});
        auto g = bidi::UndirectedGraph::build(std::move(nodes), std::move(edges));
        auto b = bidi::from_matched_graph(g, j.at("matching").get<std::vector<std::string>>());
        // Unrooted by nature; emit with the lexicographically first vertex as root.
        std::cout << bidi::serialize_text(bidi::make_rooted(b, b.vertices().front()));
        return 0;
    }
    bidi::fail(bidi::Errc::parse_error, "choose --to-matching or --from-matching");
}

int run_oracle(const std::string& file, const std::string& op, const std::string& kind,
               const std::string& target, const std::string& sign) {
    auto rb = load(file);
    json out;
    std::optional<bidi::Sign> s;
    if (!sign.empty()) s = bidi::parse_sign(sign);
    if (op == "enumerate") {
        json walks = json::array();
        for (const auto& t : bidi::oracle::enumerate(rb, parse_mode(kind)))
            walks.push_back(trail_json(t));
        out = {{"kind", kind}, {"walks", walks}};
    } else if (op == "lambda") {
        auto r = bidi::oracle::bf_lambda(rb, target, parse_mode(kind), s);
        json fam = json::array();
        for (const auto& t : r.family) fam.push_back(trail_json(t));
        out = {{"value", r.value}, {"family", fam}};
    } else if (op == "kappa") {
        auto r = bidi::oracle::bf_kappa(rb, target, s);
        json fam = json::array();
        for (const auto& t : r.family) fam.push_back(trail_json(t));
        out = {{"value", r.value}, {"family", fam}};
    } else if (op == "mincut") {
        bidi::oracle::CutQuery q = kind == "trail"  ? bidi::oracle::CutQuery::edge_trail
                                   : kind == "path" ? bidi::oracle::CutQuery::edge_path
                                                    : bidi::oracle::CutQuery::vertex;
        auto r = bidi::oracle::bf_min_cut(rb, target, q);
        out = {{"value", r.value}, {"X", r.X}};
    } else {
        bidi::fail(bidi::Errc::parse_error, "unknown op " + op);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_campaign(int seeds, int max_n, const std::string& fixtures_dir, bool quick) {
    bidi::campaign::Params p;
    if (const char* env = std::getenv("BIDI_SEED")) p.master_seed = std::strtoull(env, nullptr, 10);
    p.reach_instances = seeds;
    p.matching_instances = seeds;
    p.max_n = max_n;
    if (quick) {
        p.reach_instances = 40;
        p.menger_instances = 20;
        p.vertex_menger_instances = 20;
        p.decomp_instances = 20;
        p.flame_instances = 10;
        p.pym_instances = 10;
        p.matching_instances = 50;
    }
    p.fixtures_dir = fixtures_dir;
    auto report = bidi::campaign::run(p);
    std::cout << report.render();
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rooted bidirected graph analysis"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "cleanness and reachability predicates");
    std::string check_file, check_reach;
    bool check_edge_clean = false, check_clean = false;
    check->add_flag("--edge-clean", check_edge_clean);
    check->add_flag("--clean", check_clean);
    check->add_option("--reachable", check_reach)->check(CLI::IsMember({"trail", "path", "almost-path"}));
    check->add_option("file", check_file)->required();

    // classify
    auto* classify = app.add_subcommand("classify", "per-edge directability table");
    std::string cls_file, cls_regime = "trail";
    bool cls_json = false;
    classify->add_option("--regime", cls_regime)->check(CLI::IsMember({"trail", "almost-path"}));
    classify->add_flag("--json", cls_json);
    classify->add_option("file", cls_file)->required();

    // skeleton
    auto* skeleton = app.add_subcommand("skeleton", "contracted directed skeleton as DOT");
    std::string sk_file, sk_kind = "trail", sk_sidecar;
    bool sk_norm = false, sk_json = false;
    skeleton->add_option("--kind", sk_kind)->check(CLI::IsMember({"trail", "path"}));
    skeleton->add_flag("--normalize", sk_norm);
    skeleton->add_flag("--json", sk_json);
    skeleton->add_option("--sidecar", sk_sidecar);
    skeleton->add_option("file", sk_file)->required();

    // menger
    auto* menger = app.add_subcommand("menger", "disjoint families with cut certificates");
    std::string mg_file, mg_mode, mg_target;
    std::vector<std::string> mg_sources, mg_sinks;
    bool mg_json = false;
    menger->add_option("--mode", mg_mode)
        ->required()
        ->check(CLI::IsMember({"edge-trail", "edge-path", "vertex", "set"}));
    menger->add_option("--target", mg_target);
    menger->add_option("--sources", mg_sources)->delimiter(',');
    menger->add_option("--sinks", mg_sinks)->delimiter(',');
    menger->add_flag("--json", mg_json);
    menger->add_option("file", mg_file)->required();

    // flame
    auto* flame = app.add_subcommand("flame", "connectivity-preserving sparse subgraphs");
    std::string fl_file, fl_mode;
    bool fl_verify = false, fl_json = false;
    flame->add_option("--mode", fl_mode)->required()->check(CLI::IsMember({"edge", "vertex"}));
    flame->add_flag("--verify", fl_verify);
    flame->add_flag("--json", fl_json);
    flame->add_option("file", fl_file)->required();

    // pym
    auto* pym = app.add_subcommand("pym", "linkages covering prescribed first/last edges");
    std::string py_file, py_mode, py_target, py_p, py_q;
    std::vector<std::string> py_sources, py_sinks;
    pym->add_option("--mode", py_mode)->required()->check(CLI::IsMember({"edge", "vertex", "set"}));
    pym->add_option("--target", py_target);
    pym->add_option("--family-p", py_p)->required();
    pym->add_option("--family-q", py_q)->required();
    pym->add_option("--sources", py_sources)->delimiter(',');
    pym->add_option("--sinks", py_sinks)->delimiter(',');
    pym->add_option("file", py_file)->required();

    // translate
    auto* translate = app.add_subcommand("translate", "bidirected <-> matched graph");
    std::string tr_file;
    bool tr_to = false, tr_from = false;
    translate->add_flag("--to-matching", tr_to);
    translate->add_flag("--from-matching", tr_from);
    translate->add_option("file", tr_file)->required();

    // oracle
    auto* orc = app.add_subcommand("oracle", "brute-force reference queries");
    std::string or_file, or_op, or_kind = "trail", or_target, or_sign;
    orc->add_option("--op", or_op)
        ->required()
        ->check(CLI::IsMember({"enumerate", "lambda", "kappa", "mincut"}));
    orc->add_option("--kind", or_kind)->check(CLI::IsMember({"trail", "path", "almost-path", "vertex"}));
    orc->add_option("--target", or_target);
    orc->add_option("--sign", or_sign)->check(CLI::IsMember({"+", "-"}));
    orc->add_option("file", or_file)->required();

    // campaign
    auto* camp = app.add_subcommand("campaign", "the full verification campaign");
    int cp_seeds = 500, cp_max_n = 7;
    std::string cp_fixtures;
    bool cp_quick = false;
    camp->add_option("--seeds", cp_seeds);
    camp->add_option("--max-n", cp_max_n);
    camp->add_option("--fixtures", cp_fixtures);
    camp->add_flag("--quick", cp_quick);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return run_check(check_file, check_edge_clean, check_clean, check_reach);
        if (*classify) return run_classify(cls_file, cls_regime, cls_json);
        if (*skeleton) return run_skeleton(sk_file, sk_kind, sk_norm, sk_json, sk_sidecar);
        if (*menger) return run_menger(mg_file, mg_mode, mg_target, mg_sources, mg_sinks, mg_json);
        if (*flame) return run_flame(fl_file, fl_mode, fl_verify, fl_json);
        if (*pym) return run_pym(py_file, py_mode, py_target, py_p, py_q, py_sources, py_sinks);
        if (*translate) return run_translate(tr_file, tr_to, tr_from);
        if (*orc) return run_oracle(or_file, or_op, or_kind, or_target, or_sign);
        if (*camp) return run_campaign(cp_seeds, cp_max_n, cp_fixtures, cp_quick);
    } catch (const bidi::Error& e) {
        nlohmann::json err = {{"error", bidi::errc_name(e.code())}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        nlohmann::json err = {{"error", "Internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 2;
}
