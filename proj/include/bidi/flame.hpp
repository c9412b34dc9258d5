#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bidi/connectivity.hpp"
#include "bidi/core.hpp"
#include "bidi/decomposition.hpp"
#include "bidi/digraph.hpp"
#include "bidi/reachability.hpp"

namespace bidi {

// ---------------------------------------------------------------------------
// Directed flames
// ---------------------------------------------------------------------------

/// directed_flame: deletes in-edges until every non-root in-degree equals
/// the local connectivity, verifying each deletion by recomputing all
/// connectivities. Deterministic order: vertices lexicographically,
/// in-arcs by id.
inline Digraph directed_flame(const Digraph& d, const std::string& root) {
    if (!d.has_vertex(root)) fail(Errc::unknown_vertex, "no vertex named " + root);
    std::map<std::string, int> want = all_lambdas(d, root);
    Digraph f = d;
    for (const auto& v : d.vertices()) {
        if (v == root) continue;
        while (static_cast<int>(f.in_degree(v)) > want.at(v)) {
            bool deleted = false;
            for (const auto& id : f.in_arcs(v)) {
                Digraph g = erase_arc(f, id);
                if (all_lambdas(g, root) == want) {
                    f = std::move(g);
                    deleted = true;
                    break;
                }
            }
            if (!deleted)
                fail(Errc::stalled_deletion, "no deletable in-arc at " + v);
        }
    }
    for (const auto& [v, lam] : want)
        require_internal(static_cast<int>(f.in_degree(v)) == lam, "flame degrees match");
    return f;
}

// ---------------------------------------------------------------------------
// Ear decompositions and spanning subgraphs
// ---------------------------------------------------------------------------

enum class EarKind { ear, bone };

struct EarStep {
    EarKind kind = EarKind::bone;
    Trail added;  // a bone is a single-step trail; an ear may close a cycle
};

struct EarDecomposition {
    BidirectedGraph base;
    std::string source;
    Sign source_sign = Sign::plus;
    std::vector<EarStep> steps;

    /// Vertex and edge sets after the first `upto` steps.
    std::pair<std::set<std::string>, std::set<std::string>> state_after(std::size_t upto) const {
        std::set<std::string> vs{source};
        std::set<std::string> es;
        for (std::size_t i = 0; i < upto && i < steps.size(); ++i) {
            for (const auto& v : steps[i].added.vertices()) vs.insert(v);
            for (const auto& s : steps[i].added.steps) es.insert(s.edge);
        }
        return {vs, es};
    }
};

/// Does a (v,alpha)-(w,beta) path exist? The sign-reach indicator.
inline bool sign_reach(const BidirectedGraph& g, const SignedVertex& from,
                       const SignedVertex& to) {
    if (from.vertex == to.vertex) return false;
    return path_exists(g, from, to).reachable;
}

/// ear_decomposition: grows accessible subgraphs from the signed source by
/// single ears and bones until the whole graph is covered.
inline EarDecomposition ear_decomposition(const BidirectedGraph& g, const SignedVertex& src) {
    if (!g.has_vertex(src.vertex)) fail(Errc::unknown_vertex, "no vertex named " + src.vertex);
    for (const auto& w : g.vertices()) {
        if (w == src.vertex) continue;
        if (!sign_reach(g, src, {w, Sign::plus}) && !sign_reach(g, src, {w, Sign::minus}))
            fail(Errc::not_spanning_reachable, "no source path reaches " + w);
    }

    EarDecomposition ed;
    ed.base = g;
    ed.source = src.vertex;
    ed.source_sign = src.sign;
    RootedBidigraph host = make_rooted(g, src.vertex);

    std::set<std::string> vs{src.vertex};
    std::set<std::string> es;

    auto first_sign_ok = [&](const Trail& t) {
        return t.trivial() || t.start_sign == src.sign;
    };

    while (vs.size() < g.vertex_count()) {
        // A source path leaving the current vertex set.
        std::optional<Trail> leaving;
        for (const auto& w : g.vertices()) {
            if (vs.count(w)) continue;
            for (Sign b : {Sign::plus, Sign::minus}) {
                auto r = path_exists(g, src, {w, b});
                if (r.reachable) {
                    leaving = *r.witness;
                    break;
                }
            }
            if (leaving) break;
        }
        require_internal(leaving && first_sign_ok(*leaving), "a leaving source path exists");

        // Cut the path at its first outside vertex.
        std::size_t cut = 0;
        while (cut < leaving->steps.size() && vs.count(leaving->steps[cut].head)) ++cut;
        require_internal(cut < leaving->steps.size(), "path leaves the current subgraph");
        const OrientedEdge bone_edge = leaving->steps[cut];
        const std::string& w = bone_edge.head;
        Sign beta = g.sign(bone_edge.edge, w);

        auto back = path_exists(g, src, {w, flip(beta)});
        if (!back.reachable) {
            Trail t = validate_trail(make_rooted(g, bone_edge.tail), bone_edge.tail,
                                     std::vector<OrientedEdge>{bone_edge});
            ed.steps.push_back(EarStep{EarKind::bone, t});
            vs.insert(w);
            es.insert(bone_edge.edge);
            continue;
        }

        // Ear: the suffix of the opposite-sign path from its last vertex in
        // the current set, closed by the cut edge back into the set.
        const Trail& q = *back.witness;
        std::size_t xpos = 0;  // index into q's vertex sequence
        auto qverts = q.vertices();
        for (std::size_t i = 0; i < qverts.size(); ++i)
            if (vs.count(qverts[i])) xpos = i;
        std::vector<OrientedEdge> ear_steps(q.steps.begin() + xpos, q.steps.end());
        ear_steps.push_back(bone_edge.reversed());
        Trail ear = validate_trail(make_rooted(g, qverts[xpos]), qverts[xpos], ear_steps);
        ed.steps.push_back(EarStep{EarKind::ear, ear});
        for (const auto& s : ear.steps) {
            vs.insert(s.head);
            es.insert(s.edge);
        }
        vs.insert(ear.start);
    }

    // All vertices covered: every remaining edge is a one-edge ear.
    for (const auto& e : g.edges()) {
        if (es.count(e.id)) continue;
        Trail t = validate_trail(make_rooted(g, std::min(e.u, e.v)), std::min(e.u, e.v),
                                 std::vector<OrientedEdge>{{e.id, std::min(e.u, e.v), std::max(e.u, e.v)}});
        ed.steps.push_back(EarStep{EarKind::ear, t});
        es.insert(e.id);
    }
    auto [fv, fe] = ed.state_after(ed.steps.size());
    require_internal(fv.size() == g.vertex_count() && fe.size() == g.edge_count(),
                     "decomposition covers the graph");
    return ed;
}

/// spanning_subgraph: the prefix of the ear decomposition that first covers
/// all source-reachable vertices; its edge count is bounded by the number
/// of reachable signed vertices.
inline BidirectedGraph spanning_subgraph(const BidirectedGraph& g, const SignedVertex& src) {
    // Drop vertices with no source path; source paths never visit them.
    std::vector<std::string> keep_vs;
    for (const auto& w : g.vertices()) {
        if (w == src.vertex || sign_reach(g, src, {w, Sign::plus}) ||
            sign_reach(g, src, {w, Sign::minus}))
            keep_vs.push_back(w);
    }
    std::set<std::string> kept(keep_vs.begin(), keep_vs.end());
    std::vector<std::string> keep_es;
    for (const auto& e : g.edges())
        if (kept.count(e.u) && kept.count(e.v)) keep_es.push_back(e.id);
    BidirectedGraph res = subgraph(g, keep_vs, keep_es);

    EarDecomposition ed = ear_decomposition(res, src);
    std::size_t j = 0;
    while (j < ed.steps.size() && ed.state_after(j).first.size() < res.vertex_count()) ++j;
    auto [vs, es] = ed.state_after(j);
    require_internal(vs.size() == res.vertex_count(), "prefix spans all reachable vertices");

    int budget = 0;
    for (const auto& w : res.vertices()) {
        if (w == src.vertex) continue;
        for (Sign b : {Sign::plus, Sign::minus})
            if (sign_reach(g, src, {w, b})) ++budget;
    }
    require_internal(static_cast<int>(es.size()) <= budget, "spanning subgraph edge bound");
    return subgraph(res, {kept.begin(), kept.end()}, {es.begin(), es.end()});
}

// ---------------------------------------------------------------------------
// Bidirected flames
// ---------------------------------------------------------------------------

struct FlameReport {
    BidirectedGraph flame;
    bool pass = true;
    std::string first_violation;
    int edges = 0;
    int budget = 0;
    // (v, sign) -> (connectivity in the input, connectivity in the flame)
    std::map<SignedVertex, std::pair<int, int>> table;
};

enum class FlameKind { edge, vertex };

/// verify_flame: recomputes every signed connectivity in B and F and
/// checks the edge budget. Reports the first violation.
inline FlameReport verify_flame(const RootedBidigraph& rb, const BidirectedGraph& f,
                                FlameKind kind) {
    for (const auto& e : f.edges()) {
        if (!rb.graph.has_edge(e.id) || !(rb.graph.edge(e.id) == e))
            fail(Errc::not_subgraph, "edge " + e.id + " is not an edge of the host");
    }
    for (const auto& v : f.vertices())
        if (!rb.graph.has_vertex(v)) fail(Errc::not_subgraph, "vertex " + v + " is not in the host");

    BidirectedGraph full = f;
    if (f.vertex_count() != rb.graph.vertex_count()) {
        std::vector<std::string> es;
        for (const auto& e : f.edges()) es.push_back(e.id);
        full = subgraph(rb.graph, rb.graph.vertices(), es);
    }
    RootedBidigraph frb = make_rooted(full, rb.root);

    FlameReport rep;
    rep.flame = full;
    rep.edges = static_cast<int>(full.edge_count());
    auto connectivity = [&](const RootedBidigraph& host, const SignedVertex& sv) {
        return kind == FlameKind::edge ? lambda_signed(host, sv, WalkMode::path)
                                       : kappa_signed(host, sv);
    };
    for (const auto& v : rb.graph.vertices()) {
        if (v == rb.root) continue;
        for (Sign s : {Sign::plus, Sign::minus}) {
            int in_b = connectivity(rb, {v, s});
            int in_f = connectivity(frb, {v, s});
            rep.table[{v, s}] = {in_b, in_f};
            rep.budget += in_b;
            if (in_b != in_f && rep.pass) {
                rep.pass = false;
                rep.first_violation = "connectivity of (" + v + "," + sign_char(s) +
                                      ") drops from " + std::to_string(in_b) + " to " +
                                      std::to_string(in_f);
            }
        }
    }
    if (rep.pass && rep.edges > rep.budget) {
        rep.pass = false;
        rep.first_violation = "edge count " + std::to_string(rep.edges) + " exceeds budget " +
                              std::to_string(rep.budget);
    }
    return rep;
}

/// edge_flame: a directed flame on the trail skeleton of the path-reachable
/// restriction, together with a spanning subgraph of each component from
/// its entry signed vertex.
inline FlameReport edge_flame(const RootedBidigraph& rb) {
    if (!is_edge_clean(rb)) fail(Errc::not_edge_clean, "graph has a nontrivial r-r trail");

    RootedBidigraph bp = restrict_graph(rb, WalkMode::path);
    TrailDecomposition td = trail_skeleton(bp);
    Digraph fhat = directed_flame(td.skeleton, rb.root);

    std::set<std::string> keep;
    for (const auto& a : fhat.arcs()) keep.insert(a.id);
    for (const auto& c : td.components) {
        require_internal(!c.contains_root, "edge-clean graphs have no root component");
        Sign alpha = flip(bp.graph.sign(c.entry->edge, c.anchor));
        BidirectedGraph comp = subgraph(bp.graph, c.vertices, c.edges);
        BidirectedGraph span = spanning_subgraph(comp, {c.anchor, alpha});
        require_internal(span.vertex_count() == comp.vertex_count(),
                         "component is spanned from its anchor");
        for (const auto& e : span.edges()) keep.insert(e.id);
    }

    FlameReport rep = verify_flame(rb, edge_subgraph(rb.graph, keep), FlameKind::edge);
    require_internal(rep.pass, "edge flame verification: " + rep.first_violation);
    return rep;
}

/// vertex_flame: edge flame of the auxiliary graph, auxiliary edges
/// restored and contracted away.
inline FlameReport vertex_flame(const RootedBidigraph& rb) {
    if (!is_clean(rb)) fail(Errc::not_clean, "graph has a nontrivial r-r almost path");

    AuxiliaryGraph ag = auxiliary_graph(rb);
    FlameReport inner = edge_flame(ag.graph);
    std::set<std::string> keep;
    for (const auto& e : inner.flame.edges())
        if (!ag.is_aux(e.id)) keep.insert(e.id);

    FlameReport rep = verify_flame(rb, edge_subgraph(rb.graph, keep), FlameKind::vertex);
    require_internal(rep.pass, "vertex flame verification: " + rep.first_violation);
    return rep;
}

}  // namespace bidi
