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

namespace bidi {

// ---------------------------------------------------------------------------
// Directed linkage via a unit flow with lower bounds
// ---------------------------------------------------------------------------

namespace detail {

inline void validate_dipath_family(const Digraph& d, const std::string& root,
                                   const std::string& x, const std::vector<DiWalk>& fam) {
    std::set<std::string> used;
    for (const auto& p : fam) {
        try {
            check_walk(d, p, /*require_path=*/true);
        } catch (const Error& e) {
            fail(Errc::invalid_family, e.what());
        }
        if (p.start != root || walk_end(d, p) != x || p.arcs.empty())
            fail(Errc::invalid_family, "family member is not a nontrivial root-to-target path");
        for (const auto& id : p.arcs)
            if (!used.insert(id).second) fail(Errc::invalid_family, "family repeats arc " + id);
    }
}

}  // namespace detail

/// directed_edge_pym: arc-disjoint r-x paths covering the first arcs of P
/// and the last arcs of Q. Solved as a feasible circulation with lower
/// bound one on the covered arcs, then decomposed; stripped cycles never
/// touch root or target, so the covered arcs always survive.
inline std::vector<DiWalk> directed_edge_pym(const Digraph& d, const std::string& root,
                                             const std::string& x, const std::vector<DiWalk>& P,
                                             const std::vector<DiWalk>& Q) {
    if (!d.has_vertex(root)) fail(Errc::unknown_vertex, "no vertex named " + root);
    if (!d.has_vertex(x)) fail(Errc::unknown_vertex, "no vertex named " + x);
    if (root == x) fail(Errc::same_vertex, "target equals the root");
    detail::validate_dipath_family(d, root, x, P);
    detail::validate_dipath_family(d, root, x, Q);

    std::set<std::string> marked;
    for (const auto& p : P) marked.insert(p.arcs.front());
    for (const auto& q : Q) marked.insert(q.arcs.back());
    if (marked.empty()) return {};

    // Working digraph: in-arcs of the root and out-arcs of the target are
    // irrelevant for r-x paths and would admit flow cycles through them.
    std::vector<Arc> work;
    for (const auto& a : d.arcs()) {
        if (a.head == root || a.tail == x) {
            require_internal(!marked.count(a.id), "covered arcs lie on r-x paths");
            continue;
        }
        work.push_back(a);
    }

    // Feasibility network, all capacities one: unmarked arcs stay; each
    // marked arc (u,v) contributes source->v and u->sink; return arcs x->root
    // keep the circulation balanced.
    const std::string S = "lb^source", T = "lb^sink";
    std::vector<Arc> net;
    for (const auto& a : work)
        if (!marked.count(a.id)) net.push_back(a);
    for (const auto& id : marked) {
        const Arc& a = d.arc(id);
        net.push_back(Arc{"lbs^" + id, S, a.head});
        net.push_back(Arc{"lbt^" + id, a.tail, T});
    }
    for (std::size_t i = 0; i < d.arcs().size(); ++i)
        net.push_back(Arc{"ret^" + std::to_string(i), x, root});
    std::vector<std::string> net_vs = d.vertices();
    net_vs.push_back(S);
    net_vs.push_back(T);
    Digraph network = Digraph::build(std::move(net_vs), std::move(net));

    MaxflowResult mf = maxflow_paths(network, S, T);
    if (mf.value != static_cast<int>(marked.size()))
        fail(Errc::infeasible_lower_bounds, "no circulation covers all required arcs");

    // Arcs carrying flow in the original digraph.
    std::set<std::string> flowing = marked;
    for (const auto& p : mf.family)
        for (const auto& id : p.arcs)
            if (d.has_arc(id)) flowing.insert(id);

    // Decompose into r-x walks, stripping cycles (which avoid root and x).
    Digraph dwork = Digraph::build(d.vertices(), std::move(work));
    std::map<std::string, std::vector<std::string>> avail;
    for (const auto& a : dwork.arcs())
        if (flowing.count(a.id)) avail[a.tail].push_back(a.id);
    std::vector<DiWalk> R;
    while (!avail[root].empty()) {
        std::vector<std::string> vseq{root};
        std::vector<std::string> aseq;
        std::string cur = root;
        while (cur != x) {
            require_internal(!avail[cur].empty(), "linkage decomposition stalled at " + cur);
            std::string id = avail[cur].front();
            avail[cur].erase(avail[cur].begin());
            aseq.push_back(id);
            cur = dwork.arc(id).head;
            auto it = std::find(vseq.begin(), vseq.end(), cur);
            if (it != vseq.end()) {
                std::size_t keep = static_cast<std::size_t>(it - vseq.begin());
                vseq.resize(keep + 1);
                aseq.resize(keep);
                cur = vseq.back();
            } else {
                vseq.push_back(cur);
            }
        }
        DiWalk w{root, aseq};
        check_walk(dwork, w, /*require_path=*/true);
        R.push_back(std::move(w));
    }

    std::set<std::string> covered;
    for (const auto& w : R)
        for (const auto& id : w.arcs) covered.insert(id);
    for (const auto& id : marked)
        require_internal(covered.count(id) != 0, "required arc " + id + " is covered");
    return R;
}

// ---------------------------------------------------------------------------
// Bidirected edge linkage
// ---------------------------------------------------------------------------

namespace detail {

inline void validate_trail_family(const RootedBidigraph& rb, const std::vector<Trail>& fam,
                                  const std::string& x, bool vertex_disjoint) {
    std::set<std::string> used_edges;
    std::set<std::string> used_inner;
    for (const auto& t : fam) {
        Trail checked;
        try {
            checked = validate_trail(rb, t.start, t.steps);
        } catch (const Error& e) {
            fail(Errc::invalid_family, e.what());
        }
        if (!checked.is_path || !checked.is_r_trail || checked.start != rb.root ||
            checked.last_vertex() != x || checked.trivial())
            fail(Errc::invalid_family, "family member is not a nontrivial r-x path");
        for (const auto& s : checked.steps)
            if (!used_edges.insert(s.edge).second)
                fail(Errc::invalid_family, "family repeats edge " + s.edge);
        if (vertex_disjoint) {
            for (const auto& v : checked.vertices()) {
                if (v == rb.root || v == x) continue;
                if (!used_inner.insert(v).second)
                    fail(Errc::invalid_family, "family repeats vertex " + v);
            }
        }
    }
}

/// Position of the first arrival at `v` on a path, as an index into steps.
inline std::size_t arrival_index(const Trail& t, const std::string& v) {
    for (std::size_t i = 0; i < t.steps.size(); ++i)
        if (t.steps[i].head == v) return i;
    fail(Errc::internal, "path misses vertex " + v);
}

}  // namespace detail

/// edge_pym: edge-disjoint r-x paths covering the first edges of P and the
/// last edges of Q, routed through the trail skeleton.
inline std::vector<Trail> edge_pym(const RootedBidigraph& rb, const std::string& x,
                                   const std::vector<Trail>& P, const std::vector<Trail>& Q) {
    if (!rb.graph.has_vertex(x)) fail(Errc::unknown_vertex, "no vertex named " + x);
    if (x == rb.root) fail(Errc::target_is_root, "target equals the root");
    if (!is_edge_clean(rb)) fail(Errc::not_edge_clean, "graph has a nontrivial r-r trail");
    detail::validate_trail_family(rb, P, x, /*vertex_disjoint=*/false);
    detail::validate_trail_family(rb, Q, x, /*vertex_disjoint=*/false);

    RootedBidigraph bp = restrict_graph(rb, WalkMode::path);
    TrailDecomposition td = trail_skeleton(bp);

    if (const TrailComponent* c = detail::containing_component(td, x)) {
        require_internal(P.size() <= 1 && Q.size() <= 1, "component targets admit one path");
        if (P.empty() && Q.empty()) return {};
        if (P.empty()) return {Q.front()};
        if (Q.empty()) return {P.front()};
        // Splice: prefix of the P-path to the anchor, suffix of the Q-path
        // beyond it. Both pass the anchor through the unique entry edge.
        const Trail& p = P.front();
        const Trail& q = Q.front();
        std::size_t pi = detail::arrival_index(p, c->anchor);
        std::size_t qi = detail::arrival_index(q, c->anchor);
        std::vector<OrientedEdge> steps(p.steps.begin(), p.steps.begin() + pi + 1);
        steps.insert(steps.end(), q.steps.begin() + qi + 1, q.steps.end());
        Trail spliced = validate_trail(rb, rb.root, steps);
        require_internal(spliced.is_path && spliced.last_vertex() == x, "spliced r-x path");
        return {spliced};
    }

    auto project_family = [&](const std::vector<Trail>& fam) {
        std::vector<DiWalk> out;
        for (const auto& t : fam) {
            Trail in_bp = validate_trail(bp, t.start, t.steps);
            DiWalk w = project_trail(td, in_bp);
            check_walk(td.skeleton, w, /*require_path=*/true);
            require_internal(!w.arcs.empty() && w.arcs.front() == t.steps.front().edge &&
                                 w.arcs.back() == t.steps.back().edge,
                             "projection keeps the terminal edges");
            out.push_back(std::move(w));
        }
        return out;
    };
    std::vector<DiWalk> Pd = project_family(P);
    std::vector<DiWalk> Qd = project_family(Q);
    std::vector<DiWalk> Rd = directed_edge_pym(td.skeleton, rb.root, x, Pd, Qd);

    std::vector<Trail> R;
    for (const auto& w : Rd) R.push_back(lift_path(td, w));
    std::set<std::string> used;
    for (const auto& t : R)
        for (const auto& s : t.steps)
            require_internal(used.insert(s.edge).second, "linkage family shares an edge");
    std::set<std::string> firsts, lasts;
    for (const auto& t : R) {
        firsts.insert(t.steps.front().edge);
        lasts.insert(t.steps.back().edge);
    }
    for (const auto& t : P)
        require_internal(firsts.count(t.steps.front().edge) != 0, "first edges covered");
    for (const auto& t : Q)
        require_internal(lasts.count(t.steps.back().edge) != 0, "last edges covered");
    return R;
}

// ---------------------------------------------------------------------------
// Vertex and set linkage
// ---------------------------------------------------------------------------

/// vertex_pym: internally vertex-disjoint r-x paths containing the first
/// edges of P and the last edges of Q, via the auxiliary graph.
inline std::vector<Trail> vertex_pym(const RootedBidigraph& rb, const std::string& x,
                                     const std::vector<Trail>& P, const std::vector<Trail>& Q) {
    if (!rb.graph.has_vertex(x)) fail(Errc::unknown_vertex, "no vertex named " + x);
    if (x == rb.root) fail(Errc::target_is_root, "target equals the root");
    if (!is_clean(rb)) fail(Errc::not_clean, "graph has a nontrivial r-r almost path");
    detail::validate_trail_family(rb, P, x, /*vertex_disjoint=*/true);
    detail::validate_trail_family(rb, Q, x, /*vertex_disjoint=*/true);
    if (P.empty() && Q.empty()) return {};

    AuxiliaryGraph ag = auxiliary_graph(rb);
    bool x_plain = std::binary_search(ag.plain.begin(), ag.plain.end(), x);
    std::string xstar = x;
    if (x_plain)
        xstar = signed_path_arrival(rb, {x, Sign::minus}) ? minus_node(x) : plus_node(x);

    auto into_aux = [&](const std::vector<Trail>& fam) {
        std::vector<Trail> out;
        for (const auto& t : fam) {
            Trail lifted = g_inverse(ag, t);
            require_internal(lifted.last_vertex() == xstar, "lift ends at the split target");
            require_internal(lifted.steps.front().edge == t.steps.front().edge &&
                                 lifted.steps.back().edge == t.steps.back().edge,
                             "lift keeps the terminal edges");
            out.push_back(std::move(lifted));
        }
        return out;
    };
    std::vector<Trail> Ra = edge_pym(ag.graph, xstar, into_aux(P), into_aux(Q));

    std::vector<Trail> R;
    for (const auto& t : Ra) {
        require_internal(!ag.is_aux(t.steps.back().edge), "result paths are proper");
        Trail mapped = g_contract(ag, t);
        require_internal(mapped.is_path && mapped.last_vertex() == x, "mapped r-x path");
        R.push_back(std::move(mapped));
    }
    check_internally_disjoint(R, rb.root, x);
    std::set<std::string> firsts, lasts;
    for (const auto& t : R) {
        firsts.insert(t.steps.front().edge);
        lasts.insert(t.steps.back().edge);
    }
    for (const auto& t : P)
        require_internal(firsts.count(t.steps.front().edge) != 0, "first edges covered");
    for (const auto& t : Q)
        require_internal(lasts.count(t.steps.back().edge) != 0, "last edges covered");
    return R;
}

/// set_pym: vertex-disjoint X-Y paths whose first vertices cover those of P
/// and whose last vertices cover those of Q.
inline std::vector<Trail> set_pym(const BidirectedGraph& g, const std::vector<std::string>& Xv,
                                  const std::vector<std::string>& Yv, const std::vector<Trail>& P,
                                  const std::vector<Trail>& Q) {
    std::set<std::string> X(Xv.begin(), Xv.end()), Y(Yv.begin(), Yv.end());
    detail::check_no_xx_path(g, X);

    auto validate_xy_family = [&](const std::vector<Trail>& fam) {
        std::set<std::string> used;
        for (const auto& t : fam) {
            Trail checked;
            try {
                checked = validate_trail(make_rooted(g, t.start), t.start, t.steps);
            } catch (const Error& e) {
                fail(Errc::invalid_family, e.what());
            }
            if (!checked.is_path) fail(Errc::invalid_family, "family member is not a path");
            auto vs = checked.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i) {
                bool first = i == 0, last = i + 1 == vs.size();
                if (X.count(vs[i]) != static_cast<std::size_t>(first))
                    fail(Errc::invalid_family, "X visited away from the first vertex");
                if (Y.count(vs[i]) != static_cast<std::size_t>(last))
                    fail(Errc::invalid_family, "Y visited away from the last vertex");
                if (!used.insert(vs[i]).second)
                    fail(Errc::invalid_family, "family repeats vertex " + vs[i]);
            }
        }
    };
    validate_xy_family(P);
    validate_xy_family(Q);
    if (P.empty() && Q.empty()) return {};

    detail::ApexGraph ax = detail::build_apex(g, X, Y, /*normalize_y=*/true);
    require_internal(is_clean(ax.graph), "apex graph of an XX-path-free instance is clean");

    auto extend = [&](const std::vector<Trail>& fam) {
        std::vector<Trail> out;
        for (const auto& t : fam) {
            std::vector<std::pair<std::string, std::string>> hops;
            hops.emplace_back("apexr^" + t.start, t.start);
            for (const auto& s : t.steps) hops.emplace_back(s.edge, s.head);
            const std::string& y = t.last_vertex();
            hops.emplace_back(t.trivial() ? "apexz+^" + y : "apexz-^" + y, ax.sink);
            out.push_back(validate_trail(ax.graph, ax.source, hops));
        }
        return out;
    };
    std::vector<Trail> Rx = vertex_pym(ax.graph, ax.sink, extend(P), extend(Q));

    std::vector<Trail> R;
    std::set<std::string> used;
    for (const auto& t : Rx) {
        require_internal(t.steps.size() >= 2, "apex path has interior");
        std::string start = t.steps.front().head;
        std::vector<OrientedEdge> steps(t.steps.begin() + 1, t.steps.end() - 1);
        Trail stripped = validate_trail(make_rooted(g, start), start, steps);
        require_internal(X.count(stripped.start) == 1 && Y.count(stripped.last_vertex()) == 1,
                         "stripped member is an X-Y path");
        for (const auto& v : stripped.vertices())
            require_internal(used.insert(v).second, "X-Y family shares vertex " + v);
        R.push_back(std::move(stripped));
    }
    std::set<std::string> firsts, lasts;
    for (const auto& t : R) {
        firsts.insert(t.start);
        lasts.insert(t.last_vertex());
    }
    for (const auto& t : P) require_internal(firsts.count(t.start) != 0, "first vertices covered");
    for (const auto& t : Q)
        require_internal(lasts.count(t.last_vertex()) != 0, "last vertices covered");
    return R;
}

}  // namespace bidi
