#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bidi/core.hpp"
#include "bidi/digraph.hpp"
#include "bidi/reachability.hpp"

namespace bidi {

// ---------------------------------------------------------------------------
// Trail-undirectable components with certificates
// ---------------------------------------------------------------------------

struct TrailComponent {
    std::vector<std::string> vertices;  // sorted
    std::vector<std::string> edges;     // sorted, the undirectable edges inside
    bool contains_root = false;
    std::optional<OrientedEdge> entry;  // natural orientation of the unique entry edge
    std::string anchor;                 // head of the entry edge, or the root

    // Witness trails. For a non-root component they start with the entry
    // edge and otherwise stay inside the component; for a root component
    // they start at the root and use component edges only.
    std::map<std::string, std::pair<Trail, Trail>> edge_witnesses;    // edge -> (fwd, bwd)
    std::map<std::string, std::pair<Trail, Trail>> vertex_witnesses;  // w -> (arrive-, arrive+)

    bool has_vertex(const std::string& v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
};

namespace detail {

struct EdgeTable {
    std::map<std::string, OrientedEdge> natural;  // directable edges
    std::set<std::string> undirectable;
};

inline EdgeTable classify_all(const RootedBidigraph& rb, Regime regime, Errc unreachable_error) {
    EdgeTable t;
    for (const auto& e : rb.graph.edges()) {
        EdgeClassification c = classify_edge(rb, e.id, regime);
        switch (c.status) {
            case EdgeStatus::unreachable:
                fail(unreachable_error, "edge " + e.id + " is not reachable");
            case EdgeStatus::directable:
                t.natural[e.id] = *c.natural;
                break;
            case EdgeStatus::undirectable:
                t.undirectable.insert(e.id);
                break;
        }
    }
    return t;
}

/// Connected components of an edge set, via shared endpoints.
inline std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
edge_components(const BidirectedGraph& g, const std::set<std::string>& edge_ids) {
    std::map<std::string, std::string> leader;  // union-find over vertices
    std::function<std::string(const std::string&)> find = [&](const std::string& v) {
        auto it = leader.find(v);
        if (it == leader.end() || it->second == v) {
            leader[v] = v;
            return v;
        }
        return leader[v] = find(it->second);
    };
    for (const auto& id : edge_ids) {
        const EdgeRecord& e = g.edge(id);
        leader[find(e.u)] = find(e.v);
    }
    std::map<std::string, std::pair<std::set<std::string>, std::vector<std::string>>> groups;
    for (const auto& id : edge_ids) {
        const EdgeRecord& e = g.edge(id);
        auto& grp = groups[find(e.u)];
        grp.first.insert(e.u);
        grp.first.insert(e.v);
        grp.second.push_back(id);
    }
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
    for (auto& [_, grp] : groups) {
        std::vector<std::string> vs(grp.first.begin(), grp.first.end());
        std::sort(grp.second.begin(), grp.second.end());
        out.push_back({std::move(vs), std::move(grp.second)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// trail_components: the nontrivial components of the trail-undirectable
/// subgraph, each with its entry edge, anchor and witness trails.
inline std::vector<TrailComponent> trail_components(const RootedBidigraph& rb) {
    detail::EdgeTable table = detail::classify_all(rb, Regime::trail, Errc::not_trail_reachable);

    std::vector<TrailComponent> comps;
    for (auto& [vs, es] : detail::edge_components(rb.graph, table.undirectable)) {
        TrailComponent c;
        c.vertices = std::move(vs);
        c.edges = std::move(es);
        c.contains_root = c.has_vertex(rb.root);

        // Every edge spanned by the component's vertices must itself be
        // undirectable and belong to the component.
        std::set<std::string> inside(c.edges.begin(), c.edges.end());
        for (const auto& e : rb.graph.edges())
            if (c.has_vertex(e.u) && c.has_vertex(e.v))
                require_internal(inside.count(e.id) != 0,
                                 "edge " + e.id + " spans a component but is not in it");

        RootedBidigraph h;  // certificate host
        if (c.contains_root) {
            for (const auto& [id, nat] : table.natural)
                require_internal(!c.has_vertex(nat.head),
                                 "directable edge enters the root component");
            c.anchor = rb.root;
            h = make_rooted(subgraph(rb.graph, c.vertices, c.edges), rb.root);
        } else {
            std::vector<OrientedEdge> entries;
            for (const auto& [id, nat] : table.natural)
                if (c.has_vertex(nat.head)) entries.push_back(nat);
            require_internal(entries.size() == 1, "component must have exactly one entry edge");
            c.entry = entries.front();
            c.anchor = c.entry->head;
            require_internal(!c.has_vertex(c.entry->tail), "entry edge tail lies outside");
            std::vector<std::string> hv = c.vertices;
            hv.push_back(c.entry->tail);
            std::vector<std::string> he = c.edges;
            he.push_back(c.entry->edge);
            h = make_rooted(subgraph(rb.graph, hv, he), c.entry->tail);
        }

        for (const auto& id : c.edges) {
            auto [fwd, bwd] = orientations(rb.graph.edge(id));
            auto rf = trail_reachable(h, fwd);
            auto rbk = trail_reachable(h, bwd);
            require_internal(rf.reachable && rbk.reachable, "missing edge witness in component");
            c.edge_witnesses[id] = {*rf.witness, *rbk.witness};
        }
        for (const auto& w : c.vertices) {
            if (w == h.root) continue;  // root component: signed witnesses for w != r
            auto rm = trail_reachable_signed(h, {w, Sign::minus});
            auto rp = trail_reachable_signed(h, {w, Sign::plus});
            require_internal(rm.reachable && rp.reachable, "missing vertex witness in component");
            c.vertex_witnesses[w] = {*rm.witness, *rp.witness};
        }
        comps.push_back(std::move(c));
    }
    return comps;
}

// ---------------------------------------------------------------------------
// Trail decomposition (skeleton + projection/lifting)
// ---------------------------------------------------------------------------

struct TrailDecomposition {
    RootedBidigraph base;
    std::vector<TrailComponent> components;
    Digraph skeleton;                              // arcs keep the base edge ids
    std::map<std::string, std::string> contraction;  // base vertex -> skeleton vertex
    std::map<std::string, OrientedEdge> natural;   // directable base edges
    std::map<std::string, int> component_of;       // base vertex -> index, if inside one

    const std::string& root() const { return base.root; }
};

inline TrailDecomposition trail_skeleton(const RootedBidigraph& rb) {
    TrailDecomposition td;
    td.base = rb;
    td.components = trail_components(rb);
    td.natural = detail::classify_all(rb, Regime::trail, Errc::not_trail_reachable).natural;

    for (std::size_t i = 0; i < td.components.size(); ++i)
        for (const auto& v : td.components[i].vertices)
            td.component_of[v] = static_cast<int>(i);

    std::set<std::string> solid;
    for (const auto& v : rb.graph.vertices()) {
        auto it = td.component_of.find(v);
        if (it == td.component_of.end() || td.components[it->second].anchor == v)
            solid.insert(v);
    }
    for (const auto& v : rb.graph.vertices())
        td.contraction[v] = td.component_of.count(v)
                                ? td.components[td.component_of.at(v)].anchor
                                : v;

    std::vector<Arc> arcs;
    for (const auto& [id, nat] : td.natural)
        arcs.push_back(Arc{id, td.contraction.at(nat.tail), td.contraction.at(nat.head)});
    td.skeleton = Digraph::build({solid.begin(), solid.end()}, std::move(arcs));

    require_internal(td.skeleton.in_degree(rb.root) == 0, "skeleton root has in-arcs");
    for (const auto& c : td.components) {
        if (c.contains_root) continue;
        const auto& in = td.skeleton.in_arcs(c.anchor);
        require_internal(in.size() == 1 && in.front() == c.entry->edge,
                         "anchor in-degree must be one via the entry edge");
    }
    return td;
}

/// project_trail: the skeleton walk following the directable edges of T in
/// order of appearance.
inline DiWalk project_trail(const TrailDecomposition& td, const Trail& t) {
    Trail checked = validate_trail(td.base, t.start, t.steps);
    if (!checked.is_r_trail) fail(Errc::invalid_trail, "input is not an r-trail");
    DiWalk s{td.root(), {}};
    for (const auto& step : checked.steps) {
        auto it = td.natural.find(step.edge);
        if (it == td.natural.end()) continue;  // undirectable, contracted away
        require_internal(it->second == step, "directable edge traversed against its orientation");
        s.arcs.push_back(step.edge);
    }
    check_walk(td.skeleton, s, /*require_path=*/false);
    for (std::size_t i = 0; i + 1 < s.arcs.size(); ++i)
        require_internal(td.skeleton.arc(s.arcs[i]).head != td.root(),
                         "projection revisits the root");
    return s;
}

namespace detail {

/// Connector inside a component: a walk from the anchor to `to`, arriving
/// with sign `arrive`, taken from the component witnesses. For a non-root
/// component the entry edge is stripped from the witness.
inline std::vector<std::pair<std::string, std::string>> component_connector(
    const RootedBidigraph& base, const TrailComponent& c, const std::string& to, Sign arrive) {
    RootedBidigraph h;
    bool strip_entry = false;
    if (c.contains_root) {
        h = make_rooted(subgraph(base.graph, c.vertices, c.edges), base.root);
    } else {
        std::vector<std::string> hv = c.vertices;
        hv.push_back(c.entry->tail);
        std::vector<std::string> he = c.edges;
        he.push_back(c.entry->edge);
        h = make_rooted(subgraph(base.graph, hv, he), c.entry->tail);
        strip_entry = true;
    }
    auto res = trail_reachable_signed(h, {to, arrive});
    require_internal(res.reachable, "component connector must exist");
    std::vector<std::pair<std::string, std::string>> hops;
    for (std::size_t i = strip_entry ? 1 : 0; i < res.witness->steps.size(); ++i)
        hops.emplace_back(res.witness->steps[i].edge, res.witness->steps[i].head);
    if (strip_entry)
        require_internal(res.witness->steps.front().edge == c.entry->edge,
                         "witness must start with the entry edge");
    return hops;
}

}  // namespace detail

/// lift_trail: an r-trail of the base whose projection is S. Gaps at
/// anchors are bridged by connector walks inside the components.
inline Trail lift_trail(const TrailDecomposition& td, const DiWalk& s) {
    check_walk(td.skeleton, s, /*require_path=*/false);
    if (s.start != td.root()) fail(Errc::invalid_trail, "skeleton walk must start at the root");

    std::vector<std::pair<std::string, std::string>> hops;
    std::string cur = td.root();
    std::optional<Sign> arrived;
    for (const auto& id : s.arcs) {
        const OrientedEdge& nat = td.natural.at(id);
        Sign depart = td.base.graph.sign(id, nat.tail);
        bool direct = nat.tail == cur && (!arrived || *arrived == flip(depart));
        if (!direct) {
            auto it = td.component_of.find(nat.tail);
            require_internal(it != td.component_of.end(), "gap tail must lie in a component");
            const TrailComponent& c = td.components[it->second];
            require_internal(c.anchor == cur, "gap must start at the component anchor");
            for (auto& hop : detail::component_connector(td.base, c, nat.tail, flip(depart)))
                hops.push_back(std::move(hop));
        }
        hops.emplace_back(id, nat.head);
        cur = nat.head;
        arrived = td.base.graph.sign(id, nat.head);
    }
    Trail t = validate_trail(td.base, td.root(), hops);
    require_internal(t.is_r_trail, "lift must be an r-trail");
    require_internal(project_trail(td, t) == s, "projection of the lift must be the input");
    return t;
}

/// lift_path: an r-path of the base projecting to the skeleton path P.
/// Component segments are spliced from terminal-edge path witnesses.
inline Trail lift_path(const TrailDecomposition& td, const DiWalk& p) {
    try {
        check_walk(td.skeleton, p, /*require_path=*/true);
    } catch (const Error& e) {
        fail(Errc::invalid_path, e.what());
    }
    if (p.start != td.root()) fail(Errc::invalid_path, "skeleton path must start at the root");

    std::vector<std::pair<std::string, std::string>> hops;
    std::string cur = td.root();
    std::optional<Sign> arrived;
    for (const auto& id : p.arcs) {
        const OrientedEdge& nat = td.natural.at(id);
        Sign depart = td.base.graph.sign(id, nat.tail);
        bool direct = nat.tail == cur && (!arrived || *arrived == flip(depart));
        if (direct) {
            hops.emplace_back(id, nat.head);
        } else {
            auto res = path_reachable(td.base, nat);
            if (!res.reachable) fail(Errc::not_path_reachable, "edge " + id + " has no r-path");
            const Trail& w = *res.witness;
            std::size_t pos = 0;
            while (pos < w.steps.size() && w.steps[pos].tail != cur) ++pos;
            require_internal(pos < w.steps.size(), "path witness must pass the anchor");
            for (std::size_t i = pos; i < w.steps.size(); ++i)
                hops.emplace_back(w.steps[i].edge, w.steps[i].head);
        }
        cur = nat.head;
        arrived = td.base.graph.sign(id, nat.head);
    }
    Trail t = validate_trail(td.base, td.root(), hops);
    if (!t.is_path) fail(Errc::invalid_path, "lift is not vertex-distinct");
    require_internal(t.is_r_trail, "lift must be an r-path");
    require_internal(project_trail(td, t) == p, "projection of the lift must be the input");
    return t;
}

// ---------------------------------------------------------------------------
// Auxiliary graph a(B)
// ---------------------------------------------------------------------------

struct AuxiliaryGraph {
    RootedBidigraph graph;  // the split graph
    RootedBidigraph base;
    std::vector<std::string> plain;                       // split vertices of the base
    std::map<std::string, std::string> aux_edge_of;       // plain vertex -> aux edge id
    std::map<std::string, std::string> base_of;           // split node -> base vertex
    std::set<std::string> aux_ids;

    bool is_aux(const std::string& edge_id) const { return aux_ids.count(edge_id) != 0; }

    /// a(v): the nodes representing base vertex v.
    std::vector<std::string> nodes_of(const std::string& v) const {
        if (std::binary_search(plain.begin(), plain.end(), v))
            return {plus_node(v), minus_node(v)};
        return {v};
    }
};

inline std::string aux_edge_name(const std::string& v) { return "aux^" + v; }

/// auxiliary_graph: split each plain vertex v into v^+ / v^- joined by an
/// auxiliary edge signed + at v^- and - at v^+; edges keep their sign and
/// attach to the node of that sign.
inline AuxiliaryGraph auxiliary_graph(const RootedBidigraph& rb) {
    AuxiliaryGraph ag;
    ag.base = rb;
    ag.plain = plain_vertices(rb);
    std::set<std::string> plain(ag.plain.begin(), ag.plain.end());

    std::vector<std::string> vertices;
    std::vector<EdgeRecord> edges;
    for (const auto& v : rb.graph.vertices()) {
        if (!plain.count(v)) {
            vertices.push_back(v);
            continue;
        }
        for (Sign s : {Sign::plus, Sign::minus}) {
            std::string n = split_node(v, s);
            if (rb.graph.has_vertex(n))
                fail(Errc::name_collision, "split name " + n + " already a vertex");
            vertices.push_back(n);
            ag.base_of[n] = v;
        }
        std::string aid = aux_edge_name(v);
        if (rb.graph.has_edge(aid)) fail(Errc::name_collision, "edge name " + aid + " taken");
        edges.push_back(EdgeRecord{aid, plus_node(v), minus_node(v), Sign::minus, Sign::plus});
        ag.aux_edge_of[v] = aid;
        ag.aux_ids.insert(aid);
    }
    for (const auto& e : rb.graph.edges()) {
        EdgeRecord r = e;
        if (plain.count(r.u)) r.u = split_node(r.u, r.su);
        if (plain.count(r.v)) r.v = split_node(r.v, r.sv);
        edges.push_back(std::move(r));
    }
    ag.graph = make_rooted(build_graph(std::move(vertices), std::move(edges)), rb.root);
    return ag;
}

/// g_contract: contract auxiliary edges of a walk in a(B) back to the base.
inline Trail g_contract(const AuxiliaryGraph& ag, const Trail& t) {
    validate_trail(ag.graph, t.start, t.steps);
    auto debase = [&](const std::string& n) {
        auto it = ag.base_of.find(n);
        return it == ag.base_of.end() ? n : it->second;
    };
    std::vector<std::pair<std::string, std::string>> hops;
    for (const auto& s : t.steps) {
        if (ag.is_aux(s.edge)) continue;
        hops.emplace_back(s.edge, debase(s.head));
    }
    return validate_trail(ag.base, debase(t.start), hops);
}

/// g_inverse: insert split pairs along an r-path of the base, dropping a
/// trailing auxiliary edge; the result is a proper r-path of a(B).
inline Trail g_inverse(const AuxiliaryGraph& ag, const Trail& p) {
    Trail checked = validate_trail(ag.base, p.start, p.steps);
    if (!checked.is_path || !checked.is_r_trail) fail(Errc::not_a_path, "input must be an r-path");
    std::set<std::string> plain(ag.plain.begin(), ag.plain.end());
    require_internal(!plain.count(checked.start), "root is never split");

    std::vector<std::pair<std::string, std::string>> hops;
    for (std::size_t i = 0; i < checked.steps.size(); ++i) {
        const auto& s = checked.steps[i];
        if (!plain.count(s.head)) {
            hops.emplace_back(s.edge, s.head);
            continue;
        }
        Sign arrive = ag.base.graph.sign(s.edge, s.head);
        hops.emplace_back(s.edge, split_node(s.head, arrive));
        if (i + 1 < checked.steps.size())
            hops.emplace_back(ag.aux_edge_of.at(s.head), split_node(s.head, flip(arrive)));
    }
    Trail out = validate_trail(ag.graph, checked.start, hops);
    require_internal(out.is_path && out.is_r_trail, "lifted walk must be an r-path");
    require_internal(out.trivial() || !ag.is_aux(out.steps.back().edge), "result must be proper");
    require_internal(g_contract(ag, out) == checked, "contraction must recover the input");
    return out;
}

// ---------------------------------------------------------------------------
// Vertex decomposition (almost-path regime)
// ---------------------------------------------------------------------------

struct VertexDecomposition {
    RootedBidigraph base;
    std::vector<TrailComponent> components;  // undirectable components, no witnesses
    Digraph skeleton;
    std::map<std::string, std::string> contraction;
    std::map<std::string, OrientedEdge> natural;
    std::vector<std::string> plain;
};

/// vertex_skeleton: contract each undirectable component onto its unique
/// vertex in plain-or-root and orient the directable edges naturally.
inline VertexDecomposition vertex_skeleton(const RootedBidigraph& rb) {
    VertexDecomposition vd;
    vd.base = rb;
    vd.natural = detail::classify_all(rb, Regime::almost_path, Errc::not_reachable).natural;
    detail::EdgeTable table;
    for (const auto& e : rb.graph.edges())
        if (!vd.natural.count(e.id)) table.undirectable.insert(e.id);
    vd.plain = plain_vertices(rb);
    std::set<std::string> anchors_allowed(vd.plain.begin(), vd.plain.end());
    anchors_allowed.insert(rb.root);

    std::map<std::string, int> comp_of;
    for (auto& [vs, es] : detail::edge_components(rb.graph, table.undirectable)) {
        TrailComponent c;
        c.vertices = std::move(vs);
        c.edges = std::move(es);
        c.contains_root = c.has_vertex(rb.root);
        std::vector<std::string> anchors;
        for (const auto& v : c.vertices)
            if (anchors_allowed.count(v)) anchors.push_back(v);
        require_internal(anchors.size() == 1,
                         "undirectable component must contain a unique plain-or-root vertex");
        c.anchor = anchors.front();
        for (const auto& v : c.vertices) comp_of[v] = static_cast<int>(vd.components.size());
        vd.components.push_back(std::move(c));
    }

    std::set<std::string> solid;
    for (const auto& v : rb.graph.vertices()) {
        auto it = comp_of.find(v);
        if (it == comp_of.end() || vd.components[it->second].anchor == v) solid.insert(v);
        vd.contraction[v] =
            comp_of.count(v) ? vd.components[comp_of.at(v)].anchor : v;
    }
    // The skeleton vertex set is exactly plain-or-root.
    std::set<std::string> expected = anchors_allowed;
    require_internal(solid == expected, "skeleton vertex set must be the plain vertices plus root");

    std::vector<Arc> arcs;
    for (const auto& [id, nat] : vd.natural)
        arcs.push_back(Arc{id, vd.contraction.at(nat.tail), vd.contraction.at(nat.head)});
    vd.skeleton = Digraph::build({solid.begin(), solid.end()}, std::move(arcs));
    return vd;
}

inline std::vector<TrailComponent> vertex_components(const RootedBidigraph& rb) {
    return vertex_skeleton(rb).components;
}

// ---------------------------------------------------------------------------
// Sign-switch normalization and the skeleton correspondence
// ---------------------------------------------------------------------------

struct Normalization {
    RootedBidigraph graph;
    std::vector<std::string> switched;  // vertices switched, sorted
};

/// normalize_for_skeleton: switch signs at plain vertices until every
/// auxiliary edge of a(B) is naturally oriented from v^+ to v^-.
inline Normalization normalize_for_skeleton(const RootedBidigraph& rb) {
    detail::classify_all(rb, Regime::almost_path, Errc::not_reachable);
    AuxiliaryGraph ag = auxiliary_graph(rb);
    Normalization n;
    n.graph = rb;
    for (const auto& v : ag.plain) {
        if (rb.graph.edges_at(v).empty()) continue;  // switching an isolated vertex is a no-op
        EdgeClassification c = classify_edge(ag.graph, ag.aux_edge_of.at(v), Regime::trail);
        if (c.status == EdgeStatus::unreachable)
            fail(Errc::not_reachable, "auxiliary edge of " + v + " is unreachable");
        require_internal(c.status == EdgeStatus::directable, "auxiliary edge must be directable");
        if (c.natural->tail == minus_node(v)) n.switched.push_back(v);
    }
    for (const auto& v : n.switched) n.graph.graph = sign_switch(n.graph.graph, v);
    return n;
}

/// verify_correspondence: after normalization, splitting the vertex
/// skeleton (read as a bidirected graph, heads +, tails -) gives
/// node-for-node the trail skeleton of the auxiliary graph.
inline bool verify_correspondence(const RootedBidigraph& rb) {
    Normalization n = normalize_for_skeleton(rb);
    const RootedBidigraph& b = n.graph;

    // Left side: a(vertex skeleton). Every non-root skeleton vertex is
    // split (a digraph never has both arrival signs): out-arcs leave v^-,
    // in-arcs enter v^+, and the auxiliary arc runs v^+ -> v^-. A loop arc
    // of the skeleton is unlooped into v^- -> v^+ by the same rule.
    VertexDecomposition vd = vertex_skeleton(b);
    std::vector<std::string> lhs_vs{b.root};
    std::vector<Arc> lhs_arcs;
    for (const auto& v : vd.skeleton.vertices()) {
        if (v == b.root) continue;
        lhs_vs.push_back(plus_node(v));
        lhs_vs.push_back(minus_node(v));
        lhs_arcs.push_back(Arc{aux_edge_name(v), plus_node(v), minus_node(v)});
    }
    for (const auto& a : vd.skeleton.arcs()) {
        std::string tail = a.tail == b.root ? b.root : minus_node(a.tail);
        std::string head = a.head == b.root ? b.root : plus_node(a.head);
        lhs_arcs.push_back(Arc{a.id, tail, head});
    }
    Digraph lhs = Digraph::build(std::move(lhs_vs), std::move(lhs_arcs));

    // Right side: the trail skeleton of a(B).
    AuxiliaryGraph ag = auxiliary_graph(b);
    for (const auto& e : ag.graph.graph.edges()) {
        auto [fwd, bwd] = orientations(e);
        if (!trail_reachable(ag.graph, fwd).reachable && !trail_reachable(ag.graph, bwd).reachable)
            fail(Errc::not_reachable, "auxiliary graph is not trail-reachable");
    }
    Digraph rhs = trail_skeleton(ag.graph).skeleton;

    return lhs == rhs;
}

}  // namespace bidi
