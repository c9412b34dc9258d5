#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bidi/core.hpp"
#include "bidi/matching.hpp"

namespace bidi {

enum class Regime { trail, almost_path };
enum class WalkMode { trail, path, almost_path };

inline const char* walk_mode_name(WalkMode m) {
    switch (m) {
        case WalkMode::trail: return "trail";
        case WalkMode::path: return "path";
        case WalkMode::almost_path: return "almost-path";
    }
    return "?";
}

struct ReachResult {
    bool reachable = false;
    std::optional<Trail> witness;
};

namespace detail {

/// Perfect-matchability query on the trail gadget plus two apex nodes.
/// The source apex neighbours every half-edge at the root; the target apex
/// neighbours `target_nodes`. An augmenting path between the apexes decodes
/// to an r-trail.
inline ReachResult gadget_query(const RootedBidigraph& rb,
                                const std::vector<std::string>& target_nodes) {
    ReachResult out;
    if (target_nodes.empty()) return out;
    TrailGadget tg = build_trail_gadget(rb);

    std::vector<std::string> nodes = tg.graph.nodes();
    const std::string s = "apex^s", t = "apex^t";
    nodes.push_back(s);
    nodes.push_back(t);
    std::vector<UEdge> edges = tg.graph.edges();
    bool root_has_edges = false;
    for (const auto& id : rb.graph.edges_at(rb.root)) {
        edges.push_back(UEdge{"s^" + id, s, id + "@" + rb.root});
        root_has_edges = true;
    }
    if (!root_has_edges) return out;
    for (const auto& n : target_nodes) edges.push_back(UEdge{"t^" + n, t, n});

    UndirectedGraph h = UndirectedGraph::build(std::move(nodes), std::move(edges));
    auto path = find_augmenting_path(h, tg.matching, s);
    if (path.empty()) return out;
    require_internal(path.front() == s && path.back() == t, "gadget augmentation endpoints");
    require_internal(path.size() >= 4 && path.size() % 2 == 0, "gadget path shape");

    // Decode: interior nodes come in matched pairs (e,a)(e,b), giving the
    // oriented traversal a -> b.
    std::vector<std::pair<std::string, std::string>> hops;
    std::string cur = rb.root;
    for (std::size_t i = 1; i + 2 < path.size(); i += 2) {
        const auto& [e1, a] = tg.halfedge.at(path[i]);
        const auto& [e2, b] = tg.halfedge.at(path[i + 1]);
        require_internal(e1 == e2, "gadget pair spans one edge");
        require_internal(a == cur, "gadget walk is connected");
        hops.emplace_back(e1, b);
        cur = b;
    }
    Trail w = validate_trail(rb, rb.root, hops);
    require_internal(w.is_r_trail, "gadget walk is an r-trail");
    out.reachable = true;
    out.witness = std::move(w);
    return out;
}

}  // namespace detail

/// trail_reachable: is there an r-trail whose terminal edge is ve?
inline ReachResult trail_reachable(const RootedBidigraph& rb, const OrientedEdge& ve) {
    const EdgeRecord& e = rb.graph.edge(ve.edge);
    if (!(e.touches(ve.tail) && e.touches(ve.head) && ve.tail != ve.head))
        fail(Errc::broken_incidence, "not an orientation of edge " + ve.edge);
    auto res = detail::gadget_query(rb, {ve.edge + "@" + ve.head});
    if (res.reachable)
        require_internal(res.witness->steps.back() == ve, "witness terminal edge");
    return res;
}

/// trail_reachable_signed: is there an r-trail ending at v with sign alpha?
inline ReachResult trail_reachable_signed(const RootedBidigraph& rb, const SignedVertex& sv) {
    if (!rb.graph.has_vertex(sv.vertex)) fail(Errc::unknown_vertex, "no vertex named " + sv.vertex);
    if (sv.vertex == rb.root)
        fail(Errc::root_target, "use has_nontrivial_root_trail for the root");
    std::vector<std::string> targets;
    for (const auto& id : rb.graph.edges_at(sv.vertex))
        if (rb.graph.sign(id, sv.vertex) == sv.sign) targets.push_back(id + "@" + sv.vertex);
    auto res = detail::gadget_query(rb, targets);
    if (res.reachable) {
        require_internal(res.witness->last_vertex() == sv.vertex &&
                             res.witness->end_sign == sv.sign,
                         "witness arrival");
    }
    return res;
}

/// Nontrivial r-r trails (both trail ends at the root).
inline ReachResult has_nontrivial_root_trail(const RootedBidigraph& rb) {
    std::vector<std::string> targets;
    for (const auto& id : rb.graph.edges_at(rb.root)) targets.push_back(id + "@" + rb.root);
    auto res = detail::gadget_query(rb, targets);
    if (res.reachable)
        require_internal(res.witness->last_vertex() == rb.root && !res.witness->trivial(),
                         "root trail witness");
    return res;
}

/// path_exists: a path from x to y whose first edge has sign alpha at x and
/// whose last edge has sign beta at y. Decided on the matched graph by
/// partner deletion.
inline ReachResult path_exists(const BidirectedGraph& g, const SignedVertex& from,
                               const SignedVertex& to) {
    if (!g.has_vertex(from.vertex)) fail(Errc::unknown_vertex, "no vertex named " + from.vertex);
    if (!g.has_vertex(to.vertex)) fail(Errc::unknown_vertex, "no vertex named " + to.vertex);
    if (from.vertex == to.vertex) fail(Errc::same_vertex, "path endpoints coincide");

    MatchedGraph mg = to_matched_graph(g);
    auto alt = alternating_path_exists(mg, split_node(from.vertex, from.sign),
                                       split_node(to.vertex, to.sign));
    ReachResult out;
    if (!alt.exists) return out;

    // Decode the alternating path to a walk in the translated graph, then
    // contract subdivision vertices back to their original edges.
    std::vector<std::pair<std::string, std::string>> hops;
    std::string cur = from.vertex;
    for (std::size_t i = 0; i + 1 < alt.path.size(); i += 2) {
        auto id = mg.graph.edge_between(alt.path[i], alt.path[i + 1]);
        require_internal(id.has_value(), "decoded step uses an edge");
        const std::string& head = mg.node_origin.at(alt.path[i + 1]).vertex;
        if (mg.subdivision_of.count(head)) {
            // First half of a subdivided edge; the second half follows.
            continue;
        }
        std::string source_edge = mg.edge_origin.count(*id) ? mg.edge_origin.at(*id) : *id;
        hops.emplace_back(source_edge, head);
        cur = head;
    }
    Trail w = validate_trail(make_rooted(g, from.vertex), from.vertex, hops);
    require_internal(w.is_path && w.start_sign == from.sign && w.end_sign == to.sign &&
                         w.last_vertex() == to.vertex,
                     "path witness shape");
    out.reachable = true;
    out.witness = std::move(w);
    return out;
}

/// path_reachable: is there an r-path whose terminal edge is ve?
inline ReachResult path_reachable(const RootedBidigraph& rb, const OrientedEdge& ve) {
    const EdgeRecord& e = rb.graph.edge(ve.edge);
    if (!(e.touches(ve.tail) && e.touches(ve.head) && ve.tail != ve.head))
        fail(Errc::broken_incidence, "not an orientation of edge " + ve.edge);
    ReachResult out;
    if (ve.tail == rb.root) {
        out.reachable = true;
        out.witness = validate_trail(
            rb, rb.root, std::vector<std::pair<std::string, std::string>>{{ve.edge, ve.head}});
        return out;
    }
    if (ve.head == rb.root) return out;  // a path cannot re-enter the root

    BidirectedGraph reduced = erase_vertex(rb.graph, ve.head);
    if (!reduced.has_vertex(rb.root) || !reduced.has_vertex(ve.tail)) return out;
    Sign arrive = flip(e.sign_at(ve.tail));
    for (Sign g : {Sign::plus, Sign::minus}) {
        auto sub = path_exists(reduced, SignedVertex{rb.root, g}, SignedVertex{ve.tail, arrive});
        if (sub.reachable) {
            auto hops = std::vector<std::pair<std::string, std::string>>();
            for (const auto& s : sub.witness->steps) hops.emplace_back(s.edge, s.head);
            hops.emplace_back(ve.edge, ve.head);
            Trail w = validate_trail(rb, rb.root, hops);
            require_internal(w.is_path && w.is_r_trail, "r-path witness");
            out.reachable = true;
            out.witness = std::move(w);
            return out;
        }
    }
    return out;
}

/// almost_path_reachable: is there an r-almost-path whose terminal edge is
/// ve? The head may close back onto an earlier vertex.
inline ReachResult almost_path_reachable(const RootedBidigraph& rb, const OrientedEdge& ve) {
    const EdgeRecord& e = rb.graph.edge(ve.edge);
    if (!(e.touches(ve.tail) && e.touches(ve.head) && ve.tail != ve.head))
        fail(Errc::broken_incidence, "not an orientation of edge " + ve.edge);
    ReachResult out;
    if (ve.tail == rb.root) {
        out.reachable = true;
        out.witness = validate_trail(
            rb, rb.root, std::vector<std::pair<std::string, std::string>>{{ve.edge, ve.head}});
        return out;
    }
    BidirectedGraph reduced = erase_edge(rb.graph, ve.edge);
    Sign arrive = flip(e.sign_at(ve.tail));
    for (Sign g : {Sign::plus, Sign::minus}) {
        auto sub = path_exists(reduced, SignedVertex{rb.root, g}, SignedVertex{ve.tail, arrive});
        if (sub.reachable) {
            auto hops = std::vector<std::pair<std::string, std::string>>();
            for (const auto& s : sub.witness->steps) hops.emplace_back(s.edge, s.head);
            hops.emplace_back(ve.edge, ve.head);
            Trail w = validate_trail(rb, rb.root, hops);
            require_internal(w.is_almost_path && w.is_r_trail, "almost-path witness");
            out.reachable = true;
            out.witness = std::move(w);
            return out;
        }
    }
    return out;
}

/// Reachability of one orientation in one walk mode.
inline ReachResult oriented_reachable(const RootedBidigraph& rb, const OrientedEdge& ve,
                                      WalkMode mode) {
    switch (mode) {
        case WalkMode::trail: return trail_reachable(rb, ve);
        case WalkMode::path: return path_reachable(rb, ve);
        case WalkMode::almost_path: return almost_path_reachable(rb, ve);
    }
    fail(Errc::internal, "bad mode");
}

// ---------------------------------------------------------------------------
// Edge classification
// ---------------------------------------------------------------------------

enum class EdgeStatus { unreachable, directable, undirectable };

struct EdgeClassification {
    std::string edge;
    Regime regime = Regime::trail;
    EdgeStatus status = EdgeStatus::unreachable;
    std::optional<OrientedEdge> natural;  // present iff directable
};

inline EdgeClassification classify_edge(const RootedBidigraph& rb, const std::string& edge_id,
                                        Regime regime) {
    const EdgeRecord& e = rb.graph.edge(edge_id);
    auto [fwd, bwd] = orientations(e);
    WalkMode mode = regime == Regime::trail ? WalkMode::trail : WalkMode::almost_path;
    bool f = oriented_reachable(rb, fwd, mode).reachable;
    bool b = oriented_reachable(rb, bwd, mode).reachable;
    EdgeClassification c;
    c.edge = edge_id;
    c.regime = regime;
    if (f && b) {
        c.status = EdgeStatus::undirectable;
    } else if (f || b) {
        c.status = EdgeStatus::directable;
        c.natural = f ? fwd : bwd;
    } else {
        c.status = EdgeStatus::unreachable;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Plain vertices, cleanness, restriction
// ---------------------------------------------------------------------------

/// Is there an r-path arriving at v with sign alpha?
inline bool signed_path_arrival(const RootedBidigraph& rb, const SignedVertex& sv) {
    for (const auto& id : rb.graph.edges_at(sv.vertex)) {
        const EdgeRecord& e = rb.graph.edge(id);
        if (e.sign_at(sv.vertex) != sv.sign) continue;
        OrientedEdge into{id, e.other_end(sv.vertex), sv.vertex};
        if (path_reachable(rb, into).reachable) return true;
    }
    return false;
}

/// plain_vertices: non-root vertices missing some arrival sign.
inline std::vector<std::string> plain_vertices(const RootedBidigraph& rb) {
    std::vector<std::string> out;
    for (const auto& v : rb.graph.vertices()) {
        if (v == rb.root) continue;
        if (!signed_path_arrival(rb, {v, Sign::plus}) || !signed_path_arrival(rb, {v, Sign::minus}))
            out.push_back(v);
    }
    return out;
}

/// is_edge_clean: no edge incident with the root is trail-undirectable
/// (equivalently, no nontrivial r-r trail exists).
inline bool is_edge_clean(const RootedBidigraph& rb) {
    for (const auto& id : rb.graph.edges_at(rb.root))
        if (classify_edge(rb, id, Regime::trail).status == EdgeStatus::undirectable) return false;
    return true;
}

/// is_clean: no edge incident with the root is undirectable in the
/// almost-path regime (no nontrivial r-r almost path exists).
inline bool is_clean(const RootedBidigraph& rb) {
    for (const auto& id : rb.graph.edges_at(rb.root))
        if (classify_edge(rb, id, Regime::almost_path).status == EdgeStatus::undirectable)
            return false;
    return true;
}

/// Every edge reachable in the given mode?
inline bool is_reachable(const RootedBidigraph& rb, WalkMode mode) {
    for (const auto& e : rb.graph.edges()) {
        auto [fwd, bwd] = orientations(e);
        if (!oriented_reachable(rb, fwd, mode).reachable &&
            !oriented_reachable(rb, bwd, mode).reachable)
            return false;
    }
    return true;
}

/// restrict_graph: subgraph of the edges reachable in the given mode. All
/// vertices are kept; idempotent.
inline RootedBidigraph restrict_graph(const RootedBidigraph& rb, WalkMode mode) {
    std::set<std::string> keep;
    for (const auto& e : rb.graph.edges()) {
        auto [fwd, bwd] = orientations(e);
        if (oriented_reachable(rb, fwd, mode).reachable ||
            oriented_reachable(rb, bwd, mode).reachable)
            keep.insert(e.id);
    }
    return make_rooted(edge_subgraph(rb.graph, keep), rb.root);
}

}  // namespace bidi
