#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bidi {

// ---------------------------------------------------------------------------
// Signs
// ---------------------------------------------------------------------------

enum class Sign { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

inline Sign parse_sign(const std::string& tok) {
    if (tok == "+") return Sign::plus;
    if (tok == "-") return Sign::minus;
    throw std::runtime_error("invalid sign token: " + tok);
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class Errc {
    loop_edge,
    unknown_vertex,
    unknown_edge,
    duplicate_edge_id,
    duplicate_vertex,
    broken_incidence,
    repeated_edge,
    sign_clash,
    junction_sign_clash,
    endpoint_mismatch,
    not_perfect_matching,
    not_simple,
    same_node,
    same_vertex,
    root_target,
    target_is_root,
    root_target_edge,
    not_trail_reachable,
    not_path_reachable,
    not_reachable,
    not_edge_clean,
    not_clean,
    invalid_trail,
    invalid_path,
    not_a_path,
    xx_path_exists,
    stalled_deletion,
    not_spanning_reachable,
    not_subgraph,
    invalid_family,
    infeasible_lower_bounds,
    too_large,
    constraint_unsatisfiable,
    reconstruction_failed,
    name_collision,
    parse_error,
    internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::loop_edge: return "LoopEdge";
        case Errc::unknown_vertex: return "UnknownVertex";
        case Errc::unknown_edge: return "UnknownEdge";
        case Errc::duplicate_edge_id: return "DuplicateEdgeId";
        case Errc::duplicate_vertex: return "DuplicateVertex";
        case Errc::broken_incidence: return "BrokenIncidence";
        case Errc::repeated_edge: return "RepeatedEdge";
        case Errc::sign_clash: return "SignClash";
        case Errc::junction_sign_clash: return "JunctionSignClash";
        case Errc::endpoint_mismatch: return "EndpointMismatch";
        case Errc::not_perfect_matching: return "NotPerfectMatching";
        case Errc::not_simple: return "NotSimple";
        case Errc::same_node: return "SameNode";
        case Errc::same_vertex: return "SameVertex";
        case Errc::root_target: return "RootTarget";
        case Errc::target_is_root: return "TargetIsRoot";
        case Errc::root_target_edge: return "RootTargetEdge";
        case Errc::not_trail_reachable: return "NotTrailReachable";
        case Errc::not_path_reachable: return "NotPathReachable";
        case Errc::not_reachable: return "NotReachable";
        case Errc::not_edge_clean: return "NotEdgeClean";
        case Errc::not_clean: return "NotClean";
        case Errc::invalid_trail: return "InvalidTrail";
        case Errc::invalid_path: return "InvalidPath";
        case Errc::not_a_path: return "NotAPath";
        case Errc::xx_path_exists: return "XXPathExists";
        case Errc::stalled_deletion: return "StalledDeletion";
        case Errc::not_spanning_reachable: return "NotSpanningReachable";
        case Errc::not_subgraph: return "NotSubgraph";
        case Errc::invalid_family: return "InvalidFamily";
        case Errc::infeasible_lower_bounds: return "InfeasibleLowerBounds";
        case Errc::too_large: return "TooLarge";
        case Errc::constraint_unsatisfiable: return "ConstraintUnsatisfiable";
        case Errc::reconstruction_failed: return "ReconstructionFailed";
        case Errc::name_collision: return "NameCollision";
        case Errc::parse_error: return "ParseError";
        case Errc::internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// Consistency checks for facts the construction itself guarantees.
inline void require_internal(bool cond, const std::string& what) {
    if (!cond) fail(Errc::internal, what);
}

// ---------------------------------------------------------------------------
// Graph model
// ---------------------------------------------------------------------------

/// One edge of a bidirected multigraph: endpoints u, v and a sign per end.
struct EdgeRecord {
    std::string id;
    std::string u;
    std::string v;
    Sign su = Sign::plus;
    Sign sv = Sign::plus;

    Sign sign_at(const std::string& w) const {
        if (w == u) return su;
        if (w == v) return sv;
        throw Error(Errc::broken_incidence, "vertex " + w + " not on edge " + id);
    }

    const std::string& other_end(const std::string& w) const {
        if (w == u) return v;
        if (w == v) return u;
        throw Error(Errc::broken_incidence, "vertex " + w + " not on edge " + id);
    }

    bool touches(const std::string& w) const { return w == u || w == v; }

    bool operator==(const EdgeRecord& o) const {
        return id == o.id && u == o.u && v == o.v && su == o.su && sv == o.sv;
    }
};

/// An edge together with a traversal direction.
struct OrientedEdge {
    std::string edge;
    std::string tail;
    std::string head;

    OrientedEdge reversed() const { return OrientedEdge{edge, head, tail}; }

    bool operator==(const OrientedEdge& o) const {
        return edge == o.edge && tail == o.tail && head == o.head;
    }
    bool operator<(const OrientedEdge& o) const {
        return std::tie(edge, tail, head) < std::tie(o.edge, o.tail, o.head);
    }
};

struct SignedVertex {
    std::string vertex;
    Sign sign = Sign::plus;

    bool operator==(const SignedVertex& o) const { return vertex == o.vertex && sign == o.sign; }
    bool operator<(const SignedVertex& o) const {
        return std::tie(vertex, sign) < std::tie(o.vertex, o.sign);
    }
};

/// Loopless signed multigraph. Immutable after construction; all edit helpers
/// below return new values. Vertices and edges are kept sorted so that every
/// traversal of the graph is deterministic.
class BidirectedGraph {
public:
    BidirectedGraph() = default;

    static BidirectedGraph build(std::vector<std::string> vertices,
                                 std::vector<EdgeRecord> edges) {
        BidirectedGraph g;
        std::set<std::string> vs(vertices.begin(), vertices.end());
        for (const auto& e : edges) {
            if (e.u == e.v) fail(Errc::loop_edge, "edge " + e.id + " is a loop at " + e.u);
            vs.insert(e.u);
            vs.insert(e.v);
        }
        g.vertices_.assign(vs.begin(), vs.end());
        std::sort(edges.begin(), edges.end(),
                  [](const EdgeRecord& a, const EdgeRecord& b) { return a.id < b.id; });
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            if (edges[i].id == edges[i + 1].id)
                fail(Errc::duplicate_edge_id, "edge id " + edges[i].id + " appears twice");
        g.edges_ = std::move(edges);
        g.reindex();
        return g;
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }

    bool has_vertex(const std::string& v) const { return vertex_index_.count(v) != 0; }
    bool has_edge(const std::string& id) const { return edge_index_.count(id) != 0; }

    const EdgeRecord& edge(const std::string& id) const {
        auto it = edge_index_.find(id);
        if (it == edge_index_.end()) fail(Errc::unknown_edge, "no edge named " + id);
        return edges_[it->second];
    }

    Sign sign(const std::string& edge_id, const std::string& at) const {
        return edge(edge_id).sign_at(at);
    }

    /// Edge ids incident with v, sorted.
    const std::vector<std::string>& edges_at(const std::string& v) const {
        auto it = adjacency_.find(v);
        if (it == adjacency_.end()) fail(Errc::unknown_vertex, "no vertex named " + v);
        return it->second;
    }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool operator==(const BidirectedGraph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    void reindex() {
        vertex_index_.clear();
        edge_index_.clear();
        adjacency_.clear();
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            vertex_index_[vertices_[i]] = static_cast<int>(i);
            adjacency_[vertices_[i]];
        }
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            edge_index_[edges_[i].id] = static_cast<int>(i);
            adjacency_[edges_[i].u].push_back(edges_[i].id);
            adjacency_[edges_[i].v].push_back(edges_[i].id);
        }
    }

    std::vector<std::string> vertices_;
    std::vector<EdgeRecord> edges_;
    std::map<std::string, int> vertex_index_;
    std::map<std::string, int> edge_index_;
    std::map<std::string, std::vector<std::string>> adjacency_;
};

struct RootedBidigraph {
    BidirectedGraph graph;
    std::string root;
};

inline RootedBidigraph make_rooted(BidirectedGraph g, std::string root) {
    if (!g.has_vertex(root)) fail(Errc::unknown_vertex, "root " + root + " not in graph");
    return RootedBidigraph{std::move(g), std::move(root)};
}

/// build_graph: validated construction from vertex and edge lists. Endpoints
/// of edges are implicitly declared as vertices.
inline BidirectedGraph build_graph(std::vector<std::string> vertices,
                                   std::vector<EdgeRecord> edges) {
    return BidirectedGraph::build(std::move(vertices), std::move(edges));
}

// --- graph edits (value-returning) -----------------------------------------

inline BidirectedGraph erase_edge(const BidirectedGraph& g, const std::string& edge_id) {
    g.edge(edge_id);
    std::vector<EdgeRecord> es;
    for (const auto& e : g.edges())
        if (e.id != edge_id) es.push_back(e);
    return BidirectedGraph::build(g.vertices(), std::move(es));
}

inline BidirectedGraph erase_vertex(const BidirectedGraph& g, const std::string& v) {
    if (!g.has_vertex(v)) fail(Errc::unknown_vertex, "no vertex named " + v);
    std::vector<std::string> vs;
    for (const auto& w : g.vertices())
        if (w != v) vs.push_back(w);
    std::vector<EdgeRecord> es;
    for (const auto& e : g.edges())
        if (!e.touches(v)) es.push_back(e);
    return BidirectedGraph::build(std::move(vs), std::move(es));
}

/// Subgraph with the given vertices and exactly the listed edges.
inline BidirectedGraph subgraph(const BidirectedGraph& g, const std::vector<std::string>& vertices,
                                const std::vector<std::string>& edge_ids) {
    std::vector<EdgeRecord> es;
    for (const auto& id : edge_ids) es.push_back(g.edge(id));
    return BidirectedGraph::build(vertices, std::move(es));
}

/// Keeps all vertices, drops every edge not in `keep`.
inline BidirectedGraph edge_subgraph(const BidirectedGraph& g, const std::set<std::string>& keep) {
    std::vector<EdgeRecord> es;
    for (const auto& e : g.edges())
        if (keep.count(e.id)) es.push_back(e);
    return BidirectedGraph::build(g.vertices(), std::move(es));
}

/// sign_switch: negate all half-edge signs at v. Involution; preserves the
/// set of valid walks.
inline BidirectedGraph sign_switch(const BidirectedGraph& g, const std::string& v) {
    if (!g.has_vertex(v)) fail(Errc::unknown_vertex, "no vertex named " + v);
    std::vector<EdgeRecord> es = g.edges();
    for (auto& e : es) {
        if (e.u == v) e.su = flip(e.su);
        if (e.v == v) e.sv = flip(e.sv);
    }
    return BidirectedGraph::build(g.vertices(), std::move(es));
}

/// All signed vertices over X; size 2|X|.
inline std::vector<SignedVertex> signed_vertices(const BidirectedGraph& g,
                                                 const std::vector<std::string>& xs) {
    std::vector<SignedVertex> out;
    for (const auto& v : xs) {
        if (!g.has_vertex(v)) fail(Errc::unknown_vertex, "no vertex named " + v);
        out.push_back({v, Sign::plus});
        out.push_back({v, Sign::minus});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Trails
// ---------------------------------------------------------------------------

/// A validated walk: start vertex plus oriented edges, with the consecutive
/// incidence, edge-distinctness and sign-alternation requirements already
/// checked. Classification flags are computed on validation.
struct Trail {
    std::string start;
    std::vector<OrientedEdge> steps;

    bool is_path = true;
    bool is_almost_path = true;
    bool is_r_trail = false;
    std::optional<Sign> start_sign;
    std::optional<Sign> end_sign;

    bool trivial() const { return steps.empty(); }
    std::size_t length() const { return steps.size(); }

    const std::string& last_vertex() const { return steps.empty() ? start : steps.back().head; }

    std::vector<std::string> vertices() const {
        std::vector<std::string> vs{start};
        for (const auto& s : steps) vs.push_back(s.head);
        return vs;
    }

    std::set<std::string> edge_set() const {
        std::set<std::string> es;
        for (const auto& s : steps) es.insert(s.edge);
        return es;
    }

    bool operator==(const Trail& o) const { return start == o.start && steps == o.steps; }

    std::string to_string() const {
        std::ostringstream os;
        os << start;
        for (const auto& s : steps) os << " " << s.edge << " " << s.head;
        return os.str();
    }
};

namespace detail {

inline void classify(const BidirectedGraph& g, const std::string& root, Trail& t) {
    std::set<std::string> seen{t.start};
    t.is_path = true;
    for (const auto& s : t.steps)
        if (!seen.insert(s.head).second) t.is_path = false;

    if (t.steps.empty()) {
        t.is_almost_path = true;
    } else {
        std::set<std::string> prefix{t.start};
        t.is_almost_path = true;
        for (std::size_t i = 0; i + 1 < t.steps.size(); ++i)
            if (!prefix.insert(t.steps[i].head).second) t.is_almost_path = false;
    }

    t.is_r_trail = (t.start == root);
    for (std::size_t i = 0; i + 1 < t.steps.size(); ++i)
        if (t.steps[i].head == root) t.is_r_trail = false;

    if (t.steps.empty()) {
        t.start_sign.reset();
        t.end_sign.reset();
    } else {
        t.start_sign = g.sign(t.steps.front().edge, t.start);
        t.end_sign = g.sign(t.steps.back().edge, t.steps.back().head);
    }
}

}  // namespace detail

/// validate_trail: checks a walk given as start vertex plus (edge, next
/// vertex) hops and returns it with classification flags. Fails with the
/// first violated invariant, scanning left to right.
inline Trail validate_trail(const RootedBidigraph& rb, const std::string& start,
                            const std::vector<std::pair<std::string, std::string>>& hops) {
    const BidirectedGraph& g = rb.graph;
    if (!g.has_vertex(start)) fail(Errc::unknown_vertex, "no vertex named " + start);

    Trail t;
    t.start = start;
    std::set<std::string> used;
    std::string cur = start;
    std::optional<Sign> arrival;

    for (std::size_t i = 0; i < hops.size(); ++i) {
        const auto& [eid, next] = hops[i];
        if (!g.has_edge(eid)) fail(Errc::unknown_edge, "no edge named " + eid);
        if (!g.has_vertex(next)) fail(Errc::unknown_vertex, "no vertex named " + next);
        const EdgeRecord& e = g.edge(eid);
        if (!(e.touches(cur) && e.touches(next) && cur != next))
            fail(Errc::broken_incidence,
                 "edge " + eid + " does not join " + cur + " and " + next + " at position " +
                     std::to_string(i + 1));
        if (!used.insert(eid).second)
            fail(Errc::repeated_edge, "edge " + eid + " repeated at position " + std::to_string(i + 1));
        Sign depart = e.sign_at(cur);
        if (arrival && depart != flip(*arrival))
            fail(Errc::sign_clash, "signs do not alternate at " + cur + " (position " +
                                       std::to_string(i + 1) + ")");
        t.steps.push_back(OrientedEdge{eid, cur, next});
        arrival = e.sign_at(next);
        cur = next;
    }

    detail::classify(g, rb.root, t);
    return t;
}

/// Validates a trail already in oriented-edge form.
inline Trail validate_trail(const RootedBidigraph& rb, const std::string& start,
                            const std::vector<OrientedEdge>& steps) {
    std::vector<std::pair<std::string, std::string>> hops;
    for (const auto& s : steps) hops.emplace_back(s.edge, s.head);
    return validate_trail(rb, start, hops);
}

/// reverse_trail: traverse backwards. An involution; flags are recomputed.
inline Trail reverse_trail(const RootedBidigraph& rb, const Trail& t) {
    std::vector<OrientedEdge> steps(t.steps.rbegin(), t.steps.rend());
    for (auto& s : steps) s = s.reversed();
    return validate_trail(rb, t.last_vertex(), steps);
}

/// concat: S followed by T. The junction vertex must match and the result
/// must again be a trail.
inline Trail concat(const RootedBidigraph& rb, const Trail& s, const Trail& t) {
    if (s.last_vertex() != t.start)
        fail(Errc::endpoint_mismatch,
             "cannot join trail ending at " + s.last_vertex() + " with trail starting at " + t.start);
    for (const auto& step : t.steps)
        if (s.edge_set().count(step.edge))
            fail(Errc::repeated_edge, "edge " + step.edge + " occurs in both trails");
    if (!s.steps.empty() && !t.steps.empty()) {
        Sign arrive = rb.graph.sign(s.steps.back().edge, s.last_vertex());
        Sign depart = rb.graph.sign(t.steps.front().edge, t.start);
        if (depart != flip(arrive))
            fail(Errc::junction_sign_clash, "signs do not alternate at " + t.start);
    }
    std::vector<OrientedEdge> steps = s.steps;
    steps.insert(steps.end(), t.steps.begin(), t.steps.end());
    return validate_trail(rb, s.start, steps);
}

/// Both orientations of an edge, for query loops.
inline std::pair<OrientedEdge, OrientedEdge> orientations(const EdgeRecord& e) {
    return {OrientedEdge{e.id, e.u, e.v}, OrientedEdge{e.id, e.v, e.u}};
}

// ---------------------------------------------------------------------------
// Isomorphism up to sign switches
// ---------------------------------------------------------------------------

/// Checks whether `a` mapped through `vertex_map` equals `b` up to a set of
/// sign switches (edge ids must correspond via `edge_map`). The usual notion
/// of equivalence for signed graphs; exact equality is the empty switch set.
inline bool switching_isomorphic(const BidirectedGraph& a, const BidirectedGraph& b,
                                 const std::map<std::string, std::string>& vertex_map,
                                 const std::map<std::string, std::string>& edge_map) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (const auto& v : a.vertices())
        if (!vertex_map.count(v) || !b.has_vertex(vertex_map.at(v))) return false;
    // switch_state[v]: 0 = keep, 1 = switched, -1 = undecided
    std::map<std::string, int> state;
    for (const auto& v : b.vertices()) state[v] = -1;
    for (const auto& e : a.edges()) {
        if (!edge_map.count(e.id)) return false;
        const std::string& bid = edge_map.at(e.id);
        if (!b.has_edge(bid)) return false;
        const EdgeRecord& f = b.edge(bid);
        const std::string mu = vertex_map.at(e.u);
        const std::string mv = vertex_map.at(e.v);
        if (!(f.touches(mu) && f.touches(mv) && mu != mv)) return false;
        for (const auto& [end, s] : {std::pair{e.u, e.su}, std::pair{e.v, e.sv}}) {
            const std::string m = vertex_map.at(end);
            int want = (f.sign_at(m) == s) ? 0 : 1;
            if (state[m] == -1)
                state[m] = want;
            else if (state[m] != want)
                return false;
        }
    }
    return true;
}

}  // namespace bidi
