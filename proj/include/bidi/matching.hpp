#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bidi/core.hpp"

namespace bidi {

// ---------------------------------------------------------------------------
// Simple undirected graphs (hosts for matchings)
// ---------------------------------------------------------------------------

struct UEdge {
    std::string id;
    std::string a;
    std::string b;
};

class UndirectedGraph {
public:
    UndirectedGraph() = default;

    static UndirectedGraph build(std::vector<std::string> nodes, std::vector<UEdge> edges) {
        UndirectedGraph g;
        std::set<std::string> ns(nodes.begin(), nodes.end());
        for (const auto& e : edges) {
            if (e.a == e.b) fail(Errc::not_simple, "loop at " + e.a);
            ns.insert(e.a);
            ns.insert(e.b);
        }
        g.nodes_.assign(ns.begin(), ns.end());
        std::sort(edges.begin(), edges.end(), [](const UEdge& x, const UEdge& y) { return x.id < y.id; });
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            if (edges[i].id == edges[i + 1].id)
                fail(Errc::duplicate_edge_id, "edge id " + edges[i].id + " appears twice");
        std::set<std::pair<std::string, std::string>> pairs;
        for (const auto& e : edges) {
            auto key = std::minmax(e.a, e.b);
            if (!pairs.insert({key.first, key.second}).second)
                fail(Errc::not_simple, "parallel edge between " + e.a + " and " + e.b);
        }
        g.edges_ = std::move(edges);
        g.reindex();
        return g;
    }

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<UEdge>& edges() const { return edges_; }

    bool has_node(const std::string& n) const { return node_index_.count(n) != 0; }

    int node_index(const std::string& n) const {
        auto it = node_index_.find(n);
        if (it == node_index_.end()) fail(Errc::unknown_vertex, "no node named " + n);
        return it->second;
    }

    const UEdge& edge(const std::string& id) const {
        auto it = edge_index_.find(id);
        if (it == edge_index_.end()) fail(Errc::unknown_edge, "no edge named " + id);
        return edges_[it->second];
    }

    /// Edge id joining a and b, if present.
    std::optional<std::string> edge_between(const std::string& a, const std::string& b) const {
        auto key = std::minmax(a, b);
        auto it = pair_index_.find({key.first, key.second});
        if (it == pair_index_.end()) return std::nullopt;
        return it->second;
    }

private:
    void reindex() {
        node_index_.clear();
        edge_index_.clear();
        pair_index_.clear();
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            node_index_[nodes_[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            edge_index_[edges_[i].id] = static_cast<int>(i);
            auto key = std::minmax(edges_[i].a, edges_[i].b);
            pair_index_[{key.first, key.second}] = edges_[i].id;
        }
    }

    std::vector<std::string> nodes_;
    std::vector<UEdge> edges_;
    std::map<std::string, int> node_index_;
    std::map<std::string, int> edge_index_;
    std::map<std::pair<std::string, std::string>, std::string> pair_index_;
};

// ---------------------------------------------------------------------------
// Blossom matching engine
// ---------------------------------------------------------------------------

namespace detail {

/// Edmonds' algorithm with blossom shrinking, in the classic parent/base
/// array formulation. Augmenting paths are recovered as explicit node
/// sequences (blossoms expanded), which the callers consume as witnesses.
class BlossomMatcher {
public:
    explicit BlossomMatcher(std::vector<std::vector<int>> adj)
        : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())), match_(n_, -1) {}

    const std::vector<int>& mate() const { return match_; }

    void seed(int a, int b) {
        match_[a] = b;
        match_[b] = a;
    }

    /// Augmenting path from the exposed node `root`, as the node sequence
    /// root ... w (both ends exposed), or empty if none exists.
    std::vector<int> find_augmenting(int root) {
        p_.assign(n_, -1);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        used_.assign(n_, false);
        used_[root] = true;
        std::deque<int> q{root};
        int finish = -1;
        while (!q.empty() && finish == -1) {
            int v = q.front();
            q.pop_front();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
                    int curbase = lca(root, v, to);
                    std::vector<bool> blossom(n_, false);
                    mark_path(blossom, v, curbase, to);
                    mark_path(blossom, to, curbase, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom[base_[i]]) {
                            base_[i] = curbase;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push_back(i);
                            }
                        }
                    }
                } else if (p_[to] == -1) {
                    p_[to] = v;
                    if (match_[to] == -1) {
                        finish = to;
                        break;
                    }
                    used_[match_[to]] = true;
                    q.push_back(match_[to]);
                }
            }
        }
        if (finish == -1) return {};
        std::vector<int> path{finish};
        int v = finish;
        while (true) {
            int pv = p_[v];
            path.push_back(pv);
            int ppv = match_[pv];
            if (ppv == -1) break;
            path.push_back(ppv);
            v = ppv;
        }
        std::reverse(path.begin(), path.end());  // root first
        return path;
    }

    /// Flips the matching along an augmenting path.
    void apply(const std::vector<int>& path) {
        require_internal(path.size() % 2 == 0, "augmenting path has even node count");
        for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
            match_[path[i]] = path[i + 1];
            match_[path[i + 1]] = path[i];
        }
    }

    int solve() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int to : adj_[v]) {
                if (match_[to] == -1) {
                    seed(v, to);
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            auto path = find_augmenting(v);
            if (!path.empty()) apply(path);
        }
        int size = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v) ++size;
        return size;
    }

private:
    int lca(int root, int a, int b) {
        std::vector<bool> seen(n_, false);
        int v = a;
        while (true) {
            v = base_[v];
            seen[v] = true;
            if (v == base_[root] || match_[v] == -1) break;
            v = p_[match_[v]];
        }
        v = b;
        while (!seen[base_[v]]) v = p_[match_[v]];
        return base_[v];
    }

    void mark_path(std::vector<bool>& blossom, int v, int b, int child) {
        while (base_[v] != b) {
            blossom[base_[v]] = true;
            blossom[base_[match_[v]]] = true;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    std::vector<std::vector<int>> adj_;
    int n_;
    std::vector<int> match_;
    std::vector<int> p_;
    std::vector<int> base_;
    std::vector<bool> used_;
};

inline std::vector<std::vector<int>> indexed_adjacency(const UndirectedGraph& g) {
    std::vector<std::vector<int>> adj(g.nodes().size());
    for (const auto& e : g.edges()) {
        int a = g.node_index(e.a), b = g.node_index(e.b);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

/// Checks that a node sequence is a valid alternating path with respect to
/// `mate` whose first and last edges are non-matching.
inline void check_alternating(const UndirectedGraph& g, const std::vector<std::string>& path) {
    require_internal(path.size() >= 2 && path.size() % 2 == 0, "alternating path parity");
    std::set<std::string> seen;
    for (const auto& n : path) require_internal(seen.insert(n).second, "alternating path repeats node");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        require_internal(g.edge_between(path[i], path[i + 1]).has_value(),
                         "alternating path uses missing edge");
}

}  // namespace detail

/// max_matching: a maximum-cardinality matching, as sorted edge ids.
inline std::vector<std::string> max_matching(const UndirectedGraph& g) {
    detail::BlossomMatcher m(detail::indexed_adjacency(g));
    m.solve();
    std::vector<std::string> out;
    const auto& mate = m.mate();
    for (std::size_t i = 0; i < g.nodes().size(); ++i) {
        int j = mate[i];
        if (j > static_cast<int>(i)) {
            auto id = g.edge_between(g.nodes()[i], g.nodes()[j]);
            require_internal(id.has_value(), "matched pair has no edge");
            out.push_back(*id);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// One seeded augmentation: given a matching (edge ids) and an exposed node,
/// returns an augmenting path as a node sequence, or empty if none.
inline std::vector<std::string> find_augmenting_path(const UndirectedGraph& g,
                                                     const std::vector<std::string>& matching,
                                                     const std::string& exposed) {
    detail::BlossomMatcher m(detail::indexed_adjacency(g));
    for (const auto& id : matching) {
        const UEdge& e = g.edge(id);
        m.seed(g.node_index(e.a), g.node_index(e.b));
    }
    auto path = m.find_augmenting(g.node_index(exposed));
    std::vector<std::string> out;
    for (int v : path) out.push_back(g.nodes()[v]);
    if (!out.empty()) detail::check_alternating(g, out);
    return out;
}

// ---------------------------------------------------------------------------
// Bidirected graph <-> graph with perfect matching
// ---------------------------------------------------------------------------

inline std::string plus_node(const std::string& v) { return v + "^+"; }
inline std::string minus_node(const std::string& v) { return v + "^-"; }
inline std::string split_node(const std::string& v, Sign s) {
    return s == Sign::plus ? plus_node(v) : minus_node(v);
}

struct MatchedNodeOrigin {
    std::string vertex;  // vertex of the translated (subdivided) graph
    Sign sign = Sign::plus;
};

struct MatchedGraph {
    UndirectedGraph graph;
    std::vector<std::string> matching;  // perfect; edge ids, sorted
    std::map<std::string, MatchedNodeOrigin> node_origin;
    std::map<std::string, std::string> edge_origin;  // non-matching edge -> source edge id
    BidirectedGraph translated;                      // source after subdivision
    std::map<std::string, std::string> subdivision_of;  // synthetic vertex -> original edge id

    std::string partner(const std::string& node) const {
        auto it = node_origin.find(node);
        if (it == node_origin.end()) fail(Errc::unknown_vertex, "no node named " + node);
        return split_node(it->second.vertex, flip(it->second.sign));
    }
};

/// Same-sign parallel edges would collapse onto one node pair, so all but
/// the first of each parallel class are subdivided: e = uv becomes u-z-v
/// with the composite reproducing e's signs.
inline BidirectedGraph subdivide_for_matching(const BidirectedGraph& g,
                                              std::map<std::string, std::string>* subdivision_of) {
    std::map<std::tuple<std::string, std::string, Sign, Sign>, int> seen;
    std::vector<EdgeRecord> edges;
    std::vector<std::string> vertices = g.vertices();
    for (const auto& e : g.edges()) {
        std::string lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
        auto key = std::make_tuple(lo, hi, e.sign_at(lo), e.sign_at(hi));
        if (seen[key]++ == 0) {
            edges.push_back(e);
            continue;
        }
        std::string z = "sub^" + e.id;
        if (g.has_vertex(z)) fail(Errc::name_collision, "vertex " + z + " already exists");
        vertices.push_back(z);
        if (subdivision_of) (*subdivision_of)[z] = e.id;
        edges.push_back(EdgeRecord{e.id + "^a", e.u, z, e.su, Sign::plus});
        edges.push_back(EdgeRecord{e.id + "^b", z, e.v, Sign::minus, e.sv});
    }
    return build_graph(std::move(vertices), std::move(edges));
}

/// to_matched_graph: vertex v becomes the matching edge v+v-; edge e = uv
/// becomes the non-matching edge joining u^{sign(e,u)} and v^{sign(e,v)}.
inline MatchedGraph to_matched_graph(const BidirectedGraph& g) {
    MatchedGraph mg;
    mg.translated = subdivide_for_matching(g, &mg.subdivision_of);
    const BidirectedGraph& b = mg.translated;

    std::vector<std::string> nodes;
    std::vector<UEdge> edges;
    std::set<std::string> node_names;
    for (const auto& v : b.vertices()) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            std::string n = split_node(v, s);
            if (!node_names.insert(n).second)
                fail(Errc::name_collision, "node name " + n + " is ambiguous");
            nodes.push_back(n);
            mg.node_origin[n] = MatchedNodeOrigin{v, s};
        }
        edges.push_back(UEdge{"m^" + v, plus_node(v), minus_node(v)});
        mg.matching.push_back("m^" + v);
    }
    for (const auto& e : b.edges()) {
        edges.push_back(UEdge{e.id, split_node(e.u, e.su), split_node(e.v, e.sv)});
        mg.edge_origin[e.id] = mg.subdivision_of.count(e.u)   ? mg.subdivision_of.at(e.u)
                               : mg.subdivision_of.count(e.v) ? mg.subdivision_of.at(e.v)
                                                              : e.id;
    }
    mg.graph = UndirectedGraph::build(std::move(nodes), std::move(edges));
    std::sort(mg.matching.begin(), mg.matching.end());
    return mg;
}

/// from_matched_graph: contract each matching edge; the lexicographically
/// smaller end contributes sign -, the other sign +.
inline BidirectedGraph from_matched_graph(const UndirectedGraph& g,
                                          const std::vector<std::string>& matching) {
    std::map<std::string, std::string> vertex_of;  // node -> contracted vertex
    std::map<std::string, bool> is_chosen;         // node -> gets minus side
    std::set<std::string> mids(matching.begin(), matching.end());
    for (const auto& id : mids) {
        const UEdge& e = g.edge(id);
        std::string chosen = std::min(e.a, e.b);
        std::string other = std::max(e.a, e.b);
        if (vertex_of.count(chosen) || vertex_of.count(other))
            fail(Errc::not_perfect_matching, "node matched twice");
        vertex_of[chosen] = chosen;
        vertex_of[other] = chosen;
        is_chosen[chosen] = true;
        is_chosen[other] = false;
    }
    for (const auto& n : g.nodes())
        if (!vertex_of.count(n)) fail(Errc::not_perfect_matching, "node " + n + " is uncovered");

    std::vector<std::string> vertices;
    for (const auto& [node, vert] : vertex_of)
        if (node == vert) vertices.push_back(vert);
    std::vector<EdgeRecord> edges;
    for (const auto& e : g.edges()) {
        if (mids.count(e.id)) continue;
        Sign sa = is_chosen[e.a] ? Sign::minus : Sign::plus;
        Sign sb = is_chosen[e.b] ? Sign::minus : Sign::plus;
        edges.push_back(EdgeRecord{e.id, vertex_of[e.a], vertex_of[e.b], sa, sb});
    }
    return build_graph(std::move(vertices), std::move(edges));
}

/// alternating_path_exists: is there an M-alternating a-b path whose first
/// and last edges are non-matching? Decided by deleting the partners of a
/// and b and asking for one augmentation.
struct AlternatingPathResult {
    bool exists = false;
    std::vector<std::string> path;  // node sequence a .. b
};

inline AlternatingPathResult alternating_path_exists(const MatchedGraph& mg, const std::string& a,
                                                     const std::string& b) {
    if (a == b) fail(Errc::same_node, "endpoints coincide");
    std::string pa = mg.partner(a), pb = mg.partner(b);

    std::vector<std::string> nodes;
    std::set<std::string> dropped;
    if (pa == b) {
        // a and b are matched to each other: drop just their matching edge.
        nodes = mg.graph.nodes();
    } else {
        dropped = {pa, pb};
        for (const auto& n : mg.graph.nodes())
            if (!dropped.count(n)) nodes.push_back(n);
    }
    std::vector<UEdge> edges;
    std::vector<std::string> seed;
    std::set<std::string> mids(mg.matching.begin(), mg.matching.end());
    for (const auto& e : mg.graph.edges()) {
        if (dropped.count(e.a) || dropped.count(e.b)) continue;
        bool is_matching = mids.count(e.id) != 0;
        if (pa == b && is_matching && ((e.a == a && e.b == b) || (e.a == b && e.b == a))) continue;
        edges.push_back(e);
        if (is_matching && !(e.a == a || e.b == a || e.a == b || e.b == b)) seed.push_back(e.id);
        // Matching edges at a or b survive only in the partner-deletion
        // case, where they are gone with the partner; nothing to seed.
    }
    UndirectedGraph h = UndirectedGraph::build(std::move(nodes), std::move(edges));
    auto path = find_augmenting_path(h, seed, a);
    AlternatingPathResult res;
    if (path.empty()) return res;
    require_internal(path.front() == a && path.back() == b, "augmentation must join the exposed pair");
    res.exists = true;
    res.path = std::move(path);
    return res;
}

// ---------------------------------------------------------------------------
// Trail gadget: half-edge nodes, matching per edge, sign-coupled transitions
// ---------------------------------------------------------------------------

struct TrailGadget {
    UndirectedGraph graph;
    std::vector<std::string> matching;  // "m^<edge>" ids
    std::map<std::string, std::pair<std::string, std::string>> halfedge;  // node -> (edge, endpoint)

    std::string node(const std::string& edge, const std::string& endpoint) const {
        return edge + "@" + endpoint;
    }
};

/// Transitions pair half-edges of distinct edges at a shared endpoint with
/// opposite signs; transitions at the root are omitted so that alternating
/// walks never pass through the root.
inline TrailGadget build_trail_gadget(const RootedBidigraph& rb) {
    const BidirectedGraph& g = rb.graph;
    TrailGadget tg;
    std::vector<std::string> nodes;
    std::vector<UEdge> edges;
    std::set<std::string> names;
    for (const auto& e : g.edges()) {
        for (const auto& w : {e.u, e.v}) {
            std::string n = e.id + "@" + w;
            if (!names.insert(n).second) fail(Errc::name_collision, "half-edge name " + n);
            nodes.push_back(n);
            tg.halfedge[n] = {e.id, w};
        }
        edges.push_back(UEdge{"m^" + e.id, e.id + "@" + e.u, e.id + "@" + e.v});
        tg.matching.push_back("m^" + e.id);
    }
    for (const auto& w : g.vertices()) {
        if (w == rb.root) continue;
        const auto& ids = g.edges_at(w);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                const EdgeRecord& e = g.edge(ids[i]);
                const EdgeRecord& f = g.edge(ids[j]);
                if (e.sign_at(w) == flip(f.sign_at(w)))
                    edges.push_back(
                        UEdge{"t^" + ids[i] + "^" + ids[j] + "^" + w, ids[i] + "@" + w, ids[j] + "@" + w});
            }
        }
    }
    tg.graph = UndirectedGraph::build(std::move(nodes), std::move(edges));
    std::sort(tg.matching.begin(), tg.matching.end());
    require_internal(tg.graph.nodes().size() == 2 * g.edge_count(), "gadget node count");
    return tg;
}

}  // namespace bidi
