#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bidi/core.hpp"
#include "bidi/decomposition.hpp"
#include "bidi/digraph.hpp"
#include "bidi/reachability.hpp"

namespace bidi {

// ---------------------------------------------------------------------------
// Cut boundaries
// ---------------------------------------------------------------------------

enum class CutKind { edge_trail, edge_path, vertex, set_vertex };

struct CutWitness {
    CutKind kind = CutKind::edge_trail;
    std::vector<std::string> X;                  // target-side vertex set
    std::vector<OrientedEdge> boundary_edges;    // delta(X) for the edge kinds
    std::vector<std::string> boundary_vertices;  // epsilon(X) for the vertex kinds
};

/// delta(X): edges with a reachable orientation whose head is in X and
/// whose tail is not.
inline std::vector<OrientedEdge> delta_boundary(const RootedBidigraph& rb,
                                                const std::set<std::string>& X, WalkMode mode) {
    std::vector<OrientedEdge> out;
    for (const auto& e : rb.graph.edges()) {
        auto [fwd, bwd] = orientations(e);
        for (const auto& o : {fwd, bwd}) {
            if (X.count(o.head) && !X.count(o.tail) && oriented_reachable(rb, o, mode).reachable) {
                out.push_back(o);
                break;
            }
        }
    }
    return out;
}

/// epsilon(X): vertices of X entered by a path-reachable orientation from
/// outside X.
inline std::vector<std::string> epsilon_boundary(const RootedBidigraph& rb,
                                                 const std::set<std::string>& X) {
    std::vector<std::string> out;
    for (const auto& v : X) {
        if (!rb.graph.has_vertex(v)) fail(Errc::unknown_vertex, "no vertex named " + v);
        for (const auto& id : rb.graph.edges_at(v)) {
            const EdgeRecord& e = rb.graph.edge(id);
            const std::string& u = e.other_end(v);
            if (X.count(u)) continue;
            if (path_reachable(rb, OrientedEdge{id, u, v}).reachable) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

struct MengerResult {
    int value = 0;
    std::vector<Trail> family;
    std::optional<CutWitness> cut;
    std::optional<Errc> cut_withheld;
};

namespace detail {

inline void check_target(const RootedBidigraph& rb, const std::string& x) {
    if (!rb.graph.has_vertex(x)) fail(Errc::unknown_vertex, "no vertex named " + x);
    if (x == rb.root) fail(Errc::target_is_root, "target equals the root");
}

inline void check_disjoint_family(const std::vector<Trail>& fam) {
    std::set<std::string> used;
    for (const auto& t : fam)
        for (const auto& s : t.steps)
            require_internal(used.insert(s.edge).second, "family shares edge " + s.edge);
}

/// Does x sit strictly inside a component (not its anchor)?
inline const TrailComponent* containing_component(const TrailDecomposition& td,
                                                  const std::string& x) {
    auto it = td.component_of.find(x);
    if (it == td.component_of.end()) return nullptr;
    const TrailComponent& c = td.components[it->second];
    return c.anchor == x ? nullptr : &c;
}

/// Cut lifted from the skeleton: X plus every component whose anchor it
/// contains.
inline std::set<std::string> lift_cut(const TrailDecomposition& td,
                                      const std::vector<std::string>& skeleton_cut) {
    std::set<std::string> X(skeleton_cut.begin(), skeleton_cut.end());
    for (const auto& c : td.components)
        if (X.count(c.anchor)) X.insert(c.vertices.begin(), c.vertices.end());
    return X;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Edge-disjoint trail and path connectivity with cut certificates
// ---------------------------------------------------------------------------

/// lambda_trail: maximum number of edge-disjoint r-x trails, a family of
/// that size, and a vertex set X certifying it via |delta_trail(X)|.
inline MengerResult lambda_trail(const RootedBidigraph& rb, const std::string& x) {
    detail::check_target(rb, x);
    if (!is_edge_clean(rb)) fail(Errc::not_edge_clean, "graph has a nontrivial r-r trail");

    RootedBidigraph bt = restrict_graph(rb, WalkMode::trail);
    TrailDecomposition td = trail_skeleton(bt);
    MengerResult res;

    if (const TrailComponent* c = detail::containing_component(td, x)) {
        res.value = 1;
        OrientedEdge into{c->edges.front(), "", x};
        // Any undirectable edge at x yields a terminal-edge witness.
        for (const auto& id : bt.graph.edges_at(x)) {
            if (!std::binary_search(c->edges.begin(), c->edges.end(), id)) continue;
            into = OrientedEdge{id, bt.graph.edge(id).other_end(x), x};
            break;
        }
        auto w = trail_reachable(bt, into);
        require_internal(w.reachable, "component vertices are trail-reachable");
        res.family = {*w.witness};
        std::set<std::string> X(c->vertices.begin(), c->vertices.end());
        res.cut = CutWitness{CutKind::edge_trail, {X.begin(), X.end()},
                             delta_boundary(bt, X, WalkMode::trail), {}};
    } else {
        MaxflowResult mf = maxflow_paths(td.skeleton, rb.root, x);
        res.value = mf.value;
        for (const auto& p : mf.family) res.family.push_back(lift_trail(td, p));
        std::set<std::string> X = detail::lift_cut(td, mf.cut_vertices);
        res.cut = CutWitness{CutKind::edge_trail, {X.begin(), X.end()},
                             delta_boundary(bt, X, WalkMode::trail), {}};
    }

    detail::check_disjoint_family(res.family);
    for (const auto& t : res.family)
        require_internal(t.is_r_trail && t.last_vertex() == x, "family member is an r-x trail");
    require_internal(static_cast<int>(res.cut->boundary_edges.size()) == res.value,
                     "trail cut certifies the value");
    return res;
}

/// lambda_path: as lambda_trail for edge-disjoint r-x paths, computed on
/// the path-reachable restriction.
inline MengerResult lambda_path(const RootedBidigraph& rb, const std::string& x) {
    detail::check_target(rb, x);
    if (!is_edge_clean(rb)) fail(Errc::not_edge_clean, "graph has a nontrivial r-r trail");

    RootedBidigraph bp = restrict_graph(rb, WalkMode::path);
    TrailDecomposition td = trail_skeleton(bp);
    MengerResult res;

    if (const TrailComponent* c = detail::containing_component(td, x)) {
        res.value = 1;
        std::optional<Trail> witness;
        for (const auto& id : bp.graph.edges_at(x)) {
            const EdgeRecord& e = bp.graph.edge(id);
            auto [fwd, bwd] = orientations(e);
            for (const auto& o : {fwd, bwd}) {
                auto w = path_reachable(bp, o);
                if (!w.reachable) continue;
                if (w.witness->last_vertex() == x) {
                    witness = *w.witness;
                } else {
                    // Truncate the path at x.
                    std::vector<OrientedEdge> steps;
                    for (const auto& s : w.witness->steps) {
                        steps.push_back(s);
                        if (s.head == x) break;
                    }
                    witness = validate_trail(bp, rb.root, steps);
                }
                break;
            }
            if (witness) break;
        }
        require_internal(witness.has_value(), "component vertices are path-reachable");
        res.family = {*witness};
        std::set<std::string> X(c->vertices.begin(), c->vertices.end());
        res.cut = CutWitness{CutKind::edge_path, {X.begin(), X.end()},
                             delta_boundary(bp, X, WalkMode::path), {}};
    } else {
        MaxflowResult mf = maxflow_paths(td.skeleton, rb.root, x);
        res.value = mf.value;
        for (const auto& p : mf.family) res.family.push_back(lift_path(td, p));
        std::set<std::string> X = detail::lift_cut(td, mf.cut_vertices);
        res.cut = CutWitness{CutKind::edge_path, {X.begin(), X.end()},
                             delta_boundary(bp, X, WalkMode::path), {}};
    }

    detail::check_disjoint_family(res.family);
    for (const auto& t : res.family)
        require_internal(t.is_path && t.is_r_trail && t.last_vertex() == x,
                         "family member is an r-x path");
    require_internal(static_cast<int>(res.cut->boundary_edges.size()) == res.value,
                     "path cut certifies the value");
    return res;
}

/// lambda_signed: the per-sign maxima. Arrival-sign uniqueness pins the
/// value to 0 or the unsigned optimum at skeleton vertices, and to 0/1
/// inside components.
inline int lambda_signed(const RootedBidigraph& rb, const SignedVertex& sv, WalkMode mode) {
    detail::check_target(rb, sv.vertex);
    if (mode == WalkMode::almost_path) fail(Errc::internal, "signed counts are trail or path");
    if (!is_edge_clean(rb)) fail(Errc::not_edge_clean, "graph has a nontrivial r-r trail");

    RootedBidigraph b = restrict_graph(rb, mode);
    TrailDecomposition td = trail_skeleton(b);
    bool inside = td.component_of.count(sv.vertex) != 0;

    if (mode == WalkMode::trail) {
        if (!trail_reachable_signed(b, sv).reachable) return 0;
        // Component vertices (anchors included) sit behind a single entry
        // edge, so any fixed arrival sign admits exactly one trail.
        if (inside) return 1;
        return lambda_trail(rb, sv.vertex).value;
    }
    bool arrives = signed_path_arrival(b, sv);
    if (!arrives) return 0;
    if (detail::containing_component(td, sv.vertex)) return 1;
    return lambda_path(rb, sv.vertex).value;
}

// ---------------------------------------------------------------------------
// Vertex connectivity (internally disjoint paths)
// ---------------------------------------------------------------------------

/// in_vertices: second-to-last vertices of r-x paths.
inline std::vector<std::string> in_vertices(const RootedBidigraph& rb, const std::string& x) {
    detail::check_target(rb, x);
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& id : rb.graph.edges_at(x)) {
        const EdgeRecord& e = rb.graph.edge(id);
        const std::string& v = e.other_end(x);
        if (v == rb.root || seen.count(v)) continue;
        if (path_reachable(rb, OrientedEdge{id, v, x}).reachable) {
            seen.insert(v);
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline void check_internally_disjoint(const std::vector<Trail>& fam, const std::string& r,
                                      const std::string& x) {
    std::set<std::string> used;
    for (const auto& t : fam) {
        auto vs = t.vertices();
        for (const auto& v : vs) {
            if (v == r || v == x) continue;
            require_internal(used.insert(v).second, "family shares vertex " + v);
        }
    }
}

/// kappa: maximum number of internally vertex-disjoint r-x paths, computed
/// as edge connectivity in the auxiliary graph. The cut certificate is
/// withheld when an r-x edge exists.
inline MengerResult kappa(const RootedBidigraph& rb, const std::string& x) {
    detail::check_target(rb, x);
    if (!is_clean(rb)) fail(Errc::not_clean, "graph has a nontrivial r-r almost path");

    AuxiliaryGraph ag = auxiliary_graph(rb);
    require_internal(is_edge_clean(ag.graph), "auxiliary graph of a clean graph is edge-clean");

    bool x_plain = std::binary_search(ag.plain.begin(), ag.plain.end(), x);
    std::string xstar = x;
    if (x_plain)
        xstar = signed_path_arrival(rb, {x, Sign::minus}) ? minus_node(x) : plus_node(x);

    MengerResult inner = lambda_path(ag.graph, xstar);
    MengerResult res;
    res.value = inner.value;
    for (const auto& t : inner.family) {
        Trail mapped = g_contract(ag, t);
        require_internal(mapped.is_path && mapped.last_vertex() == x, "mapped family member");
        res.family.push_back(std::move(mapped));
    }
    check_internally_disjoint(res.family, rb.root, x);

    bool root_edge = false;
    for (const auto& id : rb.graph.edges_at(x))
        if (rb.graph.edge(id).other_end(x) == rb.root) root_edge = true;
    if (root_edge) {
        res.cut_withheld = Errc::root_target_edge;
        return res;
    }

    std::set<std::string> Y(inner.cut->X.begin(), inner.cut->X.end());
    std::set<std::string> X;
    for (const auto& v : rb.graph.vertices())
        for (const auto& n : ag.nodes_of(v))
            if (Y.count(n)) X.insert(v);
    for (const auto& v : in_vertices(rb, x)) X.insert(v);
    require_internal(X.count(x) == 1 && X.count(rb.root) == 0, "vertex cut contains x, not r");
    CutWitness cw;
    cw.kind = CutKind::vertex;
    cw.X.assign(X.begin(), X.end());
    cw.boundary_vertices = epsilon_boundary(rb, X);
    require_internal(static_cast<int>(cw.boundary_vertices.size()) == res.value,
                     "epsilon certifies kappa");
    res.cut = std::move(cw);
    return res;
}

/// kappa_signed: internally disjoint r-(x,alpha) paths, via the signed
/// edge count in the auxiliary graph.
inline int kappa_signed(const RootedBidigraph& rb, const SignedVertex& sv) {
    detail::check_target(rb, sv.vertex);
    if (!is_clean(rb)) fail(Errc::not_clean, "graph has a nontrivial r-r almost path");
    AuxiliaryGraph ag = auxiliary_graph(rb);
    bool plain = std::binary_search(ag.plain.begin(), ag.plain.end(), sv.vertex);
    std::string target = plain ? split_node(sv.vertex, sv.sign) : sv.vertex;
    return lambda_signed(ag.graph, {target, sv.sign}, WalkMode::path);
}

/// The three signed connectivities of one signed vertex.
struct SignedConnectivity {
    int lambda_trail = 0;
    int lambda_path = 0;
    int kappa = 0;
};

/// Full table over all signed vertices. Needs an edge-clean input for the
/// edge counts and a clean one for the vertex counts.
inline std::map<SignedVertex, SignedConnectivity> signed_connectivity_table(
    const RootedBidigraph& rb) {
    std::map<SignedVertex, SignedConnectivity> out;
    for (const auto& v : rb.graph.vertices()) {
        if (v == rb.root) continue;
        for (Sign s : {Sign::plus, Sign::minus}) {
            SignedConnectivity c;
            c.lambda_trail = lambda_signed(rb, {v, s}, WalkMode::trail);
            c.lambda_path = lambda_signed(rb, {v, s}, WalkMode::path);
            c.kappa = kappa_signed(rb, {v, s});
            out[{v, s}] = c;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// X-Y set version
// ---------------------------------------------------------------------------

struct SetMengerResult {
    int value = 0;
    std::vector<Trail> family;  // vertex-disjoint X-Y paths (possibly trivial)
    std::vector<std::string> W;
    std::vector<std::string> boundary;  // epsilon_{X,B}(W)
};

namespace detail {

struct ApexGraph {
    RootedBidigraph graph;  // rooted at the source apex
    std::string source;     // apex adjacent to X
    std::string sink;       // apex adjacent to Y
};

/// Source apex joined to X (after normalizing X signs to +), sink apex
/// joined to Y by a pair of opposite-signed edges.
inline ApexGraph build_apex(const BidirectedGraph& g, const std::set<std::string>& X,
                            const std::set<std::string>& Y, bool normalize_y) {
    ApexGraph ax;
    ax.source = "apex^r";
    ax.sink = "apex^z";
    if (g.has_vertex(ax.source) || g.has_vertex(ax.sink))
        fail(Errc::name_collision, "apex names collide with vertices");
    std::vector<EdgeRecord> edges;
    for (EdgeRecord e : g.edges()) {
        if (X.count(e.u)) e.su = Sign::plus;
        if (X.count(e.v)) e.sv = Sign::plus;
        if (normalize_y && Y.count(e.u)) e.su = Sign::plus;
        if (normalize_y && Y.count(e.v)) e.sv = Sign::plus;
        edges.push_back(std::move(e));
    }
    for (const auto& x : X)
        edges.push_back(EdgeRecord{"apexr^" + x, ax.source, x, Sign::plus, Sign::minus});
    for (const auto& y : Y) {
        edges.push_back(EdgeRecord{"apexz+^" + y, y, ax.sink, Sign::plus, Sign::plus});
        edges.push_back(EdgeRecord{"apexz-^" + y, y, ax.sink, Sign::minus, Sign::plus});
    }
    std::vector<std::string> vertices = g.vertices();
    vertices.push_back(ax.source);
    vertices.push_back(ax.sink);
    ax.graph = make_rooted(build_graph(std::move(vertices), std::move(edges)), ax.source);
    return ax;
}

inline void check_no_xx_path(const BidirectedGraph& g, const std::set<std::string>& X) {
    for (const auto& a : X)
        for (const auto& b : X) {
            if (a >= b) continue;
            for (Sign sa : {Sign::plus, Sign::minus})
                for (Sign sb : {Sign::plus, Sign::minus})
                    if (path_exists(g, {a, sa}, {b, sb}).reachable)
                        fail(Errc::xx_path_exists, "nontrivial path joins " + a + " and " + b);
        }
}

/// Strips the apex edges and truncates at the first Y vertex, yielding an
/// X-Y path of the base graph.
inline Trail strip_apexes(const BidirectedGraph& base, const std::set<std::string>& Y,
                          const Trail& t) {
    require_internal(t.steps.size() >= 2, "apex path has interior");
    std::vector<std::pair<std::string, std::string>> hops;
    std::string start = t.steps.front().head;  // the X vertex
    for (std::size_t i = 1; i + 1 < t.steps.size(); ++i) {
        hops.emplace_back(t.steps[i].edge, t.steps[i].head);
        if (Y.count(t.steps[i].head)) break;
    }
    Trail out = validate_trail(make_rooted(base, start), start, hops);
    require_internal(Y.count(out.last_vertex()) == 1, "stripped path ends in Y");
    return out;
}

}  // namespace detail

/// set_menger: maximum number of vertex-disjoint X-Y paths with a cut
/// witness W and epsilon_{X,B}(W).
inline SetMengerResult set_menger(const BidirectedGraph& g, const std::vector<std::string>& Xv,
                                  const std::vector<std::string>& Yv) {
    std::set<std::string> X(Xv.begin(), Xv.end()), Y(Yv.begin(), Yv.end());
    for (const auto& v : Xv)
        if (!g.has_vertex(v)) fail(Errc::unknown_vertex, "no vertex named " + v);
    for (const auto& v : Yv)
        if (!g.has_vertex(v)) fail(Errc::unknown_vertex, "no vertex named " + v);
    detail::check_no_xx_path(g, X);

    SetMengerResult res;
    if (X.empty() || Y.empty()) {
        res.W.assign(Y.begin(), Y.end());
        return res;
    }

    detail::ApexGraph ax = detail::build_apex(g, X, Y, /*normalize_y=*/false);
    require_internal(is_clean(ax.graph), "apex graph of an XX-path-free instance is clean");
    MengerResult inner = kappa(ax.graph, ax.sink);
    res.value = inner.value;
    for (const auto& t : inner.family) res.family.push_back(detail::strip_apexes(g, Y, t));

    // Vertex-disjointness including endpoints.
    std::set<std::string> used;
    for (const auto& t : res.family)
        for (const auto& v : t.vertices())
            require_internal(used.insert(v).second, "X-Y family shares vertex " + v);

    std::set<std::string> W;
    if (res.value == 0) {
        W = Y;
    } else {
        require_internal(inner.cut.has_value(), "sink cut is available");
        for (const auto& v : inner.cut->X)
            if (v != ax.sink) W.insert(v);
        W.insert(Y.begin(), Y.end());
    }
    // epsilon_{X,B}(W): trivial X-paths count members of X; otherwise an
    // entering edge from outside W with a source-apex path certifies v.
    std::vector<std::string> eps;
    for (const auto& v : W) {
        if (X.count(v)) {
            eps.push_back(v);
            continue;
        }
        bool hit = false;
        for (const auto& id : g.edges_at(v)) {
            const EdgeRecord& e = g.edge(id);
            const std::string& u = e.other_end(v);
            if (W.count(u)) continue;
            if (path_reachable(ax.graph, OrientedEdge{id, u, v}).reachable) {
                hit = true;
                break;
            }
        }
        if (hit) eps.push_back(v);
    }
    require_internal(static_cast<int>(eps.size()) == res.value, "epsilon_X certifies the value");
    res.W.assign(W.begin(), W.end());
    res.boundary = std::move(eps);
    return res;
}

}  // namespace bidi
