#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bidi/core.hpp"
#include "bidi/matching.hpp"
#include "bidi/reachability.hpp"

// Brute-force ground truth. Everything here decides by exhaustive
// depth-first extension and subset enumeration, independent of the
// matching-reduction machinery it is used to check.

namespace bidi::oracle {

struct Guards {
    std::size_t max_edges_for_trails = 16;  // trail/almost-path enumeration
    std::size_t max_vertices = 26;
    std::size_t max_steps = 8'000'000;  // DFS extension budget
};

namespace detail {

struct IndexedGraph {
    std::vector<std::string> vnames;
    std::map<std::string, int> vid;
    struct E {
        int u, v;
        Sign su, sv;
        std::string id;
    };
    std::vector<E> edges;
    std::vector<std::vector<int>> inc;

    explicit IndexedGraph(const BidirectedGraph& graph) {
        vnames = graph.vertices();
        for (std::size_t i = 0; i < vnames.size(); ++i) vid[vnames[i]] = static_cast<int>(i);
        inc.resize(vnames.size());
        for (const auto& e : graph.edges()) {
            E rec{vid.at(e.u), vid.at(e.v), e.su, e.sv, e.id};
            int idx = static_cast<int>(edges.size());
            edges.push_back(rec);
            inc[rec.u].push_back(idx);
            inc[rec.v].push_back(idx);
        }
    }

    Sign sign_at(int e, int w) const { return edges[e].u == w ? edges[e].su : edges[e].sv; }
    int other(int e, int w) const { return edges[e].u == w ? edges[e].v : edges[e].u; }
};

struct Walk {
    int start = 0;
    std::vector<std::pair<int, int>> steps;  // (edge index, head vertex index)
    bool is_path = true;
    std::optional<Sign> end_sign;
};

/// Exhaustive walk extension from `start`. Visits every valid walk of the
/// mode (including the trivial one); `visit` returns true to abort the
/// enumeration. Modes: trail = distinct edges, alternating signs, and with
/// `root_rule` no internal visit of the start; path = additionally
/// vertex-distinct; almost_path = path until a final revisiting edge.
class WalkEnumerator {
public:
    WalkEnumerator(const IndexedGraph& ig, Guards guards) : ig_(ig), guards_(guards) {}

    void run(int start, std::optional<Sign> first_sign, WalkMode mode, bool root_rule,
             const std::function<bool(const Walk&)>& visit) {
        if (mode != WalkMode::path && ig_.edges.size() > guards_.max_edges_for_trails)
            fail(Errc::too_large, "trail enumeration beyond the edge guard");
        if (ig_.vnames.size() > guards_.max_vertices)
            fail(Errc::too_large, "enumeration beyond the vertex guard");
        visits_.assign(ig_.vnames.size(), 0);
        used_.assign(ig_.edges.size(), false);
        walk_ = Walk{start, {}, true, std::nullopt};
        steps_taken_ = 0;
        stop_ = false;
        mode_ = mode;
        root_rule_ = root_rule;
        start_ = start;
        first_sign_ = first_sign;
        visit_ = &visit;
        ++visits_[start];
        extend(start, std::nullopt, false);
    }

private:
    void extend(int cur, std::optional<Sign> arrive, bool terminal) {
        if (stop_) return;
        if (++steps_taken_ > guards_.max_steps) fail(Errc::too_large, "enumeration step budget");
        walk_.end_sign = arrive;
        if ((*visit_)(walk_)) {
            stop_ = true;
            return;
        }
        if (terminal) return;
        for (int e : ig_.inc[cur]) {
            if (used_[e]) continue;
            Sign depart = ig_.sign_at(e, cur);
            if (arrive && depart != flip(*arrive)) continue;
            if (walk_.steps.empty() && first_sign_ && depart != *first_sign_) continue;
            int to = ig_.other(e, cur);
            bool revisit = visits_[to] > 0;
            bool next_terminal = false;
            if (mode_ == WalkMode::path && revisit) continue;
            if (mode_ == WalkMode::almost_path && revisit) next_terminal = true;
            if (mode_ == WalkMode::trail && root_rule_ && to == start_) next_terminal = true;

            used_[e] = true;
            ++visits_[to];
            walk_.steps.emplace_back(e, to);
            bool was_path = walk_.is_path;
            if (revisit) walk_.is_path = false;
            extend(to, ig_.sign_at(e, to), next_terminal);
            walk_.is_path = was_path;
            walk_.steps.pop_back();
            --visits_[to];
            used_[e] = false;
            if (stop_) return;
        }
    }

    const IndexedGraph& ig_;
    Guards guards_;
    std::vector<int> visits_;
    std::vector<bool> used_;
    Walk walk_;
    std::size_t steps_taken_ = 0;
    bool stop_ = false;
    WalkMode mode_ = WalkMode::trail;
    bool root_rule_ = true;
    int start_ = 0;
    std::optional<Sign> first_sign_;
    const std::function<bool(const Walk&)>* visit_ = nullptr;
};

inline Trail to_trail(const RootedBidigraph& rb, const IndexedGraph& ig, const Walk& w) {
    std::vector<std::pair<std::string, std::string>> hops;
    for (const auto& [e, head] : w.steps) hops.emplace_back(ig.edges[e].id, ig.vnames[head]);
    return validate_trail(rb, ig.vnames[w.start], hops);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Enumeration and existence queries
// ---------------------------------------------------------------------------

/// enumerate: every rooted walk of the kind, trivial one included.
inline std::vector<Trail> enumerate(const RootedBidigraph& rb, WalkMode kind,
                                    Guards guards = {}) {
    detail::IndexedGraph ig(rb.graph);
    detail::WalkEnumerator en(ig, guards);
    std::vector<Trail> out;
    std::function<bool(const detail::Walk&)> visit = [&](const detail::Walk& w) {
        out.push_back(detail::to_trail(rb, ig, w));
        return false;
    };
    en.run(ig.vid.at(rb.root), std::nullopt, kind, /*root_rule=*/true, visit);
    return out;
}

/// Is there an r-walk of the kind whose terminal edge is ve?
inline bool has_terminal(const RootedBidigraph& rb, WalkMode kind, const OrientedEdge& ve,
                         Guards guards = {}) {
    detail::IndexedGraph ig(rb.graph);
    detail::WalkEnumerator en(ig, guards);
    bool found = false;
    std::function<bool(const detail::Walk&)> visit = [&](const detail::Walk& w) {
        if (w.steps.empty()) return false;
        const auto& [e, head] = w.steps.back();
        if (ig.edges[e].id == ve.edge && ig.vnames[head] == ve.head) {
            found = true;
            return true;
        }
        return false;
    };
    en.run(ig.vid.at(rb.root), std::nullopt, kind, true, visit);
    return found;
}

/// Is there an r-walk of the kind arriving at (v, sign)?
inline bool has_signed_arrival(const RootedBidigraph& rb, WalkMode kind, const SignedVertex& sv,
                               Guards guards = {}) {
    detail::IndexedGraph ig(rb.graph);
    detail::WalkEnumerator en(ig, guards);
    bool found = false;
    int target = ig.vid.at(sv.vertex);
    std::function<bool(const detail::Walk&)> visit = [&](const detail::Walk& w) {
        if (w.steps.empty()) return false;
        if (w.steps.back().second == target && w.end_sign == sv.sign) {
            found = true;
            return true;
        }
        return false;
    };
    en.run(ig.vid.at(rb.root), std::nullopt, kind, true, visit);
    return found;
}

/// Is there an (x,alpha)-(y,beta) path?
inline bool has_pair_path(const BidirectedGraph& g, const SignedVertex& from,
                          const SignedVertex& to, Guards guards = {}) {
    if (from.vertex == to.vertex) fail(Errc::same_vertex, "pair endpoints coincide");
    detail::IndexedGraph ig(g);
    detail::WalkEnumerator en(ig, guards);
    bool found = false;
    int target = ig.vid.at(to.vertex);
    std::function<bool(const detail::Walk&)> visit = [&](const detail::Walk& w) {
        if (w.steps.empty()) return false;
        if (w.steps.back().second == target && w.end_sign == to.sign) {
            found = true;
            return true;
        }
        return false;
    };
    en.run(ig.vid.at(from.vertex), from.sign, WalkMode::path, false, visit);
    return found;
}

inline bool has_rr_trail(const RootedBidigraph& rb, Guards guards = {}) {
    detail::IndexedGraph ig(rb.graph);
    detail::WalkEnumerator en(ig, guards);
    bool found = false;
    int root = ig.vid.at(rb.root);
    std::function<bool(const detail::Walk&)> visit = [&](const detail::Walk& w) {
        if (!w.steps.empty() && w.steps.back().second == root) {
            found = true;
            return true;
        }
        return false;
    };
    en.run(root, std::nullopt, WalkMode::trail, true, visit);
    return found;
}

inline bool has_rr_almost_path(const RootedBidigraph& rb, Guards guards = {}) {
    detail::IndexedGraph ig(rb.graph);
    detail::WalkEnumerator en(ig, guards);
    bool found = false;
    int root = ig.vid.at(rb.root);
    std::function<bool(const detail::Walk&)> visit = [&](const detail::Walk& w) {
        if (!w.steps.empty() && w.steps.back().second == root) {
            found = true;
            return true;
        }
        return false;
    };
    en.run(root, std::nullopt, WalkMode::almost_path, true, visit);
    return found;
}

// ---------------------------------------------------------------------------
// Exact disjoint-family maxima
// ---------------------------------------------------------------------------

struct FamilyResult {
    int value = 0;
    std::vector<Trail> family;
};

namespace detail {

/// Maximum pairwise mask-disjoint subfamily, by branch and bound.
inline int max_disjoint(const std::vector<std::uint64_t>& masks, int cap,
                        std::vector<int>* pick_out) {
    std::vector<int> order(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(masks[a]) < std::popcount(masks[b]);
    });
    int best = 0;
    std::vector<int> chosen, best_pick;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t used) {
        if (static_cast<int>(chosen.size()) > best) {
            best = static_cast<int>(chosen.size());
            best_pick = chosen;
        }
        if (best >= cap) return;
        if (i >= order.size()) return;
        if (static_cast<int>(chosen.size() + (order.size() - i)) <= best) return;
        for (std::size_t j = i; j < order.size(); ++j) {
            if (masks[order[j]] & used) continue;
            chosen.push_back(order[j]);
            rec(j + 1, used | masks[order[j]]);
            chosen.pop_back();
            if (best >= cap) return;
        }
    };
    rec(0, 0);
    if (pick_out) *pick_out = best_pick;
    return best;
}

}  // namespace detail

/// bf_lambda: exact maximum number of edge-disjoint r-x walks (trails or
/// paths), optionally with a fixed arrival sign, plus one optimal family.
inline FamilyResult bf_lambda(const RootedBidigraph& rb, const std::string& x, WalkMode kind,
                              std::optional<Sign> end_sign = std::nullopt, Guards guards = {}) {
    if (x == rb.root) fail(Errc::target_is_root, "target equals the root");
    if (rb.graph.edge_count() > 64) fail(Errc::too_large, "more than 64 edges");
    detail::IndexedGraph ig(rb.graph);
    detail::WalkEnumerator en(ig, guards);
    int target = ig.vid.at(x);
    std::vector<std::uint64_t> masks;
    std::vector<Trail> walks;
    std::function<bool(const detail::Walk&)> visit = [&](const detail::Walk& w) {
        if (w.steps.empty() || w.steps.back().second != target) return false;
        if (end_sign && w.end_sign != *end_sign) return false;
        std::uint64_t m = 0;
        for (const auto& [e, _] : w.steps) m |= 1ull << e;
        masks.push_back(m);
        walks.push_back(detail::to_trail(rb, ig, w));
        return false;
    };
    en.run(ig.vid.at(rb.root), std::nullopt, kind, true, visit);

    int cap = static_cast<int>(rb.graph.edges_at(rb.root).size());
    std::vector<int> pick;
    FamilyResult res;
    res.value = detail::max_disjoint(masks, cap, &pick);
    for (int i : pick) res.family.push_back(walks[i]);
    return res;
}

/// bf_kappa: exact maximum number of internally vertex-disjoint r-x paths.
inline FamilyResult bf_kappa(const RootedBidigraph& rb, const std::string& x,
                             std::optional<Sign> end_sign = std::nullopt, Guards guards = {}) {
    if (x == rb.root) fail(Errc::target_is_root, "target equals the root");
    if (rb.graph.vertex_count() > 64) fail(Errc::too_large, "more than 64 vertices");
    detail::IndexedGraph ig(rb.graph);
    detail::WalkEnumerator en(ig, guards);
    int target = ig.vid.at(x);
    int root = ig.vid.at(rb.root);
    std::vector<std::uint64_t> masks;
    std::vector<Trail> walks;
    std::function<bool(const detail::Walk&)> visit = [&](const detail::Walk& w) {
        if (w.steps.empty() || w.steps.back().second != target) return false;
        if (end_sign && w.end_sign != *end_sign) return false;
        std::uint64_t m = 0;
        for (const auto& [e, head] : w.steps)
            if (head != target && head != root) m |= 1ull << head;
        masks.push_back(m);
        walks.push_back(detail::to_trail(rb, ig, w));
        return false;
    };
    en.run(root, std::nullopt, WalkMode::path, true, visit);

    int cap = static_cast<int>(rb.graph.edges_at(rb.root).size());
    std::vector<int> pick;
    FamilyResult res;
    res.value = detail::max_disjoint(masks, cap, &pick);
    for (int i : pick) res.family.push_back(walks[i]);
    return res;
}

// ---------------------------------------------------------------------------
// Exact min-cuts by subset enumeration
// ---------------------------------------------------------------------------

struct CutResult {
    int value = 0;
    std::vector<std::string> X;
};

enum class CutQuery { edge_trail, edge_path, vertex };

inline CutResult bf_min_cut(const RootedBidigraph& rb, const std::string& x, CutQuery kind,
                            Guards guards = {}) {
    if (x == rb.root) fail(Errc::target_is_root, "target equals the root");
    const auto& vs = rb.graph.vertices();
    if (vs.size() > 16) fail(Errc::too_large, "more than 16 vertices for subset enumeration");

    // Reachable orientations, by exhaustive search.
    WalkMode mode = kind == CutQuery::edge_trail ? WalkMode::trail : WalkMode::path;
    std::map<std::pair<std::string, std::string>, bool> reach;  // (edge, head) -> reachable
    for (const auto& e : rb.graph.edges()) {
        auto [fwd, bwd] = orientations(e);
        for (const auto& o : {fwd, bwd})
            reach[{o.edge, o.head}] = has_terminal(rb, mode, o, guards);
    }

    std::vector<std::string> others;  // candidate members besides forced ones
    std::set<std::string> forced{x};
    if (kind == CutQuery::vertex) {
        for (const auto& id : rb.graph.edges_at(x)) {
            const EdgeRecord& e = rb.graph.edge(id);
            const std::string& v = e.other_end(x);
            if (v != rb.root && reach.at({id, x})) forced.insert(v);
        }
    }
    for (const auto& v : vs)
        if (v != rb.root && !forced.count(v)) others.push_back(v);

    CutResult best;
    best.value = -1;
    for (std::uint32_t bits = 0; bits < (1u << others.size()); ++bits) {
        std::set<std::string> X(forced.begin(), forced.end());
        for (std::size_t i = 0; i < others.size(); ++i)
            if (bits & (1u << i)) X.insert(others[i]);
        int size = 0;
        if (kind == CutQuery::vertex) {
            for (const auto& v : X) {
                for (const auto& id : rb.graph.edges_at(v)) {
                    const EdgeRecord& e = rb.graph.edge(id);
                    if (X.count(e.other_end(v))) continue;
                    if (reach.at({id, v})) {
                        ++size;
                        break;
                    }
                }
            }
        } else {
            for (const auto& e : rb.graph.edges()) {
                auto [fwd, bwd] = orientations(e);
                for (const auto& o : {fwd, bwd}) {
                    if (X.count(o.head) && !X.count(o.tail) && reach.at({o.edge, o.head})) {
                        ++size;
                        break;
                    }
                }
            }
        }
        if (best.value == -1 || size < best.value) {
            best.value = size;
            best.X.assign(X.begin(), X.end());
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Brute-force maximum matching
// ---------------------------------------------------------------------------

inline int bf_max_matching(const UndirectedGraph& g) {
    std::size_t n = g.nodes().size();
    if (n > 22) fail(Errc::too_large, "more than 22 nodes");
    std::vector<std::uint32_t> nbr(n, 0);
    for (const auto& e : g.edges()) {
        int a = g.node_index(e.a), b = g.node_index(e.b);
        nbr[a] |= 1u << b;
        nbr[b] |= 1u << a;
    }
    std::map<std::uint32_t, int> memo;
    std::function<int(std::uint32_t)> rec = [&](std::uint32_t gone) -> int {
        if (gone == (n >= 32 ? ~0u : (1u << n) - 1)) return 0;
        auto it = memo.find(gone);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(~gone);
        int best = rec(gone | (1u << v));  // leave v unmatched
        std::uint32_t cand = nbr[v] & ~gone;
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            best = std::max(best, 1 + rec(gone | (1u << v) | (1u << w)));
        }
        memo[gone] = best;
        return best;
    };
    return rec(0);
}

// ---------------------------------------------------------------------------
// Seeded random instances
// ---------------------------------------------------------------------------

enum class Constraint { none, trail_reachable, edge_clean, clean, reachable };

struct GeneratorParams {
    std::uint64_t seed = 1;
    int n = 4;
    int m = 6;
    Constraint constraint = Constraint::none;
    int max_retries = 400;
};

struct GenResult {
    RootedBidigraph graph;
    int attempts = 0;
};

inline bool satisfies(const RootedBidigraph& rb, Constraint c, const Guards& guards) {
    switch (c) {
        case Constraint::none: return true;
        case Constraint::trail_reachable: {
            for (const auto& e : rb.graph.edges()) {
                auto [fwd, bwd] = orientations(e);
                if (!has_terminal(rb, WalkMode::trail, fwd, guards) &&
                    !has_terminal(rb, WalkMode::trail, bwd, guards))
                    return false;
            }
            return true;
        }
        case Constraint::edge_clean: return !has_rr_trail(rb, guards);
        case Constraint::clean: return !has_rr_almost_path(rb, guards);
        case Constraint::reachable: {
            for (const auto& v : rb.graph.vertices())
                if (v != rb.root && rb.graph.edges_at(v).empty()) return false;
            for (const auto& e : rb.graph.edges()) {
                auto [fwd, bwd] = orientations(e);
                if (!has_terminal(rb, WalkMode::almost_path, fwd, guards) &&
                    !has_terminal(rb, WalkMode::almost_path, bwd, guards))
                    return false;
            }
            return true;
        }
    }
    return true;
}

/// random_instance: deterministic per seed; rejection-sampled to the
/// requested constraint (checked by the exhaustive queries above).
inline GenResult random_instance(const GeneratorParams& p, Guards guards = {}) {
    if (p.n < 1 || p.m < 0) fail(Errc::constraint_unsatisfiable, "need n >= 1, m >= 0");
    if (p.n == 1 && p.m > 0) fail(Errc::constraint_unsatisfiable, "loopless: one vertex, no edges");
    std::mt19937_64 rng(p.seed);
    for (int attempt = 1; attempt <= p.max_retries; ++attempt) {
        std::vector<std::string> vertices{"r"};
        for (int i = 1; i < p.n; ++i) vertices.push_back("v" + std::to_string(i));
        std::vector<EdgeRecord> edges;
        for (int i = 0; i < p.m; ++i) {
            int a = static_cast<int>(rng() % p.n);
            int b = static_cast<int>(rng() % (p.n - 1));
            if (b >= a) ++b;
            edges.push_back(EdgeRecord{"e" + std::to_string(i + 1), vertices[a], vertices[b],
                                       rng() % 2 ? Sign::plus : Sign::minus,
                                       rng() % 2 ? Sign::plus : Sign::minus});
        }
        RootedBidigraph rb = make_rooted(build_graph(vertices, std::move(edges)), "r");
        if (satisfies(rb, p.constraint, guards)) return GenResult{std::move(rb), attempt};
    }
    fail(Errc::constraint_unsatisfiable, "no instance met the constraint");
}

/// Random simple undirected graphs for the matching campaigns.
inline UndirectedGraph random_undirected(std::uint64_t seed, int n, int m) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
    std::set<std::pair<int, int>> picked;
    int limit = n * (n - 1) / 2;
    for (int i = 0; i < m && static_cast<int>(picked.size()) < limit; ++i) {
        int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % (n - 1));
        if (b >= a) ++b;
        picked.insert(std::minmax(a, b));
    }
    std::vector<UEdge> edges;
    int k = 0;
    for (const auto& [a, b] : picked)
        edges.push_back(UEdge{"u" + std::to_string(++k), nodes[a], nodes[b]});
    return UndirectedGraph::build(std::move(nodes), std::move(edges));
}

}  // namespace bidi::oracle
