#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bidi/core.hpp"

namespace bidi {

// ---------------------------------------------------------------------------
// Rooted directed multigraphs (skeletons, flame inputs, flow networks)
// ---------------------------------------------------------------------------

struct Arc {
    std::string id;
    std::string tail;
    std::string head;

    bool operator==(const Arc& o) const {
        return id == o.id && tail == o.tail && head == o.head;
    }
};

class Digraph {
public:
    Digraph() = default;

    static Digraph build(std::vector<std::string> vertices, std::vector<Arc> arcs) {
        Digraph d;
        std::set<std::string> vs(vertices.begin(), vertices.end());
        for (const auto& a : arcs) {
            vs.insert(a.tail);
            vs.insert(a.head);
        }
        d.vertices_.assign(vs.begin(), vs.end());
        std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
        for (std::size_t i = 0; i + 1 < arcs.size(); ++i)
            if (arcs[i].id == arcs[i + 1].id)
                fail(Errc::duplicate_edge_id, "arc id " + arcs[i].id + " appears twice");
        d.arcs_ = std::move(arcs);
        d.reindex();
        return d;
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_vertex(const std::string& v) const { return out_.count(v) != 0; }
    bool has_arc(const std::string& id) const { return arc_index_.count(id) != 0; }

    const Arc& arc(const std::string& id) const {
        auto it = arc_index_.find(id);
        if (it == arc_index_.end()) fail(Errc::unknown_edge, "no arc named " + id);
        return arcs_[it->second];
    }

    const std::vector<std::string>& out_arcs(const std::string& v) const {
        auto it = out_.find(v);
        if (it == out_.end()) fail(Errc::unknown_vertex, "no vertex named " + v);
        return it->second;
    }

    const std::vector<std::string>& in_arcs(const std::string& v) const {
        auto it = in_.find(v);
        if (it == in_.end()) fail(Errc::unknown_vertex, "no vertex named " + v);
        return it->second;
    }

    std::size_t in_degree(const std::string& v) const { return in_arcs(v).size(); }

    bool operator==(const Digraph& o) const {
        return vertices_ == o.vertices_ && arcs_ == o.arcs_;
    }

private:
    void reindex() {
        arc_index_.clear();
        out_.clear();
        in_.clear();
        for (const auto& v : vertices_) {
            out_[v];
            in_[v];
        }
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            arc_index_[arcs_[i].id] = static_cast<int>(i);
            out_[arcs_[i].tail].push_back(arcs_[i].id);
            in_[arcs_[i].head].push_back(arcs_[i].id);
        }
    }

    std::vector<std::string> vertices_;
    std::vector<Arc> arcs_;
    std::map<std::string, int> arc_index_;
    std::map<std::string, std::vector<std::string>> out_;
    std::map<std::string, std::vector<std::string>> in_;
};

inline Digraph erase_arc(const Digraph& d, const std::string& id) {
    d.arc(id);
    std::vector<Arc> as;
    for (const auto& a : d.arcs())
        if (a.id != id) as.push_back(a);
    return Digraph::build(d.vertices(), std::move(as));
}

/// A directed walk: vertex sequence with arc ids. Arc-distinct by
/// construction everywhere it is produced below.
struct DiWalk {
    std::string start;
    std::vector<std::string> arcs;  // arc ids in order

    bool trivial() const { return arcs.empty(); }

    bool operator==(const DiWalk& o) const { return start == o.start && arcs == o.arcs; }
};

inline std::vector<std::string> walk_vertices(const Digraph& d, const DiWalk& w) {
    std::vector<std::string> vs{w.start};
    for (const auto& id : w.arcs) vs.push_back(d.arc(id).head);
    return vs;
}

inline const std::string& walk_end(const Digraph& d, const DiWalk& w) {
    return w.arcs.empty() ? w.start : d.arc(w.arcs.back()).head;
}

/// Checks consecutive incidence and arc-distinctness; optionally that the
/// walk is a directed path (no vertex repeats).
inline void check_walk(const Digraph& d, const DiWalk& w, bool require_path) {
    std::string cur = w.start;
    std::set<std::string> used;
    std::set<std::string> seen{cur};
    for (const auto& id : w.arcs) {
        const Arc& a = d.arc(id);
        if (a.tail != cur) fail(Errc::broken_incidence, "arc " + id + " does not leave " + cur);
        if (!used.insert(id).second) fail(Errc::repeated_edge, "arc " + id + " repeated");
        cur = a.head;
        if (!seen.insert(cur).second && require_path)
            fail(Errc::invalid_path, "vertex " + cur + " repeated");
    }
}

// ---------------------------------------------------------------------------
// Unit-capacity max flow with path family and min-cut witness
// ---------------------------------------------------------------------------

struct MaxflowResult {
    int value = 0;
    std::vector<DiWalk> family;             // pairwise arc-disjoint r->x paths
    std::vector<std::string> cut_vertices;  // X: target side, excludes root
    std::vector<std::string> cut_arcs;      // delta(X): arcs entering X from outside
};

/// Repeated augmenting BFS on unit capacities. The cut is the set of
/// vertices not reachable from the root in the final residual graph.
inline MaxflowResult maxflow_paths(const Digraph& d, const std::string& root,
                                   const std::string& target) {
    if (!d.has_vertex(root)) fail(Errc::unknown_vertex, "no vertex named " + root);
    if (!d.has_vertex(target)) fail(Errc::unknown_vertex, "no vertex named " + target);
    if (root == target) fail(Errc::same_vertex, "flow endpoints coincide");

    // flow[id]: 0 or 1.
    std::map<std::string, int> flow;
    for (const auto& a : d.arcs()) flow[a.id] = 0;

    auto residual_bfs = [&](std::map<std::string, std::pair<std::string, bool>>& parent) {
        // parent[v] = (arc id, forward?)
        parent.clear();
        std::deque<std::string> q{root};
        std::set<std::string> seen{root};
        while (!q.empty()) {
            std::string v = q.front();
            q.pop_front();
            for (const auto& id : d.out_arcs(v)) {
                const Arc& a = d.arc(id);
                if (flow[id] == 0 && !seen.count(a.head)) {
                    seen.insert(a.head);
                    parent[a.head] = {id, true};
                    q.push_back(a.head);
                }
            }
            for (const auto& id : d.in_arcs(v)) {
                const Arc& a = d.arc(id);
                if (flow[id] == 1 && !seen.count(a.tail)) {
                    seen.insert(a.tail);
                    parent[a.tail] = {id, false};
                    q.push_back(a.tail);
                }
            }
        }
        return seen;
    };

    MaxflowResult res;
    while (true) {
        std::map<std::string, std::pair<std::string, bool>> parent;
        auto seen = residual_bfs(parent);
        if (!seen.count(target)) {
            // Final residual: extract the cut.
            for (const auto& v : d.vertices())
                if (!seen.count(v)) res.cut_vertices.push_back(v);
            std::set<std::string> outside(seen.begin(), seen.end());
            for (const auto& a : d.arcs())
                if (outside.count(a.tail) && !outside.count(a.head)) res.cut_arcs.push_back(a.id);
            break;
        }
        std::string v = target;
        while (v != root) {
            auto [id, fwd] = parent[v];
            flow[id] = fwd ? 1 : 0;
            v = fwd ? d.arc(id).tail : d.arc(id).head;
        }
        ++res.value;
    }

    // Decompose the flow into arc-disjoint paths; cycles in the flow are
    // stripped from the walks and discarded.
    std::map<std::string, std::vector<std::string>> avail;  // tail -> flow arc ids
    for (const auto& a : d.arcs())
        if (flow[a.id] == 1) avail[a.tail].push_back(a.id);
    for (int k = 0; k < res.value; ++k) {
        std::vector<std::string> vseq{root};
        std::vector<std::string> aseq;
        std::string cur = root;
        while (cur != target) {
            require_internal(!avail[cur].empty(), "flow decomposition stalled at " + cur);
            std::string id = avail[cur].front();
            avail[cur].erase(avail[cur].begin());
            aseq.push_back(id);
            cur = d.arc(id).head;
            // Strip a cycle if we returned to an earlier vertex.
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
        check_walk(d, w, /*require_path=*/true);
        res.family.push_back(std::move(w));
    }
    require_internal(static_cast<int>(res.cut_arcs.size()) == res.value,
                     "mincut size disagrees with flow value");
    return res;
}

/// Local arc-connectivity from root to every other vertex.
inline std::map<std::string, int> all_lambdas(const Digraph& d, const std::string& root) {
    std::map<std::string, int> out;
    for (const auto& v : d.vertices())
        if (v != root) out[v] = maxflow_paths(d, root, v).value;
    return out;
}

/// Directed DOT; arcs labeled with their id.
inline std::string to_dot(const Digraph& d) {
    std::ostringstream os;
    os << "digraph skeleton {\n";
    for (const auto& v : d.vertices()) os << "  \"" << v << "\";\n";
    for (const auto& a : d.arcs())
        os << "  \"" << a.tail << "\" -> \"" << a.head << "\" [label=\"" << a.id << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace bidi
