#include <catch2/catch_amalgamated.hpp>

#include "bidi/fixtures.hpp"
#include "bidi/matching.hpp"
#include "bidi/oracle.hpp"

using namespace bidi;

namespace {

UndirectedGraph petersen() {
    std::vector<std::string> nodes;
    std::vector<UEdge> edges;
    for (int i = 0; i < 10; ++i) nodes.push_back("p" + std::to_string(i));
    int k = 0;
    auto add = [&](int a, int b) {
        edges.push_back(UEdge{"e" + std::to_string(++k), nodes[a], nodes[b]});
    };
    for (int i = 0; i < 5; ++i) add(i, (i + 1) % 5);          // outer cycle
    for (int i = 0; i < 5; ++i) add(5 + i, 5 + (i + 2) % 5);  // inner star
    for (int i = 0; i < 5; ++i) add(i, 5 + i);                // spokes
    return UndirectedGraph::build(std::move(nodes), std::move(edges));
}

bool is_matching(const UndirectedGraph& g, const std::vector<std::string>& m) {
    std::set<std::string> covered;
    for (const auto& id : m) {
        const UEdge& e = g.edge(id);
        if (!covered.insert(e.a).second || !covered.insert(e.b).second) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("max_matching basics") {
    CHECK(max_matching(UndirectedGraph::build({}, {})).empty());

    auto triangle = UndirectedGraph::build(
        {"a", "b", "c"},
        {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}});
    auto m = max_matching(triangle);
    CHECK(m.size() == 1);
    CHECK(is_matching(triangle, m));

    auto p = petersen();
    auto pm = max_matching(p);
    CHECK(pm.size() == 5);
    CHECK(is_matching(p, pm));
}

TEST_CASE("blossom size equals brute force on random graphs") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        int n = 3 + static_cast<int>(seed % 8);  // up to 10 nodes
        int m = static_cast<int>((seed * 7) % (n * (n - 1) / 2 + 1));
        auto g = oracle::random_undirected(seed, n, m);
        auto mm = max_matching(g);
        CHECK(is_matching(g, mm));
        CHECK(static_cast<int>(mm.size()) == oracle::bf_max_matching(g));
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("to_matched_graph on F0") {
    auto mg = to_matched_graph(fixtures::f0().graph);
    CHECK(mg.graph.nodes().size() == 4);
    CHECK(mg.matching.size() == 2);
    // e joins the + sides of both vertices.
    const UEdge& e = mg.graph.edge("e");
    CHECK(((e.a == "r^+" && e.b == "v^+") || (e.a == "v^+" && e.b == "r^+")));
}

TEST_CASE("the translation always carries its perfect matching") {
    for (std::uint64_t seed = 200; seed < 212; ++seed) {
        auto gen = oracle::random_instance({seed, 5, 9, oracle::Constraint::none});
        auto mg = to_matched_graph(gen.graph.graph);
        std::set<std::string> covered;
        for (const auto& id : mg.matching) {
            const UEdge& e = mg.graph.edge(id);
            CHECK(covered.insert(e.a).second);
            CHECK(covered.insert(e.b).second);
        }
        CHECK(covered.size() == mg.graph.nodes().size());
    }
}

TEST_CASE("to_matched_graph on F3") {
    auto mg = to_matched_graph(fixtures::f3().graph);
    CHECK(mg.graph.nodes().size() == 6);
    CHECK(mg.matching.size() == 3);
    const UEdge& g = mg.graph.edge("g");
    CHECK(((g.a == "c^-" && g.b == "w^+") || (g.a == "w^+" && g.b == "c^-")));
    const UEdge& h = mg.graph.edge("h");
    CHECK(((h.a == "c^-" && h.b == "w^-") || (h.a == "w^-" && h.b == "c^-")));
    // |edges| = |V| + |E| without subdivisions.
    CHECK(mg.graph.edges().size() == 3 + 3);
}

TEST_CASE("from_matched_graph four-cycle example") {
    auto g = UndirectedGraph::build({"a", "b", "c", "d"}, {{"ab", "a", "b"},
                                                           {"bc", "b", "c"},
                                                           {"cd", "c", "d"},
                                                           {"da", "d", "a"}});
    auto b = from_matched_graph(g, {"ab", "cd"});
    CHECK(b.vertex_count() == 2);
    REQUIRE(b.edge_count() == 2);
    // Two parallel edges with opposite mixed sign patterns.
    const EdgeRecord& bc = b.edge("bc");
    const EdgeRecord& da = b.edge("da");
    CHECK(bc.sign_at(bc.u) != bc.sign_at(bc.v));
    CHECK(da.sign_at(da.u) != da.sign_at(da.v));
    CHECK(bc.sign_at("a") != da.sign_at("a"));

    auto single = from_matched_graph(UndirectedGraph::build({"a", "b"}, {{"m", "a", "b"}}), {"m"});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    CHECK_THROWS_MATCHES(from_matched_graph(g, {"ab"}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::not_perfect_matching;
                         }));
}

TEST_CASE("round trip through the matched graph") {
    for (const auto& [name, rb] : fixtures::corpus()) {
        INFO(name);
        auto mg = to_matched_graph(rb.graph);
        CHECK(mg.subdivision_of.empty());
        auto back = from_matched_graph(mg.graph, mg.matching);
        // Vertices come back named after their + node; signs flip globally,
        // which is a sign switch at every vertex.
        std::map<std::string, std::string> vmap, emap;
        for (const auto& v : rb.graph.vertices()) vmap[v] = plus_node(v);
        for (const auto& e : rb.graph.edges()) emap[e.id] = e.id;
        CHECK(switching_isomorphic(rb.graph, back, vmap, emap));
    }
}

TEST_CASE("round trip from matched side is exact") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 2 * (2 + static_cast<int>(seed % 4));  // even node counts up to 10
        auto g = oracle::random_undirected(seed * 31, n, n * 2);
        auto m = max_matching(g);
        if (static_cast<int>(m.size()) * 2 != n) continue;  // need a perfect matching
        auto b = from_matched_graph(g, m);
        auto mg = to_matched_graph(b);
        // Node map: chosen (lexicographically smaller) end -> minus node.
        std::map<std::string, std::string> expect;
        for (const auto& id : m) {
            const UEdge& e = g.edge(id);
            expect[std::min(e.a, e.b)] = minus_node(std::min(e.a, e.b));
            expect[std::max(e.a, e.b)] = plus_node(std::min(e.a, e.b));
        }
        for (const auto& e : g.edges()) {
            if (std::find(m.begin(), m.end(), e.id) != m.end()) continue;
            auto got = mg.graph.edge_between(expect.at(e.a), expect.at(e.b));
            REQUIRE(got.has_value());
            CHECK(*got == e.id);
        }
    }
}

TEST_CASE("same-sign parallel edges are subdivided") {
    auto g = build_graph({"r", "v"}, {{"p1", "r", "v", Sign::plus, Sign::plus},
                                      {"p2", "r", "v", Sign::plus, Sign::plus}});
    auto mg = to_matched_graph(g);
    CHECK(mg.subdivision_of.size() == 1);
    CHECK(mg.subdivision_of.count("sub^p2") == 1);
    CHECK(mg.graph.nodes().size() == 6);
    // Both halves of the subdivided edge point back at p2.
    CHECK(mg.edge_origin.at("p2^a") == "p2");
    CHECK(mg.edge_origin.at("p2^b") == "p2");
}

TEST_CASE("alternating_path_exists on F0 and F3") {
    auto mg0 = to_matched_graph(fixtures::f0().graph);
    auto yes = alternating_path_exists(mg0, "r^+", "v^+");
    CHECK(yes.exists);
    CHECK(yes.path == std::vector<std::string>{"r^+", "v^+"});
    CHECK_FALSE(alternating_path_exists(mg0, "r^+", "v^-").exists);
    CHECK_THROWS_MATCHES(alternating_path_exists(mg0, "r^+", "r^+"), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::same_node; }));

    auto mg3 = to_matched_graph(fixtures::f3().graph);
    CHECK(alternating_path_exists(mg3, "r^-", "w^-").exists);  // r f c h w
    CHECK_FALSE(alternating_path_exists(mg3, "r^-", "c^-").exists);
}

TEST_CASE("alternating_path_exists matches exhaustive search") {
    // Exhaustive reference: try all simple alternating paths by DFS.
    auto exhaustive = [](const MatchedGraph& mg, const std::string& a, const std::string& b) {
        std::set<std::string> mids(mg.matching.begin(), mg.matching.end());
        std::vector<std::string> stack{a};
        std::set<std::string> on;
        std::function<bool(const std::string&, bool)> dfs = [&](const std::string& cur,
                                                                bool want_matching) -> bool {
            // completion happens only on a non-matching edge into b below
            for (const auto& e : mg.graph.edges()) {
                if (e.a != cur && e.b != cur) continue;
                bool is_m = mids.count(e.id) != 0;
                if (is_m != want_matching) continue;
                const std::string& nxt = e.a == cur ? e.b : e.a;
                if (on.count(nxt)) continue;
                if (nxt == b && !is_m) return true;
                on.insert(nxt);
                stack.push_back(nxt);
                if (dfs(nxt, !want_matching)) return true;
                stack.pop_back();
                on.erase(nxt);
            }
            return false;
        };
        on.insert(a);
        return dfs(a, false);
    };

    for (std::uint64_t seed = 40; seed <= 52; ++seed) {
        auto gen = oracle::random_instance({seed, 4, 5, oracle::Constraint::none});
        auto mg = to_matched_graph(gen.graph.graph);
        const auto& nodes = mg.graph.nodes();
        for (const auto& a : nodes)
            for (const auto& b : nodes) {
                if (a >= b) continue;
                auto fast = alternating_path_exists(mg, a, b);
                bool slow = exhaustive(mg, a, b);
                INFO(seed << " " << a << " " << b);
                CHECK(fast.exists == slow);
            }
    }
}

TEST_CASE("trail gadget shapes") {
    auto tg0 = build_trail_gadget(fixtures::f0());
    CHECK(tg0.graph.nodes().size() == 2);
    CHECK(tg0.matching.size() == 1);
    CHECK(tg0.graph.edges().size() == 1);  // no transitions

    auto tg1 = build_trail_gadget(fixtures::f1());
    CHECK(tg1.graph.nodes().size() == 4);
    // exactly one transition, at v between e and f
    int transitions = 0;
    for (const auto& e : tg1.graph.edges())
        if (e.id.rfind("t^", 0) == 0) {
            ++transitions;
            CHECK(((e.a == "e@v" && e.b == "f@v") || (e.a == "f@v" && e.b == "e@v")));
        }
    CHECK(transitions == 1);

    auto tg3 = build_trail_gadget(fixtures::f3());
    CHECK(tg3.graph.nodes().size() == 6);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& e : tg3.graph.edges())
        if (e.id.rfind("t^", 0) == 0) got.insert(std::minmax(e.a, e.b));
    std::set<std::pair<std::string, std::string>> want = {
        std::minmax(std::string("f@c"), std::string("g@c")),
        std::minmax(std::string("f@c"), std::string("h@c")),
        std::minmax(std::string("g@w"), std::string("h@w")),
    };
    CHECK(got == want);
}
