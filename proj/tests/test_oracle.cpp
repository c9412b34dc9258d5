#include <catch2/catch_amalgamated.hpp>

#include "bidi/fixtures.hpp"
#include "bidi/io.hpp"
#include "bidi/oracle.hpp"

using namespace bidi;

TEST_CASE("enumerate on fixtures") {
    auto f0 = fixtures::f0();
    auto t0 = oracle::enumerate(f0, WalkMode::trail);
    REQUIRE(t0.size() == 2);  // trivial and r e v
    CHECK(t0[0].trivial());

    auto f3 = fixtures::f3();
    std::set<std::string> trails;
    for (const auto& t : oracle::enumerate(f3, WalkMode::trail)) trails.insert(t.to_string());
    CHECK(trails.count("r f c") == 1);
    CHECK(trails.count("r f c g w h c") == 1);
    CHECK(trails.count("r f c h w g c") == 1);

    // Nontrivial r-r almost paths in F1.
    auto f1 = fixtures::f1();
    bool rr = false;
    for (const auto& t : oracle::enumerate(f1, WalkMode::almost_path))
        rr |= !t.trivial() && t.last_vertex() == "r";
    CHECK(rr);
    CHECK(oracle::has_rr_almost_path(f1));
    CHECK_FALSE(oracle::has_rr_almost_path(f3));
}

TEST_CASE("enumerators are duplicate-free and nested") {
    for (std::uint64_t seed = 5000; seed < 5015; ++seed) {
        auto gen = oracle::random_instance({seed, 5, 8, oracle::Constraint::none});
        auto trails = oracle::enumerate(gen.graph, WalkMode::trail);
        auto almosts = oracle::enumerate(gen.graph, WalkMode::almost_path);
        auto paths = oracle::enumerate(gen.graph, WalkMode::path);
        std::set<std::string> st, sa, sp;
        for (const auto& t : trails) CHECK(st.insert(t.to_string()).second);
        for (const auto& t : almosts) CHECK(sa.insert(t.to_string()).second);
        for (const auto& t : paths) CHECK(sp.insert(t.to_string()).second);
        for (const auto& k : sp) CHECK(sa.count(k) == 1);
        for (const auto& k : sa) CHECK(st.count(k) == 1);
        // Flags agree with the claimed kinds.
        for (const auto& t : almosts) CHECK(t.is_almost_path);
        for (const auto& t : paths) CHECK(t.is_path);
        for (const auto& t : trails) CHECK(t.is_r_trail);
    }
}

TEST_CASE("bf_lambda and bf_kappa on fixtures") {
    CHECK(oracle::bf_lambda(fixtures::f3(), "w", WalkMode::trail).value == 1);
    CHECK(oracle::bf_lambda(fixtures::f2(), "b", WalkMode::path).value == 2);
    CHECK(oracle::bf_lambda(fixtures::f0(), "v", WalkMode::trail).value == 1);
    CHECK(oracle::bf_lambda(fixtures::f0(), "v", WalkMode::path).value == 1);
    CHECK(oracle::bf_kappa(fixtures::f2(), "b").value == 2);
    CHECK(oracle::bf_kappa(fixtures::f3(), "w").value == 1);

    auto fam = oracle::bf_lambda(fixtures::f2(), "b", WalkMode::path).family;
    REQUIRE(fam.size() == 2);
    std::set<std::string> used;
    for (const auto& t : fam)
        for (const auto& s : t.steps) CHECK(used.insert(s.edge).second);
}

TEST_CASE("bf_min_cut on fixtures") {
    auto c3 = oracle::bf_min_cut(fixtures::f3(), "w", oracle::CutQuery::edge_trail);
    CHECK(c3.value == 1);
    CHECK(c3.X == std::vector<std::string>{"c", "w"});
    CHECK(oracle::bf_min_cut(fixtures::f0(), "v", oracle::CutQuery::edge_path).value == 1);
    CHECK(oracle::bf_min_cut(fixtures::f2(), "b", oracle::CutQuery::vertex).value == 2);
}

TEST_CASE("bf values shrink under edge deletion") {
    for (std::uint64_t seed = 5100; seed < 5110; ++seed) {
        auto gen = oracle::random_instance({seed, 5, 7, oracle::Constraint::none});
        const auto& rb = gen.graph;
        if (rb.graph.edge_count() == 0) continue;
        std::string victim = rb.graph.edges()[seed % rb.graph.edge_count()].id;
        auto reduced = make_rooted(erase_edge(rb.graph, victim), rb.root);
        for (const auto& x : rb.graph.vertices()) {
            if (x == rb.root) continue;
            CHECK(oracle::bf_lambda(reduced, x, WalkMode::trail).value <=
                  oracle::bf_lambda(rb, x, WalkMode::trail).value);
            CHECK(oracle::bf_kappa(reduced, x).value <= oracle::bf_kappa(rb, x).value);
        }
    }
}

TEST_CASE("random_instance is deterministic and honours constraints") {
    auto a = oracle::random_instance({77, 5, 8, oracle::Constraint::none});
    auto b = oracle::random_instance({77, 5, 8, oracle::Constraint::none});
    CHECK(a.graph.graph == b.graph.graph);
    CHECK(serialize_text(a.graph) == serialize_text(b.graph));

    auto single = oracle::random_instance({1, 1, 0, oracle::Constraint::none});
    CHECK(single.graph.graph.vertex_count() == 1);
    CHECK(single.graph.graph.edge_count() == 0);

    int produced = 0;
    for (std::uint64_t seed = 5200; produced < 25; ++seed) {
        try {
            auto gen = oracle::random_instance({seed, 5, 7, oracle::Constraint::edge_clean});
            CHECK_FALSE(oracle::has_rr_trail(gen.graph));
            ++produced;
        } catch (const Error& e) {
            CHECK(e.code() == Errc::constraint_unsatisfiable);
        }
    }
}

TEST_CASE("size guards raise") {
    std::vector<EdgeRecord> edges;
    std::vector<std::string> vs{"r"};
    for (int i = 0; i < 18; ++i) {
        vs.push_back("v" + std::to_string(i));
        edges.push_back(EdgeRecord{"e" + std::to_string(i), "r", "v" + std::to_string(i),
                                   Sign::plus, Sign::plus});
    }
    auto rb = make_rooted(build_graph(vs, edges), "r");
    CHECK_THROWS_MATCHES(oracle::enumerate(rb, WalkMode::trail), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::too_large; }));
    // Path-mode enumeration is vertex-guarded instead and still works here.
    CHECK(oracle::enumerate(rb, WalkMode::path).size() == 19);
}

TEST_CASE("bf_max_matching on known graphs") {
    auto tri = UndirectedGraph::build({"a", "b", "c"},
                                      {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}});
    CHECK(oracle::bf_max_matching(tri) == 1);
    auto path4 = UndirectedGraph::build(
        {"a", "b", "c", "d"}, {{"ab", "a", "b"}, {"bc", "b", "c"}, {"cd", "c", "d"}});
    CHECK(oracle::bf_max_matching(path4) == 2);
}
