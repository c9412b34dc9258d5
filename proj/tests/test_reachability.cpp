#include <catch2/catch_amalgamated.hpp>

#include "bidi/fixtures.hpp"
#include "bidi/oracle.hpp"
#include "bidi/reachability.hpp"

using namespace bidi;

namespace {

OrientedEdge orient(const RootedBidigraph& rb, const std::string& e, const std::string& tail,
                    const std::string& head) {
    (void)rb.graph.edge(e);
    return OrientedEdge{e, tail, head};
}

}  // namespace

TEST_CASE("trail_reachable on fixtures") {
    auto f0 = fixtures::f0();
    CHECK(trail_reachable(f0, orient(f0, "e", "r", "v")).reachable);
    CHECK_FALSE(trail_reachable(f0, orient(f0, "e", "v", "r")).reachable);

    auto f3 = fixtures::f3();
    auto res = trail_reachable(f3, orient(f3, "g", "w", "c"));
    REQUIRE(res.reachable);
    CHECK(res.witness->to_string() == "r f c h w g c");
    CHECK(res.witness->is_r_trail);
}

TEST_CASE("trail_reachable_signed on fixtures") {
    auto f3 = fixtures::f3();
    CHECK(trail_reachable_signed(f3, {"w", Sign::plus}).reachable);
    CHECK(trail_reachable_signed(f3, {"w", Sign::minus}).reachable);
    auto f0 = fixtures::f0();
    CHECK_FALSE(trail_reachable_signed(f0, {"v", Sign::minus}).reachable);
    CHECK_THROWS_MATCHES(trail_reachable_signed(f0, {"r", Sign::plus}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::root_target; }));
}

TEST_CASE("path_exists on fixtures") {
    auto f0 = fixtures::f0();
    CHECK(path_exists(f0.graph, {"r", Sign::plus}, {"v", Sign::plus}).reachable);
    auto f3 = fixtures::f3();
    CHECK_FALSE(path_exists(f3.graph, {"r", Sign::minus}, {"c", Sign::minus}).reachable);
    auto res = path_exists(f3.graph, {"r", Sign::minus}, {"w", Sign::minus});
    REQUIRE(res.reachable);
    CHECK(res.witness->to_string() == "r f c h w");
    CHECK_THROWS_MATCHES(path_exists(f3.graph, {"w", Sign::plus}, {"w", Sign::minus}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::same_vertex; }));
}

TEST_CASE("path_reachable on fixtures") {
    auto f0 = fixtures::f0();
    CHECK(path_reachable(f0, orient(f0, "e", "r", "v")).reachable);
    auto f3 = fixtures::f3();
    CHECK_FALSE(path_reachable(f3, orient(f3, "g", "w", "c")).reachable);
    auto res = path_reachable(f3, orient(f3, "g", "c", "w"));
    REQUIRE(res.reachable);
    CHECK(res.witness->to_string() == "r f c g w");
}

TEST_CASE("almost_path_reachable on fixtures") {
    auto f3 = fixtures::f3();
    auto res = almost_path_reachable(f3, orient(f3, "g", "w", "c"));
    REQUIRE(res.reachable);
    CHECK(res.witness->to_string() == "r f c h w g c");
    CHECK(res.witness->is_almost_path);

    auto f0 = fixtures::f0();
    CHECK_FALSE(almost_path_reachable(f0, orient(f0, "e", "v", "r")).reachable);

    auto f1 = fixtures::f1();
    CHECK(almost_path_reachable(f1, orient(f1, "f", "v", "r")).reachable);
}

TEST_CASE("classify_edge on fixtures") {
    auto f0 = fixtures::f0();
    auto c = classify_edge(f0, "e", Regime::trail);
    CHECK(c.status == EdgeStatus::directable);
    CHECK(c.natural == OrientedEdge{"e", "r", "v"});

    auto f3 = fixtures::f3();
    CHECK(classify_edge(f3, "g", Regime::trail).status == EdgeStatus::undirectable);
    auto cf = classify_edge(f3, "f", Regime::almost_path);
    CHECK(cf.status == EdgeStatus::directable);
    CHECK(cf.natural == OrientedEdge{"f", "r", "c"});
}

TEST_CASE("plain vertices") {
    CHECK(plain_vertices(fixtures::f0()) == std::vector<std::string>{"v"});
    CHECK(plain_vertices(fixtures::f3()) == std::vector<std::string>{"c"});
    CHECK(plain_vertices(fixtures::f1()).empty());
}

TEST_CASE("cleanness predicates") {
    CHECK(is_edge_clean(fixtures::f3()));
    CHECK_FALSE(is_edge_clean(fixtures::f1()));
    CHECK(is_edge_clean(fixtures::f0()));
    CHECK(is_clean(fixtures::f3()));
    CHECK_FALSE(is_clean(fixtures::f1()));
    CHECK_FALSE(is_clean(fixtures::fig4()));
    CHECK_FALSE(is_edge_clean(fixtures::fig4()));

    // Agreement with direct searches for closed root walks.
    for (std::uint64_t seed = 60; seed < 90; ++seed) {
        auto gen = oracle::random_instance({seed, 5, 8, oracle::Constraint::none});
        INFO(seed);
        CHECK(is_edge_clean(gen.graph) == !oracle::has_rr_trail(gen.graph));
        CHECK(is_clean(gen.graph) == !oracle::has_rr_almost_path(gen.graph));
        CHECK(has_nontrivial_root_trail(gen.graph).reachable == oracle::has_rr_trail(gen.graph));
    }
}

TEST_CASE("restrict_graph basics") {
    auto f0 = fixtures::f0();
    CHECK(restrict_graph(f0, WalkMode::trail).graph == f0.graph);

    auto extra = make_rooted(build_graph({"r", "v", "x", "y"},
                                         {{"e", "r", "v", Sign::plus, Sign::plus},
                                          {"q", "x", "y", Sign::plus, Sign::minus}}),
                             "r");
    auto trimmed = restrict_graph(extra, WalkMode::trail);
    CHECK(trimmed.graph.edge_count() == 1);
    CHECK(trimmed.graph.has_edge("e"));

    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        auto gen = oracle::random_instance({seed, 5, 8, oracle::Constraint::none});
        for (WalkMode m : {WalkMode::trail, WalkMode::path, WalkMode::almost_path}) {
            auto once = restrict_graph(gen.graph, m);
            auto twice = restrict_graph(once, m);
            CHECK(once.graph == twice.graph);
        }
    }
}

TEST_CASE("oracle equivalence for every oriented edge and signed pair") {
    // The keystone property test at unit scale; the acceptance suite runs
    // the full campaign.
    int instances = 0;
    for (std::uint64_t seed = 300; instances < 60; ++seed) {
        auto gen = oracle::random_instance({seed, 3 + static_cast<int>(seed % 5),
                                            static_cast<int>(seed % 11),
                                            oracle::Constraint::none});
        ++instances;
        const auto& rb = gen.graph;
        INFO("seed " << seed);
        for (const auto& e : rb.graph.edges()) {
            auto [fwd, bwd] = orientations(e);
            for (const auto& o : {fwd, bwd}) {
                INFO(o.edge << " " << o.tail << "->" << o.head);
                bool tr = trail_reachable(rb, o).reachable;
                bool pr = path_reachable(rb, o).reachable;
                bool ar = almost_path_reachable(rb, o).reachable;
                CHECK(tr == oracle::has_terminal(rb, WalkMode::trail, o));
                CHECK(pr == oracle::has_terminal(rb, WalkMode::path, o));
                CHECK(ar == oracle::has_terminal(rb, WalkMode::almost_path, o));
                // Hierarchy.
                CHECK((!pr || ar));
                CHECK((!ar || tr));
            }
        }
        for (const auto& x : rb.graph.vertices())
            for (const auto& y : rb.graph.vertices()) {
                if (x == y) continue;
                for (Sign sx : {Sign::plus, Sign::minus})
                    for (Sign sy : {Sign::plus, Sign::minus}) {
                        bool fast = path_exists(rb.graph, {x, sx}, {y, sy}).reachable;
                        bool slow = oracle::has_pair_path(rb.graph, {x, sx}, {y, sy});
                        INFO(x << sign_char(sx) << " -> " << y << sign_char(sy));
                        CHECK(fast == slow);
                    }
            }
        for (const auto& v : rb.graph.vertices()) {
            if (v == rb.root) continue;
            for (Sign s : {Sign::plus, Sign::minus}) {
                bool fast = trail_reachable_signed(rb, {v, s}).reachable;
                bool slow = oracle::has_signed_arrival(rb, WalkMode::trail, {v, s});
                CHECK(fast == slow);
            }
        }
    }
}

TEST_CASE("witnesses validate with the claimed flags") {
    for (std::uint64_t seed = 400; seed < 430; ++seed) {
        auto gen = oracle::random_instance({seed, 5, 9, oracle::Constraint::none});
        const auto& rb = gen.graph;
        for (const auto& e : rb.graph.edges()) {
            auto [fwd, bwd] = orientations(e);
            for (const auto& o : {fwd, bwd}) {
                auto tr = trail_reachable(rb, o);
                if (tr.reachable) {
                    Trail t = validate_trail(rb, tr.witness->start, tr.witness->steps);
                    CHECK(t.is_r_trail);
                    CHECK(t.steps.back() == o);
                }
                auto pr = path_reachable(rb, o);
                if (pr.reachable) {
                    Trail t = validate_trail(rb, pr.witness->start, pr.witness->steps);
                    CHECK((t.is_path && t.is_r_trail));
                    CHECK(t.steps.back() == o);
                }
                auto ar = almost_path_reachable(rb, o);
                if (ar.reachable) {
                    Trail t = validate_trail(rb, ar.witness->start, ar.witness->steps);
                    CHECK((t.is_almost_path && t.is_r_trail));
                    CHECK(t.steps.back() == o);
                }
            }
        }
    }
}

TEST_CASE("component membership matches double-signed trail arrivals") {
    for (std::uint64_t seed = 500; seed < 530; ++seed) {
        auto gen = oracle::random_instance({seed, 5, 8, oracle::Constraint::none});
        const auto& rb = gen.graph;
        for (const auto& v : rb.graph.vertices()) {
            if (v == rb.root) continue;
            bool incident_undirectable = false;
            for (const auto& id : rb.graph.edges_at(v))
                incident_undirectable |=
                    classify_edge(rb, id, Regime::trail).status == EdgeStatus::undirectable;
            bool both = trail_reachable_signed(rb, {v, Sign::plus}).reachable &&
                        trail_reachable_signed(rb, {v, Sign::minus}).reachable;
            INFO(seed << " " << v);
            CHECK(incident_undirectable == both);
        }
    }
}
