#include <catch2/catch_amalgamated.hpp>

#include "bidi/connectivity.hpp"
#include "bidi/fixtures.hpp"
#include "bidi/io.hpp"
#include "bidi/oracle.hpp"

using namespace bidi;

TEST_CASE("maxflow_paths basics") {
    auto single = Digraph::build({"r", "v"}, {{"e", "r", "v"}});
    auto mf = maxflow_paths(single, "r", "v");
    CHECK(mf.value == 1);
    REQUIRE(mf.family.size() == 1);
    CHECK(mf.family[0] == DiWalk{"r", {"e"}});
    CHECK(mf.cut_vertices == std::vector<std::string>{"v"});
    CHECK(mf.cut_arcs == std::vector<std::string>{"e"});

    auto tri = Digraph::build({"r", "a", "b"},
                              {{"ra", "r", "a"}, {"ab", "a", "b"}, {"rb", "r", "b"}});
    CHECK(maxflow_paths(tri, "r", "b").value == 2);

    auto disc = Digraph::build({"r", "x", "y"}, {{"xy", "x", "y"}});
    auto none = maxflow_paths(disc, "r", "y");
    CHECK(none.value == 0);
    CHECK(none.family.empty());
    CHECK(none.cut_arcs.empty());
    CHECK(std::find(none.cut_vertices.begin(), none.cut_vertices.end(), "y") !=
          none.cut_vertices.end());

    CHECK_THROWS_MATCHES(maxflow_paths(single, "r", "r"), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::same_vertex; }));
}

TEST_CASE("maxflow agrees with arc-disjoint brute force") {
    // Reference: greedy exhaustive packing of arc-disjoint paths.
    auto bf_paths = [](const Digraph& d, const std::string& r, const std::string& x) {
        std::vector<std::vector<std::string>> all;
        std::vector<std::string> cur;
        std::set<std::string> used, visited{r};
        std::function<void(const std::string&)> collect = [&](const std::string& v) {
            if (v == x) {
                all.push_back(cur);
                return;
            }
            for (const auto& id : d.out_arcs(v)) {
                const Arc& a = d.arc(id);
                if (used.count(id) || visited.count(a.head)) continue;
                used.insert(id);
                visited.insert(a.head);
                cur.push_back(id);
                collect(a.head);
                cur.pop_back();
                visited.erase(a.head);
                used.erase(id);
            }
        };
        collect(r);
        std::function<int(std::set<std::string>&, std::size_t)> pack =
            [&](std::set<std::string>& taken, std::size_t i) -> int {
            int best = 0;
            for (std::size_t j = i; j < all.size(); ++j) {
                bool ok = true;
                for (const auto& id : all[j]) ok &= taken.count(id) == 0;
                if (!ok) continue;
                for (const auto& id : all[j]) taken.insert(id);
                best = std::max(best, 1 + pack(taken, j + 1));
                for (const auto& id : all[j]) taken.erase(id);
            }
            return best;
        };
        std::set<std::string> taken;
        return pack(taken, 0);
    };

    std::mt19937_64 rng(7);
    for (int it = 0; it < 40; ++it) {
        int n = 3 + static_cast<int>(rng() % 3);
        int m = static_cast<int>(rng() % 9);
        std::vector<std::string> vs;
        for (int i = 0; i < n; ++i) vs.push_back("n" + std::to_string(i));
        std::vector<Arc> arcs;
        for (int i = 0; i < m; ++i) {
            int a = static_cast<int>(rng() % n);
            int b = static_cast<int>(rng() % (n - 1));
            if (b >= a) ++b;
            arcs.push_back(Arc{"a" + std::to_string(i), vs[a], vs[b]});
        }
        Digraph d = Digraph::build(vs, std::move(arcs));
        auto mf = maxflow_paths(d, vs[0], vs[1]);
        CHECK(mf.value == bf_paths(d, vs[0], vs[1]));
        CHECK(mf.family.size() == static_cast<std::size_t>(mf.value));
        CHECK(mf.cut_arcs.size() == static_cast<std::size_t>(mf.value));
    }
}

TEST_CASE("lambda_trail on fixtures") {
    auto f3 = fixtures::f3();
    auto rw = lambda_trail(f3, "w");
    CHECK(rw.value == 1);
    REQUIRE(rw.family.size() == 1);
    CHECK(rw.family[0].last_vertex() == "w");
    REQUIRE(rw.cut.has_value());
    CHECK(rw.cut->X == std::vector<std::string>{"c", "w"});
    REQUIRE(rw.cut->boundary_edges.size() == 1);
    CHECK(rw.cut->boundary_edges[0].edge == "f");

    auto f2 = fixtures::f2();
    CHECK(lambda_trail(f2, "b").value == 2);
    auto f0 = fixtures::f0();
    auto rv = lambda_trail(f0, "v");
    CHECK(rv.value == 1);
    CHECK(rv.cut->boundary_edges[0].edge == "e");

    CHECK_THROWS_MATCHES(lambda_trail(fixtures::f1(), "v"), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::not_edge_clean; }));
    CHECK_THROWS_MATCHES(lambda_trail(f3, "r"), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::target_is_root; }));
}

TEST_CASE("lambda_path on fixtures") {
    auto f3 = fixtures::f3();
    auto rw = lambda_path(f3, "w");
    CHECK(rw.value == 1);
    CHECK(rw.family[0].is_path);
    REQUIRE(rw.cut.has_value());
    CHECK(rw.cut->boundary_edges.size() == 1);
    CHECK(rw.cut->boundary_edges[0].edge == "f");
    CHECK(lambda_path(fixtures::f2(), "b").value == 2);

    // Deletion form: removing the boundary edges kills every r-x path.
    auto cutset = rw.cut->boundary_edges;
    BidirectedGraph g = f3.graph;
    for (const auto& o : cutset) g = erase_edge(g, o.edge);
    auto reduced = make_rooted(g, "r");
    CHECK_FALSE(oracle::has_signed_arrival(reduced, WalkMode::path, {"w", Sign::plus}));
    CHECK_FALSE(oracle::has_signed_arrival(reduced, WalkMode::path, {"w", Sign::minus}));
}

TEST_CASE("menger duality on random edge-clean instances") {
    int instances = 0;
    for (std::uint64_t seed = 2000; instances < 30; ++seed) {
        oracle::GenResult gen;
        try {
            gen = oracle::random_instance({seed, 3 + static_cast<int>(seed % 5),
                                           static_cast<int>(seed % 11),
                                           oracle::Constraint::edge_clean});
        } catch (const Error&) {
            continue;
        }
        ++instances;
        const auto& rb = gen.graph;
        INFO("seed " << seed);
        for (const auto& x : rb.graph.vertices()) {
            if (x == rb.root) continue;
            auto lt = lambda_trail(rb, x);
            auto bf_fam = oracle::bf_lambda(rb, x, WalkMode::trail);
            auto bf_cut = oracle::bf_min_cut(rb, x, oracle::CutQuery::edge_trail);
            CHECK(lt.value == bf_fam.value);
            CHECK(lt.value == bf_cut.value);
            CHECK(lt.family.size() == static_cast<std::size_t>(lt.value));
            CHECK(lt.cut->boundary_edges.size() == static_cast<std::size_t>(lt.value));

            auto lp = lambda_path(rb, x);
            auto bf_pfam = oracle::bf_lambda(rb, x, WalkMode::path);
            auto bf_pcut = oracle::bf_min_cut(rb, x, oracle::CutQuery::edge_path);
            CHECK(lp.value == bf_pfam.value);
            CHECK(lp.value == bf_pcut.value);
            CHECK(lp.value <= lt.value);
        }
    }
}

TEST_CASE("lambda_signed on fixtures") {
    auto f3 = fixtures::f3();
    CHECK(lambda_signed(f3, {"w", Sign::plus}, WalkMode::path) == 1);
    CHECK(lambda_signed(f3, {"w", Sign::minus}, WalkMode::path) == 1);
    CHECK(lambda_path(f3, "w").value == 1);  // the signed optima share f
    CHECK(lambda_signed(f3, {"c", Sign::plus}, WalkMode::path) == 1);
    CHECK(lambda_signed(f3, {"c", Sign::minus}, WalkMode::path) == 0);
    CHECK(lambda_signed(fixtures::f0(), {"v", Sign::minus}, WalkMode::path) == 0);
    CHECK(lambda_signed(fixtures::fig2a(), {"b", Sign::plus}, WalkMode::path) == 1);
    CHECK(lambda_signed(fixtures::fig2a(), {"b", Sign::minus}, WalkMode::path) == 1);
}

TEST_CASE("lambda_signed equals brute force") {
    int instances = 0;
    for (std::uint64_t seed = 2100; instances < 25; ++seed) {
        oracle::GenResult gen;
        try {
            gen = oracle::random_instance({seed, 5, 8, oracle::Constraint::edge_clean});
        } catch (const Error&) {
            continue;
        }
        ++instances;
        const auto& rb = gen.graph;
        for (const auto& x : rb.graph.vertices()) {
            if (x == rb.root) continue;
            for (Sign s : {Sign::plus, Sign::minus}) {
                INFO("seed " << seed << " target " << x << sign_char(s));
                CHECK(lambda_signed(rb, {x, s}, WalkMode::trail) ==
                      oracle::bf_lambda(rb, x, WalkMode::trail, s).value);
                CHECK(lambda_signed(rb, {x, s}, WalkMode::path) ==
                      oracle::bf_lambda(rb, x, WalkMode::path, s).value);
            }
        }
    }
}

TEST_CASE("in_vertices on fixtures") {
    auto f0 = fixtures::f0();
    CHECK(in_vertices(f0, "v").empty());
    auto f3 = fixtures::f3();
    CHECK(in_vertices(f3, "w") == std::vector<std::string>{"c"});
    CHECK(in_vertices(f3, "c").empty());
}

TEST_CASE("kappa on fixtures") {
    auto f3 = fixtures::f3();
    auto kw = kappa(f3, "w");
    CHECK(kw.value == 1);
    REQUIRE(kw.cut.has_value());
    CHECK(kw.cut->X == std::vector<std::string>{"c", "w"});
    CHECK(kw.cut->boundary_vertices == std::vector<std::string>{"c"});

    auto f2 = fixtures::f2();
    auto kb = kappa(f2, "b");
    CHECK(kb.value == 2);
    CHECK_FALSE(kb.cut.has_value());
    CHECK(kb.cut_withheld == Errc::root_target_edge);

    CHECK_THROWS_MATCHES(kappa(fixtures::f1(), "v"), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::not_clean; }));
}

TEST_CASE("kappa duality on random clean instances") {
    int instances = 0;
    for (std::uint64_t seed = 2200; instances < 30; ++seed) {
        oracle::GenResult gen;
        try {
            gen = oracle::random_instance({seed, 3 + static_cast<int>(seed % 5),
                                           static_cast<int>(seed % 10),
                                           oracle::Constraint::clean});
        } catch (const Error&) {
            continue;
        }
        ++instances;
        const auto& rb = gen.graph;
        for (const auto& x : rb.graph.vertices()) {
            if (x == rb.root) continue;
            INFO("seed " << seed << " target " << x);
            auto res = kappa(rb, x);
            auto bf = oracle::bf_kappa(rb, x);
            CHECK(res.value == bf.value);
            CHECK(res.family.size() == static_cast<std::size_t>(res.value));
            // Monotonicity, where the edge counts are defined too.
            if (is_edge_clean(rb)) {
                CHECK(res.value <= lambda_path(rb, x).value);
                CHECK(lambda_path(rb, x).value <= lambda_trail(rb, x).value);
            }
            bool root_edge = false;
            for (const auto& id : rb.graph.edges_at(x))
                root_edge |= rb.graph.edge(id).other_end(x) == rb.root;
            if (!root_edge) {
                REQUIRE(res.cut.has_value());
                auto bf_cut = oracle::bf_min_cut(rb, x, oracle::CutQuery::vertex);
                CHECK(res.value == bf_cut.value);
                CHECK(res.cut->boundary_vertices.size() ==
                      static_cast<std::size_t>(res.value));
            } else {
                CHECK(res.cut_withheld == Errc::root_target_edge);
            }
            // Non-plain targets in clean graphs have kappa at most one.
            auto plains = plain_vertices(rb);
            if (!std::binary_search(plains.begin(), plains.end(), x))
                CHECK(res.value <= 1);
        }
    }
}

TEST_CASE("signed connectivity table and its orderings") {
    auto t3 = signed_connectivity_table(fixtures::f3());
    CHECK(t3.at({"c", Sign::plus}).lambda_path == 1);
    CHECK(t3.at({"c", Sign::minus}).lambda_path == 0);
    CHECK(t3.at({"w", Sign::plus}).kappa == 1);

    int instances = 0;
    for (std::uint64_t seed = 2600; instances < 15; ++seed) {
        oracle::GenResult gen;
        try {
            gen = oracle::random_instance({seed, 5, 8, oracle::Constraint::clean});
        } catch (const Error&) {
            continue;
        }
        if (!is_edge_clean(gen.graph)) continue;
        ++instances;
        for (const auto& [sv, c] : signed_connectivity_table(gen.graph)) {
            INFO(seed << " " << sv.vertex << sign_char(sv.sign));
            CHECK(c.kappa >= 0);
            CHECK(c.lambda_path <= c.lambda_trail);
            CHECK(c.kappa <= c.lambda_path);
        }
    }
}

TEST_CASE("the duality gap on a non-edge-clean graph is documented behaviour") {
    // On fig4 the maximum edge-disjoint r-x path family has size one while
    // every admissible boundary has size two; the polynomial routine
    // refuses rather than return either number.
    auto rb = fixtures::fig4();
    CHECK(oracle::bf_lambda(rb, "x", WalkMode::path).value == 1);
    CHECK(oracle::bf_min_cut(rb, "x", oracle::CutQuery::edge_path).value == 2);
    CHECK_THROWS_MATCHES(lambda_path(rb, "x"), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::not_edge_clean; }));
    CHECK_THROWS_MATCHES(lambda_trail(rb, "x"), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::not_edge_clean; }));
}

TEST_CASE("set_menger on fixtures") {
    auto f3 = fixtures::f3();
    auto res = set_menger(f3.graph, {"r"}, {"w"});
    CHECK(res.value == 1);
    REQUIRE(res.family.size() == 1);
    CHECK(res.family[0].start == "r");
    CHECK(res.family[0].last_vertex() == "w");

    // Singleton overlap: the trivial path.
    auto sv = set_menger(f3.graph, {"w"}, {"w"});
    CHECK(sv.value == 1);
    REQUIRE(sv.family.size() == 1);
    CHECK(sv.family[0].trivial());

    // Disconnected pair.
    auto disc = build_graph({"x", "y", "p", "q"},
                            {{"e1", "x", "y", Sign::plus, Sign::minus},
                             {"e2", "p", "q", Sign::plus, Sign::minus}});
    auto none = set_menger(disc, {"x"}, {"q"});
    CHECK(none.value == 0);
    CHECK(none.family.empty());
    CHECK(none.W == std::vector<std::string>{"q"});

    // X-X path rejection.
    CHECK_THROWS_MATCHES(set_menger(f3.graph, {"r", "c"}, {"w"}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::xx_path_exists; }));
}

TEST_CASE("set_menger agrees with brute-force packing") {
    // Brute force: enumerate X-Y paths, pack vertex-disjointly.
    auto bf_xy = [](const BidirectedGraph& g, const std::set<std::string>& X,
                    const std::set<std::string>& Y) {
        std::vector<std::set<std::string>> paths;  // vertex sets
        for (const auto& x : X) {
            if (Y.count(x)) paths.push_back({x});
            for (const auto& t : oracle::enumerate(make_rooted(g, x), WalkMode::path)) {
                if (t.trivial() || !Y.count(t.last_vertex())) continue;
                auto vs = t.vertices();
                bool ok = true;
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    if (X.count(vs[i]) && i != 0) ok = false;
                    if (Y.count(vs[i]) && i + 1 != vs.size()) ok = false;
                }
                if (ok) paths.push_back({vs.begin(), vs.end()});
            }
        }
        std::function<int(std::size_t, std::set<std::string>&)> pack =
            [&](std::size_t i, std::set<std::string>& used) -> int {
            int best = 0;
            for (std::size_t j = i; j < paths.size(); ++j) {
                bool ok = true;
                for (const auto& v : paths[j]) ok &= used.count(v) == 0;
                if (!ok) continue;
                for (const auto& v : paths[j]) used.insert(v);
                best = std::max(best, 1 + pack(j + 1, used));
                for (const auto& v : paths[j]) used.erase(v);
            }
            return best;
        };
        std::set<std::string> used;
        return pack(0, used);
    };

    int instances = 0;
    for (std::uint64_t seed = 2300; instances < 20; ++seed) {
        auto gen = oracle::random_instance({seed, 5, 6, oracle::Constraint::none});
        const auto& g = gen.graph.graph;
        auto vs = g.vertices();
        std::set<std::string> X{vs[0]};
        std::set<std::string> Y{vs[vs.size() - 1], vs[vs.size() - 2]};
        try {
            auto res = set_menger(g, {X.begin(), X.end()}, {Y.begin(), Y.end()});
            ++instances;
            INFO("seed " << seed);
            CHECK(res.value == bf_xy(g, X, Y));
            CHECK(res.boundary.size() == static_cast<std::size_t>(res.value));
        } catch (const Error& e) {
            CHECK(e.code() == Errc::xx_path_exists);
        }
    }
}
