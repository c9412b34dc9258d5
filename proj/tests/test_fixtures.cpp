#include <catch2/catch_amalgamated.hpp>

#include "bidi/campaign.hpp"
#include "bidi/fixtures.hpp"

using namespace bidi;

TEST_CASE("committed fixture files match the builders and their expectations") {
    auto s = campaign::verify_fixture_files(BIDI_FIXTURES_DIR);
    for (const auto& n : s.notes) UNSCOPED_INFO(n);
    CHECK(s.discrepancies == 0);
    CHECK(s.instances == 9);
}

TEST_CASE("every fixture parses and round-trips") {
    for (const auto& [name, rb] : fixtures::corpus()) {
        INFO(name);
        CHECK(rb.graph.vertex_count() >= 2);
        CHECK(parse_text(serialize_text(rb)).graph == rb.graph);
    }
}

TEST_CASE("fig2a caption facts") {
    auto s = campaign::run_fig2a_facts();
    for (const auto& n : s.notes) UNSCOPED_INFO(n);
    CHECK(s.discrepancies == 0);
}

TEST_CASE("fig4 caption facts") {
    auto s = campaign::run_fig4_facts();
    for (const auto& n : s.notes) UNSCOPED_INFO(n);
    CHECK(s.discrepancies == 0);
}

TEST_CASE("reconstruct_figures validates the committed signings") {
    auto corpus = campaign::reconstruct_figures();
    CHECK(corpus.size() == 9);
    CHECK(corpus.count("Fig3") == 1);
}
