// Acceptance suite: every criterion runs at full scale and prints one
// pass/fail line. The underlying checks live in bidi::campaign and are
// shared with the CLI `campaign` subcommand.

#include <catch2/catch_amalgamated.hpp>

#include <iostream>

#include "bidi/campaign.hpp"

using namespace bidi;

namespace {

campaign::Params full_params() {
    campaign::Params p;
    p.master_seed = 20240501;
    p.reach_instances = 500;
    p.menger_instances = 200;
    p.vertex_menger_instances = 200;
    p.decomp_instances = 200;
    p.flame_instances = 200;
    p.pym_instances = 200;
    p.matching_instances = 500;
    p.max_n = 7;
    p.max_m = 12;
    p.fixtures_dir = BIDI_FIXTURES_DIR;
    return p;
}

const campaign::Report& first_run() {
    static campaign::Report report = campaign::run(full_params());
    return report;
}

const campaign::Section& section(const std::string& prefix) {
    for (const auto& s : first_run().sections)
        if (s.name.rfind(prefix, 0) == 0) return s;
    FAIL("missing campaign section " + prefix);
    static campaign::Section dummy;
    return dummy;
}

bool report_criterion(int number, const std::string& label,
                      const std::vector<const campaign::Section*>& parts) {
    bool pass = true;
    long long checks = 0;
    int instances = 0;
    for (const auto* s : parts) {
        pass &= s->discrepancies == 0;
        checks += s->checks;
        instances += s->instances;
    }
    std::cout << "criterion " << number << " (" << label << "): " << (pass ? "PASS" : "FAIL")
              << "  [" << instances << " instances, " << checks << " checks]\n";
    if (!pass)
        for (const auto* s : parts)
            for (const auto& n : s->notes) std::cout << "    - " << n << "\n";
    std::cout.flush();
    return pass;
}

}  // namespace

TEST_CASE("criterion 1: oracle equivalence for reachability") {
    const auto& s = section("reachability");
    CHECK(s.instances >= 500);
    CHECK(report_criterion(1, "oracle equivalence, trail/path/almost-path/pairs", {&s}));
}

TEST_CASE("criterion 2: strong edge-Menger") {
    const auto& s = section("strong edge-Menger");
    CHECK(s.instances >= 200);
    CHECK(report_criterion(2, "edge-Menger families and cuts", {&s}));
}

TEST_CASE("criterion 3: strong vertex-Menger") {
    const auto& s = section("strong vertex-Menger");
    CHECK(s.instances >= 200);
    CHECK(report_criterion(3, "vertex-Menger families and cuts", {&s}));
}

TEST_CASE("criterion 4: decomposition certificates") {
    const auto& s = section("decomposition");
    CHECK(s.instances >= 200);
    CHECK(report_criterion(4, "component certificates and skeleton correspondence", {&s}));
}

TEST_CASE("criterion 5: flames") {
    const auto& flames = section("flames");
    const auto& fig2a = section("fig2a");
    const auto& fig3 = section("fig3");
    CHECK(flames.instances >= 400);  // 200 edge + 200 vertex
    CHECK(report_criterion(5, "flame budgets, preservation, figure facts",
                           {&flames, &fig2a, &fig3}));
}

TEST_CASE("criterion 6: linkages") {
    const auto& pym = section("linkage");
    const auto& fig4 = section("fig4");
    CHECK(report_criterion(6, "linkage coverage, disjointness, counterexample", {&pym, &fig4}));
}

TEST_CASE("criterion 7: matching engine") {
    const auto& s = section("matching");
    CHECK(s.instances >= 500);
    const auto& files = section("fixture corpus");
    CHECK(report_criterion(7, "blossom optimality and translation round trips", {&s, &files}));
}

TEST_CASE("criterion 8: campaign determinism") {
    std::string once = first_run().render();
    std::string twice = campaign::run(full_params()).render();
    bool pass = once == twice;
    std::cout << "criterion 8 (byte-identical campaign report on reruns): "
              << (pass ? "PASS" : "FAIL") << "\n";
    CHECK(pass);
    CHECK(first_run().ok());
}
