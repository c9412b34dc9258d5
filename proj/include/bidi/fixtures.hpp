#pragma once

#include <map>
#include <string>
#include <vector>

#include "bidi/core.hpp"

// The fixture corpus: four hand graphs (F0-F3) and five reconstructions of
// drawn examples (Fig1-Fig5). The reconstructed signings are committed here
// and machine-verified against their documented facts by the fixture suite
// and the campaign runner.

namespace bidi::fixtures {

/// Single edge r-v, both ends +.
inline RootedBidigraph f0() {
    return make_rooted(build_graph({"r", "v"}, {{"e", "r", "v", Sign::plus, Sign::plus}}), "r");
}

/// Two parallel r-v edges with opposite signs at v; not edge-clean.
inline RootedBidigraph f1() {
    return make_rooted(build_graph({"r", "v"},
                                   {{"e", "r", "v", Sign::plus, Sign::plus},
                                    {"f", "r", "v", Sign::plus, Sign::minus}}),
                       "r");
}

/// Directed triangle r->a, a->b, r->b (tails -, heads +).
inline RootedBidigraph f2() {
    return make_rooted(build_graph({"r", "a", "b"},
                                   {{"ra", "r", "a", Sign::minus, Sign::plus},
                                    {"ab", "a", "b", Sign::minus, Sign::plus},
                                    {"rb", "r", "b", Sign::minus, Sign::plus}}),
                       "r");
}

/// One undirectable component {c,w} entered through f; c is plain.
inline RootedBidigraph f3() {
    return make_rooted(build_graph({"r", "c", "w"},
                                   {{"f", "r", "c", Sign::minus, Sign::plus},
                                    {"g", "c", "w", Sign::minus, Sign::plus},
                                    {"h", "c", "w", Sign::minus, Sign::minus}}),
                       "r");
}

/// Eleven vertices; two trail-undirectable components {h,e,i} and
/// {a,b,c,f,g}; trail-solid set {r,a,d,h,j}; the trail-skeleton has six
/// arcs with a parallel pair into j.
inline RootedBidigraph fig1() {
    std::vector<EdgeRecord> es = {
        {"ra", "r", "a", Sign::minus, Sign::minus},
        {"rh", "r", "h", Sign::minus, Sign::plus},
        {"he", "h", "e", Sign::minus, Sign::minus},
        {"hi", "h", "i", Sign::minus, Sign::plus},
        {"ie", "i", "e", Sign::minus, Sign::plus},
        {"ej", "e", "j", Sign::minus, Sign::minus},
        {"ji", "j", "i", Sign::minus, Sign::plus},
        {"fj", "f", "j", Sign::minus, Sign::minus},
        {"dg", "d", "g", Sign::minus, Sign::minus},
        {"bc", "b", "c", Sign::plus, Sign::plus},
        {"cf", "c", "f", Sign::minus, Sign::plus},
        {"bf", "b", "f", Sign::plus, Sign::plus},
        {"ab1", "a", "b", Sign::plus, Sign::plus},
        {"ab2", "a", "b", Sign::plus, Sign::minus},
        {"fg1", "f", "g", Sign::minus, Sign::plus},
        {"fg2", "f", "g", Sign::minus, Sign::minus},
    };
    return make_rooted(build_graph({"r", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j"},
                                   std::move(es)),
                       "r");
}

/// Five edges; both arrivals at b are needed downstream while the unsigned
/// connectivity sum is only four.
inline RootedBidigraph fig2a() {
    std::vector<EdgeRecord> es = {
        {"ra", "r", "a", Sign::minus, Sign::plus},
        {"ab1", "a", "b", Sign::minus, Sign::plus},
        {"ab2", "a", "b", Sign::minus, Sign::minus},
        {"bc", "b", "c", Sign::minus, Sign::minus},
        {"bd", "b", "d", Sign::plus, Sign::minus},
    };
    return make_rooted(build_graph({"r", "a", "b", "c", "d"}, std::move(es)), "r");
}

/// Five copies of a gadget glued along seven shared edges; every edge is
/// needed to witness the signed connectivities, yet 37 edges exceed the
/// budget of 36. Not edge-clean.
inline RootedBidigraph fig3() {
    std::vector<std::string> vs = {"r", "a", "b", "c", "d", "e"};
    std::vector<EdgeRecord> es = {
        {"rc", "r", "c", Sign::minus, Sign::plus}, {"cb", "c", "b", Sign::minus, Sign::plus},
        {"ba", "b", "a", Sign::minus, Sign::plus}, {"ar", "a", "r", Sign::minus, Sign::plus},
        {"cd", "c", "d", Sign::minus, Sign::plus}, {"de", "d", "e", Sign::minus, Sign::plus},
        {"er", "e", "r", Sign::minus, Sign::plus},
    };
    for (int i = 1; i <= 5; ++i) {
        std::string x = "x" + std::to_string(i), y = "y" + std::to_string(i),
                    z = "z" + std::to_string(i), s = std::to_string(i);
        vs.push_back(x);
        vs.push_back(y);
        vs.push_back(z);
        es.push_back({"ax" + s, "a", x, Sign::minus, Sign::plus});
        es.push_back({"ex" + s, "e", x, Sign::minus, Sign::plus});
        es.push_back({"xy" + s, x, y, Sign::minus, Sign::plus});
        es.push_back({"xz" + s, x, z, Sign::minus, Sign::plus});
        es.push_back({"dz" + s, "d", z, Sign::plus, Sign::plus});
        es.push_back({"yb" + s, y, "b", Sign::plus, Sign::plus});
    }
    return make_rooted(build_graph(std::move(vs), std::move(es)), "r");
}

/// Linkage counterexample: paths through e and through f exist, but no two
/// edge-disjoint r-x paths and no r-x path using both. Not edge-clean.
inline RootedBidigraph fig4() {
    std::vector<EdgeRecord> es = {
        {"e", "r", "a", Sign::minus, Sign::minus},  // labeled e in the drawing
        {"rb", "r", "b", Sign::minus, Sign::minus},
        {"ab", "a", "b", Sign::plus, Sign::plus},
        {"f", "a", "x", Sign::minus, Sign::minus},  // labeled f
        {"bx", "b", "x", Sign::minus, Sign::minus},
    };
    return make_rooted(build_graph({"r", "a", "b", "x"}, std::move(es)), "r");
}

/// Same graph as fig1; in the almost-path regime the undirectable
/// components shrink to {h,e,i}, {a,b} and {f,g}, and the skeleton lives on
/// the plain vertices {a,c,d,f,h,j} plus the root.
inline RootedBidigraph fig5() { return fig1(); }

inline std::map<std::string, RootedBidigraph> corpus() {
    return {
        {"F0", f0()},     {"F1", f1()},     {"F2", f2()},   {"F3", f3()},   {"Fig1", fig1()},
        {"Fig2a", fig2a()}, {"Fig3", fig3()}, {"Fig4", fig4()}, {"Fig5", fig5()},
    };
}

}  // namespace bidi::fixtures
