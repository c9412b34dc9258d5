#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bidi/core.hpp"

namespace bidi {

// ---------------------------------------------------------------------------
// Canonical text format
//
//   bidigraph v1
//   root <r>
//   vertex <name>                      (isolated non-root vertices only)
//   edge <id> <u> <v> <sign-u> <sign-v>
//
// One statement per line, '#' starts a comment. Serialization is canonical:
// vertex lines sorted, edge lines sorted by id. parse(serialize(B)) is
// bit-exact.
// ---------------------------------------------------------------------------

inline RootedBidigraph parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    std::optional<std::string> root;
    std::vector<std::string> vertices;
    std::vector<EdgeRecord> edges;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "bidigraph" || tok[1] != "v1")
                fail(Errc::parse_error, "expected 'bidigraph v1' header" + where);
            saw_header = true;
            continue;
        }
        if (tok[0] == "root") {
            if (tok.size() != 2) fail(Errc::parse_error, "root takes one name" + where);
            if (root) fail(Errc::parse_error, "duplicate root statement" + where);
            root = tok[1];
            vertices.push_back(tok[1]);
        } else if (tok[0] == "vertex") {
            if (tok.size() != 2) fail(Errc::parse_error, "vertex takes one name" + where);
            vertices.push_back(tok[1]);
        } else if (tok[0] == "edge") {
            if (tok.size() != 6)
                fail(Errc::parse_error, "edge takes <id> <u> <v> <su> <sv>" + where);
            if (tok[4] != "+" && tok[4] != "-")
                fail(Errc::parse_error, "bad sign " + tok[4] + where);
            if (tok[5] != "+" && tok[5] != "-")
                fail(Errc::parse_error, "bad sign " + tok[5] + where);
            edges.push_back(EdgeRecord{tok[1], tok[2], tok[3], parse_sign(tok[4]), parse_sign(tok[5])});
        } else {
            fail(Errc::parse_error, "unknown statement '" + tok[0] + "'" + where);
        }
    }
    if (!saw_header) fail(Errc::parse_error, "missing 'bidigraph v1' header");
    if (!root) fail(Errc::parse_error, "missing root statement");
    return make_rooted(build_graph(std::move(vertices), std::move(edges)), *root);
}

inline std::string serialize_text(const RootedBidigraph& rb) {
    const BidirectedGraph& g = rb.graph;
    std::ostringstream os;
    os << "bidigraph v1\n";
    os << "root " << rb.root << "\n";
    for (const auto& v : g.vertices())
        if (v != rb.root && g.edges_at(v).empty()) os << "vertex " << v << "\n";
    for (const auto& e : g.edges())
        os << "edge " << e.id << " " << e.u << " " << e.v << " " << sign_char(e.su) << " "
           << sign_char(e.sv) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// JSON mirror
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const RootedBidigraph& rb) {
    const BidirectedGraph& g = rb.graph;
    nlohmann::json j;
    j["version"] = 1;
    j["root"] = rb.root;
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        es.push_back({{"id", e.id},
                      {"u", e.u},
                      {"v", e.v},
                      {"su", std::string(1, sign_char(e.su))},
                      {"sv", std::string(1, sign_char(e.sv))}});
    }
    j["edges"] = es;
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : g.vertices())
        if (v != rb.root && g.edges_at(v).empty()) vs.push_back(v);
    if (!vs.empty()) j["vertices"] = vs;
    return j;
}

inline RootedBidigraph from_json(const nlohmann::json& j) {
    if (!j.contains("version") || j.at("version") != 1)
        fail(Errc::parse_error, "expected version 1");
    if (!j.contains("root")) fail(Errc::parse_error, "missing root");
    std::vector<std::string> vertices{j.at("root").get<std::string>()};
    if (j.contains("vertices"))
        for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<EdgeRecord> edges;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        edges.push_back(EdgeRecord{e.at("id").get<std::string>(), e.at("u").get<std::string>(),
                                   e.at("v").get<std::string>(),
                                   parse_sign(e.at("su").get<std::string>()),
                                   parse_sign(e.at("sv").get<std::string>())});
    }
    return make_rooted(build_graph(std::move(vertices), std::move(edges)),
                       j.at("root").get<std::string>());
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

/// Undirected DOT with edges labeled "u:<sign>,v:<sign>".
inline std::string to_dot(const RootedBidigraph& rb) {
    const BidirectedGraph& g = rb.graph;
    std::ostringstream os;
    os << "graph bidigraph {\n";
    for (const auto& v : g.vertices()) os << "  " << dot_quote(v) << ";\n";
    for (const auto& e : g.edges()) {
        os << "  " << dot_quote(e.u) << " -- " << dot_quote(e.v) << " [label="
           << dot_quote(e.u + ":" + sign_char(e.su) + "," + e.v + ":" + sign_char(e.sv)) << "];\n";
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Walk sequences: ["v0","e1","v1",...] <-> Trail
// ---------------------------------------------------------------------------

inline Trail trail_from_sequence(const RootedBidigraph& rb, const std::vector<std::string>& seq) {
    if (seq.empty() || seq.size() % 2 == 0)
        fail(Errc::parse_error, "walk sequence must alternate vertex,edge,...,vertex");
    std::vector<std::pair<std::string, std::string>> hops;
    for (std::size_t i = 1; i + 1 < seq.size(); i += 2) hops.emplace_back(seq[i], seq[i + 1]);
    return validate_trail(rb, seq[0], hops);
}

inline std::vector<std::string> sequence_from_trail(const Trail& t) {
    std::vector<std::string> seq{t.start};
    for (const auto& s : t.steps) {
        seq.push_back(s.edge);
        seq.push_back(s.head);
    }
    return seq;
}

}  // namespace bidi
