#pragma once

#include <sstream>
#include <string>

#include "arcx/complex.hpp"
#include "arcx/flipgraph.hpp"

namespace arcx {

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

// 1-skeleton of a complex as an undirected DOT graph.  Node ids are the
// canonical vertex labels; nodes and edges are listed in canonical order so
// the output is byte-stable.
inline std::string to_dot(const SimplicialComplex& c, const std::string& name) {
    std::ostringstream os;
    os << "graph " << detail::dot_quote(name) << " {\n";
    for (const auto& label : c.vertex_labels)
        os << "  " << detail::dot_quote(label) << ";\n";
    for (auto [i, j] : c.edges)
        os << "  " << detail::dot_quote(c.vertex_labels[i]) << " -- "
           << detail::dot_quote(c.vertex_labels[j]) << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string to_dot(const FlipGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << detail::dot_quote(name) << " {\n";
    for (const auto& key : g.vertex_keys)
        os << "  " << detail::dot_quote(key) << ";\n";
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        os << "  " << detail::dot_quote(g.vertex_keys[g.edges[e].first]) << " -- "
           << detail::dot_quote(g.vertex_keys[g.edges[e].second]) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace arcx
