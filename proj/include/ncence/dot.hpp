#ifndef NCENCE_DOT_HPP
#define NCENCE_DOT_HPP

#include <string>

#include "ncence/graph.hpp"

namespace ncence {

/// DOT text for a graph. Node lines in ascending id order, then edge
/// lines sorted by (u, v, label). Bit-exact for a given graph.
inline std::string to_dot(const LabeledGraph& g) {
    std::string out = "graph G {\n";
    for (const auto& [id, label] : g.nodes())
        out += "  n" + std::to_string(id) + " [label=\"" + label.str() + "\"];\n";
    for (const auto& e : g.edges())
        out += "  n" + std::to_string(e.u) + " -- n" + std::to_string(e.v) +
               " [label=\"" + e.label.str() + "\"];\n";
    out += "}\n";
    return out;
}

} // namespace ncence

#endif // NCENCE_DOT_HPP
