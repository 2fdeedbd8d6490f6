#pragma once

#include <sstream>

#include "cartan.hpp"

namespace weylkit {

/* Object change diagram in Graphviz DOT. Nodes appear in diagram vertex
 * order, then one edge line per (pair, label), sorted as in
 * object_change_diagram. Output is byte-deterministic. */
inline std::string emit_dot(const ObjectChangeDiagram& d) {
    std::ostringstream out;
    out << "graph {\n";
    for (const auto& v : d.vertices) out << "  \"" << v << "\";\n";
    for (const auto& e : d.edges)
        out << "  \"" << d.vertices[static_cast<size_t>(e[0])] << "\" -- \""
            << d.vertices[static_cast<size_t>(e[1])] << "\" [label=\"" << (e[2] + 1)
            << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace weylkit
