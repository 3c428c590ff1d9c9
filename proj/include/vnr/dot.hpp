#pragma once

#include <string>
#include <vector>

#include "vnr/diagram.hpp"

// Graphviz rendering of a paired forest diagram: the domain forest grows
// downward, the codomain forest upward, and dashed edges join matched
// leaves. Node names are derived from root index and path digits, so the
// output is byte-stable.

namespace vnr {

namespace detail {

inline void dot_nodes(const Tree& t, const std::string& id, bool up,
                      std::vector<std::string>& decls, std::vector<std::string>& edges,
                      std::vector<std::string>& leaves) {
    decls.push_back("    " + id + ";");
    if (t.is_leaf()) {
        leaves.push_back(id);
        return;
    }
    for (size_t d = 0; d < t.kids.size(); ++d) {
        std::string kid = id + "_" + std::to_string(d);
        if (up)
            edges.push_back("    " + kid + " -> " + id + ";");
        else
            edges.push_back("    " + id + " -> " + kid + ";");
        dot_nodes(t.kids[d], kid, up, decls, edges, leaves);
    }
}

inline void dot_forest(const Forest& f, char tag, bool up,
                       std::string& out, std::vector<std::string>& leaves) {
    std::vector<std::string> decls, edges;
    for (int j = 0; j < f.root_count(); ++j)
        dot_nodes(f.roots[static_cast<size_t>(j)], std::string(1, tag) + std::to_string(j),
                  up, decls, edges, leaves);
    for (const std::string& s : decls) out += s + "\n";
    for (const std::string& s : edges) out += s + "\n";
}

}  // namespace detail

inline std::string render_dot(const PairedDiagram& d) {
    std::string out;
    out += "digraph paired_forest_diagram {\n";
    out += "  node [shape=circle,style=filled,fillcolor=black,label=\"\",width=0.15];\n";
    out += "  edge [arrowhead=none];\n";
    std::vector<std::string> dom_leaves, cod_leaves;
    out += "  subgraph cluster_domain {\n";
    detail::dot_forest(d.dom, 'd', false, out, dom_leaves);
    out += "  }\n";
    out += "  subgraph cluster_codomain {\n";
    detail::dot_forest(d.cod, 'c', true, out, cod_leaves);
    out += "  }\n";
    for (int i = 0; i < d.leaves(); ++i)
        out += "  " + dom_leaves[static_cast<size_t>(i)] + " -> " +
               cod_leaves[static_cast<size_t>(d.sigma(i))] +
               " [style=dashed,constraint=false];\n";
    out += "}\n";
    return out;
}

}  // namespace vnr
