#include "epicure/dot.hpp"

#include <cstdio>

namespace epicure {

namespace {

std::string escaped(const std::string& raw) {
    std::string out;
    for (char c : raw) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

std::string percent(double prob) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f%%", prob * 100.0);
    return buf;
}

}  // namespace

std::string render_dot(const Lattice& lattice, const DotOptions& opts) {
    std::string out = "digraph " + opts.graph_name + " {\n";
    out += "  rankdir=TB;\n";
    out += "  node [shape=box, style=filled, fillcolor=white];\n";

    std::vector<char> visible(lattice.node_count(), 0);
    for (Lattice::NodeId id : lattice.nodes_by_generality()) {
        double prob = lattice.probability_of(id);
        if (prob <= opts.min_prob)
            continue;
        visible[id] = 1;
        const std::string name = escaped(lattice.pattern_of(id).str());
        out += "  \"" + name + "\" [label=\"" + name + "\\n" + percent(prob) + "\"";
        if (opts.theta && prob > *opts.theta)
            out += ", fillcolor=lightblue";
        out += "];\n";
    }
    for (Lattice::NodeId id : lattice.nodes_by_generality()) {
        if (!visible[id])
            continue;
        for (Lattice::NodeId child : lattice.children_of(id)) {
            if (!visible[child])
                continue;
            out += "  \"" + escaped(lattice.pattern_of(id).str()) + "\" -> \"" +
                   escaped(lattice.pattern_of(child).str()) + "\";\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace epicure
