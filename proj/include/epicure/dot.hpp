#pragma once

#include <optional>
#include <string>

#include "epicure/lattice.hpp"

namespace epicure {

struct DotOptions {
    /// Only nodes with probability strictly above this are drawn.
    double min_prob = 0.0;
    /// Nodes with probability strictly above theta are shaded.
    std::optional<double> theta;
    std::string graph_name = "lattice";
};

/// Renders the lattice as a Graphviz digraph. Edges run from the more
/// general pattern to its nearest descendants and are emitted only when
/// both endpoints are visible. Node labels use the textual pattern form
/// plus the probability as a percentage. Output is deterministic.
std::string render_dot(const Lattice& lattice, const DotOptions& opts = {});

}  // namespace epicure
