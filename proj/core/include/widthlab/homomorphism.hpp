#pragma once

#include <optional>
#include <vector>

#include "widthlab/config.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

// Total edge-preserving map g -> h if one exists.  Backtracking over
// most-constrained vertices with forward domain propagation.
std::optional<std::vector<Vertex>> homomorphism_exists(const Graph &g, const Graph &h,
                                                       const Budget &budget = default_budget());

// Colour-preserving variant: a vertex coloured c in g must map to a vertex
// coloured c in h; uncoloured vertices are unconstrained.
std::optional<std::vector<Vertex>> homomorphism_exists(const PrecoloredGraph &g,
                                                       const PrecoloredGraph &h,
                                                       const Budget &budget = default_budget());

} // namespace widthlab
