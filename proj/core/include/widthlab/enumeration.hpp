#pragma once

#include <vector>

#include "widthlab/canonical.hpp"
#include "widthlab/config.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

// All graphs on exactly n vertices, one canonically-labelled representative
// per isomorphism class, sorted by canonical encoding.  Generated by growing
// (n-1)-vertex classes with every attachment neighbourhood and deduplicating.
std::vector<Graph> all_graphs_up_to_iso(int n, const Budget &budget = default_budget());

// Same for trees (every tree arises by attaching a leaf to a smaller tree).
std::vector<Graph> all_trees_up_to_iso(int n, const Budget &budget = default_budget());

} // namespace widthlab
