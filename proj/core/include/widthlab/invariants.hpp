#pragma once

#include <cstdint>

#include "widthlab/config.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

// Exact maximum independent set size via branch and bound (n <= 64).
int independence_number(const Graph &g, const Budget &budget = default_budget());

// Exact chromatic number; iterates s upward with a greedy clique lower bound.
int chromatic_number(const Graph &g, const Budget &budget = default_budget());

bool is_3_colorable(const Graph &g, const Budget &budget = default_budget());

// Exact number of proper s-colorings; fail-first backtracking count.
std::uint64_t count_proper_colorings(const Graph &g, int s,
                                     const Budget &budget = default_budget());

// Exact number of proper total s-colorings extending the precolouring.
std::uint64_t count_proper_extensions(const PrecoloredGraph &p, int s,
                                      const Budget &budget = default_budget());

// Early-exit variant of the above.
bool proper_extension_exists(const PrecoloredGraph &p,
                             const Budget &budget = default_budget());

// Exact treewidth via the elimination-ordering DP over vertex subsets.
int treewidth_exact(const Graph &g, const Budget &budget = default_budget());

// Minimum |X| such that every component of g-X has at most n/2 vertices,
// where n = |V(g)|.
int balanced_separator_number(const Graph &g, const Budget &budget = default_budget());

} // namespace widthlab
