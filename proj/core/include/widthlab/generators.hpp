#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "widthlab/config.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

// Named families with fixed vertex orderings:
//   complete n | cycle n | path n | wheel n (hub 0, rim 1..n-1) |
//   petersen | grotzsch | mycielski n (Mycielskian of the n-cycle)
Graph standard_graph(const std::string &family, int param = -1);

// Mycielski construction: original 0..n-1, shadows n..2n-1, apex 2n.
Graph mycielskian(const Graph &g);

// Uniform-ish d-regular simple graph via the configuration model with
// rejection of loops and parallel edges; deterministic for a fixed seed.
Graph random_regular(int n, int d, std::uint64_t seed,
                     const Budget &budget = default_budget());

struct TripleCover {
    Graph graph;                    // b x K3, vertex (v, i) at index 3v + i
    bool base_connected = false;    // Greenwell-Lovasz hypothesis
    bool base_chromatic_exceeds_3 = false;
};
TripleCover triple_cover(const Graph &b, const Budget &budget = default_budget());

struct CrossoverGadget {
    Graph graph; // 13 vertices, 24 edges
    Vertex left, right, top, bottom;
    std::array<std::pair<int, int>, 13> local_coords; // the grid layout
};

// The fixed crossover gadget; opposite corner pairs are (left,right) and
// (top,bottom).
CrossoverGadget crossover_gadget();

} // namespace widthlab
