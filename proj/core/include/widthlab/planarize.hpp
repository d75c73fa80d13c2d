#pragma once

#include <array>
#include <vector>

#include "widthlab/generators.hpp"
#include "widthlab/geometry.hpp"

namespace widthlab {

struct GadgetRecord {
    int crossing_index = 0;                // into the input drawing's crossing list
    std::array<Vertex, 13> vertex_ids{};   // gadget vertices, local layout order
    std::array<Vertex, 4> corner_ids{};    // left, right, top, bottom (local axes)
};

struct PlanarizationResult {
    Graph g_prime;
    Drawing drawing; // crossing-free, re-verified exactly
    int crossing_count = 0;
    std::vector<Vertex> original_vertex_map; // V(G) -> V(G'), identity labelling
    std::vector<GadgetRecord> gadget_records;
    int endpoint_identifications = 0; // one per crossed edge
    int corner_sharings = 0;          // corners shared by consecutive gadgets
    std::vector<Crossing> input_crossings;
};

struct PlanarizeOptions {
    // The endpoint with the smaller index is identified with the nearest
    // gadget corner; flip to exercise the opposite choice.
    bool identify_larger_endpoint = false;
    // The lexicographically smaller crossing edge takes the gadget's
    // horizontal corner axis; flip to exercise the opposite assignment.
    bool swap_gadget_axes = false;
};

// Replace every crossing of the drawing with the crossover gadget: gadgets
// along one edge share corner vertices, one endpoint per crossed edge is
// identified with the nearest corner, uncrossed edges are kept verbatim.
PlanarizationResult planarize_drawing(const Drawing &d, const PlanarizeOptions &options = {},
                                      const Budget &budget = default_budget());

// Straight-line drawing (seeded) followed by planarize_drawing, retrying the
// jitter when the gadget layout cannot be verified crossing-free.
PlanarizationResult planarize(const Graph &g, std::uint64_t seed,
                              const PlanarizeOptions &options = {},
                              const Budget &budget = default_budget());

} // namespace widthlab
