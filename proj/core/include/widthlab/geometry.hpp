#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "widthlab/config.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

using Rat = boost::multiprecision::cpp_rational;

struct Point {
    Rat x, y;
    bool operator==(const Point &o) const { return x == o.x && y == o.y; }
    bool operator<(const Point &o) const { return x < o.x || (x == o.x && y < o.y); }
};

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
int orientation(const Point &a, const Point &b, const Point &c);

bool on_closed_segment(const Point &a, const Point &b, const Point &p);
bool on_open_segment(const Point &a, const Point &b, const Point &p);

// Interior-interior crossing point of segments ab and cd, when it exists.
std::optional<Point> proper_intersection(const Point &a, const Point &b, const Point &c,
                                         const Point &d);

// Closed-segment intersection test (shared endpoints count).
bool segments_intersect(const Point &a, const Point &b, const Point &c, const Point &d);

// True when segment ab meets the closed axis-aligned square centred at c
// with L-infinity radius rad.
bool segment_meets_box(const Point &a, const Point &b, const Point &c, const Rat &rad);

struct Drawing {
    Graph graph;
    std::vector<Point> coords; // one point per vertex
};

struct Crossing {
    int edge_a, edge_b; // indices into graph.edges(), edge_a < edge_b
    Point point;
};

// Proper (interior) crossings between all segment pairs.
std::vector<Crossing> find_crossings(const Drawing &d);

struct DrawingCheck {
    bool ok = true;
    std::string issue;
};

// General-position invariants: distinct vertex points, no vertex interior to
// an edge, no collinear overlap of segments, and at most two edges through
// any crossing point.
DrawingCheck check_general_position(const Drawing &d);

// General position and additionally zero crossings.
DrawingCheck check_crossing_free(const Drawing &d);

// Vertices on a circle with seeded integer jitter, retried until the general
// position invariants hold.
Drawing straight_line_drawing(const Graph &g, std::uint64_t seed,
                              const Budget &budget = default_budget());

} // namespace widthlab
