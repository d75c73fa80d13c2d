#include "widthlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace widthlab {

namespace {

Rat cross(const Point &o, const Point &a, const Point &b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sign(const Rat &r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

} // namespace

int orientation(const Point &a, const Point &b, const Point &c) { return sign(cross(a, b, c)); }

bool on_closed_segment(const Point &a, const Point &b, const Point &p) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool on_open_segment(const Point &a, const Point &b, const Point &p) {
    return on_closed_segment(a, b, p) && !(p == a) && !(p == b);
}

std::optional<Point> proper_intersection(const Point &a, const Point &b, const Point &c,
                                         const Point &d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 * o2 >= 0 || o3 * o4 >= 0) return std::nullopt;
    // Signed areas against line ab interpolate linearly along cd; the zero
    // sits at u = area(abc) / (area(abc) - area(abd)).
    Rat ac = cross(a, b, c), ad = cross(a, b, d);
    Rat u = ac / (ac - ad);
    return Point{c.x + u * (d.x - c.x), c.y + u * (d.y - c.y)};
}

bool segments_intersect(const Point &a, const Point &b, const Point &c, const Point &d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (on_closed_segment(a, b, c) || on_closed_segment(a, b, d)) return true;
    if (on_closed_segment(c, d, a) || on_closed_segment(c, d, b)) return true;
    return false;
}

bool segment_meets_box(const Point &a, const Point &b, const Point &c, const Rat &rad) {
    auto inside = [&](const Point &p) {
        return abs(p.x - c.x) <= rad && abs(p.y - c.y) <= rad;
    };
    if (inside(a) || inside(b)) return true;
    Point q1{c.x - rad, c.y - rad}, q2{c.x + rad, c.y - rad};
    Point q3{c.x + rad, c.y + rad}, q4{c.x - rad, c.y + rad};
    return segments_intersect(a, b, q1, q2) || segments_intersect(a, b, q2, q3) ||
           segments_intersect(a, b, q3, q4) || segments_intersect(a, b, q4, q1);
}

std::vector<Crossing> find_crossings(const Drawing &d) {
    std::vector<Crossing> out;
    const auto &edges = d.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a1, b1] = edges[i];
            auto [a2, b2] = edges[j];
            if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
            auto p = proper_intersection(d.coords[a1], d.coords[b1], d.coords[a2], d.coords[b2]);
            if (p) out.push_back(Crossing{static_cast<int>(i), static_cast<int>(j), *p});
        }
    return out;
}

DrawingCheck check_general_position(const Drawing &d) {
    const auto &edges = d.graph.edges();
    int n = d.graph.vertex_count();
    if (static_cast<int>(d.coords.size()) != n) return {false, "coordinate count mismatch"};

    std::set<Point> points(d.coords.begin(), d.coords.end());
    if (static_cast<int>(points.size()) != n) return {false, "coincident vertex points"};

    for (int v = 0; v < n; ++v)
        for (const auto &[a, b] : edges) {
            if (a == v || b == v) continue;
            if (on_open_segment(d.coords[a], d.coords[b], d.coords[v]))
                return {false, "vertex " + std::to_string(v) + " lies inside an edge segment"};
        }

    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a1, b1] = edges[i];
            auto [a2, b2] = edges[j];
            const Point &p1 = d.coords[a1], &p2 = d.coords[b1];
            const Point &q1 = d.coords[a2], &q2 = d.coords[b2];
            // Collinear overlap: all four orientations zero plus interval overlap.
            if (orientation(p1, p2, q1) == 0 && orientation(p1, p2, q2) == 0) {
                if (on_open_segment(p1, p2, q1) || on_open_segment(p1, p2, q2) ||
                    on_open_segment(q1, q2, p1) || on_open_segment(q1, q2, p2) ||
                    (p1 == q1 && p2 == q2) || (p1 == q2 && p2 == q1))
                    return {false, "collinear overlapping segments"};
            }
        }

    // At most two edges through any interior point.
    std::map<Point, std::set<int>> through;
    for (const Crossing &c : find_crossings(d)) {
        auto &set = through[c.point];
        set.insert(c.edge_a);
        set.insert(c.edge_b);
        if (set.size() > 2) return {false, "three segments share a crossing point"};
    }
    return {};
}

DrawingCheck check_crossing_free(const Drawing &d) {
    DrawingCheck check = check_general_position(d);
    if (!check.ok) return check;
    auto crossings = find_crossings(d);
    if (!crossings.empty())
        return {false, std::to_string(crossings.size()) + " crossings remain"};
    return {};
}

Drawing straight_line_drawing(const Graph &g, std::uint64_t seed, const Budget &budget) {
    if (g.vertex_count() < 1) raise(Errc::bad_params, "drawing needs n >= 1");
    int n = g.vertex_count();
    const long long radius = 1 << 20;
    const long long jitter = radius / 64;
    std::mt19937_64 rng(seed);
    auto jig = [&]() { return static_cast<long long>(rng() % (2 * jitter + 1)) - jitter; };

    for (int attempt = 0; attempt < budget.geometry_retries; ++attempt) {
        Drawing d;
        d.graph = g;
        d.coords.resize(n);
        for (int v = 0; v < n; ++v) {
            double angle = 2.0 * 3.14159265358979323846 * v / n;
            long long x = std::llround(radius * std::cos(angle)) + jig();
            long long y = std::llround(radius * std::sin(angle)) + jig();
            d.coords[v] = Point{Rat(x), Rat(y)};
        }
        if (check_general_position(d).ok) return d;
    }
    raise(Errc::retry_exhausted, "could not reach general position within the retry budget");
}

} // namespace widthlab
