#include "widthlab/planarize.hpp"

#include <algorithm>
#include <map>

namespace widthlab {

namespace {

Rat linf(const Point &a, const Point &b) {
    Rat dx = abs(a.x - b.x), dy = abs(a.y - b.y);
    return dx > dy ? dx : dy;
}

Rat linf_vec(const Point &v) {
    Rat dx = abs(v.x), dy = abs(v.y);
    return dx > dy ? dx : dy;
}

// Parameter of p along segment ab (p assumed on the segment).
Rat param_along(const Point &a, const Point &b, const Point &p) {
    Rat dx = b.x - a.x, dy = b.y - a.y;
    return ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy);
}

// Dyadic fractions in (1/4, 3/4), densest first at 1/2.
std::vector<Rat> junction_fractions() {
    std::vector<Rat> out;
    out.emplace_back(1, 2);
    for (int denom = 8; denom <= 1 << 12; denom *= 2)
        for (int num = denom / 4 + 1; num < 3 * denom / 4; num += 2)
            out.emplace_back(num, denom);
    return out;
}

struct Builder {
    const Drawing &input;
    const PlanarizeOptions &options;
    const Budget &budget;

    std::vector<Crossing> crossings;
    std::vector<Point> coords;                     // grows past the originals
    std::vector<std::pair<Vertex, Vertex>> edges;  // of G'
    std::map<int, std::vector<int>> edge_crossings; // edge index -> crossing ids by t
    std::map<int, std::vector<Vertex>> axis_nodes;  // edge index -> chain nodes
    std::vector<Rat> safe_radius;                   // per crossing

    Vertex fresh_vertex(const Point &p) {
        coords.push_back(p);
        return static_cast<Vertex>(coords.size() - 1);
    }

    // A point strictly between a and b, clear of every other segment and of
    // every placed point.
    Point clear_point_between(const Point &a, const Point &b, int own_edge) {
        static const std::vector<Rat> fractions = junction_fractions();
        const auto &segs = input.graph.edges();
        for (const Rat &f : fractions) {
            Point p{a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
            bool ok = true;
            for (std::size_t e = 0; e < segs.size() && ok; ++e) {
                if (static_cast<int>(e) == own_edge) continue;
                if (on_closed_segment(input.coords[segs[e].first], input.coords[segs[e].second], p))
                    ok = false;
            }
            for (std::size_t i = 0; i < coords.size() && ok; ++i)
                if (coords[i] == p) ok = false;
            if (ok) return p;
        }
        raise(Errc::retry_exhausted, "no clear junction point between consecutive crossings");
    }

    void compute_safe_radii() {
        const auto &segs = input.graph.edges();
        safe_radius.resize(crossings.size());
        for (std::size_t c = 0; c < crossings.size(); ++c) {
            const Point &x = crossings[c].point;
            Rat rho(-1);
            auto shrink = [&](const Rat &dist) {
                if (rho < 0 || dist < rho) rho = dist;
            };
            for (const Point &p : input.coords) shrink(linf(x, p));
            for (std::size_t o = 0; o < crossings.size(); ++o)
                if (o != c) shrink(linf(x, crossings[o].point));
            // Clear every non-incident segment off the gadget box.
            for (int guard = 0; guard < 256; ++guard) {
                bool blocked = false;
                for (std::size_t e = 0; e < segs.size(); ++e) {
                    if (static_cast<int>(e) == crossings[c].edge_a ||
                        static_cast<int>(e) == crossings[c].edge_b)
                        continue;
                    if (segment_meets_box(input.coords[segs[e].first],
                                          input.coords[segs[e].second], x, rho)) {
                        blocked = true;
                        break;
                    }
                }
                if (!blocked) break;
                rho /= 2;
            }
            safe_radius[c] = rho;
        }
    }

    void build_axis_nodes() {
        const auto &segs = input.graph.edges();
        for (auto &[edge, list] : edge_crossings) {
            auto [a, b] = segs[edge];
            const Point &pa = input.coords[a], &pb = input.coords[b];
            std::sort(list.begin(), list.end(), [&](int lhs, int rhs) {
                return param_along(pa, pb, crossings[lhs].point) <
                       param_along(pa, pb, crossings[rhs].point);
            });
            Vertex identified = options.identify_larger_endpoint ? std::max(a, b) : std::min(a, b);
            std::vector<Vertex> nodes(list.size() + 1, -1);
            nodes.front() = (identified == a)
                                ? a
                                : fresh_vertex(clear_point_between(pa, crossings[list.front()].point, edge));
            nodes.back() = (identified == b)
                               ? b
                               : fresh_vertex(clear_point_between(crossings[list.back()].point, pb, edge));
            for (std::size_t j = 0; j + 1 < list.size(); ++j)
                nodes[j + 1] = fresh_vertex(clear_point_between(crossings[list[j]].point,
                                                                crossings[list[j + 1]].point, edge));
            // The non-identified endpoint keeps an edge to the far corner.
            if (identified == a)
                edges.emplace_back(std::min(nodes.back(), b), std::max(nodes.back(), b));
            else
                edges.emplace_back(std::min(nodes.front(), a), std::max(nodes.front(), a));
            axis_nodes[edge] = std::move(nodes);
        }
    }

    PlanarizationResult run() {
        DrawingCheck pos = check_general_position(input);
        if (!pos.ok) raise(Errc::precondition, "drawing not in general position: " + pos.issue);
        crossings = find_crossings(input);

        PlanarizationResult result;
        result.crossing_count = static_cast<int>(crossings.size());
        result.input_crossings = crossings;
        int n = input.graph.vertex_count();
        result.original_vertex_map.resize(n);
        for (Vertex v = 0; v < n; ++v) result.original_vertex_map[v] = v;

        if (crossings.empty()) {
            result.g_prime = input.graph;
            result.drawing = input;
            return result;
        }

        coords = input.coords;
        for (std::size_t c = 0; c < crossings.size(); ++c) {
            edge_crossings[crossings[c].edge_a].push_back(static_cast<int>(c));
            edge_crossings[crossings[c].edge_b].push_back(static_cast<int>(c));
        }
        // Uncrossed edges survive verbatim.
        const auto &segs = input.graph.edges();
        for (std::size_t e = 0; e < segs.size(); ++e)
            if (!edge_crossings.count(static_cast<int>(e))) edges.push_back(segs[e]);

        compute_safe_radii();
        build_axis_nodes();

        CrossoverGadget gadget = crossover_gadget();
        for (std::size_t c = 0; c < crossings.size(); ++c) {
            int first_edge = crossings[c].edge_a, second_edge = crossings[c].edge_b;
            if (options.swap_gadget_axes) std::swap(first_edge, second_edge);
            const Point &x = crossings[c].point;

            auto axis_of = [&](int edge) {
                auto [a, b] = segs[edge];
                Point dir{input.coords[b].x - input.coords[a].x,
                          input.coords[b].y - input.coords[a].y};
                const auto &list = edge_crossings[edge];
                int slot = static_cast<int>(
                    std::find(list.begin(), list.end(), static_cast<int>(c)) - list.begin());
                return std::pair<Point, std::pair<Vertex, Vertex>>(
                    dir, {axis_nodes[edge][slot], axis_nodes[edge][slot + 1]});
            };
            auto [d1, lr] = axis_of(first_edge);
            auto [d2, bt] = axis_of(second_edge);
            Rat eps1 = safe_radius[c] / (8 * linf_vec(d1));
            Rat eps2 = safe_radius[c] / (8 * linf_vec(d2));

            GadgetRecord record;
            record.crossing_index = static_cast<int>(c);
            for (int local = 0; local < 13; ++local) {
                if (local == gadget.left) record.vertex_ids[local] = lr.first;
                else if (local == gadget.right) record.vertex_ids[local] = lr.second;
                else if (local == gadget.bottom) record.vertex_ids[local] = bt.first;
                else if (local == gadget.top) record.vertex_ids[local] = bt.second;
                else {
                    auto [lx, ly] = gadget.local_coords[local];
                    Point p{x.x + lx * eps1 * d1.x + ly * eps2 * d2.x,
                            x.y + lx * eps1 * d1.y + ly * eps2 * d2.y};
                    record.vertex_ids[local] = fresh_vertex(p);
                }
            }
            record.corner_ids = {record.vertex_ids[gadget.left], record.vertex_ids[gadget.right],
                                 record.vertex_ids[gadget.top], record.vertex_ids[gadget.bottom]};
            for (auto [lu, lv] : gadget.graph.edges()) {
                Vertex u = record.vertex_ids[lu], v = record.vertex_ids[lv];
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
            result.gadget_records.push_back(record);
        }

        result.endpoint_identifications = static_cast<int>(edge_crossings.size());
        for (const auto &[edge, list] : edge_crossings)
            result.corner_sharings += static_cast<int>(list.size()) - 1;

        result.g_prime = Graph(static_cast<int>(coords.size()), edges);
        result.drawing = Drawing{result.g_prime, coords};
        DrawingCheck flat = check_crossing_free(result.drawing);
        if (!flat.ok)
            raise(Errc::retry_exhausted, "planarized drawing failed verification: " + flat.issue);
        return result;
    }
};

} // namespace

PlanarizationResult planarize_drawing(const Drawing &d, const PlanarizeOptions &options,
                                      const Budget &budget) {
    Builder builder{d, options, budget, {}, {}, {}, {}, {}, {}};
    return builder.run();
}

PlanarizationResult planarize(const Graph &g, std::uint64_t seed, const PlanarizeOptions &options,
                              const Budget &budget) {
    for (int attempt = 0; attempt < budget.geometry_retries; ++attempt) {
        Drawing d = straight_line_drawing(g, seed + 0x9e3779b97f4a7c15ULL * attempt, budget);
        try {
            return planarize_drawing(d, options, budget);
        } catch (const Error &e) {
            if (e.code() != Errc::retry_exhausted) throw;
        }
    }
    raise(Errc::retry_exhausted, "planarize failed for every jittered drawing");
}

} // namespace widthlab
