#include "widthlab/consistency.hpp"

#include <algorithm>
#include <unordered_set>

#include "widthlab/coloring_game.hpp"
#include "widthlab/homomorphism.hpp"
#include "widthlab/invariants.hpp"

namespace widthlab {

namespace {

struct MapEntry {
    std::uint8_t size = 0;
    bool alive = true;
    std::int32_t pass = -1;
    std::int16_t witness = -1;
    std::int8_t kind = -1;
};

using Family = std::unordered_map<PartialMapKey, MapEntry>;

// Every edge-preserving partial map with domain size <= k, enumerated by
// ascending domains; images are checked only against assigned neighbours.
void enumerate_family(const Graph &g, const Graph &h, int k, const Budget &budget,
                      Family &family, std::vector<std::vector<PartialMapKey>> &by_size) {
    int n = g.vertex_count();
    int hn = h.vertex_count();
    PartialMapKey empty = empty_map_key(n);
    by_size.assign(k + 1, {});

    auto rec = [&](auto &&self, PartialMapKey key, Vertex next_vertex, int size) -> void {
        family.emplace(key, MapEntry{static_cast<std::uint8_t>(size), true, -1, -1, -1});
        by_size[size].push_back(key);
        if (family.size() > budget.consistency_max_family)
            raise(Errc::resource_cap, "consistency family budget exceeded");
        if (size == k) return;
        for (Vertex v = next_vertex; v < n; ++v) {
            for (int b = 0; b < hn; ++b) {
                bool ok = true;
                for (Vertex w : g.neighbors(v)) {
                    int img = map_get(key, w);
                    if (img >= 0 && !h.adjacent(b, img)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) self(self, map_set(key, v, b), v + 1, size + 1);
            }
        }
    };
    rec(rec, empty, 0, 0);
    for (auto &bucket : by_size) std::sort(bucket.begin(), bucket.end());
}

} // namespace

PartialMapKey encode_partial_map(int n, const std::vector<std::pair<Vertex, Vertex>> &pairs) {
    PartialMapKey key = empty_map_key(n);
    for (auto [v, b] : pairs) {
        if (v < 0 || v >= n || b < 0 || b > 14) raise(Errc::bad_params, "bad partial map pair");
        key = map_set(key, v, b);
    }
    return key;
}

std::vector<std::pair<Vertex, Vertex>> decode_partial_map(int n, PartialMapKey key) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < n; ++v)
        if (map_get(key, v) >= 0) pairs.emplace_back(v, map_get(key, v));
    return pairs;
}

ConsistencyResult k_consistent(const Graph &g, const Graph &h, int k, const Budget &budget) {
    if (k < 1) raise(Errc::bad_params, "k_consistent needs k >= 1");
    int n = g.vertex_count();
    int hn = h.vertex_count();
    if (n > budget.consistency_max_n)
        raise(Errc::resource_cap, "k_consistent supports |g| <= " +
                                      std::to_string(budget.consistency_max_n));
    if (hn > 14) raise(Errc::resource_cap, "k_consistent supports |h| <= 14");
    if (hn == 0) raise(Errc::bad_params, "empty target graph");
    k = std::min(k, n > 0 ? n : 1);

    Family family;
    std::vector<std::vector<PartialMapKey>> by_size;
    enumerate_family(g, h, k, budget, family, by_size);
    std::uint64_t initial = family.size();

    PartialMapKey empty = empty_map_key(n);
    std::unordered_set<PartialMapKey> dirty;
    std::vector<PartialMapKey> candidates;
    for (const auto &bucket : by_size) candidates.insert(candidates.end(), bucket.begin(), bucket.end());
    std::sort(candidates.begin(), candidates.end());

    struct Deletion {
        PartialMapKey key;
        std::int16_t witness;
        std::int8_t kind;
    };

    int pass = 0;
    std::uint64_t alive_count = initial;
    while (true) {
        ++pass;
        std::vector<Deletion> deletions;
        for (PartialMapKey key : candidates) {
            auto it = family.find(key);
            if (it == family.end() || !it->second.alive) continue;
            const MapEntry &entry = it->second;
            bool marked = false;
            if (entry.size < k) {
                // Forth: some unpebbled vertex with no surviving extension.
                for (Vertex v = 0; v < n && !marked; ++v) {
                    if (map_get(key, v) >= 0) continue;
                    bool any_alive = false;
                    for (int b = 0; b < hn; ++b) {
                        auto ext = family.find(map_set(key, v, b));
                        if (ext != family.end() && ext->second.alive) {
                            any_alive = true;
                            break;
                        }
                    }
                    if (!any_alive) {
                        deletions.push_back({key, static_cast<std::int16_t>(v), 0});
                        marked = true;
                    }
                }
            }
            if (!marked && entry.size > 0) {
                // Restriction closure: a one-point restriction already died.
                for (Vertex v = 0; v < n && !marked; ++v) {
                    if (map_get(key, v) < 0) continue;
                    if (!family.at(map_clear(key, v)).alive) {
                        deletions.push_back({key, static_cast<std::int16_t>(v), 1});
                        marked = true;
                    }
                }
            }
        }
        if (deletions.empty()) {
            --pass;
            break;
        }
        dirty.clear();
        for (const Deletion &d : deletions) {
            MapEntry &entry = family.at(d.key);
            entry.alive = false;
            entry.pass = pass;
            entry.witness = d.witness;
            entry.kind = d.kind;
            --alive_count;
        }
        for (const Deletion &d : deletions) {
            for (Vertex v = 0; v < n; ++v) {
                if (map_get(d.key, v) >= 0) {
                    PartialMapKey parent = map_clear(d.key, v);
                    if (family.at(parent).alive) dirty.insert(parent);
                } else if (family.at(d.key).size < k) {
                    for (int b = 0; b < hn; ++b) {
                        auto ext = family.find(map_set(d.key, v, b));
                        if (ext != family.end() && ext->second.alive) dirty.insert(ext->first);
                    }
                }
            }
        }
        candidates.assign(dirty.begin(), dirty.end());
        std::sort(candidates.begin(), candidates.end());
    }

    ConsistencyResult result;
    result.passes = pass;
    result.initial_maps = initial;
    result.surviving_maps = alive_count;
    result.duplicator_wins = family.at(empty).alive;

    std::unordered_map<PartialMapKey, SpoilerStrategy::Entry> table;
    table.reserve(initial - alive_count);
    for (const auto &[key, entry] : family) {
        if (entry.alive)
            result.surviving_family.push_back(key);
        else
            table.emplace(key, SpoilerStrategy::Entry{entry.pass, entry.witness, entry.kind});
    }
    std::sort(result.surviving_family.begin(), result.surviving_family.end());
    result.strategy = SpoilerStrategy(n, k, std::move(table));
    return result;
}

SpoilerMove next_spoiler_move(const SpoilerStrategy &strategy, const Graph &g, const Graph &h,
                              PartialMapKey position) {
    int n = strategy.vertex_count();
    // Positions violating edge preservation are already lost for Duplicator.
    for (auto [u, v] : g.edges()) {
        int iu = map_get(position, u), iv = map_get(position, v);
        if (iu >= 0 && iv >= 0 && !h.adjacent(iu, iv)) {
            SpoilerMove move;
            move.immediate_violation = true;
            return move;
        }
    }
    SpoilerMove move;
    PartialMapKey key = position;
    for (;;) {
        auto it = strategy.table().find(key);
        if (it == strategy.table().end())
            raise(Errc::unreachable_position, "position is not refuted by this strategy");
        const auto &entry = it->second;
        move.pass = entry.pass;
        if (entry.kind == 0) {
            move.place = entry.witness;
            return move;
        }
        move.lifts.emplace_back(entry.witness, map_get(key, entry.witness));
        key = map_clear(key, entry.witness);
    }
}

namespace {

struct ReplayContext {
    const SpoilerStrategy &strategy;
    const Graph &g;
    const Graph &h;
    ReplayStats stats;

    // Returns true when every Duplicator reply line is refuted.
    void run(PartialMapKey position, int placements) {
        SpoilerMove move = next_spoiler_move(strategy, g, h, position);
        if (move.immediate_violation) {
            stats.max_placements = std::max(stats.max_placements, placements);
            ++stats.lines;
            return;
        }
        PartialMapKey key = position;
        for (auto [v, img] : move.lifts) {
            (void)img;
            key = map_clear(key, v);
        }
        for (int b = 0; b < h.vertex_count(); ++b)
            run(map_set(key, move.place, b), placements + 1);
    }
};

bool is_triangle(const Graph &h) { return h.vertex_count() == 3 && h.edge_count() == 3; }

} // namespace

ReplayStats replay_exhaustive(const SpoilerStrategy &strategy, const Graph &g, const Graph &h) {
    ReplayContext ctx{strategy, g, h, {}};
    ctx.run(empty_map_key(strategy.vertex_count()), 0);
    return ctx.stats;
}

int replay_random(const SpoilerStrategy &strategy, const Graph &g, const Graph &h,
                  std::uint64_t seed) {
    std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next = [&state](int bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(bound));
    };
    PartialMapKey position = empty_map_key(strategy.vertex_count());
    int placements = 0;
    for (;;) {
        SpoilerMove move = next_spoiler_move(strategy, g, h, position);
        if (move.immediate_violation) return placements;
        for (auto [v, img] : move.lifts) {
            (void)img;
            position = map_clear(position, v);
        }
        position = map_set(position, move.place, next(h.vertex_count()));
        ++placements;
    }
}

WidthReport width(const Graph &g, const Graph &h, const Budget &budget, int max_k) {
    auto start = std::chrono::steady_clock::now();
    if (homomorphism_exists(g, h, budget))
        raise(Errc::no_refutation, "instance maps homomorphically to the target");
    int ceiling = std::max(1, g.vertex_count());
    if (max_k > 0 && max_k < ceiling) ceiling = max_k;
    WidthReport report;
    for (int k = 1; k <= ceiling; ++k) {
        ConsistencyResult result = k_consistent(g, h, k, budget);
        if (!result.duplicator_wins) {
            report.width = k;
            report.rounds = result.passes;
            report.certificate = std::move(result);
            break;
        }
    }
    if (report.width == 0 && max_k > 0 && max_k < std::max(1, g.vertex_count()))
        raise(Errc::resource_cap, "no Spoiler win within --max-k = " + std::to_string(max_k));
    if (report.width == 0)
        throw std::logic_error("width: no Spoiler win up to k = |g| despite no homomorphism");
    if (is_triangle(h)) {
        // Round counts come from the colouring game; keep the fixpoint pass
        // bound when the instance is past the game table budget.
        try {
            auto rounds = min_rounds(PrecoloredGraph(g), report.width, budget);
            if (!rounds)
                throw std::logic_error(
                    "width: colouring game disagrees (no win at the fixpoint width)");
            report.rounds = *rounds;
            report.rounds_from_game = true;
        } catch (const Error &e) {
            if (e.code() != Errc::resource_cap) throw;
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

CrosscheckResult width_via_game_crosscheck(const Graph &g, const Budget &budget) {
    if (is_3_colorable(g, budget))
        raise(Errc::precondition, "width_via_game_crosscheck needs a non-3-colorable graph");
    Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
    CrosscheckResult out;
    out.consistency_width = width(g, k3, budget).width;
    out.game_width = 0;
    PrecoloredGraph uncolored(g);
    for (int k = 1; k <= g.vertex_count(); ++k) {
        if (min_rounds(uncolored, k, budget)) {
            out.game_width = k;
            break;
        }
    }
    if (out.game_width != out.consistency_width)
        throw std::logic_error("width solvers disagree: fixpoint " +
                               std::to_string(out.consistency_width) + " vs game " +
                               std::to_string(out.game_width));
    return out;
}

} // namespace widthlab
