#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "widthlab/config.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

// Partial map from V(g) (n <= 16) to V(h) (|h| <= 14), packed 4 bits per
// g-vertex; nibble 0xF marks an unassigned vertex.
using PartialMapKey = std::uint64_t;

inline PartialMapKey empty_map_key(int n) {
    PartialMapKey key = 0;
    for (int v = 0; v < n; ++v) key |= PartialMapKey{0xF} << (4 * v);
    return key;
}
inline int map_get(PartialMapKey key, Vertex v) {
    int nib = static_cast<int>((key >> (4 * v)) & 0xF);
    return nib == 0xF ? -1 : nib;
}
inline PartialMapKey map_set(PartialMapKey key, Vertex v, int image) {
    return (key & ~(PartialMapKey{0xF} << (4 * v))) |
           (PartialMapKey(image) << (4 * v));
}
inline PartialMapKey map_clear(PartialMapKey key, Vertex v) {
    return key | (PartialMapKey{0xF} << (4 * v));
}

PartialMapKey encode_partial_map(int n, const std::vector<std::pair<Vertex, Vertex>> &pairs);
std::vector<std::pair<Vertex, Vertex>> decode_partial_map(int n, PartialMapKey key);

// Spoiler's instruction at a refuted position: lift the recorded pebbles
// (usually none or one), then place a pebble on `place`.
struct SpoilerMove {
    std::vector<std::pair<Vertex, int>> lifts; // (g-vertex, h-image) removed
    Vertex place = -1;
    int pass = 0; // fixpoint stage; bounds the placements left
    bool immediate_violation = false;
};

class SpoilerStrategy {
public:
    struct Entry {
        std::int32_t pass;
        std::int16_t witness; // place target or lifted vertex
        std::int8_t kind;     // 0 = place (dead forth vertex), 1 = lift (dead restriction)
    };

    SpoilerStrategy() = default;
    SpoilerStrategy(int n, int k, std::unordered_map<PartialMapKey, Entry> table)
        : n_(n), k_(k), table_(std::move(table)) {}

    int vertex_count() const { return n_; }
    int capacity() const { return k_; }
    bool contains(PartialMapKey key) const { return table_.count(key) > 0; }
    std::size_t size() const { return table_.size(); }
    const std::unordered_map<PartialMapKey, Entry> &table() const { return table_; }

private:
    int n_ = 0;
    int k_ = 0;
    std::unordered_map<PartialMapKey, Entry> table_;
};

struct ConsistencyResult {
    bool duplicator_wins = false;
    std::uint64_t surviving_maps = 0; // greatest-fixpoint family size
    std::uint64_t initial_maps = 0;   // edge-preserving maps of size <= k
    int passes = 0;                   // deletion passes until stabilisation
    SpoilerStrategy strategy;         // meaningful when Spoiler wins
    std::vector<PartialMapKey> surviving_family; // sorted; the fixpoint itself
};

// Greatest-fixpoint k-consistency: start from every edge-preserving partial
// map of size <= k, delete maps failing forth-extension or whose one-point
// restriction has been deleted, report at the fixpoint.  Deletions happen in
// synchronized passes, so the extracted strategy is schedule-independent.
ConsistencyResult k_consistent(const Graph &g, const Graph &h, int k,
                               const Budget &budget = default_budget());

// Next Spoiler move at a refuted position.  UnreachablePosition if the
// position is not in the strategy table; positions that already violate a
// constraint come back flagged immediate_violation.
SpoilerMove next_spoiler_move(const SpoilerStrategy &strategy, const Graph &g, const Graph &h,
                              PartialMapKey position);

struct ReplayStats {
    int max_placements = 0;
    std::uint64_t lines = 0; // distinct Duplicator reply lines refuted
};

// Replays the certificate against every Duplicator reply; throws if any line
// fails to reach a violation.
ReplayStats replay_exhaustive(const SpoilerStrategy &strategy, const Graph &g, const Graph &h);

// Single replay against a seeded uniform-random Duplicator; returns the
// number of placements until the violation.
int replay_random(const SpoilerStrategy &strategy, const Graph &g, const Graph &h,
                  std::uint64_t seed);

struct WidthReport {
    int width = 0;
    int rounds = 0; // minimum game rounds for K3 targets, else the fixpoint pass bound
    bool rounds_from_game = false;
    ConsistencyResult certificate;
    std::chrono::milliseconds elapsed{0};
};

// Minimum k with Spoiler winning, by ascending k from 1.  Throws NoRefutation
// when g -> h, and ResourceCap when max_k (0 = |g|) passes without a win.
WidthReport width(const Graph &g, const Graph &h, const Budget &budget = default_budget(),
                  int max_k = 0);

struct CrosscheckResult {
    int consistency_width = 0;
    int game_width = 0;
};

// Solves the same instance through the pebble-game fixpoint and through the
// colouring game and insists the two agree.  Requires chi(g) > 3.
CrosscheckResult width_via_game_crosscheck(const Graph &g, const Budget &budget = default_budget());

} // namespace widthlab
