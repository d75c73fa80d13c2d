// Independent brute-force oracles for the test suite.  Each one takes the
// most direct route available (subset scans, permutation scans, plain game
// recursion) and deliberately shares no code with the library solvers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "widthlab/graph.hpp"

namespace oracles {

using widthlab::Color;
using widthlab::Graph;
using widthlab::kUncolored;
using widthlab::PrecoloredGraph;
using widthlab::Vertex;

// Girth as min over edges (u,v) of dist_{G-uv}(u,v) + 1.
inline std::optional<int> girth(const Graph &g) {
    int best = -1;
    for (auto [u, v] : g.edges()) {
        Graph cut = g.with_edge_removed(u, v);
        auto dist = cut.distances_from(u);
        if (dist[v] < 0) continue;
        int len = dist[v] + 1;
        if (best < 0 || len < best) best = len;
    }
    if (best < 0) return std::nullopt;
    return best;
}

inline int independence_number(const Graph &g) {
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (((mask >> u) & 1) && ((mask >> v) & 1)) {
                ok = false;
                break;
            }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

inline bool colorable(const Graph &g, int s) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    auto rec = [&](auto &&self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < s; ++c) {
            bool ok = true;
            for (Vertex w : g.neighbors(v))
                if (color[w] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int chromatic_number(const Graph &g) {
    if (g.vertex_count() == 0) return 0;
    for (int s = 1;; ++s)
        if (colorable(g, s)) return s;
}

// Plain product count, honoring precolours, no propagation.
inline std::uint64_t count_colorings(const PrecoloredGraph &p, int s) {
    int n = p.graph.vertex_count();
    std::uint64_t total = 0;
    std::vector<int> color(n, -1);
    auto rec = [&](auto &&self, int v) -> void {
        if (v == n) {
            ++total;
            return;
        }
        for (int c = 0; c < s; ++c) {
            if (p.colors[v] != kUncolored && p.colors[v] != c) continue;
            bool ok = true;
            for (Vertex w : p.graph.neighbors(v))
                if (color[w] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            self(self, v + 1);
            color[v] = -1;
        }
    };
    rec(rec, 0);
    return total;
}

inline std::uint64_t count_colorings(const Graph &g, int s) {
    return count_colorings(PrecoloredGraph(g), s);
}

// Chromatic polynomial of the n-cycle at s colours.
inline long long cycle_coloring_count(int n, int s) {
    long long a = 1;
    for (int i = 0; i < n; ++i) a *= (s - 1);
    return a + (n % 2 == 0 ? (s - 1) : -(s - 1));
}

// Treewidth as the best elimination ordering (scan all permutations).
inline int treewidth(const Graph &g) {
    int n = g.vertex_count();
    if (n == 0) return -1;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
        std::vector<char> gone(n, 0);
        int widest = 0;
        for (int v : order) {
            std::vector<int> nbrs;
            for (int w = 0; w < n; ++w)
                if (!gone[w] && adj[v][w]) nbrs.push_back(w);
            widest = std::max(widest, static_cast<int>(nbrs.size()));
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                    adj[nbrs[i]][nbrs[j]] = adj[nbrs[j]][nbrs[i]] = 1;
            gone[v] = 1;
        }
        best = std::min(best, widest);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Direct recursion for the r-round capacity-k 3-colouring game with
// free multi-erasure, memoized on (colouring, rounds).
inline bool game_spoiler_wins(const PrecoloredGraph &p, int k, int r,
                              std::map<std::pair<std::vector<Color>, int>, bool> &memo) {
    for (auto [u, v] : p.graph.edges())
        if (p.colors[u] != kUncolored && p.colors[u] == p.colors[v]) return true;
    if (r == 0) return false;
    auto key = std::make_pair(p.colors, r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int n = p.graph.vertex_count();
    std::vector<Vertex> colored;
    for (Vertex v = 0; v < n; ++v)
        if (p.colors[v] != kUncolored) colored.push_back(v);
    bool win = false;
    for (std::uint32_t erase = 0; erase < (std::uint32_t{1} << colored.size()) && !win; ++erase) {
        PrecoloredGraph base = p;
        for (std::size_t i = 0; i < colored.size(); ++i)
            if ((erase >> i) & 1) base.colors[colored[i]] = kUncolored;
        if (base.colored_count() + 1 > k) continue;
        for (Vertex v = 0; v < n && !win; ++v) {
            if (base.colors[v] != kUncolored) continue;
            bool all = true;
            for (Color c = 0; c < 3 && all; ++c) {
                PrecoloredGraph child = base;
                child.colors[v] = c;
                if (!game_spoiler_wins(child, k, r - 1, memo)) all = false;
            }
            win = all;
        }
    }
    memo[key] = win;
    return win;
}

inline bool game_spoiler_wins(const PrecoloredGraph &p, int k, int r) {
    std::map<std::pair<std::vector<Color>, int>, bool> memo;
    return game_spoiler_wins(p, k, r, memo);
}

// Existential k-pebble game by direct iteration over positions: W_{t+1} wins
// if some lifted sub-position admits a placement all of whose Duplicator
// replies are violations or in W_t.
inline bool pebble_spoiler_wins(const Graph &g, const Graph &h, int k) {
    int n = g.vertex_count(), hn = h.vertex_count();
    using Pos = std::vector<int>; // image per vertex, -1 unassigned
    std::vector<Pos> all;
    Pos start(n, -1);
    auto gen = [&](auto &&self, Pos pos, int from, int size) -> void {
        all.push_back(pos);
        if (size == std::min(k, n)) return;
        for (int v = from; v < n; ++v)
            for (int b = 0; b < hn; ++b) {
                pos[v] = b;
                self(self, pos, v + 1, size + 1);
                pos[v] = -1;
            }
    };
    gen(gen, start, 0, 0);

    auto edge_ok = [&](const Pos &pos) {
        for (auto [u, v] : g.edges())
            if (pos[u] >= 0 && pos[v] >= 0 && !h.adjacent(pos[u], pos[v])) return false;
        return true;
    };

    std::set<Pos> winning;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Pos &pos : all) {
            if (!edge_ok(pos) || winning.count(pos)) continue;
            // Lift to any sub-position, then place.
            int colored = 0;
            for (int v = 0; v < n; ++v) colored += pos[v] >= 0;
            std::vector<int> dom;
            for (int v = 0; v < n; ++v)
                if (pos[v] >= 0) dom.push_back(v);
            bool win = false;
            for (std::uint32_t lift = 0; lift < (std::uint32_t{1} << dom.size()) && !win; ++lift) {
                Pos base = pos;
                int remaining = colored;
                for (std::size_t i = 0; i < dom.size(); ++i)
                    if ((lift >> i) & 1) {
                        base[dom[i]] = -1;
                        --remaining;
                    }
                if (remaining + 1 > k) continue;
                for (int v = 0; v < n && !win; ++v) {
                    if (base[v] >= 0) continue;
                    bool all_bad = true;
                    for (int b = 0; b < hn && all_bad; ++b) {
                        Pos child = base;
                        child[v] = b;
                        if (edge_ok(child) && !winning.count(child)) all_bad = false;
                    }
                    win = all_bad;
                }
            }
            if (win) {
                winning.insert(pos);
                grew = true;
            }
        }
    }
    return winning.count(start) > 0;
}

} // namespace oracles
