#include "widthlab/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace widthlab {

namespace {

struct NodeCounter {
    std::uint64_t used = 0;
    std::uint64_t cap;
    explicit NodeCounter(std::uint64_t c) : cap(c) {}
    void tick(const char *op) {
        if (++used > cap) raise(Errc::resource_cap, std::string(op) + " exceeded node budget");
    }
};

std::vector<std::uint64_t> adjacency64(const Graph &g) {
    std::vector<std::uint64_t> adj(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v] = g.row64(v);
    return adj;
}

struct MisSearch {
    const std::vector<std::uint64_t> &adj;
    NodeCounter &nodes;
    int best = 0;

    void run(std::uint64_t pool, int current) {
        if (current + std::popcount(pool) <= best) return;
        if (pool == 0) {
            best = std::max(best, current);
            return;
        }
        nodes.tick("independence_number");
        // Branch on the pool vertex with the most pool neighbours.
        int pick = -1, pick_deg = -1;
        for (std::uint64_t m = pool; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int d = std::popcount(adj[v] & pool);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        std::uint64_t bit = std::uint64_t{1} << pick;
        run(pool & ~(adj[pick] | bit), current + 1);
        run(pool & ~bit, current);
    }
};

// Greedy clique from each start vertex; lower bound for chromatic number.
int greedy_clique_bound(const Graph &g, const std::vector<std::uint64_t> &adj) {
    int best = g.vertex_count() > 0 ? 1 : 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        std::uint64_t cand = adj[s];
        int size = 1;
        while (cand) {
            int pick = -1, pick_deg = -1;
            for (std::uint64_t m = cand; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                int d = std::popcount(adj[v] & cand);
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            ++size;
            cand &= adj[pick];
        }
        best = std::max(best, size);
    }
    return best;
}

// Backtracking s-colorability on a degree-descending static order with the
// usual new-color symmetry break.
bool colorable(const Graph &g, int s, NodeCounter &nodes) {
    int n = g.vertex_count();
    if (n == 0) return true;
    if (s <= 0) return g.edge_count() == 0 && n == 0;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(n, -1);

    auto rec = [&](auto &&self, int idx, int used) -> bool {
        if (idx == n) return true;
        nodes.tick("chromatic_number");
        Vertex v = order[idx];
        int limit = std::min(s - 1, used); // colors 0..used introduce one new color at most
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (Vertex w : g.neighbors(v))
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace

int independence_number(const Graph &g, const Budget &budget) {
    if (g.vertex_count() > 64)
        raise(Errc::resource_cap, "independence_number supports n <= 64");
    if (g.vertex_count() == 0) return 0;
    auto adj = adjacency64(g);
    NodeCounter nodes(budget.search_nodes);
    std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << g.vertex_count()) - 1;
    MisSearch search{adj, nodes};
    search.run(all, 0);
    return search.best;
}

int chromatic_number(const Graph &g, const Budget &budget) {
    if (g.vertex_count() == 0) return 0;
    if (g.vertex_count() > 64) raise(Errc::resource_cap, "chromatic_number supports n <= 64");
    if (g.edge_count() == 0) return 1;
    auto adj = adjacency64(g);
    NodeCounter nodes(budget.search_nodes);
    for (int s = greedy_clique_bound(g, adj);; ++s)
        if (colorable(g, s, nodes)) return s;
}

bool is_3_colorable(const Graph &g, const Budget &budget) {
    NodeCounter nodes(budget.search_nodes);
    return colorable(g, 3, nodes);
}

namespace {

std::uint64_t count_extensions_impl(const PrecoloredGraph &p, int s, const Budget &budget,
                                    std::uint64_t stop_at) {
    if (s < 1) raise(Errc::bad_params, "colouring count needs s >= 1");
    if (s > 30) raise(Errc::resource_cap, "colouring count supports s <= 30");
    const Graph &g = p.graph;
    int n = g.vertex_count();

    NodeCounter nodes(budget.search_nodes);
    const std::uint32_t full = (std::uint32_t{1} << s) - 1;
    std::vector<std::uint32_t> avail(n, full);
    std::vector<int> assigned(n, -1);
    std::vector<int> colored_nbrs(n, 0);
    std::uint64_t total = 0;

    // Precoloured vertices get a singleton domain and flow through the same
    // search; a monochromatic precoloured edge empties a domain and yields 0.
    for (Vertex v = 0; v < n; ++v)
        if (p.colors[v] != kUncolored) {
            if (p.colors[v] >= s) return 0;
            avail[v] = std::uint32_t{1} << p.colors[v];
        }
    if (n == 0) return 1;

    // MRV with a connectivity tie-break keeps rigid instances narrow.
    auto pick = [&]() {
        int best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (assigned[v] >= 0) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            int av = std::popcount(avail[v]), ab = std::popcount(avail[best]);
            if (av < ab || (av == ab && colored_nbrs[v] > colored_nbrs[best])) best = v;
        }
        return best;
    };

    auto rec = [&](auto &&self, int remaining) -> void {
        if (remaining == 0) {
            ++total;
            return;
        }
        if (total >= stop_at) return;
        nodes.tick("count_proper_colorings");
        Vertex v = pick();
        std::uint32_t options = avail[v];
        if (options == 0) return;
        assigned[v] = 0;
        for (Vertex w : g.neighbors(v)) ++colored_nbrs[w];
        std::vector<std::pair<Vertex, std::uint32_t>> saved;
        for (std::uint32_t m = options; m;) {
            int c = std::countr_zero(m);
            m &= m - 1;
            saved.clear();
            bool dead = false;
            for (Vertex w : g.neighbors(v)) {
                if (assigned[w] >= 0) continue;
                if (avail[w] & (std::uint32_t{1} << c)) {
                    saved.emplace_back(w, avail[w]);
                    avail[w] &= ~(std::uint32_t{1} << c);
                    if (avail[w] == 0) dead = true;
                }
            }
            if (!dead) self(self, remaining - 1);
            for (auto &[w, old] : saved) avail[w] = old;
        }
        assigned[v] = -1;
        for (Vertex w : g.neighbors(v)) --colored_nbrs[w];
    };
    rec(rec, n);
    return total;
}

} // namespace

std::uint64_t count_proper_colorings(const Graph &g, int s, const Budget &budget) {
    return count_extensions_impl(PrecoloredGraph(g), s, budget, ~std::uint64_t{0});
}

std::uint64_t count_proper_extensions(const PrecoloredGraph &p, int s, const Budget &budget) {
    return count_extensions_impl(p, s, budget, ~std::uint64_t{0});
}

bool proper_extension_exists(const PrecoloredGraph &p, const Budget &budget) {
    return count_extensions_impl(p, 3, budget, 1) > 0;
}

int treewidth_exact(const Graph &g, const Budget &budget) {
    int n = g.vertex_count();
    if (n > budget.treewidth_max_n)
        raise(Errc::resource_cap, "treewidth_exact supports n <= " +
                                      std::to_string(budget.treewidth_max_n));
    if (n == 0) return -1;
    auto adj = adjacency64(g);

    // q(T, v): neighbours outside T of the component of v in G[T + v].
    auto q_value = [&](std::uint32_t t_mask, int v) {
        std::uint64_t grow = std::uint64_t{1} << v;
        std::uint64_t reach = 0;
        for (;;) {
            std::uint64_t frontier = grow & ~reach;
            if (!frontier) break;
            reach |= frontier;
            std::uint64_t nbrs = 0;
            for (std::uint64_t m = frontier; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                nbrs |= adj[w];
            }
            grow |= nbrs & t_mask;
        }
        std::uint64_t boundary = 0;
        for (std::uint64_t m = reach; m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            boundary |= adj[w];
        }
        boundary &= ~static_cast<std::uint64_t>(t_mask);
        boundary &= ~(std::uint64_t{1} << v);
        return std::popcount(boundary);
    };

    std::uint32_t size = std::uint32_t{1} << n;
    std::vector<std::int8_t> dp(size, 0);
    dp[0] = -1;
    for (std::uint32_t s = 1; s < size; ++s) {
        int best = n;
        for (std::uint32_t m = s; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            std::uint32_t rest = s & ~(std::uint32_t{1} << v);
            int cost = std::max<int>(dp[rest], q_value(rest, v));
            best = std::min(best, cost);
        }
        dp[s] = static_cast<std::int8_t>(best);
    }
    return dp[size - 1];
}

int balanced_separator_number(const Graph &g, const Budget &budget) {
    int n = g.vertex_count();
    if (n > 20) raise(Errc::resource_cap, "balanced_separator_number supports n <= 20");
    (void)budget;
    if (n == 0) return 0;
    auto adj = adjacency64(g);
    std::uint64_t all = (std::uint64_t{1} << n) - 1;

    // Components of g - X fit iff each has at most n/2 vertices.
    auto balanced = [&](std::uint64_t x_mask) {
        std::uint64_t remaining = all & ~x_mask;
        while (remaining) {
            int v = std::countr_zero(remaining);
            std::uint64_t comp = std::uint64_t{1} << v;
            for (;;) {
                std::uint64_t nbrs = 0;
                for (std::uint64_t m = comp; m;) {
                    int w = std::countr_zero(m);
                    m &= m - 1;
                    nbrs |= adj[w];
                }
                std::uint64_t grown = comp | (nbrs & remaining);
                if (grown == comp) break;
                comp = grown;
            }
            if (2 * std::popcount(comp) > n) return false;
            remaining &= ~comp;
        }
        return true;
    };

    for (int size = 0; size <= n; ++size) {
        // All vertex subsets of the given size, in lexicographic order.
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::uint64_t mask = 0;
            for (int v : idx) mask |= std::uint64_t{1} << v;
            if (balanced(mask)) return size;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n;
}

} // namespace widthlab
