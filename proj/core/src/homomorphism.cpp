#include "widthlab/homomorphism.hpp"

#include <algorithm>
#include <bit>

namespace widthlab {

namespace {

struct HomSearch {
    const Graph &g;
    const Graph &h;
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> h_adj;
    std::vector<int> image;

    HomSearch(const Graph &g_, const Graph &h_, std::uint64_t cap)
        : g(g_), h(h_), node_cap(cap), h_adj(h.vertex_count()), image(g.vertex_count(), -1) {
        for (Vertex b = 0; b < h.vertex_count(); ++b) h_adj[b] = h.row64(b);
    }

    bool run(std::vector<std::uint64_t> domains) {
        int n = g.vertex_count();
        int assigned_count = 0;
        std::vector<int> trail; // assignment order, for undo
        trail.reserve(n);

        auto select = [&]() {
            int best = -1, best_size = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (image[v] >= 0) continue;
                int size = std::popcount(domains[v]);
                if (best < 0 || size < best_size ||
                    (size == best_size && g.degree(v) > g.degree(best))) {
                    best = v;
                    best_size = size;
                }
            }
            return best;
        };

        auto rec = [&](auto &&self) -> bool {
            if (assigned_count == n) return true;
            if (++nodes > node_cap) raise(Errc::resource_cap, "homomorphism search budget");
            Vertex v = select();
            std::uint64_t options = domains[v];
            while (options) {
                int b = std::countr_zero(options);
                options &= options - 1;
                std::vector<std::pair<Vertex, std::uint64_t>> saved;
                bool dead = false;
                for (Vertex w : g.neighbors(v)) {
                    if (image[w] >= 0) {
                        if (!h.adjacent(image[w], b)) {
                            dead = true;
                            break;
                        }
                        continue;
                    }
                    std::uint64_t pruned = domains[w] & h_adj[b];
                    if (pruned != domains[w]) {
                        saved.emplace_back(w, domains[w]);
                        domains[w] = pruned;
                        if (pruned == 0) dead = true;
                    }
                }
                if (!dead) {
                    image[v] = b;
                    ++assigned_count;
                    if (self(self)) return true;
                    --assigned_count;
                    image[v] = -1;
                }
                for (auto &[w, old] : saved) domains[w] = old;
            }
            return false;
        };
        return rec(rec);
    }
};

} // namespace

std::optional<std::vector<Vertex>> homomorphism_exists(const Graph &g, const Graph &h,
                                                       const Budget &budget) {
    return homomorphism_exists(PrecoloredGraph(g), PrecoloredGraph(h), budget);
}

std::optional<std::vector<Vertex>> homomorphism_exists(const PrecoloredGraph &g,
                                                       const PrecoloredGraph &h,
                                                       const Budget &budget) {
    if (h.graph.vertex_count() > 64)
        raise(Errc::resource_cap, "homomorphism_exists supports |h| <= 64");
    int n = g.graph.vertex_count();
    if (n == 0) return std::vector<Vertex>{};
    if (h.graph.vertex_count() == 0) return std::nullopt;

    std::vector<std::uint64_t> domains(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex b = 0; b < h.graph.vertex_count(); ++b)
            if (g.colors[v] == kUncolored || g.colors[v] == h.colors[b])
                domains[v] |= std::uint64_t{1} << b;
        if (domains[v] == 0) return std::nullopt;
    }
    // Vertices with a g-loop... simple graphs have none; adjacent g-vertices
    // need adjacent images, enforced during search.
    HomSearch search(g.graph, h.graph, budget.search_nodes);
    if (!search.run(std::move(domains))) return std::nullopt;
    return std::vector<Vertex>(search.image.begin(), search.image.end());
}

} // namespace widthlab
