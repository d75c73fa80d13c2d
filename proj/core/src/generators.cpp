#include "widthlab/generators.hpp"

#include <algorithm>
#include <random>

#include "widthlab/invariants.hpp"

namespace widthlab {

namespace {

Graph complete(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) raise(Errc::bad_params, "cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, edges);
}

Graph path(int n) {
    if (n < 1) raise(Errc::bad_params, "path needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph wheel(int n) {
    if (n < 4) raise(Errc::bad_params, "wheel needs n >= 4");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    for (int i = 1; i < n; ++i) {
        int j = i == n - 1 ? 1 : i + 1;
        edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    return Graph(n, edges);
}

Graph petersen() {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)); // outer cycle
        edges.emplace_back(i, i + 5);                                           // spokes
        int j = 5 + (i + 2) % 5;                                                // inner pentagram
        edges.emplace_back(std::min(i + 5, j), std::max(i + 5, j));
    }
    return Graph(10, edges);
}

// The fixed 11-vertex instance: C5 on 0..4, shadows 5..9, apex 10.
Graph grotzsch() {
    return Graph(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                      {1, 5}, {4, 5}, {0, 6}, {2, 6}, {1, 7}, {3, 7},
                      {2, 8}, {4, 8}, {0, 9}, {3, 9},
                      {5, 10}, {6, 10}, {7, 10}, {8, 10}, {9, 10}});
}

} // namespace

Graph standard_graph(const std::string &family, int param) {
    auto need_param = [&](int min_value) {
        if (param < min_value)
            raise(Errc::bad_params, "family '" + family + "' needs a size parameter >= " +
                                        std::to_string(min_value));
        return param;
    };
    if (family == "complete") return complete(need_param(1));
    if (family == "cycle") return cycle(need_param(3));
    if (family == "path") return path(need_param(1));
    if (family == "wheel") return wheel(need_param(4));
    if (family == "petersen") return petersen();
    if (family == "grotzsch") return grotzsch();
    if (family == "mycielski") return mycielskian(cycle(need_param(3)));
    raise(Errc::unknown_family, "no graph family named '" + family + "'");
}

Graph mycielskian(const Graph &g) {
    int n = g.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(std::min(u, v + n), std::max(u, v + n));
        edges.emplace_back(std::min(v, u + n), std::max(v, u + n));
    }
    for (int i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
    return Graph(2 * n + 1, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed, const Budget &budget) {
    if (n <= 0 || d < 0 || d >= n) raise(Errc::bad_params, "random_regular needs 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        raise(Errc::bad_params, "random_regular needs n*d even");

    std::mt19937_64 rng(seed);
    auto bounded = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs[static_cast<std::size_t>(v) * d + i] = v;

    for (int attempt = 0; attempt < budget.regular_graph_retries; ++attempt) {
        for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[bounded(i)]);
        std::vector<std::pair<Vertex, Vertex>> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (ok) {
            std::sort(edges.begin(), edges.end());
            ok = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
        }
        if (ok) return Graph(n, edges);
    }
    raise(Errc::retry_exhausted, "configuration model kept producing loops or parallel edges");
}

TripleCover triple_cover(const Graph &b, const Budget &budget) {
    TripleCover out;
    out.graph = categorical_product(b, standard_graph("complete", 3));
    out.base_connected = b.connected();
    out.base_chromatic_exceeds_3 = chromatic_number(b, budget) > 3;
    return out;
}

CrossoverGadget crossover_gadget() {
    // Grid layout: 0=(0,0) 1=(1,0) 2=(2,0) 3=(-1,0) 4=(-2,0) 5=(0,1) 6=(1,1)
    // 7=(-1,1) 8=(0,-1) 9=(1,-1) 10=(-1,-1) 11=(0,2) 12=(0,-2)
    CrossoverGadget g;
    g.graph = Graph(13, {{0, 1}, {1, 2}, {0, 3}, {3, 4},
                         {3, 5}, {0, 5}, {1, 5}, {1, 6}, {2, 6}, {5, 7}, {4, 7},
                         {3, 8}, {0, 8}, {1, 8}, {8, 9}, {2, 9}, {3, 10}, {4, 10},
                         {7, 11}, {5, 11}, {6, 11}, {10, 12}, {8, 12}, {9, 12}});
    g.left = 4;
    g.right = 2;
    g.top = 11;
    g.bottom = 12;
    g.local_coords = {{{0, 0}, {1, 0}, {2, 0}, {-1, 0}, {-2, 0}, {0, 1}, {1, 1},
                       {-1, 1}, {0, -1}, {1, -1}, {-1, -1}, {0, 2}, {0, -2}}};
    return g;
}

} // namespace widthlab
