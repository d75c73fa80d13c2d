#include "widthlab/graph.hpp"

#include <algorithm>
#include <queue>

namespace widthlab {

char color_letter(Color c) {
    switch (c) {
    case 0: return 'r';
    case 1: return 'b';
    case 2: return 'g';
    default: return '.';
    }
}

std::optional<Color> color_from_token(const std::string &tok) {
    if (tok == "r" || tok == "R" || tok == "0" || tok == "red") return 0;
    if (tok == "b" || tok == "B" || tok == "1" || tok == "blue") return 1;
    if (tok == "g" || tok == "G" || tok == "2" || tok == "green") return 2;
    return std::nullopt;
}

Graph::Graph(int n) : n_(n), words_(n > 0 ? (n + 63) / 64 : 1) {
    if (n < 0) raise(Errc::bad_params, "negative vertex count");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    nbr_.resize(n_);
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>> &edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u == v) raise(Errc::bad_params, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            raise(Errc::bad_params, "edge endpoint out of range");
        if (adjacent(u, v))
            raise(Errc::bad_params, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        add_edge_unchecked(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto &list : nbr_) std::sort(list.begin(), list.end());
}

void Graph::add_edge_unchecked(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    nbr_[u].push_back(v);
    nbr_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

Graph Graph::with_edge_removed(Vertex u, Vertex v) const {
    std::vector<std::pair<Vertex, Vertex>> kept;
    kept.reserve(edges_.size());
    auto drop = std::make_pair(std::min(u, v), std::max(u, v));
    for (auto e : edges_)
        if (e != drop) kept.push_back(e);
    return Graph(n_, kept);
}

Graph Graph::with_vertex_removed(Vertex v) const {
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (auto [a, b] : edges_) {
        if (a == v || b == v) continue;
        kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph(n_ - 1, kept);
}

Graph Graph::induced(const std::vector<Vertex> &vertices) const {
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (auto [a, b] : edges_)
        if (index[a] >= 0 && index[b] >= 0)
            kept.emplace_back(std::min(index[a], index[b]), std::max(index[a], index[b]));
    return Graph(static_cast<int>(vertices.size()), kept);
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool Graph::is_forest() const {
    // A graph is a forest iff every component has |V|-1 edges.
    int edge_total = 0;
    auto comps = components();
    for (const auto &c : comps) {
        Graph sub = induced(c);
        if (sub.edge_count() != sub.vertex_count() - 1) return false;
        edge_total += sub.edge_count();
    }
    return edge_total == edge_count();
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(n_, 0);
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (Vertex w : nbr_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> Graph::distances_from(Vertex source) const {
    std::vector<int> dist(n_, -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : nbr_[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

PrecoloredGraph::PrecoloredGraph(Graph g, std::vector<Color> c)
    : graph(std::move(g)), colors(std::move(c)) {
    if (static_cast<int>(colors.size()) != graph.vertex_count())
        raise(Errc::bad_params, "colour vector size mismatch");
    for (Color col : colors)
        if (col != kUncolored && (col < 0 || col >= kNumColors))
            raise(Errc::bad_params, "colour out of range");
}

int PrecoloredGraph::colored_count() const {
    int c = 0;
    for (Color col : colors) c += (col != kUncolored);
    return c;
}

bool PrecoloredGraph::has_monochromatic_edge() const {
    for (auto [u, v] : graph.edges())
        if (colors[u] != kUncolored && colors[u] == colors[v]) return true;
    return false;
}

std::optional<int> girth(const Graph &g) {
    // BFS from every vertex; the shortest cycle through the root is detected
    // at the first cross or back edge between visited vertices.
    int best = -1;
    int n = g.vertex_count();
    std::vector<int> dist(n), parent(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<Vertex> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (w == parent[v]) continue;
                if (dist[w] >= 0) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                } else {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::optional<int> diameter(const Graph &g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto dist = g.distances_from(v);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

Graph categorical_product(const Graph &g, const Graph &h) {
    int nh = h.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges())
        for (auto [i, j] : h.edges()) {
            edges.emplace_back(u * nh + i, v * nh + j);
            edges.emplace_back(u * nh + j, v * nh + i);
        }
    for (auto &e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    return Graph(g.vertex_count() * nh, edges);
}

} // namespace widthlab
