#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "widthlab/errors.hpp"

namespace widthlab {

using Vertex = int;

// Colours are 0=red, 1=blue, 2=green; kUncolored marks absent precolours.
using Color = int;
inline constexpr Color kUncolored = -1;
inline constexpr int kNumColors = 3;

char color_letter(Color c);
std::optional<Color> color_from_token(const std::string &tok);

// Finite simple undirected graph on vertices 0..n-1.  Adjacency is kept both
// as a packed bit matrix (O(1) membership, word-parallel set ops) and as
// sorted neighbour lists (traversals).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>> &edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(Vertex u, Vertex v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    int degree(Vertex v) const { return static_cast<int>(nbr_[v].size()); }
    const std::vector<Vertex> &neighbors(Vertex v) const { return nbr_[v]; }

    // Sorted list of edges as (u, v) with u < v.
    const std::vector<std::pair<Vertex, Vertex>> &edges() const { return edges_; }

    // Packed adjacency row of v: bit w set iff v~w.  words_per_row() words.
    const std::uint64_t *row(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    int words_per_row() const { return words_; }

    // Adjacency row restricted to n <= 64, as a single word.
    std::uint64_t row64(Vertex v) const { return bits_[static_cast<std::size_t>(v) * words_]; }

    bool has_edge(Vertex u, Vertex v) const { return u != v && adjacent(u, v); }

    Graph with_edge_removed(Vertex u, Vertex v) const;
    Graph with_vertex_removed(Vertex v) const; // remaining vertices renumbered, order kept

    // Subgraph induced by the given sorted vertex set (renumbered by position).
    Graph induced(const std::vector<Vertex> &vertices) const;

    bool connected() const;
    bool is_forest() const;
    bool is_tree() const { return n_ >= 1 && connected() && edge_count() == n_ - 1; }

    // Connected components as sorted vertex lists.
    std::vector<std::vector<Vertex>> components() const;

    // BFS distances from source; -1 for unreachable.
    std::vector<int> distances_from(Vertex source) const;

    bool operator==(const Graph &other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void add_edge_unchecked(Vertex u, Vertex v);

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::vector<Vertex>> nbr_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

// Graph plus a partial 3-colouring.
struct PrecoloredGraph {
    Graph graph;
    std::vector<Color> colors; // size n, kUncolored where absent

    PrecoloredGraph() = default;
    explicit PrecoloredGraph(Graph g)
        : graph(std::move(g)), colors(graph.vertex_count(), kUncolored) {}
    PrecoloredGraph(Graph g, std::vector<Color> c);

    int colored_count() const;
    bool has_monochromatic_edge() const;

    bool operator==(const PrecoloredGraph &other) const {
        return graph == other.graph && colors == other.colors;
    }
};

// Morphism-level invariants computed by plain traversal.

// Length of a shortest cycle; nullopt iff the graph is a forest.
std::optional<int> girth(const Graph &g);

// Maximum pairwise distance; nullopt iff disconnected (or empty).
std::optional<int> diameter(const Graph &g);

// Categorical product: (u,i)~(v,j) iff u~v and i~j.  Vertex (u,i) gets
// index u*|h| + i.
Graph categorical_product(const Graph &g, const Graph &h);

} // namespace widthlab
