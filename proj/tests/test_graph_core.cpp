#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "widthlab/canonical.hpp"
#include "widthlab/enumeration.hpp"
#include "widthlab/generators.hpp"
#include "widthlab/invariants.hpp"

using namespace widthlab;

namespace {

Graph random_graph(int n, double p, std::mt19937_64 &rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((rng() % 1000) < p * 1000) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph relabel(const Graph &g, const std::vector<Vertex> &perm) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    return Graph(g.vertex_count(), edges);
}

} // namespace

TEST_CASE("graph construction enforces the invariants") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);           // self-loop
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);           // endpoint out of range
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);   // duplicate pair
    Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(3, 0));
    CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("girth: fixed instances") {
    CHECK(girth(standard_graph("complete", 4)) == 3);
    CHECK_FALSE(girth(standard_graph("path", 6)).has_value());
    CHECK(girth(standard_graph("petersen")) == 5);
    CHECK(girth(standard_graph("cycle", 7)) == 7);
    CHECK(girth(standard_graph("grotzsch")) == 4);
}

TEST_CASE("girth agrees with the edge-deletion oracle on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.35, rng);
        CHECK(girth(g) == oracles::girth(g));
    }
}

TEST_CASE("independence number: fixed instances and oracle") {
    CHECK(independence_number(standard_graph("complete", 4)) == 1);
    CHECK(independence_number(standard_graph("cycle", 5)) == 2);
    CHECK(independence_number(standard_graph("grotzsch")) == 5);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 9), 0.4, rng);
        CHECK(independence_number(g) == oracles::independence_number(g));
    }
}

TEST_CASE("chromatic number: fixed instances and oracle") {
    CHECK(chromatic_number(standard_graph("complete", 4)) == 4);
    CHECK(chromatic_number(standard_graph("cycle", 5)) == 3);
    CHECK(chromatic_number(standard_graph("grotzsch")) == 4);
    CHECK(is_3_colorable(standard_graph("cycle", 5)));
    CHECK_FALSE(is_3_colorable(standard_graph("complete", 4)));
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
        CHECK(chromatic_number(g) == oracles::chromatic_number(g));
    }
}

TEST_CASE("colouring counts: frozen values and oracles") {
    CHECK_THROWS_AS(count_proper_colorings(standard_graph("complete", 3), 0), Error);
    CHECK(count_proper_colorings(standard_graph("complete", 3), 3) == 6);
    CHECK(count_proper_colorings(standard_graph("cycle", 6), 3) == 66);
    for (int n = 3; n <= 9; ++n)
        CHECK(count_proper_colorings(standard_graph("cycle", n), 3) ==
              static_cast<std::uint64_t>(oracles::cycle_coloring_count(n, 3)));
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 7), 0.4, rng);
        for (int s = 1; s <= 4; ++s)
            CHECK(count_proper_colorings(g, s) == oracles::count_colorings(g, s));
    }
}

TEST_CASE("proper extension counting honours precolours") {
    Graph p3 = standard_graph("path", 3);
    PrecoloredGraph both_red(p3, {0, kUncolored, 0});
    CHECK(count_proper_extensions(both_red, 3) == 2);
    CHECK(proper_extension_exists(both_red));
    PrecoloredGraph clash(standard_graph("complete", 2), {1, 1});
    CHECK(count_proper_extensions(clash, 3) == 0);
    CHECK_FALSE(proper_extension_exists(clash));
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 6), 0.4, rng);
        std::vector<Color> colors(g.vertex_count(), kUncolored);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (rng() % 3 == 0) colors[v] = static_cast<Color>(rng() % 3);
        PrecoloredGraph p(g, colors);
        CHECK(count_proper_extensions(p, 3) == oracles::count_colorings(p, 3));
    }
}

TEST_CASE("treewidth: fixed instances") {
    CHECK(treewidth_exact(standard_graph("complete", 4)) == 3);
    CHECK(treewidth_exact(standard_graph("cycle", 5)) == 2);
    CHECK(treewidth_exact(standard_graph("path", 4)) == 1);
    CHECK(treewidth_exact(standard_graph("petersen")) == 4);
}

TEST_CASE("treewidth agrees with the elimination-ordering oracle up to n = 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph &g : all_graphs_up_to_iso(n))
            CHECK(treewidth_exact(g) == oracles::treewidth(g));
}

TEST_CASE("categorical product") {
    Graph k2 = standard_graph("complete", 2);
    Graph k3 = standard_graph("complete", 3);
    Graph prod = categorical_product(k2, k3);
    CHECK(prod.vertex_count() == 6);
    CHECK(prod.edge_count() == 6);
    CHECK(canonical_form(prod) == canonical_form(standard_graph("cycle", 6)));

    Graph sq = categorical_product(k2, k2);
    CHECK(sq.vertex_count() == 4);
    CHECK(sq.edge_count() == 2);

    Graph degenerate = categorical_product(standard_graph("cycle", 5), Graph(1));
    CHECK(degenerate.vertex_count() == 5);
    CHECK(degenerate.edge_count() == 0);
}

TEST_CASE("diameter") {
    CHECK(diameter(standard_graph("complete", 4)) == 1);
    CHECK(diameter(standard_graph("cycle", 6)) == 3);
    CHECK(diameter(standard_graph("path", 5)) == 4);
    CHECK_FALSE(diameter(Graph(3, {{0, 1}})).has_value());
}

TEST_CASE("balanced separator number") {
    for (int n = 2; n <= 9; ++n)
        CHECK(balanced_separator_number(standard_graph("path", n)) == 1);
    CHECK(balanced_separator_number(standard_graph("complete", 4)) == 2);
    CHECK(balanced_separator_number(standard_graph("cycle", 6)) == 2);
    CHECK(balanced_separator_number(Graph(1)) == 1); // lone vertex: only X = V works
    CHECK(balanced_separator_number(Graph(2)) == 0);
}

TEST_CASE("chi * alpha >= n across the small corpus") {
    std::vector<Graph> corpus = {standard_graph("complete", 4), standard_graph("complete", 6),
                                 standard_graph("cycle", 5),    standard_graph("cycle", 9),
                                 standard_graph("petersen"),    standard_graph("grotzsch"),
                                 standard_graph("wheel", 6),    standard_graph("path", 7)};
    for (const Graph &g : corpus)
        CHECK(chromatic_number(g) * independence_number(g) >= g.vertex_count());
}

TEST_CASE("3-colouring count positivity matches 3-colorability for all n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (const Graph &g : all_graphs_up_to_iso(n)) {
            bool has = count_proper_colorings(g, 3) > 0;
            CHECK(has == is_3_colorable(g));
        }
}

TEST_CASE("triple covers are 3-colorable (copies of the base are independent)") {
    std::mt19937_64 rng(23);
    Graph k3 = standard_graph("complete", 3);
    for (int trial = 0; trial < 30; ++trial) {
        Graph b = random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
        CHECK(is_3_colorable(categorical_product(b, k3)));
    }
}

TEST_CASE("canonical form: examples") {
    Graph c5 = standard_graph("cycle", 5);
    Graph c5_relabeled = relabel(c5, {3, 1, 4, 0, 2});
    CHECK(canonical_form(c5) == canonical_form(c5_relabeled));

    Graph p4 = standard_graph("path", 4);
    Graph k3_plus_iso(4, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(canonical_form(p4) != canonical_form(k3_plus_iso));

    Graph edge = standard_graph("complete", 2);
    PrecoloredGraph red(edge, {0, 0}), blue(edge, {1, 1});
    CHECK(canonical_form(red) != canonical_form(blue));
    CHECK(s3_orbit_representative(red) == s3_orbit_representative(blue));
}

TEST_CASE("canonical form is invariant under random relabelings") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, 0.4, rng);
        std::vector<Color> colors(n, kUncolored);
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 4 == 0) colors[v] = static_cast<Color>(rng() % 3);
        PrecoloredGraph p(g, colors);
        CanonicalForm base = canonical_form(p);

        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int rounds = 0; rounds < 1000 / 12 + 1; ++rounds) {
            for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
            std::vector<Color> moved(n, kUncolored);
            for (Vertex v = 0; v < n; ++v) moved[perm[v]] = colors[v];
            PrecoloredGraph q(relabel(g, perm), moved);
            CHECK(canonical_form(q) == base);
        }
    }
}

TEST_CASE("canonical decode round-trips") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 8), 0.45, rng);
        CanonicalForm form = canonical_form(g);
        CHECK(canonical_form(decode_canonical(form)) == form);
    }
}

TEST_CASE("graph enumeration matches the known class counts") {
    CHECK(all_graphs_up_to_iso(4).size() == 11);
    CHECK(all_graphs_up_to_iso(5).size() == 34);
    CHECK(all_graphs_up_to_iso(6).size() == 156);
    CHECK(all_graphs_up_to_iso(7).size() == 1044);
    CHECK(all_trees_up_to_iso(7).size() == 11);
    CHECK(all_trees_up_to_iso(9).size() == 47);
    CHECK(all_trees_up_to_iso(10).size() == 106);
}
