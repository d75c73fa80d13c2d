#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "widthlab/canonical.hpp"
#include "widthlab/generators.hpp"
#include "widthlab/invariants.hpp"

using namespace widthlab;

TEST_CASE("standard graphs: shapes and parameters") {
    Graph k4 = standard_graph("complete", 4);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(standard_graph("cycle", 6).edge_count() == 6);
    CHECK(standard_graph("path", 5).edge_count() == 4);
    Graph w6 = standard_graph("wheel", 6);
    CHECK(w6.vertex_count() == 6);
    CHECK(w6.edge_count() == 10);
    CHECK(chromatic_number(w6) == 4); // odd rim
    Graph pet = standard_graph("petersen");
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK_THROWS_AS(standard_graph("noSuchFamily", 3), Error);
    CHECK_THROWS_AS(standard_graph("cycle", 2), Error);
}

TEST_CASE("the fixed Grotzsch instance") {
    Graph g = standard_graph("grotzsch");
    CHECK(g.vertex_count() == 11);
    CHECK(g.edge_count() == 20);
    CHECK(chromatic_number(g) == 4);
    CHECK(girth(g) == 4);
    CHECK(independence_number(g) == 5);
    // Mycielskian of C5, canonical-form equal to the hard-coded instance.
    CHECK(canonical_form(mycielskian(standard_graph("cycle", 5))) == canonical_form(g));
    CHECK(canonical_form(standard_graph("mycielski", 5)) == canonical_form(g));
}

TEST_CASE("mycielskian preserves triangle-freeness and bumps chromatic number") {
    Graph c5 = standard_graph("cycle", 5);
    Graph m = mycielskian(c5);
    CHECK(m.vertex_count() == 11);
    CHECK(girth(m) == 4);                         // triangle-free
    CHECK(chromatic_number(m) == chromatic_number(c5) + 1);
}

TEST_CASE("random regular graphs") {
    Graph g = random_regular(10, 6, 12345);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 30);
    for (Vertex v = 0; v < 10; ++v) CHECK(g.degree(v) == 6);

    Graph again = random_regular(10, 6, 12345);
    CHECK(g == again); // deterministic for a fixed seed
    Graph other = random_regular(10, 6, 54321);
    CHECK(other.edge_count() == 30);

    CHECK_THROWS_AS(random_regular(5, 3, 1), Error); // odd n*d
    CHECK_THROWS_AS(random_regular(4, 4, 1), Error); // d >= n

    // Small-scale sanity on the construction pipeline base: these seeds all
    // give connected non-3-colorable 6-regular graphs at n = 10.
    int connected_count = 0, non_3_colorable = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph b = random_regular(10, 6, seed);
        connected_count += b.connected();
        non_3_colorable += (chromatic_number(b) >= 4);
    }
    CHECK(connected_count == 10);
    CHECK(non_3_colorable == 10);
}

TEST_CASE("triple cover: layout and frozen instances") {
    TripleCover c6 = triple_cover(standard_graph("complete", 2));
    CHECK(c6.graph.vertex_count() == 6);
    CHECK(c6.graph.edge_count() == 6);
    CHECK(canonical_form(c6.graph) == canonical_form(standard_graph("cycle", 6)));
    CHECK(c6.base_connected);
    CHECK_FALSE(c6.base_chromatic_exceeds_3);

    TripleCover a = triple_cover(standard_graph("complete", 4));
    CHECK(a.graph.vertex_count() == 12);
    CHECK(a.graph.edge_count() == 36);
    CHECK(a.base_connected);
    CHECK(a.base_chromatic_exceeds_3);
    CHECK(count_proper_colorings(a.graph, 3) == 6); // uniquely 3-colorable

    TripleCover c5 = triple_cover(standard_graph("cycle", 5));
    CHECK(c5.graph.vertex_count() == 15);
    CHECK(c5.graph.edge_count() == 30);
    CHECK_FALSE(c5.base_chromatic_exceeds_3);

    // Copies of the base sit at fixed offsets: (v, i) -> 3v + i.
    Graph k2 = standard_graph("complete", 2);
    Graph prod = triple_cover(k2).graph;
    CHECK_FALSE(prod.adjacent(0, 1)); // same base vertex, never adjacent
    CHECK(prod.adjacent(0, 4));       // (0,0)-(1,1)
    CHECK_FALSE(prod.adjacent(0, 3)); // equal K3 coordinate
}

TEST_CASE("triple covers of connected non-3-colorable bases are uniquely 3-colorable") {
    std::vector<Graph> bases = {standard_graph("complete", 4), standard_graph("wheel", 6),
                                standard_graph("grotzsch")};
    for (const Graph &b : bases) {
        TripleCover cover = triple_cover(b);
        CHECK(cover.base_connected);
        CHECK(cover.base_chromatic_exceeds_3);
        CHECK(count_proper_colorings(cover.graph, 3) == 6);
    }
}

TEST_CASE("crossover gadget: shape and colouring census") {
    CrossoverGadget gadget = crossover_gadget();
    CHECK(gadget.graph.vertex_count() == 13);
    CHECK(gadget.graph.edge_count() == 24);
    CHECK(count_proper_colorings(gadget.graph, 3) == 12);
    CHECK(oracles::count_colorings(gadget.graph, 3) == 12);

    // Property (a): opposite corners share a colour in every proper colouring.
    // Census per corner pattern via precoloured counts.
    int patterns_with_equal_pairs = 0;
    for (Color lr = 0; lr < 3; ++lr)
        for (Color tb = 0; tb < 3; ++tb) {
            std::vector<Color> colors(13, kUncolored);
            colors[gadget.left] = lr;
            colors[gadget.right] = lr;
            colors[gadget.top] = tb;
            colors[gadget.bottom] = tb;
            auto count = count_proper_extensions(PrecoloredGraph(gadget.graph, colors), 3);
            if (lr == tb)
                CHECK(count == 2); // the all-equal pattern has exactly two extensions
            else
                CHECK(count == 1); // unequal pairs extend uniquely
            patterns_with_equal_pairs += count > 0;
        }
    CHECK(patterns_with_equal_pairs == 9);
    // 3 * 2 + 6 * 1 = 12 accounts for every proper colouring, so opposite
    // corners are equal in all of them.
}

TEST_CASE("crossover gadget: no colouring with unequal opposite corners") {
    CrossoverGadget gadget = crossover_gadget();
    std::uint64_t total = 0;
    for (Color a = 0; a < 3; ++a)
        for (Color b = 0; b < 3; ++b)
            for (Color c = 0; c < 3; ++c)
                for (Color d = 0; d < 3; ++d) {
                    std::vector<Color> colors(13, kUncolored);
                    colors[gadget.left] = a;
                    colors[gadget.right] = b;
                    colors[gadget.top] = c;
                    colors[gadget.bottom] = d;
                    auto count = count_proper_extensions(PrecoloredGraph(gadget.graph, colors), 3);
                    if (a != b || c != d) CHECK(count == 0);
                    total += count;
                }
    CHECK(total == 12);
}
