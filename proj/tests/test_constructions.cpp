#include <doctest.h>

#include "fanfree/combinatorics.hpp"
#include "fanfree/constructions.hpp"
#include "fanfree/error.hpp"
#include "oracles.hpp"

using namespace fanfree;

TEST_CASE("basic families") {
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(cycle_graph(7).edge_count() == 7);
    CHECK(cycle_graph(7).min_degree() == 2);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(star_graph(4).max_degree() == 4);
    CHECK(complete_bipartite(3, 4).edge_count() == 12);
    const Graph p = petersen_graph();
    CHECK(p.order() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(p.min_degree() == 3);
    CHECK(p.max_degree() == 3);
}

TEST_CASE("turan graphs") {
    for (int n = 0; n <= 20; ++n) {
        for (int r = 1; r <= 5; ++r) {
            const Graph t = turan_graph(n, r);
            CHECK(t.edge_count() == turan_edges(n, r));
            if (n <= 8) {
                CHECK_FALSE(oracle::contains_pattern(t, 1, 0, r + 1));
                if (r >= 2 && n >= r) CHECK(oracle::contains_pattern(t, 1, 0, r));
            }
        }
        CHECK(turan_edges(n, 2) == n * n / 4);
    }
    // Contiguous classes, larger ones first.
    const Graph t = turan_graph(7, 3);
    CHECK_FALSE(t.adjacent(0, 2));
    CHECK(t.adjacent(2, 3));
    CHECK_FALSE(t.adjacent(3, 4));
    CHECK(t.adjacent(4, 5));
    CHECK_FALSE(t.adjacent(5, 6));
    CHECK(turan_edges(7, 3) == 16);
    CHECK(turan_graph(3, 5) == complete_graph(3));
    CHECK_THROWS_AS(turan_graph(5, 0), ArgumentError);
}

TEST_CASE("pattern specs") {
    const PatternSpec c = PatternSpec::cycles(5, 2);
    CHECK(c.order() == 9);
    CHECK(c.size() == 10);
    CHECK(c.describe() == "C_{2,5}");
    const PatternSpec f = PatternSpec::cliques(4, 3);
    CHECK(f.order() == 10);
    CHECK(f.size() == 18);
    CHECK_THROWS_AS(PatternSpec::cycles(4, 2).validate(), ArgumentError);
    CHECK_THROWS_AS(PatternSpec::cycles(5, 0).validate(), ArgumentError);
    CHECK_THROWS_AS(PatternSpec::cliques(2, 1).validate(), ArgumentError);
}

TEST_CASE("build_pattern matches the layout") {
    for (int q : {3, 5, 7}) {
        for (int k = 1; k <= 4; ++k) {
            const PatternSpec spec = PatternSpec::cycles(q, k);
            const Graph g = build_pattern(spec);
            CHECK(g.order() == spec.order());
            CHECK(g.edge_count() == spec.size());
            CHECK(g.degree(0) == 2 * k);
            for (int v = 1; v < g.order(); ++v) CHECK(g.degree(v) == 2);
        }
    }
    const Graph g = build_pattern(PatternSpec::cliques(4, 2));
    CHECK(g.edge_count() == 12);
    CHECK(g.degree(0) == 6);
    CHECK(g.adjacent(4, 6));
    CHECK_FALSE(g.adjacent(3, 4));
    CHECK(oracle::contains_pattern(build_pattern(PatternSpec::cycles(5, 2)), 2, 5));
}

TEST_CASE("family members") {
    for (int k = 2; k <= 5; ++k) {
        for (int n = 4 * (k - 1) * (k - 1); n <= 40; ++n) {
            for (Placement where : {Placement::Larger, Placement::Smaller}) {
                const PartitionedHost h = family_member(n, k, where);
                CHECK(h.graph.edge_count() == predicted_ex(n, k, PatternKind::IntersectingOddCycles));
                CHECK(h.graph.edges_within(h.classes[0]) == (k - 1) * (k - 1));
                CHECK(h.graph.edges_within(h.classes[1]) == 0);
                const int size0 = popcount(h.classes[0]);
                CHECK(size0 == (where == Placement::Larger ? (n + 1) / 2 : n / 2));
            }
        }
    }
    CHECK_THROWS_AS(family_member(8, 3), ArgumentError);
    CHECK_THROWS_AS(family_member(10, 1), ArgumentError);
    CHECK_THROWS_WITH(family_member(15, 3), doctest::Contains("4(k-1)^2"));
}

TEST_CASE("embedding into a class") {
    const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
    const PartitionedHost h = embed_in_class(12, two_triangles);
    CHECK(h.graph.edge_count() == 42);
    CHECK(h.graph.edge_count() == 36 + fan_excess(3));
    CHECK(popcount(h.classes[0]) == 6);
    CHECK_THROWS_AS(embed_in_class(11, complete_graph(6), Placement::Smaller), CapacityError);
    CHECK_NOTHROW(embed_in_class(11, complete_graph(6), Placement::Larger));
}
