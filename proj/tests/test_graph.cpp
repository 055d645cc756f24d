#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fanfree/constructions.hpp"
#include "fanfree/error.hpp"
#include "fanfree/graph.hpp"
#include "fanfree/search.hpp"
#include "oracles.hpp"

using namespace fanfree;

TEST_CASE("graph basics") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK(g.degree(3) == 0);
    CHECK(g.min_degree() == 0);
    CHECK(g.max_degree() == 2);
    CHECK(g.component_count() == 2);
    CHECK(g.isolated_vertices() == singleton(3));
    CHECK(g.edges_within(make_set({0, 1})) == 1);
    CHECK(g.edges_between(make_set({0}), make_set({1, 2, 3})) == 2);
    CHECK(g.without_edge(0, 1).edge_count() == 2);
    CHECK(g.with_edge(0, 3).degree(3) == 1);
    CHECK(g.without_edges_at(singleton(0)).edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), ArgumentError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), ArgumentError);
    CHECK_THROWS_AS(Graph(63), UnsupportedSizeError);
    CHECK_THROWS_AS(Graph::from_rows({0b10, 0b00}), ArgumentError);
}

TEST_CASE("subgraph helpers") {
    const Graph c5 = cycle_graph(5);
    const Graph p = induced_subgraph(c5, make_set({0, 1, 2}));
    CHECK(p.order() == 3);
    CHECK(p.edge_count() == 2);
    CHECK(remove_vertices(c5, singleton(0)) == path_graph(4));
    CHECK(remove_vertices(c5, singleton(0)).edge_count() == 3);

    const std::vector<Edge> x{{0, 1}, {3, 4}};
    const Graph e = edge_induced_subgraph(c5, x);
    CHECK(e.order() == 4);
    CHECK(e.edge_count() == 2);

    const std::vector<int> perm{4, 3, 2, 1, 0};
    const Graph r = relabel(path_graph(5), perm);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) CHECK(r.adjacent(a, b) == path_graph(5).adjacent(perm[a], perm[b]));

    const Graph u = disjoint_union(complete_graph(3), complete_graph(2));
    CHECK(u.order() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(u.component_count() == 2);
}

TEST_CASE("graph6 known encodings") {
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_encode(complete_graph(2)) == "A_");
    CHECK(graph6_encode(complete_graph(3)) == "Bw");
    CHECK(graph6_encode(Graph(2)) == "A?");
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_decode("Bw") == complete_graph(3));
    CHECK(graph6_decode("Bw\n") == complete_graph(3));
    CHECK(graph6_decode("Bw\r\n") == complete_graph(3));
    // Petersen graph as printed by nauty's tools.
    CHECK(isomorphic(graph6_decode("IheA@GUAo"), petersen_graph()));
}

TEST_CASE("graph6 decode errors report offsets") {
    auto offset_of = [](std::string_view s) {
        try {
            graph6_decode(s);
        } catch (const DecodeError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("~") == 0);
    CHECK(offset_of("B") == 1);
    CHECK(offset_of("Bw?") == 2);
    CHECK(offset_of("B\x01") == 1);
    CHECK(offset_of("A`") == 1);  // padding bit set
    CHECK_THROWS_WITH_AS(graph6_decode("B"), doctest::Contains("byte 1"), DecodeError);
}

TEST_CASE("graph6 stream reader") {
    std::istringstream in(">>graph6<<Bw\n\n>>graph6<<\nA_\r\n@\n");
    Graph6Reader reader(in);
    Graph g;
    std::string raw;
    REQUIRE(reader.next(g, &raw));
    CHECK(raw == "Bw");
    CHECK(g == complete_graph(3));
    REQUIRE(reader.next(g, &raw));
    CHECK(raw == "A_");
    REQUIRE(reader.next(g));
    CHECK(g.order() == 1);
    CHECK_FALSE(reader.next(g));
    CHECK(reader.line_number() == 5);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 1000; ++t) {
        const int n = std::uniform_int_distribution<int>(0, 62)(rng);
        const Graph g = oracle::random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
        const std::string s = graph6_encode(g);
        CHECK(graph6_decode(s) == g);
        CHECK(graph6_encode(graph6_decode(s)) == s);
    }
}

TEST_CASE("canonical form is a complete invariant on small graphs") {
    // Agreement with an independent permutation-based certificate on every labeled graph.
    for (int n = 0; n <= 5; ++n) {
        std::map<std::string, std::string> cert_to_form;
        std::set<std::string> forms;
        for (const Graph& g : oracle::labeled_graphs(n)) {
            const std::string form = canonical_form(g).graph6;
            const std::string cert = oracle::certificate(g);
            auto [it, fresh] = cert_to_form.emplace(cert, form);
            CHECK(it->second == form);
            forms.insert(form);
        }
        CHECK(forms.size() == cert_to_form.size());
    }
}

TEST_CASE("canonical form matches the brute-force reference") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const Graph h = relabel(g, oracle::random_permutation(n, rng));
        CHECK(canonical_form_bruteforce(g) == canonical_form_bruteforce(h));
        CHECK(isomorphic(g, h));
    }
}

TEST_CASE("canonical form invariant under random relabelings") {
    std::mt19937_64 rng(99);
    const std::vector<Graph> hard{petersen_graph(), family_member(40, 4).graph, complete_bipartite(7, 9),
                                  cycle_graph(30), turan_graph(31, 3)};
    for (int t = 0; t < 1000; ++t) {
        Graph g;
        if (t < 50) {
            g = hard[t % hard.size()];
        } else {
            const int n = std::uniform_int_distribution<int>(1, 40)(rng);
            g = oracle::random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
        }
        const Graph h = relabel(g, oracle::random_permutation(g.order(), rng));
        REQUIRE(canonical_form(g) == canonical_form(h));
        CHECK(graph6_decode(canonical_form(g).graph6).edge_count() == g.edge_count());
    }
}

TEST_CASE("canonical labeling is an isomorphism onto the form") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 20)(rng);
        const Graph g = oracle::random_graph(n, 0.4, rng);
        const CanonicalLabeling lab = canonical_labeling(g);
        CHECK(relabel(g, lab.labeling) == graph6_decode(lab.form.graph6));
        for (const auto& a : lab.automorphisms) CHECK(relabel(g, a) == g);
    }
}

TEST_CASE("non-isomorphic pairs get different forms") {
    CHECK_FALSE(isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
    CHECK_FALSE(isomorphic(path_graph(4), star_graph(3)));
    CHECK_FALSE(isomorphic(complete_graph(4), cycle_graph(4)));
}

TEST_CASE("isomorphism class counts") {
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 0; n <= 8; ++n) CHECK(all_graphs(n).size() == expected[n]);
    for (int n = 1; n <= 6; ++n) CHECK(oracle::class_count(n) == expected[n]);
}
