#include <doctest.h>

#include <random>

#include "fanfree/constructions.hpp"
#include "fanfree/error.hpp"
#include "fanfree/search.hpp"
#include "fanfree/structure.hpp"
#include "oracles.hpp"

using namespace fanfree;

namespace {

bool move_optimal(const Graph& g, const Partition& p) {
    for (int v = 0; v < g.order(); ++v) {
        int same = 0;
        for (int w = 0; w < g.order(); ++w)
            if (g.adjacent(v, w) && p.side[w] == p.side[v]) ++same;
        if (2 * same > g.degree(v)) return false;
    }
    return true;
}

Partition natural_partition(const PartitionedHost& h) { return make_partition(h.graph, h.classes[0]); }

}  // namespace

TEST_CASE("max cut examples") {
    Partition p = max_cut_partition(cycle_graph(4));
    CHECK(p.cut_edges == 4);
    CHECK(p.internal_edges == 0);
    CHECK(p.exact);
    p = max_cut_partition(complete_graph(4));
    CHECK(p.cut_edges == 4);
    CHECK(p.internal_edges == 2);
    const Graph f = family_member(10, 2).graph;
    p = max_cut_partition(f);
    CHECK(p.cut_edges == oracle::max_cut(f));
    CHECK(p.cut_edges == 25);
    CHECK(p.internal_edges == 1);
    CHECK(p.side[0] == 0);
}

TEST_CASE("exact max cut matches brute force and breaks ties lexicographically") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const Partition p = max_cut_partition(g);
        REQUIRE(p.cut_edges == oracle::max_cut(g));
        CHECK(p.cut_edges + p.internal_edges == g.edge_count());
        CHECK(p.internal_edges == g.edges_within(p.part(0)) + g.edges_within(p.part(1)));
        // No lexicographically smaller side vector (with side[0] = 0) reaches the optimum.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (mask & 1U) continue;
            std::vector<int> side(n);
            for (int v = 0; v < n; ++v) side[v] = (mask >> v) & 1U;
            if (side >= p.side) continue;
            VertexSet zero = 0;
            for (int v = 0; v < n; ++v)
                if (!side[v]) zero |= singleton(v);
            CHECK(make_partition(g, zero).cut_edges < p.cut_edges);
        }
    }
}

TEST_CASE("local search cut is move optimal and usually optimal") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 100; ++t) {
        const int n = std::uniform_int_distribution<int>(2, 10)(rng);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const Partition p = local_search_cut(g);
        CHECK_FALSE(p.exact);
        CHECK(move_optimal(g, p));
        CHECK(p.cut_edges == oracle::max_cut(g));
    }
    // Above the exact limit the result is still move optimal and finds the balanced cut.
    for (int k = 2; k <= 4; ++k) {
        for (int n = std::max(21, 4 * (k - 1) * (k - 1)); n <= 40; n += 4) {
            const Graph g = family_member(n, k).graph;
            const Partition p = max_cut_partition(g, 2);
            CHECK_FALSE(p.exact);
            CHECK(move_optimal(g, p));
            CHECK(p.cut_edges == n * n / 4);
            CHECK(p.internal_edges == (k - 1) * (k - 1));
            CHECK(max_cut_partition(g, 1).side == p.side);
        }
    }
}

TEST_CASE("balance check") {
    const PartitionedHost h = family_member(16, 3);
    const BalanceResult b = claim1_balance(natural_partition(h), 3);
    CHECK(b.verdict == Verdict::Pass);
    CHECK(b.sizes[0] == 8);
    CHECK(natural_partition(h).internal_edges == 4);

    const Graph k = complete_graph(5);
    CHECK(claim1_balance(make_partition(k, k.vertices()), 2).verdict == Verdict::Fail);
    CHECK(claim1_balance(make_partition(k, k.vertices()), 2).balanced == false);

    const Graph t = turan_graph(10, 2);
    CHECK(claim1_balance(max_cut_partition(t), 2).verdict == Verdict::NotApplicable);

    // The strict window |2s - n| < 2n/40 cannot hold with classes of different size unless n > 20.
    CHECK(claim1_balance(max_cut_partition(family_member(19, 2).graph), 2).verdict == Verdict::Fail);
    CHECK(claim1_balance(max_cut_partition(family_member(21, 2).graph), 2).verdict == Verdict::Pass);
    CHECK(claim1_balance(max_cut_partition(family_member(19, 2).graph), 2, Ratio{1, 100}).verdict == Verdict::Pass);
    CHECK_THROWS_AS(claim1_balance(natural_partition(h), 3, Ratio{0, 1}), ArgumentError);
}

TEST_CASE("neighborhood condition") {
    const PartitionedHost h = family_member(16, 3);
    const NeighborhoodResult r = neighborhood_condition(h.graph, natural_partition(h), 3);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.worst.total() == 2);
    for (const VertexScore& s : r.scores) {
        if (h.graph.degree(s.vertex) > 8) {  // a vertex of the embedded K_{2,2}
            CHECK(s.degree_inside == 2);
            CHECK(s.matching_outside == 0);
            CHECK(s.matching_across == 0);
        }
    }

    // Two disjoint triangles in V0 of a T_{12,2} host.
    const PartitionedHost t = embed_in_class(12, disjoint_union(complete_graph(3), complete_graph(3)));
    const NeighborhoodResult bad = neighborhood_condition(t.graph, natural_partition(t), 2);
    CHECK(bad.verdict == Verdict::Fail);
    CHECK(bad.worst.total() >= 2);

    const Graph bip = complete_bipartite(4, 5);
    const NeighborhoodResult zero = neighborhood_condition(bip, max_cut_partition(bip), 1);
    CHECK(zero.verdict == Verdict::Pass);
    CHECK(zero.worst.total() == 0);
}

TEST_CASE("neighborhood condition flags planted centers") {
    // Any planted C_{k,q} whose center sits in a class gives that center a score above k-1.
    for (int k = 2; k <= 3; ++k) {
        const PartitionedHost h = family_member(4 * (k - 1) * (k - 1) + 12, k);
        const Partition p = natural_partition(h);
        const int center = popcount(h.classes[0]) - 1;  // an unused vertex of V0
        GraphBuilder b(h.graph);
        for (int i = 0; i < k; ++i) b.add_edge(center, center - 1 - i);
        const Graph g = b.build();
        REQUIRE(contains_pattern(g, PatternSpec::cycles(5, k)));
        const NeighborhoodResult r = neighborhood_condition(g, p, k);
        CHECK(r.verdict == Verdict::Fail);
        CHECK(r.scores[center].total() > k - 1);
    }
}

TEST_CASE("main lemma condition") {
    LemmaMainResult r = lemma_main_condition(complete_bipartite(3, 3), 3);
    CHECK(r.condition == Verdict::Pass);
    CHECK(r.edges == 9);
    CHECK(r.equality);
    CHECK(r.is_complete_bipartite_rr);

    const Graph triangles = disjoint_union(complete_graph(3), disjoint_union(complete_graph(3), complete_graph(3)));
    CHECK(lemma_main_condition(triangles, 3).condition == Verdict::Fail);

    r = lemma_main_condition(star_graph(4), 4);
    CHECK(r.condition == Verdict::Pass);
    CHECK(r.bound_holds);
    CHECK_FALSE(r.equality);

    CHECK(lemma_main_condition(Graph(3), 2).condition == Verdict::NotApplicable);
}

TEST_CASE("main lemma holds exhaustively up to 7 vertices") {
    for (int r = 1; r <= 3; ++r) {
        std::set<CanonicalForm> equality;
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& g : all_graphs(n)) {
                if (g.isolated_vertices()) continue;
                bool condition = true;
                for (int x = 0; x < n; ++x)
                    if (g.degree(x) + oracle::matching_number(remove_vertices(g, g.closed_neighbors(x))) > r)
                        condition = false;
                const LemmaMainResult res = lemma_main_condition(g, r);
                REQUIRE((res.condition == Verdict::Pass) == condition);
                if (!condition) continue;
                CHECK(g.edge_count() <= r * r);
                if (g.edge_count() == r * r) equality.insert(canonical_form(g));
            }
        }
        CHECK(equality == std::set<CanonicalForm>{canonical_form(complete_bipartite(r, r))});
    }
}

TEST_CASE("min degree peeling") {
    PeelResult r = min_degree_peel(turan_graph(10, 2).with_edge(0, 1), 1);
    CHECK(r.graph.order() == 10);
    CHECK(r.trace.empty());

    r = min_degree_peel(disjoint_union(complete_graph(5), Graph(1)), 1);
    CHECK(r.graph == complete_graph(5));
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0].vertex == 5);
    CHECK(r.trace[0].degree == 0);
    CHECK(r.trace[0].edges_after == 10);
    CHECK(r.kept == std::vector<int>{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(min_degree_peel(turan_graph(10, 2), 0), ArgumentError);
    CHECK_THROWS_AS(min_degree_peel(turan_graph(10, 2), 1), ArgumentError);

    std::mt19937_64 rng(1234);
    for (int t = 0; t < 100; ++t) {
        const int n = std::uniform_int_distribution<int>(8, 16)(rng);
        const int j = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(n * n / 4 + j);
        const Graph g = Graph::from_edges(n, pairs);
        const PeelResult p = min_degree_peel(g, j);
        const int np = p.graph.order();
        CHECK(p.graph == induced_subgraph(g, p.kept));
        CHECK(np + static_cast<int>(p.trace.size()) == n);
        if (np > 0) CHECK(p.graph.min_degree() >= np / 2);
        CHECK(p.graph.edge_count() >= np * np / 4 + j + (n - np));
    }
}

TEST_CASE("audit of family members") {
    const AuditReport a = extremal_audit(family_member(12, 2).graph, 2, 5);
    REQUIRE(a.stages.size() == 9);
    CHECK(a.member);
    CHECK(a.first_failure() == 0);
    for (const StageResult& s : a.stages) CHECK(s.verdict == Verdict::Pass);

    const AuditReport s = extremal_audit(family_member(18, 3, Placement::Smaller).graph, 3, 7);
    CHECK(s.member);
    CHECK(s.first_failure() == 0);
}

TEST_CASE("audit rejects other graphs at the right stage") {
    AuditReport a = extremal_audit(turan_graph(12, 2), 2, 5);
    CHECK_FALSE(a.member);
    CHECK(a.first_failure() == 2);
    a = extremal_audit(complete_graph(12), 2, 5);
    CHECK_FALSE(a.member);
    CHECK(a.first_failure() == 1);

    const Graph planted = embed_in_class(16, complete_graph(3)).graph;
    a = extremal_audit(planted, 2, 5);
    CHECK(a.first_failure() == 1);
    CHECK_FALSE(a.member);
    a = extremal_audit(planted, 3, 5);
    CHECK(a.first_failure() == 2);
    CHECK_FALSE(a.member);

    // Same edge count as a member but with the wrong inner graph.
    const Graph path = embed_in_class(16, path_graph(5)).graph;
    a = extremal_audit(path, 3, 5);
    CHECK_FALSE(a.member);
    CHECK(a.first_failure() > 0);
}
