#pragma once

#include <string>
#include <vector>

#include "fanfree/combinatorics.hpp"
#include "fanfree/detection.hpp"
#include "fanfree/graph.hpp"

namespace fanfree {

/// Exact rational, used for the stability parameter γ.
struct Ratio {
    long num = 1;
    long den = 1600;
};

/// Two-coloring of the vertices with cached cut statistics.
struct Partition {
    std::vector<int> side;
    int cut_edges = 0;
    /// m = e(V0) + e(V1).
    int internal_edges = 0;
    /// True when cut_edges is the global maximum; otherwise the partition is move-optimal.
    bool exact = false;

    int order() const noexcept { return static_cast<int>(side.size()); }
    VertexSet part(int i) const noexcept;
};

/// Partition with V0 = v0 and V1 = the rest.
Partition make_partition(const Graph& g, VertexSet v0);

/// Maximum cut. Exhaustive for n <= 20, otherwise the best move-optimal cut over 32
/// multi-start local searches. Ties go to the lexicographically smallest side vector
/// with side[0] = 0.
Partition max_cut_partition(const Graph& g, int workers = 1);

/// Best of `restarts` seeded local searches; every result is single-move optimal.
Partition local_search_cut(const Graph& g, int restarts = 32, int workers = 1);

struct BalanceResult {
    Verdict verdict = Verdict::NotApplicable;
    int sizes[2] = {0, 0};
    bool balanced = false;
    bool enough_internal = false;
};

/// n/2 − √γ·n < |Vi| < n/2 + √γ·n for both classes, and m >= (k−1)². Not applicable unless
/// e(G) >= ⌊n²/4⌋ + (k−1)².
BalanceResult claim1_balance(const Partition& p, int k, Ratio gamma = {});

struct VertexScore {
    int vertex = -1;
    int degree_inside = 0;     // deg_{G_i}(x)
    int matching_outside = 0;  // ν(G_i − N_{G_i}[x])
    int matching_across = 0;   // ν(G[E_{1−i}(x)])
    int total() const noexcept { return degree_inside + matching_outside + matching_across; }
};

struct NeighborhoodResult {
    Verdict verdict = Verdict::Pass;
    VertexScore worst;
    std::vector<VertexScore> scores;
};

/// Evaluates deg_{G_i}(x) + ν(G_i − N_{G_i}[x]) + ν(G[E_{1−i}(x)]) <= k − 1 at every vertex.
NeighborhoodResult neighborhood_condition(const Graph& g, const Partition& p, int k);

struct LemmaMainResult {
    /// Pass: deg(x) + ν(G − N[x]) <= r for all x. NotApplicable: g has an isolated vertex.
    Verdict condition = Verdict::NotApplicable;
    int edges = 0;
    bool bound_holds = true;  // e <= r² (only meaningful when the condition holds)
    bool equality = false;    // e == r²
    bool is_complete_bipartite_rr = false;
};

LemmaMainResult lemma_main_condition(const Graph& g, int r);

struct PeelStep {
    int vertex;       // id in the input graph
    int degree;       // degree at deletion time
    int edges_after;  // e(G) after the deletion
};

struct PeelResult {
    Graph graph;
    std::vector<int> kept;  // input ids of the surviving vertices, increasing
    std::vector<PeelStep> trace;
};

/// Deletes a minimum-degree vertex (lowest id on ties) while δ < ⌊n'/2⌋.
/// Requires e(g) = ⌊n²/4⌋ + j with j > 0.
PeelResult min_degree_peel(const Graph& g, int j);

struct StageResult {
    std::string name;
    Verdict verdict = Verdict::NotApplicable;
    std::string detail;
};

struct AuditOptions {
    Ratio gamma{};
    std::uint64_t detect_budget = 0;
    int workers = 1;
};

struct AuditReport {
    int n = 0;
    int k = 0;
    int q = 0;
    int edges = 0;
    long predicted = 0;
    Partition partition;
    /// Nine stages, in pipeline order.
    std::vector<StageResult> stages;
    /// True iff the graph is isomorphic to family_member(n, k) with either placement.
    bool member = false;
    /// 1-based index of the first failing stage, 0 when none fails.
    int first_failure() const noexcept;
};

/// Runs the extremal-structure pipeline on g for C_{k,q}.
AuditReport extremal_audit(const Graph& g, int k, int q, const AuditOptions& options = {});

}  // namespace fanfree
