#include <algorithm>
#include <sstream>

#include "fanfree/error.hpp"
#include "fanfree/structure.hpp"

namespace fanfree {

namespace {

long floor_quarter_square(long n) { return n * n / 4; }

Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

// Edges of g with both ends in s.
std::vector<Edge> edges_inside(const Graph& g, VertexSet s) {
    std::vector<Edge> out;
    for_each_vertex(s, [&](int u) {
        for_each_vertex(g.neighbors(u) & s, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    });
    return out;
}

}  // namespace

BalanceResult claim1_balance(const Partition& p, int k, Ratio gamma) {
    if (k < 1) throw ArgumentError("k must be at least 1");
    if (gamma.num <= 0 || gamma.den <= 0) throw ArgumentError("gamma must be a positive ratio");
    BalanceResult r;
    const long n = p.order();
    const long excess = static_cast<long>(k - 1) * (k - 1);
    const VertexSet v0 = p.part(0);
    r.sizes[0] = popcount(v0);
    r.sizes[1] = static_cast<int>(n) - r.sizes[0];
    if (p.cut_edges + p.internal_edges < floor_quarter_square(n) + excess) return r;

    // |2s − n| < 2√γ·n, squared to stay in integers.
    r.balanced = true;
    for (int s : r.sizes) {
        const long d = 2L * s - n;
        if (!(d * d * gamma.den < 4 * gamma.num * n * n)) r.balanced = false;
    }
    r.enough_internal = p.internal_edges >= excess;
    r.verdict = verdict_of(r.balanced && r.enough_internal);
    return r;
}

NeighborhoodResult neighborhood_condition(const Graph& g, const Partition& p, int k) {
    if (p.order() != g.order()) throw ArgumentError("partition does not match the graph");
    NeighborhoodResult result;
    const VertexSet parts[2] = {p.part(0), p.part(1)};
    const std::vector<Edge> inside[2] = {edges_inside(g, parts[0]), edges_inside(g, parts[1])};

    for (int x = 0; x < g.order(); ++x) {
        const int i = p.side[x];
        const VertexSet own = parts[i];
        VertexScore s;
        s.vertex = x;
        s.degree_inside = popcount(g.neighbors(x) & own);
        s.matching_outside = matching_number(induced_subgraph(g, own & ~g.closed_neighbors(x)));
        std::vector<Edge> touched;
        for (auto [u, v] : inside[1 - i])
            if (g.adjacent(x, u) || g.adjacent(x, v)) touched.emplace_back(u, v);
        s.matching_across = touched.empty() ? 0 : matching_number(edge_induced_subgraph(g, touched));
        if (result.worst.vertex < 0 || s.total() > result.worst.total()) result.worst = s;
        result.scores.push_back(s);
    }
    result.verdict = verdict_of(result.worst.vertex < 0 || result.worst.total() <= k - 1);
    return result;
}

LemmaMainResult lemma_main_condition(const Graph& g, int r) {
    if (r < 1) throw ArgumentError("r must be at least 1");
    LemmaMainResult res;
    res.edges = g.edge_count();
    if (g.isolated_vertices() != 0) return res;
    bool holds = true;
    for (int x = 0; x < g.order() && holds; ++x) {
        const int nu = matching_number(remove_vertices(g, g.closed_neighbors(x)));
        if (g.degree(x) + nu > r) holds = false;
    }
    res.condition = verdict_of(holds);
    if (holds) {
        res.bound_holds = res.edges <= r * r;
        res.equality = res.edges == r * r;
    }
    res.is_complete_bipartite_rr = g.order() == 2 * r && isomorphic(g, complete_bipartite(r, r));
    return res;
}

PeelResult min_degree_peel(const Graph& g, int j) {
    const long n = g.order();
    if (j <= 0 || g.edge_count() != floor_quarter_square(n) + j)
        throw ArgumentError("min_degree_peel needs e(G) = floor(n^2/4) + j with j > 0");
    PeelResult res;
    res.graph = g;
    for (int v = 0; v < g.order(); ++v) res.kept.push_back(v);

    while (res.graph.order() > 0) {
        const Graph& h = res.graph;
        const int delta = h.min_degree();
        if (delta >= h.order() / 2) break;
        int victim = 0;
        while (h.degree(victim) != delta) ++victim;
        PeelStep step{res.kept[victim], delta, 0};
        res.graph = remove_vertices(h, singleton(victim));
        res.kept.erase(res.kept.begin() + victim);
        step.edges_after = res.graph.edge_count();
        res.trace.push_back(step);
    }
    return res;
}

int AuditReport::first_failure() const noexcept {
    for (std::size_t i = 0; i < stages.size(); ++i)
        if (stages[i].verdict == Verdict::Fail) return static_cast<int>(i) + 1;
    return 0;
}

AuditReport extremal_audit(const Graph& g, int k, int q, const AuditOptions& options) {
    const PatternSpec spec = PatternSpec::cycles(q, k);
    spec.validate();
    if (q < 5) throw ArgumentError("the audit targets odd cycles of length at least 5");

    AuditReport rep;
    rep.n = g.order();
    rep.k = k;
    rep.q = q;
    rep.edges = g.edge_count();
    rep.predicted = predicted_ex(rep.n, k, PatternKind::IntersectingOddCycles);
    auto add = [&](std::string name, Verdict v, std::string detail) {
        rep.stages.push_back({std::move(name), v, std::move(detail)});
    };

    {
        DetectOptions opts;
        opts.budget = options.detect_budget;
        opts.workers = options.workers;
        const DetectResult d = detect(g, spec, opts);
        const Verdict v = d.outcome == Outcome::Absent    ? Verdict::Pass
                          : d.outcome == Outcome::Present ? Verdict::Fail
                                                          : Verdict::NotApplicable;
        add("pattern-free", v, std::string(to_string(d.outcome)) + " after " + std::to_string(d.nodes) + " nodes");
    }
    add("edge-count", verdict_of(rep.edges >= rep.predicted),
        std::to_string(rep.edges) + " edges vs predicted " + std::to_string(rep.predicted));

    Partition p = max_cut_partition(g, options.workers);
    // Name the class holding internal edges V0 so the later stages read naturally.
    const VertexSet part0 = p.part(0), part1 = p.part(1);
    if (g.edges_within(part0) == 0 && g.edges_within(part1) > 0) {
        for (int& s : p.side) s ^= 1;
    }
    const VertexSet v[2] = {p.part(0), p.part(1)};
    add("max-cut", Verdict::Pass,
        "cut " + std::to_string(p.cut_edges) + ", m " + std::to_string(p.internal_edges) +
            (p.exact ? ", exact" : ", move-optimal"));

    {
        const BalanceResult b = claim1_balance(p, k, options.gamma);
        std::ostringstream os;
        os << "|V0| " << b.sizes[0] << ", |V1| " << b.sizes[1] << ", balanced " << b.balanced
           << ", m >= (k-1)^2 " << b.enough_internal;
        add("balance", b.verdict, os.str());
    }
    {
        const NeighborhoodResult nb = neighborhood_condition(g, p, k);
        std::ostringstream os;
        os << "worst vertex " << nb.worst.vertex << " scores " << nb.worst.degree_inside << "+"
           << nb.worst.matching_outside << "+" << nb.worst.matching_across << " vs " << k - 1;
        add("neighborhood", nb.verdict, os.str());
    }

    const Graph g0 = induced_subgraph(g, v[0]);
    const Graph g1 = induced_subgraph(g, v[1]);
    const int nu0 = matching_number(g0), nu1 = matching_number(g1);
    add("class-matchings", verdict_of(nu0 + nu1 <= k - 1),
        "nu0 " + std::to_string(nu0) + ", nu1 " + std::to_string(nu1));
    const int delta = std::max(g0.order() ? g0.max_degree() : 0, g1.order() ? g1.max_degree() : 0);
    add("class-max-degree", verdict_of(delta == k - 1), "max degree " + std::to_string(delta));
    const int e0 = g0.edge_count(), e1 = g1.edge_count();
    add("one-class-internal", verdict_of(e0 == 0 || e1 == 0),
        "e(V0) " + std::to_string(e0) + ", e(V1) " + std::to_string(e1));

    {
        const VertexSet active = v[0] & ~[&] {
            VertexSet iso = 0;
            for_each_vertex(v[0], [&](int x) {
                if ((g.neighbors(x) & v[0]) == 0) iso |= singleton(x);
            });
            return iso;
        }();
        const int s0 = popcount(v[0]), s1 = popcount(v[1]);
        const bool cross_complete = p.cut_edges == s0 * s1 && std::abs(s0 - s1) <= 1;
        const bool core = e1 == 0 && isomorphic(induced_subgraph(g, active), complete_bipartite(k - 1, k - 1));

        const CanonicalForm form = canonical_form(g);
        for (Placement where : {Placement::Larger, Placement::Smaller}) {
            try {
                if (canonical_form(family_member(rep.n, k, where).graph) == form) rep.member = true;
            } catch (const Error&) {
                // the placement is not available at this n
            }
        }
        std::ostringstream os;
        os << "A0 induces K_{k-1,k-1} " << core << ", cross edges complete " << cross_complete
           << ", member " << rep.member;
        add("family-member", verdict_of(rep.member && core && cross_complete), os.str());
    }
    rep.partition = std::move(p);
    return rep;
}

}  // namespace fanfree
