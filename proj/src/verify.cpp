#include "fanfree/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "fanfree/combinatorics.hpp"
#include "fanfree/detection.hpp"
#include "fanfree/search.hpp"
#include "fanfree/structure.hpp"

namespace fanfree {

namespace {

CheckSummary start(std::string name) {
    CheckSummary s;
    s.name = std::move(name);
    return s;
}

void note(CheckSummary& s, const std::string& what) {
    if (s.detail.size() < 400) s.detail += (s.detail.empty() ? "" : "; ") + what;
}

}  // namespace

CheckSummary verify_chvatal_bound(int max_n) {
    CheckSummary s = start("chvatal-bound");
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : all_graphs(n)) {
            if (g.edge_count() == 0) continue;
            ++s.checked;
            const int nu = matching_number(g);
            if (g.edge_count() > chvatal_bound(nu, g.max_degree())) {
                ++s.violations;
                note(s, graph6_encode(g));
            }
        }
    }
    ++s.checked;
    if (chvatal_bound(3, 2) != 9) {
        ++s.violations;
        note(s, "f(3,2) != 9");
    }
    return s;
}

CheckSummary verify_lemma_main(int max_n) {
    CheckSummary s = start("lemma-main");
    for (int r = 1; r <= 3; ++r) {
        std::set<CanonicalForm> equality;
        for (int n = 1; n <= max_n; ++n) {
            for (const Graph& g : all_graphs(n)) {
                if (g.isolated_vertices() != 0) continue;
                ++s.checked;
                const LemmaMainResult res = lemma_main_condition(g, r);
                if (res.condition != Verdict::Pass) continue;
                if (!res.bound_holds) {
                    ++s.violations;
                    note(s, "r=" + std::to_string(r) + " bound fails on " + graph6_encode(g));
                }
                if (res.equality) equality.insert(canonical_form(g));
            }
        }
        const std::set<CanonicalForm> expected{canonical_form(complete_bipartite(r, r))};
        if (equality != expected) {
            ++s.violations;
            note(s, "r=" + std::to_string(r) + " equality set has " + std::to_string(equality.size()) +
                        " classes");
        }
    }
    return s;
}

CheckSummary verify_observation1(int max_n) {
    CheckSummary s = start("observation-1");
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : all_graphs(n)) {
            const Observation1Result r = check_observation1(g);
            if (r.verdict == Verdict::NotApplicable) continue;
            ++s.checked;
            if (r.verdict == Verdict::Fail) {
                ++s.violations;
                note(s, graph6_encode(g));
            }
        }
    }
    return s;
}

CheckSummary verify_family_freeness(int max_n, int workers) {
    CheckSummary s = start("family-freeness");
    DetectOptions opts;
    opts.workers = workers;
    for (int k : {2, 3}) {
        for (int q : {5, 7}) {
            const PatternSpec spec = PatternSpec::cycles(q, k);
            for (int n = std::max(4 * (k - 1) * (k - 1), 4 * (k - 1)); n <= max_n; ++n) {
                for (Placement where : {Placement::Larger, Placement::Smaller}) {
                    ++s.checked;
                    const DetectResult r = detect(family_member(n, k, where).graph, spec, opts);
                    if (r.outcome != Outcome::Absent) {
                        ++s.violations;
                        note(s, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " q=" +
                                    std::to_string(q) + " " + to_string(r.outcome));
                    }
                }
            }
        }
    }
    return s;
}

CheckSummary verify_peeling(int instances, std::uint64_t seed) {
    CheckSummary s = start("min-degree-peel");
    std::mt19937_64 rng(seed);
    for (int t = 0; t < instances; ++t) {
        const int n = std::uniform_int_distribution<int>(8, 16)(rng);
        const int j = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Edge> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(n * n / 4 + j);
        const Graph g = Graph::from_edges(n, all);

        ++s.checked;
        const PeelResult res = min_degree_peel(g, j);
        const int np = res.graph.order();
        const bool degree_ok = np == 0 || res.graph.min_degree() >= np / 2;
        const bool edges_ok = res.graph.edge_count() >= np * np / 4 + j + (n - np);
        if (!degree_ok || !edges_ok) {
            ++s.violations;
            note(s, graph6_encode(g));
        }
    }
    return s;
}

CheckSummary verify_degree_matching_bound() {
    CheckSummary s = start("degree-matching-bound");
    for (long k = 3; k <= 12; ++k) {
        if (k == 4) continue;
        ++s.checked;
        if (chvatal_bound(k - 1, k - 2) > (k - 1) * (k - 1) - 1) {
            ++s.violations;
            note(s, "k=" + std::to_string(k));
        }
    }
    return s;
}

std::vector<CheckSummary> verify_all(int workers) {
    return {verify_chvatal_bound(), verify_lemma_main(), verify_observation1(),
            verify_family_freeness(24, workers), verify_peeling(), verify_degree_matching_bound()};
}

}  // namespace fanfree
