#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "fanfree/combinatorics.hpp"
#include "fanfree/detection.hpp"
#include "fanfree/search.hpp"

namespace fanfree {

const char* to_string(SearchMethod m) {
    switch (m) {
        case SearchMethod::Augmentation: return "augmentation";
        case SearchMethod::EdgeDeletion: return "edge-deletion";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Edge> witness_edges(const EmbeddingWitness& w, const PatternSpec& spec) {
    std::vector<Edge> out;
    for (const auto& image : w.gadgets) {
        if (spec.is_cycle()) {
            for (std::size_t i = 0; i < image.size(); ++i)
                out.emplace_back(image[i], image[(i + 1) % image.size()]);
        } else {
            for (std::size_t i = 0; i < image.size(); ++i)
                for (std::size_t j = i + 1; j < image.size(); ++j) out.emplace_back(image[i], image[j]);
        }
    }
    for (auto& [u, v] : out)
        if (u > v) std::swap(u, v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Adds the edges of `order` to `start` whenever the result stays free.
Graph grow(Graph start, const std::vector<Edge>& order, const PatternSpec& spec) {
    for (auto [u, v] : order) {
        if (start.adjacent(u, v)) continue;
        Graph next = start.with_edge(u, v);
        if (is_free(next, spec)) start = std::move(next);
    }
    return start;
}

int lower_bound_for(int n, const PatternSpec& spec, const SearchOptions& options) {
    int bound = greedy_free_graph(n, spec).edge_count();
    if (options.lower_hint) {
        const Graph& hint = *options.lower_hint;
        if (hint.order() != n) throw ArgumentError("lower hint must have " + std::to_string(n) + " vertices");
        if (!is_free(hint, spec)) throw ArgumentError("lower hint contains " + spec.describe());
        bound = std::max(bound, hint.edge_count());
    }
    return bound;
}

SearchReport by_augmentation(int n, const PatternSpec& spec, int lower, const SearchOptions& options) {
    GenerationOptions gen;
    gen.budget = options.budget;
    gen.workers = options.workers;
    GenerationResult result = generate_free_graphs(n, spec, lower, gen);
    if (!result.complete) throw SearchBudgetExceeded(lower, result.nodes);

    SearchReport report;
    report.ex_value = lower;
    for (const Graph& g : result.graphs) report.ex_value = std::max(report.ex_value, g.edge_count());
    for (const Graph& g : result.graphs)
        if (g.edge_count() == report.ex_value) report.extremal.push_back(canonical_form(g));
    report.nodes_expanded = result.nodes;
    if (report.extremal.empty()) throw Error("augmentation found no graph at the certified lower bound");
    return report;
}

// Breadth-first descent from K_n. Every non-free graph branches on the edges of one witness,
// so each free subgraph of K_n stays reachable along some path of deletions.
SearchReport by_deletion(int n, const PatternSpec& spec, int lower, const SearchOptions& options) {
    std::vector<Graph> level{complete_graph(n)};
    std::atomic<std::uint64_t> nodes{0};
    SearchReport report;

    for (;;) {
        const int edges = level.front().edge_count();
        std::vector<std::optional<EmbeddingWitness>> witness(level.size());
        std::vector<std::vector<std::pair<CanonicalForm, Graph>>> kids(level.size());
        std::atomic<std::size_t> next{0};
        std::atomic<bool> exhausted{false};

        auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= level.size() || exhausted) return;
                const std::uint64_t used = nodes.fetch_add(1) + 1;
                if (options.budget != 0 && used > options.budget) {
                    exhausted = true;
                    return;
                }
                witness[i] = contains_pattern(level[i], spec);
                if (!witness[i]) continue;
                for (auto [u, v] : witness_edges(*witness[i], spec)) {
                    Graph child = level[i].without_edge(u, v);
                    kids[i].emplace_back(canonical_form(child), std::move(child));
                }
            }
        };
        const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(level.size())));
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> threads;
            for (int t = 0; t < workers; ++t) threads.emplace_back(work);
            for (auto& t : threads) t.join();
        }
        if (exhausted) throw SearchBudgetExceeded(lower, nodes.load());

        std::set<CanonicalForm> free_forms;
        for (std::size_t i = 0; i < level.size(); ++i)
            if (!witness[i]) free_forms.insert(canonical_form(level[i]));
        if (!free_forms.empty()) {
            report.ex_value = edges;
            report.extremal.assign(free_forms.begin(), free_forms.end());
            break;
        }
        if (edges <= lower) throw Error("edge deletion passed below the certified lower bound");

        std::map<CanonicalForm, Graph> merged;
        for (auto& bucket : kids)
            for (auto& [form, g] : bucket) merged.emplace(std::move(form), std::move(g));
        level.clear();
        for (auto& [form, g] : merged) level.push_back(std::move(g));
    }
    report.nodes_expanded = nodes.load();
    return report;
}

}  // namespace

Graph greedy_free_graph(int n, const PatternSpec& spec) {
    spec.validate();
    if (spec.order() > n) return complete_graph(n);

    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);

    // Bipartite hosts never contain a pattern with an odd gadget.
    Graph best = grow(turan_graph(n, 2), all, spec);
    std::mt19937 rng(0x5eed);
    for (int round = 0; round < 16; ++round) {
        std::shuffle(all.begin(), all.end(), rng);
        Graph candidate = grow(round % 2 == 0 ? turan_graph(n, 2) : Graph(n), all, spec);
        if (candidate.edge_count() > best.edge_count()) best = std::move(candidate);
    }
    return best;
}

SearchReport extremal_numbers(int n, const PatternSpec& spec, const SearchOptions& options) {
    spec.validate();
    if (n < 1 || n > kMaxSearchOrder)
        throw ArgumentError("exhaustive search needs 1 <= n <= " + std::to_string(kMaxSearchOrder));
    const auto start = Clock::now();
    const int lower = lower_bound_for(n, spec, options);

    SearchReport report = options.method == SearchMethod::Augmentation
                              ? by_augmentation(n, spec, lower, options)
                              : by_deletion(n, spec, lower, options);
    report.n = n;
    report.spec = spec;
    report.method = options.method;
    report.lower_bound = lower;
    report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

KnownValue known_values(int n, const PatternSpec& spec) {
    spec.validate();
    const long complete = static_cast<long>(n) * (n - 1) / 2;
    if (spec.order() > n) return {complete, "pattern has more vertices than the host"};

    if (!spec.is_cycle() && spec.count == 1) {
        const int r = std::get<Clique>(spec.gadget).order - 1;
        return {turan_edges(n, r), r == 2 ? "Mantel" : "Turan"};
    }
    const bool fan = spec.is_cycle() && std::get<Cycle>(spec.gadget).length == 3;
    if (fan && spec.count == 1) return {turan_edges(n, 2), "Mantel"};
    const long k = spec.count;
    if (fan) {
        if (n >= 50 * k * k)
            return {predicted_ex(n, k, PatternKind::TriangleFan), "fan theorem; asymptotic regime only, valid for n >= 50k^2"};
        return {std::nullopt, "fan theorem needs n >= 50k^2"};
    }
    if (spec.is_cycle())
        return {std::nullopt, "intersecting odd cycles: value floor(n^2/4)+(k-1)^2 holds only for n >= n1(k,q), which is not explicit"};
    return {std::nullopt, "intersecting cliques: value floor(n^2/4)+g(k) holds only for sufficiently large n"};
}

}  // namespace fanfree
