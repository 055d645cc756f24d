#include <numeric>
#include <queue>

#include "fanfree/combinatorics.hpp"

namespace fanfree {

namespace {

// Edmonds' algorithm with blossom contraction by base relabeling, O(V^3).
class Blossom {
public:
    explicit Blossom(std::span<const std::vector<int>> adj)
        : adj_(adj), n_(static_cast<int>(adj.size())), match_(n_, -1), parent_(n_), base_(n_),
          used_(n_), in_blossom_(n_) {}

    const std::vector<int>& solve() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int w : adj_[v]) {
                if (match_[w] == -1) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int t = find_path(v);
            while (t != -1) {
                const int pv = parent_[t];
                const int next = match_[pv];
                match_[t] = pv;
                match_[pv] = t;
                t = next;
            }
        }
        return match_;
    }

private:
    int lca(int a, int b) const {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    const int b = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = b;
                        if (!used_[i]) {
                            used_[i] = 1;
                            q.push(i);
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    std::span<const std::vector<int>> adj_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(g.order());
    for (int v = 0; v < g.order(); ++v) adj[v] = to_vector(g.neighbors(v));
    return adj;
}

}  // namespace

MatchingCertificate max_matching(const Graph& g) {
    const auto adj = adjacency_lists(g);
    Blossom blossom(adj);
    const auto& mate = blossom.solve();
    MatchingCertificate out;
    for (int v = 0; v < g.order(); ++v)
        if (mate[v] > v) out.edges.emplace_back(v, mate[v]);
    return out;
}

int matching_number(const Graph& g) { return max_matching(g).size(); }

int matching_number(std::span<const std::vector<int>> adjacency) {
    Blossom blossom(adjacency);
    const auto& mate = blossom.solve();
    int matched = 0;
    for (int m : mate)
        if (m != -1) ++matched;
    return matched / 2;
}

bool is_matching(const Graph& g, const MatchingCertificate& m) {
    VertexSet covered = 0;
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
        if (contains(covered, u) || contains(covered, v)) return false;
        covered |= singleton(u) | singleton(v);
    }
    return true;
}

}  // namespace fanfree
