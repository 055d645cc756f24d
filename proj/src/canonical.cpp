// Canonical labeling by individualization-refinement.
//
// The search tree is built from label-invariant operations only: equitable refinement of an
// ordered partition, and individualization of each vertex of the first non-singleton cell.
// The canonical graph is the lexicographically largest leaf graph. Automorphisms found
// from equal leaves prune the tree two ways: children in the same orbit of the pointwise
// stabilizer of the current prefix are skipped, and a leaf equal to an earlier leaf
// returns the search to the node where the two paths diverge.

#include <algorithm>
#include <numeric>

#include "fanfree/error.hpp"
#include "fanfree/graph.hpp"

namespace fanfree {

namespace {

using Cells = std::vector<VertexSet>;
using Rows = std::vector<VertexSet>;

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalLabeling run() {
        CanonicalLabeling out;
        if (n_ == 0) {
            out.form.graph6 = graph6_encode(g_);
            return out;
        }
        Cells unit{g_.vertices()};
        std::vector<int> path;
        search(std::move(unit), path);
        out.labeling = best_.lab;
        out.form.graph6 = graph6_encode(Graph::from_rows(best_.rows));
        out.automorphisms = std::move(autos_);
        return out;
    }

private:
    struct Leaf {
        std::vector<int> lab;
        std::vector<int> path;
        Rows rows;
    };

    void refine(Cells& cells) const {
        const auto rows = g_.rows();
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t ci = 0; ci < cells.size() && !progress; ++ci) {
                const VertexSet cell = cells[ci];
                if (popcount(cell) == 1) continue;
                for (std::size_t sj = 0; sj < cells.size(); ++sj) {
                    const VertexSet splitter = cells[sj];
                    int lo = n_ + 1;
                    int hi = -1;
                    for_each_vertex(cell, [&](int v) {
                        const int c = popcount(rows[v] & splitter);
                        lo = std::min(lo, c);
                        hi = std::max(hi, c);
                    });
                    if (lo == hi) continue;
                    // Split by neighbour count into the splitter, ascending.
                    std::vector<VertexSet> buckets(hi - lo + 1, 0);
                    for_each_vertex(cell, [&](int v) {
                        buckets[popcount(rows[v] & splitter) - lo] |= singleton(v);
                    });
                    Cells next(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(ci));
                    for (VertexSet b : buckets)
                        if (b) next.push_back(b);
                    next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(ci) + 1,
                                cells.end());
                    cells = std::move(next);
                    progress = true;
                    break;
                }
            }
        }
    }

    Rows leaf_rows(const std::vector<int>& lab) const {
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
        Rows rows(n_, 0);
        for (int i = 0; i < n_; ++i)
            for_each_vertex(g_.neighbors(lab[i]), [&](int w) { rows[i] |= singleton(pos[w]); });
        return rows;
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
        return static_cast<int>(i);
    }

    // Records the automorphism mapping `from` onto the current leaf. Returns the depth to
    // jump back to, or -1 when the automorphism does not carry one path onto the other.
    int record(const Leaf& from, const std::vector<int>& lab, const std::vector<int>& path) {
        std::vector<int> gamma(n_);
        for (int i = 0; i < n_; ++i) gamma[from.lab[i]] = lab[i];
        autos_.push_back(gamma);
        const int split = common_prefix(from.path, path);
        if (split >= static_cast<int>(path.size()) || split >= static_cast<int>(from.path.size()))
            return -1;
        for (int i = 0; i <= split; ++i)
            if (gamma[from.path[i]] != path[i]) return -1;
        return split;
    }

    int visit_leaf(const Cells& cells, const std::vector<int>& path) {
        std::vector<int> lab(n_);
        for (int i = 0; i < n_; ++i) lab[i] = lowest(cells[i]);
        Rows rows = leaf_rows(lab);
        if (!have_leaf_) {
            first_ = Leaf{lab, path, rows};
            best_ = first_;
            have_leaf_ = true;
            return -1;
        }
        if (rows == first_.rows) return record(first_, lab, path);
        if (rows == best_.rows) return record(best_, lab, path);
        if (rows > best_.rows) best_ = Leaf{std::move(lab), path, std::move(rows)};
        return -1;
    }

    // Orbits of the group generated by the stored automorphisms fixing `prefix` pointwise.
    std::vector<int> stabilizer_orbits(const std::vector<int>& prefix) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : autos_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return gamma[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v);
                int b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v) parent[v] = find(v);
        return parent;
    }

    int search(Cells cells, std::vector<int>& path) {
        refine(cells);
        const int depth = static_cast<int>(path.size());
        auto target = std::find_if(cells.begin(), cells.end(),
                                   [](VertexSet c) { return popcount(c) > 1; });
        if (target == cells.end()) return visit_leaf(cells, path);

        const std::size_t t = static_cast<std::size_t>(target - cells.begin());
        const VertexSet cell = cells[t];
        std::vector<int> explored;
        std::size_t autos_seen = static_cast<std::size_t>(-1);
        std::vector<int> orbit;
        for (int v : to_vector(cell)) {
            if (!explored.empty()) {
                if (autos_seen != autos_.size()) {
                    orbit = stabilizer_orbits(path);
                    autos_seen = autos_.size();
                }
                const bool covered = std::any_of(explored.begin(), explored.end(),
                                                 [&](int u) { return orbit[u] == orbit[v]; });
                if (covered) continue;
            }
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(t));
            child.push_back(singleton(v));
            child.push_back(cell & ~singleton(v));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(t) + 1, cells.end());

            path.push_back(v);
            const int jump = search(std::move(child), path);
            path.pop_back();
            explored.push_back(v);
            if (jump >= 0 && jump < depth) return jump;
        }
        return -1;
    }

    const Graph& g_;
    const int n_;
    bool have_leaf_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

CanonicalForm canonical_form_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw UnsupportedSizeError("brute-force canonical form is limited to 8 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rows best;
    do {
        Rows rows(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (g.adjacent(perm[a], perm[b])) rows[a] |= singleton(b);
        if (best.empty() || rows > best) best = std::move(rows);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CanonicalForm{graph6_encode(Graph::from_rows(std::move(best)))};
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace fanfree
