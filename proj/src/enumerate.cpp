#include "atlab/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "atlab/blocks.hpp"

namespace atlab {

namespace {

// Branch-and-bound lexicographic minimization of the packed adjacency rows.
struct Canon {
    const Graph& g;
    int n;
    int total_bits;
    std::uint64_t best;
    std::vector<int> order;  // chosen old labels

    explicit Canon(const Graph& g)
        : g(g), n(g.n), total_bits(g.n * (g.n - 1) / 2), best(~std::uint64_t{0}) {}

    void dfs(int depth, std::uint64_t code, int bits) {
        if (depth == n) {
            best = std::min(best, code);
            return;
        }
        VSet used = 0;
        for (int i = 0; i < depth; ++i) used |= vs_single(order[i]);
        ATLAB_FOR_VSET(v, vs_all(n) & ~used) {
            std::uint64_t row = 0;
            for (int i = 0; i < depth; ++i) row = (row << 1) | (g.has_edge(v, order[i]) ? 1 : 0);
            std::uint64_t next = (code << depth) | row;
            int next_bits = bits + depth;
            // Compare the partial code against the best prefix of equal length.
            if (best != ~std::uint64_t{0} && total_bits > 0) {
                std::uint64_t best_prefix = best >> (total_bits - next_bits);
                if (next > best_prefix) continue;
            }
            order.push_back(v);
            dfs(depth + 1, next, next_bits);
            order.pop_back();
        }
    }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.n > 11) throw budget_error("canonical_code: order cap 11 exceeded");
    if (g.n <= 1) return 0;
    Canon c(g);
    c.dfs(0, 0, 0);
    return c.best;
}

Graph graph_of_code(int n, std::uint64_t code) {
    Graph g(n);
    int bits = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> (bits - (j * (j - 1) / 2 + i) - 1)) & 1) g.add_edge(j, i);
    return g;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.size() != b.size()) return false;
    return canonical_code(a) == canonical_code(b);
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
    if (g.n > 8) throw budget_error("automorphisms: order cap 8 exceeded");
    std::vector<std::vector<int>> out;
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
            for (int v = u + 1; v < g.n && ok; ++v)
                ok = g.has_edge(u, v) == g.has_edge(perm[u], perm[v]);
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Graph>& enumerate_graphs(int n, int cap) {
    if (n < 0 || n > cap) throw budget_error("enumerate_graphs: order cap " + std::to_string(cap) +
                                             " exceeded by n=" + std::to_string(n));
    static std::mutex mu;
    static std::vector<std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(cache.size()) > n && !cache[n].empty()) return cache[n];
    if (cache.empty()) cache.push_back({Graph(0)});
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> codes;
        for (const Graph& base : cache[m - 1])
            for (VSet nb = 0; nb < vs_single(m - 1); ++nb) {
                Graph h(m);
                for (auto [u, v] : base.edges()) h.add_edge(u, v);
                ATLAB_FOR_VSET(u, nb) h.add_edge(u, m - 1);
                std::uint64_t code = canonical_code(h);
                if (seen.insert(code).second) codes.push_back(code);
            }
        std::sort(codes.begin(), codes.end());
        std::vector<Graph> level;
        level.reserve(codes.size());
        for (auto code : codes) level.push_back(graph_of_code(m, code));
        cache.push_back(std::move(level));
    }
    return cache[n];
}

std::vector<Graph> enumerate_gallai_trees(int n, int k, int cap) {
    std::vector<Graph> out;
    for (int m = 1; m <= n; ++m)
        for (const Graph& g : enumerate_graphs(m, cap))
            if (connected(g) && in_gallai_class(g, k)) out.push_back(g);
    return out;
}

}  // namespace atlab
