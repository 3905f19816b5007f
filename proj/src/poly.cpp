#include "atlab/poly.hpp"

#include <numeric>
#include <unordered_map>

#include "atlab/errors.hpp"

namespace atlab {

BigInt graph_poly_coefficient(const Multigraph& g, const std::vector<int>& e) {
    if (static_cast<int>(e.size()) != g.n)
        throw hypothesis_error("graph_poly_coefficient: exponent vector size mismatch");
    for (int x : e)
        if (x < 0) throw hypothesis_error("graph_poly_coefficient: negative exponent");
    int m = static_cast<int>(g.edges.size());
    if (std::accumulate(e.begin(), e.end(), 0) != m)
        throw hypothesis_error("graph_poly_coefficient: exponent sum != edge count");

    // monomials are tracked as mixed-radix packed exponent vectors; anything
    // exceeding the target in one coordinate can never come back down
    std::vector<std::uint64_t> stride(g.n, 1);
    for (int v = 1; v < g.n; ++v) {
        stride[v] = stride[v - 1] * (e[v - 1] + 1);
        if (stride[v] > (std::uint64_t{1} << 62))
            throw budget_error("graph_poly_coefficient: exponent space too large to index");
    }

    std::unordered_map<std::uint64_t, BigInt> cur;
    cur[0] = 1;
    for (auto [u, v] : g.edges) {
        std::unordered_map<std::uint64_t, BigInt> next;
        next.reserve(cur.size() * 2);
        for (auto& [key, c] : cur) {
            int du = static_cast<int>(key / stride[u] % (e[u] + 1));
            int dv = static_cast<int>(key / stride[v] % (e[v] + 1));
            if (du < e[u]) next[key + stride[u]] += c;
            if (dv < e[v]) next[key + stride[v]] -= c;
        }
        cur = std::move(next);
    }
    std::uint64_t target = 0;
    for (int v = 0; v < g.n; ++v) target += stride[v] * e[v];
    auto it = cur.find(target);
    return it == cur.end() ? BigInt(0) : it->second;
}

BigInt graph_poly_coefficient(const Graph& g, const std::vector<int>& e) {
    return graph_poly_coefficient(Multigraph::of(g), e);
}

}  // namespace atlab
