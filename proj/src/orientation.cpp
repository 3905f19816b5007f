#include "atlab/orientation.hpp"

#include <algorithm>
#include <numeric>

#include "atlab/errors.hpp"

namespace atlab {

bool Orientation::acyclic() const {
    std::vector<int> indeg(g.n, 0);
    for (size_t i = 0; i < g.edges.size(); ++i) ++indeg[head(static_cast<int>(i))];
    std::vector<int> queue;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (size_t i = 0; i < g.edges.size(); ++i)
            if (tail(static_cast<int>(i)) == v && --indeg[head(static_cast<int>(i))] == 0)
                queue.push_back(head(static_cast<int>(i)));
    }
    return seen == g.n;
}

Orientation lexicographic_orientation(const Multigraph& m) {
    return Orientation(m);  // edges are stored smaller-first
}

namespace {

// DFS over arc subsets in an order that closes vertices as early as possible.
// balance[v] = out - in over the chosen arcs so far; once every arc at v has
// been decided the balance must be 0, and before that it cannot exceed the
// number of undecided arcs at v.
struct EulerCounter {
    int m;
    std::vector<int> tail, head;       // in processing order
    std::vector<int> balance, left;    // per vertex
    long long ee = 0, eo = 0;
    long long nodes_left;

    void dfs(int i, int parity) {
        if (--nodes_left < 0)
            throw budget_error("count_eulerian: node budget exhausted; consider graph_poly_coefficient");
        if (i == m) {
            (parity ? eo : ee) += 1;
            return;
        }
        int t = tail[i], h = head[i];
        --left[t];
        --left[h];
        bool ok = std::abs(balance[t]) <= left[t] && std::abs(balance[h]) <= left[h];
        if (ok) dfs(i + 1, parity);
        ++balance[t];
        --balance[h];
        ok = std::abs(balance[t]) <= left[t] && std::abs(balance[h]) <= left[h];
        if (ok) dfs(i + 1, parity ^ 1);
        --balance[t];
        ++balance[h];
        ++left[t];
        ++left[h];
    }
};

}  // namespace

std::pair<long long, long long> count_eulerian(const Orientation& d, const Budget& budget,
                                               long long& pool) {
    int m = static_cast<int>(d.g.edges.size());
    if (m > budget.max_edges)
        throw budget_error("count_eulerian: " + std::to_string(m) +
                           " edges exceeds cap " + std::to_string(budget.max_edges) +
                           "; consider graph_poly_coefficient");
    EulerCounter c;
    c.m = m;
    c.nodes_left = pool;
    // process arcs grouped by their larger endpoint so low vertices close early
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return d.g.edges[a].second != d.g.edges[b].second
                   ? d.g.edges[a].second < d.g.edges[b].second
                   : d.g.edges[a].first < d.g.edges[b].first;
    });
    for (int i : order) {
        c.tail.push_back(d.tail(i));
        c.head.push_back(d.head(i));
    }
    c.balance.assign(d.g.n, 0);
    c.left.assign(d.g.n, 0);
    for (int i = 0; i < m; ++i) {
        ++c.left[c.tail[i]];
        ++c.left[c.head[i]];
    }
    c.dfs(0, 0);
    pool = c.nodes_left;
    return {c.ee, c.eo};
}

std::pair<long long, long long> count_eulerian(const Orientation& d, const Budget& budget) {
    long long pool = budget.max_nodes;
    return count_eulerian(d, budget, pool);
}

bool verify_certificate(const ATCertificate& cert, std::string* reason, const Budget& budget) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (static_cast<int>(cert.f.size()) != cert.d.g.n) return fail("f size mismatch");
    if (static_cast<int>(cert.d.forward.size()) != static_cast<int>(cert.d.g.edges.size()))
        return fail("direction size mismatch");
    for (int v = 0; v < cert.d.g.n; ++v)
        if (cert.f[v] < cert.d.out_degree(v) + 1) return fail("out-degree cap");
    auto [ee, eo] = count_eulerian(cert.d, budget);
    if (ee != cert.ee || eo != cert.eo) return fail("count mismatch");
    if (ee == eo) return fail("counts equal");
    if (reason) reason->clear();
    return true;
}

}  // namespace atlab
