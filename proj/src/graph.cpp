#include "atlab/graph.hpp"

#include <algorithm>

namespace atlab {

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        ATLAB_FOR_VSET(v, adj[u] & ~vs_all(u + 1)) out.emplace_back(u, v);
    return out;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

int Multigraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    int c = 0;
    for (auto e : edges) c += (e.first == u && e.second == v);
    return c;
}

bool Multigraph::simple() const {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Graph Multigraph::support() const {
    Graph g(n);
    for (auto [u, v] : edges)
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

DegreeFunc constant_func(int n, int value) { return DegreeFunc(n, value); }

DegreeFunc degree_func(const Graph& g) {
    DegreeFunc f(g.n);
    for (int v = 0; v < g.n; ++v) f[v] = g.degree(v);
    return f;
}

bool connected_in(const Graph& g, VSet inside) {
    if (inside == 0) return false;
    VSet seen = vs_single(vs_min(inside));
    for (;;) {
        VSet grow = seen;
        ATLAB_FOR_VSET(v, seen) grow |= g.adj[v] & inside;
        if (grow == seen) break;
        seen = grow;
    }
    return seen == inside;
}

std::vector<VSet> components_in(const Graph& g, VSet inside) {
    std::vector<VSet> out;
    VSet left = inside;
    while (left) {
        VSet comp = vs_single(vs_min(left));
        for (;;) {
            VSet grow = comp;
            ATLAB_FOR_VSET(v, comp) grow |= g.adj[v] & inside;
            if (grow == comp) break;
            comp = grow;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

Graph induced(const Graph& g, VSet keep, std::vector<int>* vertex_of) {
    std::vector<int> old_of;
    ATLAB_FOR_VSET(v, keep) old_of.push_back(v);
    Graph h(static_cast<int>(old_of.size()));
    for (int i = 0; i < h.n; ++i)
        for (int j = i + 1; j < h.n; ++j)
            if (g.has_edge(old_of[i], old_of[j])) h.add_edge(i, j);
    if (vertex_of) *vertex_of = std::move(old_of);
    return h;
}

Graph remove_vertex(const Graph& g, int v, std::vector<int>* vertex_of) {
    return induced(g, vs_all(g.n) & ~vs_single(v), vertex_of);
}

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != g.n - 1) return false;
    return true;
}

namespace {

// Classic max-clique branch and bound over candidate masks.
void clique_extend(const Graph& g, VSet cand, int depth, int& best) {
    if (depth + vs_count(cand) <= best) return;
    while (cand) {
        if (depth + vs_count(cand) <= best) return;
        int v = vs_min(cand);
        cand &= cand - 1;
        clique_extend(g, cand & g.adj[v], depth + 1, best);
        if (depth + 1 > best) best = depth + 1;
    }
}

}  // namespace

int clique_number(const Graph& g) {
    int best = 0;
    clique_extend(g, vs_all(g.n), 0, best);
    return best;
}

bool has_clique(const Graph& g, int k) {
    if (k <= 0) return true;
    if (k > g.n) return false;
    return clique_number(g) >= k;
}

VSet w_k_vertices(const Graph& g, int k) {
    VSet out = 0;
    if (k - 1 <= 0) return vs_all(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) < k - 2) continue;
        int best = 0;
        clique_extend(g, g.adj[v], 1, best);
        if (best >= k - 1) out |= vs_single(v);
    }
    return out;
}

int degeneracy(const Graph& g) {
    VSet left = vs_all(g.n);
    int worst = 0;
    while (left) {
        int pick = -1, dmin = 65;
        ATLAB_FOR_VSET(v, left) {
            int d = vs_count(g.adj[v] & left);
            if (d < dmin) dmin = d, pick = v;
        }
        worst = std::max(worst, dmin);
        left &= ~vs_single(pick);
    }
    return worst;
}

}  // namespace atlab
