#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "atlab/errors.hpp"

namespace atlab {

// Vertex sets are bitmasks; vertices are 0-based and graphs are capped at 64
// vertices, which is far beyond every search cap in this toolkit.
using VSet = std::uint64_t;

inline bool vs_has(VSet s, int v) { return (s >> v) & 1u; }
inline VSet vs_single(int v) { return VSet{1} << v; }
inline VSet vs_all(int n) { return n == 64 ? ~VSet{0} : (VSet{1} << n) - 1; }
inline int vs_count(VSet s) { return __builtin_popcountll(s); }
inline int vs_min(VSet s) { return __builtin_ctzll(s); }

// Iterates v over the set bits of s in ascending order.
#define ATLAB_FOR_VSET(v, s)                                              \
    for (atlab::VSet _rest = (s); _rest; _rest &= _rest - 1)              \
        if (const int v = atlab::vs_min(_rest); true)

// Simple undirected graph on labelled vertices with bitmask adjacency rows.
struct Graph {
    int n = 0;
    std::vector<VSet> adj;

    Graph() = default;
    explicit Graph(int order) : n(order), adj(order, 0) {
        if (order < 0 || order > 64) throw budget_error("graph order must be in [0, 64]");
    }

    void add_edge(int u, int v) {
        if (u == v) throw parse_error("loop edge rejected");
        adj[u] |= vs_single(v);
        adj[v] |= vs_single(u);
    }
    bool has_edge(int u, int v) const { return vs_has(adj[u], v); }
    int degree(int v) const { return vs_count(adj[v]); }
    VSet neighbors(int v) const { return adj[v]; }

    int order() const { return n; }
    int size() const;  // edge count

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;
};

// Undirected multigraph: explicit edge list, parallel edges allowed, no loops.
// Edge identity (the index into `edges`) matters to orientations.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // each stored with first < second

    Multigraph() = default;
    explicit Multigraph(int order) : n(order) {
        if (order < 0 || order > 64) throw budget_error("graph order must be in [0, 64]");
    }
    static Multigraph of(const Graph& g) {
        Multigraph m(g.n);
        m.edges = g.edges();
        return m;
    }

    int add_edge(int u, int v) {
        if (u == v) throw parse_error("loop edge rejected");
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
        return static_cast<int>(edges.size()) - 1;
    }
    int order() const { return n; }
    int size() const { return static_cast<int>(edges.size()); }
    int degree(int v) const;
    int multiplicity(int u, int v) const;
    // True if every parallel class has size one.
    bool simple() const;
    // Underlying simple graph (parallel edges collapsed).
    Graph support() const;
};

// Per-vertex integer function (degree bounds, list sizes, demands).
using DegreeFunc = std::vector<int>;

DegreeFunc constant_func(int n, int value);
DegreeFunc degree_func(const Graph& g);  // f = d_G

// Connectivity over an explicit vertex subset (must be nonempty for true).
bool connected_in(const Graph& g, VSet inside);
inline bool connected(const Graph& g) { return g.n == 0 || connected_in(g, vs_all(g.n)); }

// Connected components of g[inside], each a vertex mask, ordered by least vertex.
std::vector<VSet> components_in(const Graph& g, VSet inside);
inline std::vector<VSet> components(const Graph& g) { return components_in(g, vs_all(g.n)); }

// Induced subgraph.  vertex_of[i] gives the old label of new vertex i
// (ascending); the inverse map sends old labels to new ones, -1 outside.
Graph induced(const Graph& g, VSet keep, std::vector<int>* vertex_of = nullptr);
Graph remove_vertex(const Graph& g, int v, std::vector<int>* vertex_of = nullptr);

bool is_complete(const Graph& g);
// Largest clique order (branch and bound; fine at tool scale).
int clique_number(const Graph& g);
// True if g contains K_k as a subgraph.
bool has_clique(const Graph& g, int k);
// Vertices lying in at least one K_{k-1}, as a mask.
VSet w_k_vertices(const Graph& g, int k);

// Smallest max-degree over elimination orderings; peel order is by minimum
// degree with ties to the smallest label.
int degeneracy(const Graph& g);

}  // namespace atlab
