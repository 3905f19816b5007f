#pragma once

#include <cstdint>
#include <vector>

#include "atlab/graph.hpp"

namespace atlab {

// Least adjacency bit string over all vertex orderings (row i holds the new
// vertex's adjacency to earlier ones, most significant first).  At most 64
// vertices' worth of bits fit for n <= 11; enumeration caps keep n <= 8.
std::uint64_t canonical_code(const Graph& g);

Graph graph_of_code(int n, std::uint64_t code);

bool isomorphic(const Graph& a, const Graph& b);

// All automorphisms of g as permutation vectors (identity first).
std::vector<std::vector<int>> automorphisms(const Graph& g);

// One representative per isomorphism class on exactly n vertices, ordered by
// canonical code.  Deterministic; results for each n are cached per process.
const std::vector<Graph>& enumerate_graphs(int n, int cap = 8);

// Connected members of the Gallai class for k (max degree <= k-1, not K_k)
// on 1..n vertices, smaller orders first.
std::vector<Graph> enumerate_gallai_trees(int n, int k, int cap = 8);

}  // namespace atlab
