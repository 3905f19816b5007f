#pragma once

#include <optional>
#include <vector>

#include "atlab/graph.hpp"

namespace atlab {

// Block-cut decomposition.  Blocks are maximal 2-connected subgraphs, bridges
// (K_2), and isolated vertices; each edge lies in exactly one block.
// Two blocks share at most one vertex, so the vertex masks alone determine
// the edge partition: an edge belongs to the unique block holding both ends.
struct BlockTree {
    std::vector<VSet> blocks;  // vertex mask per block, ordered by least vertex
    VSet cut_vertices = 0;
    std::vector<VSet> incidence;  // incidence[b] = cut vertices inside block b

    bool single_block() const { return blocks.size() <= 1; }
    // A leaf of the block tree: at most one cut vertex (every block qualifies
    // when the graph is a single block).
    bool is_endblock(size_t b) const { return vs_count(incidence[b]) <= 1; }
    // Non-separating vertices of block b: its vertices minus cut vertices.
    VSet nonseparating(size_t b) const { return blocks[b] & ~cut_vertices; }
};

BlockTree block_decomposition(const Graph& g);

// Every block complete or an odd cycle (and g connected).
bool is_gallai_tree(const Graph& g);

// Gallai trees with maximum degree at most k-1, other than K_k.
bool in_gallai_class(const Graph& g, int k);

// Witness that g is not a Gallai tree: an even cycle carrying at most one
// chord, induced apart from that chord.
struct EvenCycleWitness {
    std::vector<int> cycle;                     // vertices in cyclic order
    std::optional<std::pair<int, int>> chord;   // endpoints, if present
};

// Present iff g (connected) is not a Gallai tree.
std::optional<EvenCycleWitness> find_even_cycle_one_chord(const Graph& g);

}  // namespace atlab
