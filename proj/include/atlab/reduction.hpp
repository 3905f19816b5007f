#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "atlab/blocks.hpp"
#include "atlab/graph.hpp"
#include "atlab/orientation.hpp"

namespace atlab {

// A component T of g - y with its own induced copy and block structure.
struct AuxComponent {
    VSet vertices = 0;           // in host labels
    Graph sub;
    std::vector<int> vertex_of;  // sub -> host
    BlockTree blocks;            // of sub
    VSet wk = 0;                 // vertices of T lying in a K_{k-1}, host labels
};

// Edge of the bipartite graph between y and the components of g - y:
// y is joined to T iff some neighbour of y lies in a K_{k-1} of T.
struct AuxEdge {
    int y = -1;
    int t = -1;           // index into components
    int mult = 0;         // number of g-edges between y and V(T)
    VSet wk_witness = 0;  // the K_{k-1}-covered neighbours of y in T
};

struct AuxBipartite {
    Graph g;
    VSet y = 0;
    int k = 0;
    std::vector<AuxComponent> components;
    std::vector<AuxEdge> edges;  // sorted by (y, t)

    int degree_y(int v) const;
    int degree_t(int t) const;
    // incident edges of multiplicity two
    int heavy_at(int v) const;
};

AuxBipartite build_aux_bipartite(const Graph& g, VSet y, int k);

// Degree floor demanded of the bipartite graph: symmetric wants minimum
// degree 3 on both sides (k >= 7), lopsided wants 4 on the y side and 2 on
// the component side (k >= 5).
enum class MhVariant { symmetric, lopsided };

enum class ComponentType { t1, t2a, t2b, t2c, t3 };

// How many independent attachment edges the type promises: 1, 2 or 3.
int type_size(ComponentType t);

struct ComponentProfile {
    int t = -1;
    ComponentType type = ComponentType::t1;
    std::vector<std::pair<int, int>> u;  // attachment edges (x, y), x in T
    std::vector<size_t> endblocks;       // block indices, saturated first
    std::vector<char> saturated;         // parallel to endblocks
    int heavy_count = 0;                 // multiplicity-two edges meeting u
    bool heavy = false;                  // type_size(type) <= heavy_count
};

// Assigns every component its type and attachment set.  Expects the trimmed
// state: every endblock a K_{k-1} with an attachment into y, and the degree
// floor of the variant; violations name the block or degree.
std::vector<ComponentProfile> classify_components(const AuxBipartite& aux, MhVariant variant);

// One deletion of the non-separating part of a bad endblock, in input labels.
struct TrimStep {
    VSet block = 0;
    VSet removed = 0;
};

struct BArc {
    int y = -1;  // sub label
    int t = -1;  // component index
    bool into_t = false;
};

struct MhReduction {
    VSet kept = 0;               // vertices of the output subgraph, input labels
    Graph sub;
    std::vector<int> vertex_of;  // sub -> input
    // f is d - 1 on the surviving y vertices and d elsewhere
    ATCertificate cert;
    int shortcut_y = -1;  // input label when one y alone forced the subgraph
    std::vector<TrimStep> trim;
    // remaining fields describe the full pipeline in sub labels; empty when
    // the shortcut fired
    std::vector<VSet> component_vertices;
    std::vector<ComponentProfile> profiles;
    std::vector<BArc> b_orientation;
    std::vector<std::pair<int, int>> f_edges;  // chosen attachment edges (x, y)
};

// Certified f-AT induced subgraph for a set y of high vertices, where
//   (1) K_k is not a subgraph,
//   (2) every component of g - y is a Gallai tree with maximum degree
//       at most k - 1 and is not K_k,
//   (3) d(v) <= k - 1 off y,
//   (4) the bipartite graph meets the degree floor of the variant.
// Pipeline: a y with three edges into one component or two multiplicity-two
// edges yields the subgraph on y and its components directly; otherwise bad
// endblocks are trimmed away, components are classified, an orientation of
// the bipartite graph picks the attachment edges, and the excision
// construction finishes.  Internal contradictions raise invariant errors.
MhReduction multiple_high_reduction(const Graph& g, VSet y, int k, MhVariant variant,
                                    const Budget& budget = {});

struct AtReduction {
    VSet vertices = 0;
    Graph sub;
    std::vector<int> vertex_of;
    ATCertificate cert;  // for f(v) = delta(g) + d_sub(v) - d_g(v)
};

// First induced subgraph, by size then lexicographic vertex list, that is
// f-AT for f(v) = delta(g) + d_sub(v) - d_g(v); absent means none exists.
std::optional<AtReduction> find_at_reduction(const Graph& g, int cap = 8,
                                             const Budget& budget = {});

}  // namespace atlab
