#pragma once

#include <variant>
#include <vector>

#include "atlab/graph.hpp"
#include "atlab/orientation.hpp"

namespace atlab {

// Per-vertex sets of favored incident edge instances.
struct IncidencePreference {
    Multigraph g;
    std::vector<std::vector<int>> pref;  // edge indices, per vertex

    bool prefers(int v, int e) const;
    int pref_degree(int v) const;  // d(v, A)
};

// Induced subgraph whose total preference supply cannot meet its demand:
// pref_degree_sum - good_edges < demand.
struct WitnessSubgraph {
    VSet vertices = 0;
    int pref_degree_sum = 0;
    int good_edges = 0;
    int demand = 0;
};

// Orientation with d^-(v, A) >= demand(v) for all v in s, when one exists;
// otherwise a witness subgraph refuting the demands.  Runs the potential
// minimization: repeatedly take the least deficient vertex and reverse a
// preference-respecting path whose endpoint absorbs the loss.
std::variant<Orientation, WitnessSubgraph> solve_in_orientation(const IncidencePreference& a,
                                                                VSet s, const DegreeFunc& demand);

// Certificate with f = d for a connected graph that is not a Gallai tree:
// an even cycle with at most one chord is oriented cyclically and everything
// else cascades away from it.
ATCertificate d0_orientation(const Graph& g);

// Certificate for f = d except f(x) = d(x) - 1 at the shared vertex x of a
// separation {a, b}, provided both sides are connected non-Gallai graphs.
ATCertificate compose_at_cut_vertex(const Graph& g, VSet a, VSet b);

// Joins a certificate for g[h] under f_h(v) = f(v) + d_h(v) - d_g(v) with one
// for g - h under f; crossing edges leave h, so the parity differences
// multiply.
ATCertificate compose_at_split(const Graph& g, VSet h, const DegreeFunc& f,
                               const ATCertificate& cert_h, const ATCertificate& cert_rest);

// Input to the excision construction: f caps, a fixed edge set used by the
// component conditions, and the core vertex set y.
struct ExtensionFrame {
    Multigraph g;
    DegreeFunc f;
    std::vector<int> f_edges;  // indices into g.edges
    VSet y = 0;
};

// Builds an f-AT certificate from a frame satisfying
//   (1) parallel edges only inside g[y],
//   (2) f(v) >= d(v) off y,
//   (3) f(v) >= d_{g[y]}(v) + d_F(v) + 1 on y, where F is the f_edges set,
//   (4) every component T of g - y has closed twins x1, x2 with T - {x1, x2}
//       connected and either both x_i holding a single y-neighbour y_i with
//       y1 != y2 and both edges x_i y_i in F, or x2 having none and x1's
//       single attaching edge in F.
// Each component is excised, replaced by an edge y1 y2 (or charged to y1),
// and unwound with the component oriented away from its twin pair.
// Violations raise errors naming the broken clause.
ATCertificate extend_type_two(const ExtensionFrame& frame, const Budget& budget = {});

// Certificate with f(x) = d(x) - r and f = d elsewhere, for a vertex x over
// Gallai-class components.  Dispatches between the one-component peeling
// argument (r free), the two-component patch at x, and the general form that
// orients spare components away from x (both with r = 1).
ATCertificate extend_type_one(const Graph& g, int x, int k, int r = 1, const Budget& budget = {});

}  // namespace atlab
