#pragma once

#include <optional>
#include <vector>

#include "atlab/orientation.hpp"

namespace atlab {

// Searches for an orientation with out-degree < f everywhere whose even and
// odd Eulerian-subgraph counts differ.  Directions are tried edge by edge in
// stored order, smaller-to-larger first, so a hit is the lexicographically
// least such orientation.  Orientations sharing an out-degree vector share
// |ee - eo|, so each vector is counted once.
std::optional<ATCertificate> is_f_at(const Multigraph& g, const DegreeFunc& f,
                                     const Budget& budget = {});
std::optional<ATCertificate> is_f_at(const Graph& g, const DegreeFunc& f,
                                     const Budget& budget = {});

// Least k such that the graph is f-AT for the constant function k.
int at_number(const Graph& g, const Budget& budget = {});

// All pointwise-minimal out-degree vectors of orientations with differing
// parity counts.  One full sweep answers every f-AT query for the graph.
struct AtProfile {
    std::vector<std::vector<int>> minimal;
    bool admits(const DegreeFunc& f) const;
};
AtProfile at_profile(const Graph& g, const Budget& budget = {});

}  // namespace atlab
