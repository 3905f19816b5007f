#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atlab/graph.hpp"

namespace atlab {

// Caps for the exponential-time searches.  max_nodes is shared between an
// orientation search and the parity counts it triggers.
struct Budget {
    int max_edges = 24;
    long long max_nodes = 50'000'000;
};

// An orientation of a multigraph.  Edge i runs first->second when forward[i],
// else second->first.
struct Orientation {
    Multigraph g;
    std::vector<std::uint8_t> forward;

    Orientation() = default;
    explicit Orientation(Multigraph m)
        : g(std::move(m)), forward(g.edges.size(), 1) {}

    int tail(int i) const { return forward[i] ? g.edges[i].first : g.edges[i].second; }
    int head(int i) const { return forward[i] ? g.edges[i].second : g.edges[i].first; }

    int out_degree(int v) const {
        int d = 0;
        for (size_t i = 0; i < g.edges.size(); ++i) d += tail(static_cast<int>(i)) == v;
        return d;
    }
    std::vector<int> out_degrees() const {
        std::vector<int> d(g.n, 0);
        for (size_t i = 0; i < g.edges.size(); ++i) ++d[tail(static_cast<int>(i))];
        return d;
    }
    int in_degree(int v) const { return g.degree(v) - out_degree(v); }

    bool acyclic() const;
};

// Orient every edge from its smaller label to its larger.
Orientation lexicographic_orientation(const Multigraph& m);

// (even, odd) counts of spanning Eulerian sub-digraphs: arc subsets with
// in-degree = out-degree at every vertex.  The empty subset counts as even,
// so the first component is always >= 1.
std::pair<long long, long long> count_eulerian(const Orientation& d, const Budget& budget = {});

// Variant drawing nodes from a caller-owned pool, so a search can share one
// budget across many counts.
std::pair<long long, long long> count_eulerian(const Orientation& d, const Budget& budget,
                                               long long& pool);

struct ATCertificate {
    Orientation d;
    DegreeFunc f;
    long long ee = 0;
    long long eo = 0;
};

// Recomputes the parity counts and rechecks the out-degree caps.  On failure
// *reason names the first broken invariant.
bool verify_certificate(const ATCertificate& cert, std::string* reason = nullptr,
                        const Budget& budget = {});

}  // namespace atlab
