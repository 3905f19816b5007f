#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atlab/graph.hpp"

namespace atlab {

using Rational = boost::multiprecision::cpp_rational;

// 1/2 - 1/((k-1)(k-2))
Rational alpha_k(int k);

// (k-1 + (k-3)/((k-c)(k-1) + k-3)) n
Rational g_k(int k, int n, const Rational& c);

// Fixed-point decimal, ties to even: 250/61 at 4 places is "4.0984".
std::string decimal_string(const Rational& x, int places);

// The vertex split by d_G(v) < k and the edge-density functionals over it.
// tau follows the displayed definition with -2/(k-1); tau_plus carries the
// +2/(k-1) per-vertex expansion that the edge-bound proof writes instead.
struct FunctionalReport {
    int k = 0;
    Rational c;
    Rational alpha;
    VSet low_part = 0;
    VSet high_part = 0;
    Rational sigma;     // (k-2+2/(k-1))|L| - 2||L||
    Rational tau;       // 2||H|| + (k-c-2/(k-1)) sum_H (d(y)-k)
    Rational tau_plus;  // 2||H|| + (k-c+2/(k-1)) sum_H (d(y)-k)
    Rational q;         // alpha_k sum over V - W^k of (k-1-d(v))
    Rational g_bound;   // g_k(|G|, c)
};

FunctionalReport bound_functionals(const Graph& g, int k, const Rational& c);

// The "Here" row of the average-degree table: g_k(n, c)/n with
// c = (k-3) alpha_k for k >= 7 and (k-4) alpha_k for k in {5, 6},
// at four decimals for k in {5..10, 15, 20}.
std::map<int, std::string> table1_here_column();

// Greedy peeling: drop any vertex with d(v) <= f(v) until none is left.  The
// residue satisfies d_H(v) > f(v) everywhere and is nonempty whenever
// ||G|| > sum f.
std::optional<VSet> degenerate_subgraph(const Graph& g, const DegreeFunc& f);

// Exact, branch and bound over color classes; n <= 9.
int chromatic_number(const Graph& g);

// chi(G) >= k and every proper subgraph is (k-1)-colorable.  Both vertex-
// and edge-deleted subgraphs are tested; vertex deletions alone would accept
// graphs that keep a redundant edge.
bool is_k_critical(const Graph& g, int k);

// AT(G) >= k and AT(H) < k for every proper induced subgraph; n <= 7.  AT
// never grows when vertices are dropped, so the n maximal subgraphs decide.
bool is_k_at_critical(const Graph& g, int k);

struct SigmaTauAudit {
    FunctionalReport fr;
    Rational hyp_rhs;        // c |H_k(G)|
    Rational lhs, lhs_plus;  // sigma + tau under both tau signs
    bool hypothesis = false;
    bool hypothesis_plus = false;
    Rational edges2;  // 2||G||
    bool conclusion = false;
    bool falsified = false;  // hypothesis holds, conclusion fails
    bool falsified_plus = false;
};

// Audits the implication "sigma + tau >= c|H| forces 2||G|| >= g(n, c)" for
// delta(G) >= 3, k = delta + 1 and 0 <= c <= k - 2/(k-1).
SigmaTauAudit audit_sigma_tau(const Graph& g, int k, const Rational& c);

struct SigmaBoundAudit {
    Rational sigma, q, bound;
    bool clique = false;  // K_{k-1} subgraph present
    bool ok = false;
};

// sigma_k(T) >= 2 + q_k(T) when T holds a K_{k-1}, else >= 2 - alpha_k + q_k(T).
// T must lie in the Gallai class for k.
SigmaBoundAudit audit_sigma_bound(const Graph& t, int k);

enum class ScanMode { at_critical, critical };

struct ScanRecord {
    std::string g6;
    int n = 0, m = 0;
    Rational c;
    Rational lhs;  // 2||G||
    Rational rhs;  // g_k(n, c)
    bool ok = false;
    // corollary for an edgeless high part: sigma against clique-count credit
    bool sigma_checked = false;
    Rational sigma_lhs, sigma_rhs;
    bool sigma_ok = true;
};

struct ScanReport {
    int k = 0;
    int n_max = 0;
    ScanMode mode = ScanMode::at_critical;
    long long considered = 0;
    std::vector<ScanRecord> records;
    int violations = 0;
};

// Sweeps all graphs up to n_max and checks 2||G|| >= g_k(n, c) on those that
// qualify.  at_critical takes the k-AT-critical graphs other than K_k
// (n_max <= 7); critical takes the AT-irreducible graphs with
// delta = k - 1 >= 4 and omega <= delta (n_max <= 8).  Both use
// c = (k-3) alpha_k for k >= 7 and (k-4) alpha_k for k in {5, 6}.  Qualifying
// graphs with delta >= 6, omega <= delta, an edgeless high part and no
// reduction also get the sigma corollary check.
ScanReport scan_edge_bound(int k, int n_max, ScanMode mode);

}  // namespace atlab
