#include "atlab/bounds.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "atlab/at_solver.hpp"
#include "atlab/blocks.hpp"
#include "atlab/enumerate.hpp"
#include "atlab/errors.hpp"
#include "atlab/graph6.hpp"
#include "atlab/orientation.hpp"
#include "atlab/reduction.hpp"

namespace atlab {

namespace {

using Int = boost::multiprecision::cpp_int;

int edges_inside(const Graph& g, VSet s) {
    int twice = 0;
    ATLAB_FOR_VSET(v, s) twice += vs_count(g.adj[v] & s);
    return twice / 2;
}

int min_degree(const Graph& g) {
    int best = g.n;
    for (int v = 0; v < g.n; ++v) best = std::min(best, g.degree(v));
    return best;
}

struct Colorer {
    const Graph& g;
    const std::vector<int>& order;
    int limit;
    std::vector<int> color;

    bool go(size_t idx, int used) {
        if (idx == order.size()) return true;
        const int v = order[idx];
        const int top = std::min(limit - 1, used);
        for (int c = 0; c <= top; ++c) {
            bool clash = false;
            ATLAB_FOR_VSET(u, g.adj[v]) {
                if (color[u] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            color[v] = c;
            if (go(idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    }
};

int at_number_memo(const Graph& g) {
    static std::map<std::uint64_t, int> cache;
    static std::mutex lock;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(g.n) << 48) | canonical_code(g);
    {
        std::scoped_lock hold(lock);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const int value = at_number(g);
    std::scoped_lock hold(lock);
    cache.emplace(key, value);
    return value;
}

}  // namespace

Rational alpha_k(int k) {
    if (k < 4) throw hypothesis_error("alpha_k: k = " + std::to_string(k) +
                                      " is below 4");
    return Rational(1, 2) - Rational(1, (k - 1) * (k - 2));
}

Rational g_k(int k, int n, const Rational& c) {
    const Rational denom = (Rational(k) - c) * (k - 1) + (k - 3);
    if (denom == 0) throw hypothesis_error("g_k: the density denominator vanishes");
    return (Rational(k - 1) + Rational(k - 3) / denom) * n;
}

std::string decimal_string(const Rational& x, int places) {
    Int pow10 = 1;
    for (int i = 0; i < places; ++i) pow10 *= 10;
    const Rational scaled = x * pow10;
    Int p = numerator(scaled);
    const Int q = denominator(scaled);
    const bool neg = p < 0;
    if (neg) p = -p;
    Int whole = p / q;
    const Int twice_rem = (p % q) * 2;
    if (twice_rem > q || (twice_rem == q && whole % 2 != 0)) ++whole;
    std::string digits = whole.str();
    while (static_cast<int>(digits.size()) <= places)
        digits.insert(digits.begin(), '0');
    std::string out = digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    if (neg && whole != 0) out.insert(out.begin(), '-');
    return out;
}

FunctionalReport bound_functionals(const Graph& g, int k, const Rational& c) {
    if (k < 4) throw hypothesis_error("bound_functionals: k = " +
                                      std::to_string(k) + " is below 4");
    FunctionalReport r;
    r.k = k;
    r.c = c;
    r.alpha = alpha_k(k);
    for (int v = 0; v < g.n; ++v)
        (g.degree(v) < k ? r.low_part : r.high_part) |= vs_single(v);

    const Rational two_k1(2, k - 1);
    r.sigma = (Rational(k - 2) + two_k1) * vs_count(r.low_part) -
              2 * edges_inside(g, r.low_part);

    Rational excess = 0;
    ATLAB_FOR_VSET(y, r.high_part) excess += g.degree(y) - k;
    const Rational high2 = 2 * edges_inside(g, r.high_part);
    r.tau = high2 + (Rational(k) - c - two_k1) * excess;
    r.tau_plus = high2 + (Rational(k) - c + two_k1) * excess;

    Rational defect = 0;
    ATLAB_FOR_VSET(v, vs_all(g.n) & ~w_k_vertices(g, k))
        defect += (k - 1) - g.degree(v);
    r.q = r.alpha * defect;

    r.g_bound = g_k(k, g.n, c);
    return r;
}

std::map<int, std::string> table1_here_column() {
    std::map<int, std::string> out;
    for (int k : {5, 6, 7, 8, 9, 10, 15, 20}) {
        const Rational c = (k >= 7 ? k - 3 : k - 4) * alpha_k(k);
        out[k] = decimal_string(g_k(k, 1, c), 4);
    }
    return out;
}

std::optional<VSet> degenerate_subgraph(const Graph& g, const DegreeFunc& f) {
    if (static_cast<int>(f.size()) != g.n)
        throw hypothesis_error("degenerate_subgraph: f has " +
                               std::to_string(f.size()) + " values for " +
                               std::to_string(g.n) + " vertices");
    VSet live = vs_all(g.n);
    bool peeled = true;
    while (peeled) {
        peeled = false;
        ATLAB_FOR_VSET(v, live) {
            if (vs_count(g.adj[v] & live) <= f[v]) {
                live &= ~vs_single(v);
                peeled = true;
            }
        }
    }
    if (!live) return std::nullopt;
    return live;
}

int chromatic_number(const Graph& g) {
    if (g.n > 9) throw budget_error("chromatic_number: " + std::to_string(g.n) +
                                    " vertices exceeds cap 9");
    if (g.n == 0) return 0;
    if (g.size() == 0) return 1;
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(-g.degree(a), a) < std::pair(-g.degree(b), b);
    });
    for (int k = clique_number(g);; ++k) {
        Colorer c{g, order, k, std::vector<int>(g.n, -1)};
        if (c.go(0, 0)) return k;
    }
}

bool is_k_critical(const Graph& g, int k) {
    if (chromatic_number(g) < k) return false;
    for (int v = 0; v < g.n; ++v)
        if (chromatic_number(remove_vertex(g, v)) >= k) return false;
    for (auto [u, v] : g.edges()) {
        Graph h = g;
        h.adj[u] &= ~vs_single(v);
        h.adj[v] &= ~vs_single(u);
        if (chromatic_number(h) >= k) return false;
    }
    return true;
}

bool is_k_at_critical(const Graph& g, int k) {
    if (g.n > 7) throw budget_error("is_k_at_critical: " + std::to_string(g.n) +
                                    " vertices exceeds cap 7");
    if (g.n == 0) return false;
    if (at_number_memo(g) < k) return false;
    // AT is monotone under taking subgraphs, so the n maximal proper induced
    // subgraphs decide for all of them.
    for (int v = 0; v < g.n; ++v) {
        const Graph h = remove_vertex(g, v);
        const int sub = h.n == 0 ? 0 : at_number_memo(h);
        if (sub >= k) return false;
    }
    return true;
}

SigmaTauAudit audit_sigma_tau(const Graph& g, int k, const Rational& c) {
    if (g.n == 0) throw hypothesis_error("audit_sigma_tau: the graph is empty");
    const int delta = min_degree(g);
    if (delta < 3)
        throw hypothesis_error("audit_sigma_tau: minimum degree " +
                               std::to_string(delta) + " is below 3");
    if (k != delta + 1)
        throw hypothesis_error("audit_sigma_tau: k = " + std::to_string(k) +
                               " must be delta + 1 = " +
                               std::to_string(delta + 1));
    if (c < 0 || c > Rational(delta + 1) - Rational(2, delta))
        throw hypothesis_error("audit_sigma_tau: c is outside [0, delta + 1 - 2/delta]");

    SigmaTauAudit a;
    a.fr = bound_functionals(g, k, c);
    a.hyp_rhs = c * vs_count(a.fr.high_part);
    a.lhs = a.fr.sigma + a.fr.tau;
    a.lhs_plus = a.fr.sigma + a.fr.tau_plus;
    a.hypothesis = a.lhs >= a.hyp_rhs;
    a.hypothesis_plus = a.lhs_plus >= a.hyp_rhs;
    a.edges2 = 2 * g.size();
    a.conclusion = a.edges2 >= a.fr.g_bound;
    a.falsified = a.hypothesis && !a.conclusion;
    a.falsified_plus = a.hypothesis_plus && !a.conclusion;
    return a;
}

SigmaBoundAudit audit_sigma_bound(const Graph& t, int k) {
    if (!in_gallai_class(t, k))
        throw hypothesis_error("audit_sigma_bound: the graph is not in the Gallai class for k = " +
                               std::to_string(k));
    const FunctionalReport fr = bound_functionals(t, k, 0);
    SigmaBoundAudit a;
    a.sigma = fr.sigma;
    a.q = fr.q;
    a.clique = has_clique(t, k - 1);
    a.bound = a.clique ? Rational(2) + a.q : Rational(2) - fr.alpha + a.q;
    a.ok = a.sigma >= a.bound;
    return a;
}

ScanReport scan_edge_bound(int k, int n_max, ScanMode mode) {
    if (k < 5) throw hypothesis_error("scan_edge_bound: k = " +
                                      std::to_string(k) + " is below 5");
    const int cap = mode == ScanMode::at_critical ? 7 : 8;
    if (n_max > cap)
        throw budget_error("scan_edge_bound: n_max " + std::to_string(n_max) +
                           " exceeds cap " + std::to_string(cap));
    const Budget wide{32, 4'000'000'000};
    ScanReport rep;
    rep.k = k;
    rep.n_max = n_max;
    rep.mode = mode;
    const Rational c = (k >= 7 ? k - 3 : k - 4) * alpha_k(k);
    for (int n = 1; n <= n_max; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            ++rep.considered;
            const int delta = min_degree(g);
            bool irreducible_known = false;
            if (mode == ScanMode::at_critical) {
                if (n == k && is_complete(g)) continue;
                if (!is_k_at_critical(g, k)) continue;
            } else {
                if (delta != k - 1 || clique_number(g) > delta) continue;
                if (find_at_reduction(g, 8, wide)) continue;
                irreducible_known = true;
            }
            ScanRecord rec;
            rec.g6 = to_graph6(g);
            rec.n = n;
            rec.m = g.size();
            rec.c = c;
            rec.lhs = 2 * rec.m;
            rec.rhs = g_k(k, n, c);
            rec.ok = rec.lhs >= rec.rhs;
            if (!rec.ok) ++rep.violations;
            if (delta >= 6 && clique_number(g) <= delta) {
                const FunctionalReport fr = bound_functionals(g, delta + 1, 0);
                if (edges_inside(g, fr.high_part) == 0 &&
                    (irreducible_known || !find_at_reduction(g, 8, wide))) {
                    rec.sigma_checked = true;
                    rec.sigma_lhs = fr.sigma;
                    rec.sigma_rhs =
                        (delta - 2) * fr.alpha * vs_count(fr.high_part) +
                        2 * (1 - fr.alpha) *
                            static_cast<int>(components_in(g, fr.low_part).size());
                    rec.sigma_ok = rec.sigma_lhs >= rec.sigma_rhs;
                    if (!rec.sigma_ok) ++rep.violations;
                }
            }
            rep.records.push_back(std::move(rec));
        }
    }
    return rep;
}

}  // namespace atlab
