#include "atlab/at_solver.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "atlab/errors.hpp"

namespace atlab {

namespace {

struct AtSearch {
    const Budget& budget;
    Orientation d;
    std::vector<int> cap;   // f - 1, per vertex
    std::vector<int> out;
    int slack;              // total unused capacity
    long long pool;
    bool packed = false;    // out-degree vectors fit 4 bits per vertex
    std::unordered_set<std::uint64_t> zero_packed;
    std::set<std::vector<int>> zero_classes;
    std::optional<ATCertificate> hit;

    std::uint64_t pack() const {
        std::uint64_t k = 0;
        for (size_t v = 0; v < out.size(); ++v) k |= static_cast<std::uint64_t>(out[v]) << (4 * v);
        return k;
    }

    // The parity difference only depends on the out-degree vector, so a vector
    // once seen to cancel refutes every later orientation sharing it.
    bool leaf() {
        if (packed) {
            std::uint64_t k = pack();
            if (zero_packed.count(k)) return false;
            auto [ee, eo] = count_eulerian(d, budget, pool);
            if (ee != eo) {
                hit = ATCertificate{d, {}, ee, eo};
                return true;
            }
            zero_packed.insert(k);
            return false;
        }
        if (zero_classes.count(out)) return false;
        auto [ee, eo] = count_eulerian(d, budget, pool);
        if (ee != eo) {
            hit = ATCertificate{d, {}, ee, eo};
            return true;
        }
        zero_classes.insert(out);
        return false;
    }

    bool dfs(int i) {
        if (--pool < 0) throw budget_error("is_f_at: node budget exhausted");
        int m = static_cast<int>(d.g.edges.size());
        if (slack < m - i) return false;
        if (i == m) return leaf();
        for (int fwd : {1, 0}) {
            d.forward[i] = static_cast<std::uint8_t>(fwd);
            int t = d.tail(i);
            if (out[t] < cap[t]) {
                ++out[t];
                --slack;
                if (dfs(i + 1)) return true;
                --out[t];
                ++slack;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<ATCertificate> is_f_at(const Multigraph& g, const DegreeFunc& f,
                                     const Budget& budget) {
    if (static_cast<int>(f.size()) != g.n)
        throw hypothesis_error("is_f_at: f size mismatch");
    int m = static_cast<int>(g.edges.size());
    if (m > budget.max_edges)
        throw budget_error("is_f_at: " + std::to_string(m) + " edges exceeds cap " +
                           std::to_string(budget.max_edges));
    AtSearch s{budget, Orientation(g), {}, std::vector<int>(g.n, 0), 0, budget.max_nodes};
    s.cap.reserve(g.n);
    for (int v = 0; v < g.n; ++v) {
        int c = f[v] - 1;
        if (c < 0) return std::nullopt;
        s.cap.push_back(c);
        s.slack += c;
    }
    s.packed = g.n <= 16 && std::all_of(s.cap.begin(), s.cap.end(), [](int c) { return c <= 15; });
    if (s.slack < m) return std::nullopt;
    if (!s.dfs(0)) return std::nullopt;
    s.hit->f = f;
    return s.hit;
}

std::optional<ATCertificate> is_f_at(const Graph& g, const DegreeFunc& f, const Budget& budget) {
    return is_f_at(Multigraph::of(g), f, budget);
}

int at_number(const Graph& g, const Budget& budget) {
    for (int k = 1;; ++k)
        if (is_f_at(g, constant_func(g.n, k), budget)) return k;
}

bool AtProfile::admits(const DegreeFunc& f) const {
    for (const auto& e : minimal) {
        bool ok = true;
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v] > f[v] - 1) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

AtProfile at_profile(const Graph& g, const Budget& budget) {
    Multigraph mg = Multigraph::of(g);
    int m = static_cast<int>(mg.edges.size());
    if (m > budget.max_edges)
        throw budget_error("at_profile: " + std::to_string(m) + " edges exceeds cap " +
                           std::to_string(budget.max_edges));
    long long pool = budget.max_nodes;
    Orientation d(mg);
    std::vector<int> out(g.n, 0);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> good;

    auto rec = [&](auto&& self, int i) -> void {
        if (--pool < 0) throw budget_error("at_profile: node budget exhausted");
        if (i == m) {
            if (!seen.insert(out).second) return;
            auto [ee, eo] = count_eulerian(d, budget, pool);
            if (ee != eo) good.push_back(out);
            return;
        }
        for (int fwd : {1, 0}) {
            d.forward[i] = static_cast<std::uint8_t>(fwd);
            int t = d.tail(i);
            ++out[t];
            self(self, i + 1);
            --out[t];
        }
    };
    rec(rec, 0);

    AtProfile p;
    for (const auto& e : good) {
        bool dominated = false;
        for (const auto& o : good)
            if (&o != &e) {
                bool le = true, lt = false;
                for (int v = 0; v < g.n; ++v) {
                    if (o[v] > e[v]) le = false;
                    if (o[v] < e[v]) lt = true;
                }
                if (le && lt) {
                    dominated = true;
                    break;
                }
            }
        if (!dominated) p.minimal.push_back(e);
    }
    std::sort(p.minimal.begin(), p.minimal.end());
    return p;
}

}  // namespace atlab
