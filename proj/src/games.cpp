#include "atlab/games.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "atlab/enumerate.hpp"
#include "atlab/errors.hpp"

namespace atlab {

namespace {

bool color_dfs(const Graph& g, std::vector<ColorSet>& avail, VSet left, std::vector<int>& pick) {
    if (!left) return true;
    // most-constrained vertex first
    int best = -1, best_count = 65;
    ATLAB_FOR_VSET(v, left) {
        int c = vs_count(avail[v]);
        if (c == 0) return false;
        if (c < best_count) {
            best = v;
            best_count = c;
        }
    }
    ATLAB_FOR_VSET(c, avail[best]) {
        pick[best] = c;
        std::vector<std::pair<int, ColorSet>> undo;
        ATLAB_FOR_VSET(w, g.adj[best] & left) {
            if (vs_has(avail[w], c)) {
                undo.emplace_back(w, avail[w]);
                avail[w] &= ~vs_single(c);
            }
        }
        if (color_dfs(g, avail, left & ~vs_single(best), pick)) return true;
        for (auto& [w, old] : undo) avail[w] = old;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> is_l_colorable(const Graph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.size()) != g.n)
        throw hypothesis_error("is_l_colorable: list count mismatch");
    std::vector<ColorSet> avail = lists;
    std::vector<int> pick(g.n, -1);
    if (!color_dfs(g, avail, vs_all(g.n), pick)) return std::nullopt;
    return pick;
}

namespace {

// Enumerates f-assignments up to color renaming.  Colors are interchangeable
// until some list separates them, so a partial assignment induces a partition
// of the palette into interchange classes and a canonical list takes a prefix
// of each class.
struct ChoosabilitySearch {
    const Graph& g;
    const DegreeFunc& f;
    int palette;
    ListAssignment lists;

    // true iff some assignment extending the first `v` lists is uncolorable
    bool bad_assignment(int v, const std::vector<ColorSet>& classes) {
        Graph prefix = induced(g, vs_all(v));
        ListAssignment sub(lists.begin(), lists.begin() + v);
        if (!is_l_colorable(prefix, sub)) return true;
        if (v == g.n) return false;
        // spread f(v) picks over the interchange classes
        return spread(v, classes, 0, 0);
    }

    bool spread(int v, const std::vector<ColorSet>& classes, size_t ci, ColorSet chosen) {
        int need = f[v] - vs_count(chosen);
        if (need == 0) {
            lists[v] = chosen;
            std::vector<ColorSet> next;
            for (ColorSet cls : classes) {
                if (ColorSet in = cls & chosen) next.push_back(in);
                if (ColorSet out = cls & ~chosen) next.push_back(out);
            }
            bool r = bad_assignment(v + 1, next);
            lists[v] = 0;
            return r;
        }
        if (ci == classes.size()) return false;
        int avail = vs_count(classes[ci]);
        int rest = 0;
        for (size_t j = ci + 1; j < classes.size(); ++j) rest += vs_count(classes[j]);
        // take t colors from this class: the first t, by canonicity
        for (int t = std::min(avail, need); t >= 0; --t) {
            if (need - t > rest) continue;
            ColorSet take = 0;
            ColorSet cls = classes[ci];
            for (int j = 0; j < t; ++j) {
                ColorSet bit = cls & (~cls + 1);
                take |= bit;
                cls &= ~bit;
            }
            if (spread(v, classes, ci + 1, chosen | take)) return true;
        }
        return false;
    }
};

}  // namespace

bool is_f_choosable(const Graph& g, const DegreeFunc& f, int palette_cap) {
    if (static_cast<int>(f.size()) != g.n)
        throw hypothesis_error("is_f_choosable: f size mismatch");
    for (int v = 0; v < g.n; ++v)
        if (f[v] <= 0) return g.n == 0;
    int total = std::accumulate(f.begin(), f.end(), 0);
    if (total > palette_cap)
        throw budget_error("is_f_choosable: palette " + std::to_string(total) + " exceeds cap " +
                           std::to_string(palette_cap));
    // peel vertices that can always be colored last
    Graph cur = g;
    DegreeFunc fc = f;
    for (bool again = true; again && cur.n > 0;) {
        again = false;
        for (int v = 0; v < cur.n; ++v)
            if (fc[v] >= cur.degree(v) + 1) {
                cur = remove_vertex(cur, v);
                fc.erase(fc.begin() + v);
                again = true;
                break;
            }
    }
    if (cur.n == 0) return true;
    int palette = std::accumulate(fc.begin(), fc.end(), 0);
    ChoosabilitySearch s{cur, fc, palette, ListAssignment(cur.n, 0)};
    return !s.bad_assignment(0, {vs_all(palette)});
}

namespace {

struct OnlineGame {
    Graph g;
    std::unordered_map<std::uint64_t, bool> memo;
    std::vector<std::vector<int>> auts;  // vertex permutations, identity first

    static std::uint64_t key(VSet rem, const std::vector<int>& f) {
        std::uint64_t k = rem;
        for (size_t v = 0; v < f.size(); ++v) k |= std::uint64_t(f[v]) << (8 + 4 * v);
        return k;
    }

    std::uint64_t canonical_key(VSet rem, const std::vector<int>& f) const {
        std::uint64_t best = ~std::uint64_t{0};
        std::vector<int> im(f.size());
        for (const auto& p : auts) {
            VSet r2 = 0;
            ATLAB_FOR_VSET(v, rem) r2 |= vs_single(p[v]);
            for (size_t v = 0; v < f.size(); ++v) im[p[v]] = f[v];
            best = std::min(best, key(r2, im));
        }
        return best;
    }

    bool maximal_independent(VSet i, VSet s) const {
        ATLAB_FOR_VSET(v, i)
            if (g.adj[v] & i) return false;
        ATLAB_FOR_VSET(v, s & ~i)
            if (!(g.adj[v] & i)) return false;  // could be added
        return true;
    }

    bool painter_wins(VSet rem, std::vector<int> f) {
        ATLAB_FOR_VSET(v, rem) {
            if (f[v] < 1) return false;
            f[v] = std::min(f[v], vs_count(rem));  // extra tokens can't matter
        }
        if (!rem) return true;
        std::uint64_t k = canonical_key(rem, f);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        bool win = true;
        for (VSet s = rem; s && win; s = (s - 1) & rem) {
            std::vector<int> fs = f;
            ATLAB_FOR_VSET(v, s) --fs[v];
            bool some = false;
            // Painter may restrict attention to maximal independent subsets
            for (VSet i = s; i && !some; i = (i - 1) & s)
                if (maximal_independent(i, s) && painter_wins(rem & ~i, fs)) some = true;
            win = some;
        }
        memo[k] = win;
        return win;
    }
};

}  // namespace

bool is_online_f_choosable(const Graph& g, const DegreeFunc& f, int order_cap) {
    if (static_cast<int>(f.size()) != g.n)
        throw hypothesis_error("is_online_f_choosable: f size mismatch");
    if (g.n > std::min(order_cap, 8))
        throw budget_error("is_online_f_choosable: order " + std::to_string(g.n) +
                           " exceeds cap " + std::to_string(std::min(order_cap, 8)));
    OnlineGame game{g, {}, automorphisms(g)};
    if (game.auts.size() > 64) game.auts.resize(1);  // canonicalizing costs more than it saves
    return game.painter_wins(vs_all(g.n), f);
}

bool compose_online_cut(const Graph& g, VSet h, const DegreeFunc& f, int order_cap) {
    if (static_cast<int>(f.size()) != g.n)
        throw hypothesis_error("compose_online_cut: f size mismatch");
    std::vector<int> of_rest, of_h;
    Graph rest = induced(g, vs_all(g.n) & ~h, &of_rest);
    Graph part = induced(g, h, &of_h);
    DegreeFunc f_rest, f_h;
    for (int v : of_rest) f_rest.push_back(f[v]);
    for (size_t i = 0; i < of_h.size(); ++i) {
        int v = of_h[i];
        f_h.push_back(f[v] + part.degree(static_cast<int>(i)) - g.degree(v));
    }
    return is_online_f_choosable(rest, f_rest, order_cap) &&
           is_online_f_choosable(part, f_h, order_cap);
}

}  // namespace atlab
