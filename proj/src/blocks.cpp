#include "atlab/blocks.hpp"

#include <algorithm>

namespace atlab {

namespace {

struct BlockDfs {
    const Graph& g;
    std::vector<int> num, low;
    int clock = 0;
    std::vector<std::pair<int, int>> stack;  // edge stack
    std::vector<VSet> blocks;
    VSet cut = 0;

    explicit BlockDfs(const Graph& g) : g(g), num(g.n, -1), low(g.n, 0) {}

    void pop_block(std::pair<int, int> until) {
        VSet verts = 0;
        for (;;) {
            auto e = stack.back();
            stack.pop_back();
            verts |= vs_single(e.first) | vs_single(e.second);
            if (e == until) break;
        }
        blocks.push_back(verts);
    }

    void dfs(int v, int parent) {
        bool is_root = parent < 0;
        num[v] = low[v] = clock++;
        int children = 0;
        ATLAB_FOR_VSET(w, g.adj[v]) {
            if (w == parent) {
                parent = -1;  // skip the tree edge once; parallel edges don't exist here
                continue;
            }
            if (num[w] == -1) {
                stack.push_back({v, w});
                ++children;
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    if (!is_root || children > 1) cut |= vs_single(v);
                    pop_block({v, w});
                }
            } else if (num[w] < num[v]) {
                stack.push_back({v, w});
                low[v] = std::min(low[v], num[w]);
            }
        }
    }
};

}  // namespace

BlockTree block_decomposition(const Graph& g) {
    BlockDfs dfs(g);
    for (int v = 0; v < g.n; ++v)
        if (dfs.num[v] == -1) {
            dfs.dfs(v, -1);
            if (g.degree(v) == 0) dfs.blocks.push_back(vs_single(v));
        }
    BlockTree t;
    t.blocks = std::move(dfs.blocks);
    std::sort(t.blocks.begin(), t.blocks.end(),
              [](VSet a, VSet b) { return vs_min(a) != vs_min(b) ? vs_min(a) < vs_min(b) : a < b; });
    t.cut_vertices = dfs.cut;
    t.incidence.reserve(t.blocks.size());
    for (VSet b : t.blocks) t.incidence.push_back(b & t.cut_vertices);
    return t;
}

namespace {

bool block_ok_for_gallai(const Graph& g, VSet block) {
    int k = vs_count(block);
    int twice_edges = 0;
    bool complete = true, two_regular = true;
    ATLAB_FOR_VSET(v, block) {
        int d = vs_count(g.adj[v] & block);
        twice_edges += d;
        complete &= d == k - 1;
        two_regular &= d == 2;
    }
    if (complete) return true;
    return two_regular && twice_edges == 2 * k && k % 2 == 1;
}

}  // namespace

bool is_gallai_tree(const Graph& g) {
    if (g.n == 0 || !connected(g)) return false;
    for (VSet b : block_decomposition(g).blocks)
        if (!block_ok_for_gallai(g, b)) return false;
    return true;
}

bool in_gallai_class(const Graph& g, int k) {
    if (!is_gallai_tree(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > k - 1) return false;
    return !(g.n == k && is_complete(g));
}

namespace {

// Bounded DFS for an even cycle of exactly `len` vertices whose vertex set
// spans at most one extra edge.  Cycles are rooted at their least vertex.
struct CycleDfs {
    const Graph& g;
    int len;
    std::vector<int> path;
    VSet on_path = 0;
    int chords = 0;
    std::pair<int, int> chord{-1, -1};

    CycleDfs(const Graph& g, int len) : g(g), len(len) {}

    bool extend() {
        int k = static_cast<int>(path.size());
        int root = path[0], last = path.back();
        if (k == len) {
            return g.has_edge(last, root);
        }
        ATLAB_FOR_VSET(w, g.adj[last] & ~vs_all(root + 1) & ~on_path) {
            // New adjacencies into the path become chords, except the edge to
            // the predecessor and, for the final vertex, the closing edge.
            VSet back = g.adj[w] & on_path & ~vs_single(last);
            if (k + 1 == len && g.has_edge(w, root)) back &= ~vs_single(root);
            int added = vs_count(back);
            if (chords + added > 1) continue;
            chords += added;
            if (added == 1) chord = {vs_min(back), w};
            path.push_back(w);
            on_path |= vs_single(w);
            if (extend()) return true;
            on_path &= ~vs_single(w);
            path.pop_back();
            chords -= added;
        }
        return false;
    }
};

}  // namespace

std::optional<EvenCycleWitness> find_even_cycle_one_chord(const Graph& g) {
    for (int len = 4; len <= g.n; len += 2)
        for (int root = 0; root + len <= g.n; ++root) {
            CycleDfs dfs(g, len);
            dfs.path = {root};
            dfs.on_path = vs_single(root);
            if (dfs.extend()) {
                EvenCycleWitness w;
                w.cycle = dfs.path;
                if (dfs.chords == 1) w.chord = dfs.chord;
                return w;
            }
        }
    return std::nullopt;
}

}  // namespace atlab
