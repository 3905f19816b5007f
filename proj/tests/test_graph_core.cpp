#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "atlab/blocks.hpp"
#include "atlab/enumerate.hpp"
#include "atlab/graph.hpp"
#include "atlab/graph6.hpp"
#include "test_util.hpp"

using namespace atlab;
using namespace testutil;

// ---------------------------------------------------------------------------
// oracles

// Isomorphism class count by direct orbit minimization over all vertex
// permutations of labeled edge masks.  Independent of canonical_code.
static int labeled_class_count(int n) {
    int bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::set<std::uint32_t> reps;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        std::uint32_t best = ~0u;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::uint32_t img = 0;
            for (int b = 0; b < bits; ++b)
                if ((mask >> b) & 1) {
                    int u = perm[pairs[b].first], v = perm[pairs[b].second];
                    if (u > v) std::swap(u, v);
                    for (int b2 = 0; b2 < bits; ++b2)
                        if (pairs[b2] == std::pair<int, int>{u, v}) img |= 1u << b2;
                }
            best = std::min(best, img);
        } while (std::next_permutation(perm.begin(), perm.end()));
        reps.insert(best);
    }
    return static_cast<int>(reps.size());
}

// Block structure by first principles: cut vertices from component counts of
// G - v, blocks by merging edges that share a simple cycle.
struct BlockOracle {
    std::vector<std::set<std::pair<int, int>>> blocks;
    VSet cut = 0;
};

static void oracle_cycles(const Graph& g, std::vector<int>& path, VSet on_path,
                          std::vector<std::vector<int>>& out) {
    int root = path[0], last = path.back();
    if (path.size() >= 3 && g.has_edge(last, root)) out.push_back(path);
    ATLAB_FOR_VSET(w, g.adj[last] & ~vs_all(root + 1) & ~on_path) {
        path.push_back(w);
        oracle_cycles(g, path, on_path | vs_single(w), out);
        path.pop_back();
    }
}

static BlockOracle block_oracle(const Graph& g) {
    BlockOracle res;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == 0) continue;
        VSet rest = vs_all(g.n) & ~vs_single(v);
        if (components_in(g, rest).size() > components(g).size()) res.cut |= vs_single(v);
    }
    auto es = g.edges();
    std::map<std::pair<int, int>, int> comp;
    for (size_t i = 0; i < es.size(); ++i) comp[es[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    for (int r = 0; r < g.n; ++r) {
        path = {r};
        oracle_cycles(g, path, vs_single(r), cycles);
    }
    // union-find over edge indices: edges on a common cycle share a block
    std::vector<int> parent(es.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    auto eid = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return comp[{u, v}];
    };
    for (auto& cyc : cycles)
        for (size_t i = 0; i < cyc.size(); ++i)
            parent[root(eid(cyc[i], cyc[(i + 1) % cyc.size()]))] = root(eid(cyc[0], cyc[1]));
    std::map<int, std::set<std::pair<int, int>>> groups;
    for (size_t i = 0; i < es.size(); ++i) groups[root(static_cast<int>(i))].insert(es[i]);
    for (auto& [r, edges] : groups) res.blocks.push_back(edges);
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0) res.blocks.push_back({});  // isolated vertex, no edges
    return res;
}

// ---------------------------------------------------------------------------

TEST_CASE("vertex sets") {
    CHECK(vs_all(0) == 0);
    CHECK(vs_all(3) == 0b111);
    CHECK(vs_count(vs_all(64)) == 64);
    int seen = 0;
    ATLAB_FOR_VSET(v, VSet{0b1011}) seen = seen * 10 + v;
    CHECK(seen == 13);  // visits 0, 1, 3 ascending
}

TEST_CASE("graph basics") {
    Graph g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(g.size() == 4);
    CHECK(g.degree(1) == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(connected(g));
    CHECK_FALSE(connected(disjoint_union(g, complete(2))));
    CHECK(components(disjoint_union(complete(2), complete(3))).size() == 2);
    CHECK(degeneracy(cycle(5)) == 2);
    CHECK(degeneracy(complete(4)) == 3);
    CHECK(clique_number(complete(5)) == 5);
    CHECK(clique_number(cycle(5)) == 2);
    CHECK(has_clique(glue_at(complete(4), 0, cycle(5), 0), 4));
    CHECK_THROWS_AS(Graph(65), budget_error);
}

TEST_CASE("multigraph") {
    Multigraph m(3);
    m.add_edge(0, 1);
    m.add_edge(1, 0);
    m.add_edge(1, 2);
    CHECK(m.size() == 3);
    CHECK(m.degree(1) == 3);
    CHECK(m.multiplicity(0, 1) == 2);
    CHECK_FALSE(m.simple());
    CHECK(m.support().size() == 2);
    CHECK(Multigraph::of(cycle(4)).simple());
    CHECK_THROWS_AS(m.add_edge(2, 2), parse_error);
}

TEST_CASE("graph6 codec") {
    Graph star = parse_graph6("D?{");
    CHECK(star.n == 5);
    CHECK(star.size() == 4);
    CHECK(star.degree(4) == 4);
    CHECK(to_graph6(star) == "D?{");

    CHECK(parse_graph6("A_") == complete(2));
    CHECK(parse_graph6("@") == Graph(1));
    Graph c4 = parse_graph6("Cr");
    CHECK(c4.n == 4);
    CHECK(c4.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    CHECK_THROWS_WITH_AS(parse_graph6(""), "graph6: empty input", parse_error);
    CHECK_THROWS_WITH_AS(parse_graph6("B"), "graph6: expected 1 data bytes, got 0", parse_error);
    CHECK_THROWS_WITH_AS(parse_graph6("Cr~~"), "graph6: expected 1 data bytes, got 3", parse_error);
    CHECK_THROWS_WITH_AS(parse_graph6(std::string("C") + char(30)),
                         "graph6: byte 1 out of range", parse_error);
    CHECK(parse_graph6("C~") == complete(4));   // n = 4 uses all 6 data bits
    CHECK_THROWS_AS(parse_graph6("B~"), parse_error);  // n = 3 leaves 3 pad bits, must be zero
    CHECK(parse_graph6("Bw") == complete(3));
}

TEST_CASE("graph6 round trip over enumeration") {
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            CHECK(parse_graph6(to_graph6(g)) == g);
        }
}

TEST_CASE("adjacency text") {
    Graph g = cycle(4);
    CHECK(parse_adjacency_text(to_adjacency_text(g)) == g);
    CHECK_THROWS_AS(parse_adjacency_text("3"), parse_error);
    CHECK_THROWS_AS(parse_adjacency_text("2 1 0 1 7"), parse_error);
    CHECK_THROWS_AS(parse_adjacency_text("2 2 0 1"), parse_error);
}

TEST_CASE("block decomposition examples") {
    // two triangles sharing a vertex
    Graph bowtie = glue_at(complete(3), 0, complete(3), 0);
    BlockTree t = block_decomposition(bowtie);
    REQUIRE(t.blocks.size() == 2);
    CHECK(t.cut_vertices == vs_single(0));
    CHECK(vs_count(t.blocks[0]) == 3);
    CHECK(vs_count(t.blocks[1]) == 3);
    CHECK(t.is_endblock(0));
    CHECK(t.nonseparating(0) == (t.blocks[0] & ~vs_single(0)));

    BlockTree p = block_decomposition(path(4));
    CHECK(p.blocks.size() == 3);
    CHECK(p.cut_vertices == (vs_single(1) | vs_single(2)));

    BlockTree single = block_decomposition(cycle(5));
    CHECK(single.single_block());
    CHECK(single.is_endblock(0));
    CHECK(single.nonseparating(0) == vs_all(5));

    BlockTree iso = block_decomposition(Graph(2));
    CHECK(iso.blocks.size() == 2);
}

TEST_CASE("block decomposition matches first-principles oracle") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            BlockTree t = block_decomposition(g);
            BlockOracle o = block_oracle(g);
            CHECK(t.cut_vertices == o.cut);
            // edge partition must match: collect per-block edge sets
            std::set<std::set<std::pair<int, int>>> got, want;
            for (VSet b : t.blocks) {
                std::set<std::pair<int, int>> es;
                for (auto e : g.edges())
                    if (vs_has(b, e.first) && vs_has(b, e.second)) es.insert(e);
                if (!es.empty()) got.insert(es);
            }
            for (auto& es : o.blocks)
                if (!es.empty()) want.insert(es);
            CHECK(got == want);
            // every vertex in some block; every edge in exactly one
            VSet all = 0;
            int edge_total = 0;
            for (VSet b : t.blocks) all |= b;
            for (VSet b : t.blocks) {
                int cnt = 0;
                for (auto e : g.edges()) cnt += vs_has(b, e.first) && vs_has(b, e.second);
                edge_total += cnt;
            }
            CHECK(all == vs_all(g.n));
            CHECK(edge_total == g.size());
        }
}

TEST_CASE("gallai trees") {
    CHECK(is_gallai_tree(Graph(1)));
    CHECK(is_gallai_tree(complete(2)));
    CHECK(is_gallai_tree(cycle(5)));
    CHECK(is_gallai_tree(complete(5)));
    CHECK(is_gallai_tree(glue_at(complete(3), 0, complete(3), 0)));
    CHECK(is_gallai_tree(path(4)));
    CHECK_FALSE(is_gallai_tree(cycle(4)));
    CHECK_FALSE(is_gallai_tree(cycle(6)));
    CHECK_FALSE(is_gallai_tree(from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));  // diamond
    CHECK_FALSE(is_gallai_tree(disjoint_union(complete(3), complete(3))));  // disconnected

    CHECK(in_gallai_class(cycle(5), 5));
    CHECK(in_gallai_class(complete(4), 5));
    CHECK_FALSE(in_gallai_class(complete(5), 5));   // K_k excluded
    CHECK_FALSE(in_gallai_class(complete(6), 5));   // degree cap
    CHECK(in_gallai_class(Graph(1), 5));
}

TEST_CASE("w_k vertices") {
    Graph g = glue_at(complete(4), 0, path(2), 0);  // K_4 with a pendant
    CHECK(w_k_vertices(g, 5) == vs_all(4));
    CHECK(w_k_vertices(cycle(5), 5) == 0);
    CHECK(w_k_vertices(complete(3), 4) == vs_all(3));
    CHECK(w_k_vertices(path(3), 3) == vs_all(3));  // every vertex in a K_2
}

TEST_CASE("even cycle with at most one chord: examples") {
    auto w = find_even_cycle_one_chord(cycle(4));
    REQUIRE(w);
    CHECK(w->cycle.size() == 4);
    CHECK_FALSE(w->chord);

    Graph diamond = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    auto wd = find_even_cycle_one_chord(diamond);
    REQUIRE(wd);
    CHECK(wd->cycle.size() == 4);
    CHECK(wd->chord);

    CHECK_FALSE(find_even_cycle_one_chord(complete(4)));  // Gallai: no witness
    CHECK_FALSE(find_even_cycle_one_chord(cycle(5)));
    CHECK_FALSE(find_even_cycle_one_chord(glue_at(complete(3), 0, complete(3), 0)));

    // K_4 plus a subdivided edge: the shortest even cycle (inside K_4) has two
    // chords, but a valid witness through the subdivision vertex exists.
    Graph sub = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}});
    auto ws = find_even_cycle_one_chord(sub);
    REQUIRE(ws);
    CHECK(ws->cycle.size() % 2 == 0);
}

TEST_CASE("witness is present exactly off the Gallai class, and is valid") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!connected(g)) continue;
            auto w = find_even_cycle_one_chord(g);
            CHECK(w.has_value() == !is_gallai_tree(g));
            if (!w) continue;
            size_t len = w->cycle.size();
            REQUIRE(len % 2 == 0);
            VSet verts = 0;
            for (int v : w->cycle) verts |= vs_single(v);
            REQUIRE(vs_count(verts) == static_cast<int>(len));
            for (size_t i = 0; i < len; ++i)
                CHECK(g.has_edge(w->cycle[i], w->cycle[(i + 1) % len]));
            int inside = 0;
            ATLAB_FOR_VSET(v, verts) inside += vs_count(g.adj[v] & verts);
            inside /= 2;
            CHECK(inside == static_cast<int>(len) + (w->chord ? 1 : 0));
            if (w->chord) CHECK(g.has_edge(w->chord->first, w->chord->second));
        }
}

TEST_CASE("enumeration counts: small orders against the labeled-orbit oracle") {
    CHECK(static_cast<int>(enumerate_graphs(3).size()) == labeled_class_count(3));
    CHECK(static_cast<int>(enumerate_graphs(4).size()) == labeled_class_count(4));
    CHECK(enumerate_graphs(3).size() == 4);
    CHECK(enumerate_graphs(4).size() == 11);
}

TEST_CASE("enumeration counts: frozen larger orders") {
    CHECK(enumerate_graphs(0).size() == 1);
    CHECK(enumerate_graphs(1).size() == 1);
    CHECK(enumerate_graphs(2).size() == 2);
    CHECK(enumerate_graphs(5).size() == 34);
    CHECK(enumerate_graphs(6).size() == 156);
    CHECK(enumerate_graphs(7).size() == 1044);
    CHECK_THROWS_AS(enumerate_graphs(9), budget_error);
}

TEST_CASE("enumeration yields pairwise non-isomorphic graphs") {
    for (int n = 1; n <= 5; ++n) {
        auto& gs = enumerate_graphs(n);
        for (size_t i = 0; i < gs.size(); ++i)
            for (size_t j = i + 1; j < gs.size(); ++j) CHECK_FALSE(isomorphic(gs[i], gs[j]));
    }
}

TEST_CASE("canonical code invariance") {
    Graph a = cycle(5);
    Graph b(5);  // same cycle, shuffled labels
    b.add_edge(2, 4);
    b.add_edge(4, 1);
    b.add_edge(1, 3);
    b.add_edge(3, 0);
    b.add_edge(0, 2);
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(isomorphic(a, b));
    CHECK_FALSE(isomorphic(cycle(5), path(5)));
    CHECK(graph_of_code(5, canonical_code(a)).size() == 5);
}

TEST_CASE("automorphisms") {
    CHECK(automorphisms(complete(3)).size() == 6);
    CHECK(automorphisms(cycle(4)).size() == 8);
    CHECK(automorphisms(path(3)).size() == 2);
}

TEST_CASE("gallai class enumeration") {
    auto t5 = enumerate_gallai_trees(3, 5);
    // K_1, K_2, P_3, K_3
    REQUIRE(t5.size() == 4);
    CHECK(t5[0].n == 1);
    CHECK(t5[1].n == 2);
    CHECK(t5[2].n == 3);
    CHECK(t5[3].n == 3);

    auto t4 = enumerate_gallai_trees(4, 5);
    bool has_k4 = false, has_c4 = false;
    for (auto& g : t4) {
        has_k4 |= g.n == 4 && is_complete(g);
        has_c4 |= g.n == 4 && g.size() == 4 && clique_number(g) == 2;
    }
    CHECK(has_k4);
    CHECK_FALSE(has_c4);

    for (auto& g : enumerate_gallai_trees(5, 5)) CHECK_FALSE((g.n == 5 && is_complete(g)));
}
