#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "atlab/at_solver.hpp"
#include "atlab/blocks.hpp"
#include "atlab/enumerate.hpp"
#include "atlab/errors.hpp"
#include "atlab/games.hpp"
#include "test_util.hpp"

using namespace atlab;
using namespace testutil;

namespace {

// every f with 1 <= f(v) <= d(v)+1, visited in mixed-radix order
template <class Fn>
void for_each_f(const Graph& g, Fn&& fn) {
    DegreeFunc f(g.n, 1);
    for (;;) {
        fn(f);
        int v = 0;
        while (v < g.n && f[v] == g.degree(v) + 1) f[v++] = 1;
        if (v == g.n) break;
        ++f[v];
    }
}

}  // namespace

TEST_CASE("list coloring") {
    CHECK_FALSE(is_l_colorable(complete(2), {0b10, 0b10}));
    auto c = is_l_colorable(complete(2), {0b010, 0b100});
    REQUIRE(c);
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == 2);
    CHECK_FALSE(is_l_colorable(complete(3), {0b110, 0b110, 0b110}));
    CHECK(is_l_colorable(Graph(0), {}));
    CHECK_THROWS_AS(is_l_colorable(complete(2), {0b1}), hypothesis_error);

    // returned colorings are proper and drawn from the lists
    ListAssignment lists = {0b011, 0b011, 0b110, 0b101, 0b110};
    if (auto pick = is_l_colorable(cycle(5), lists)) {
        for (int v = 0; v < 5; ++v) CHECK(vs_has(lists[v], (*pick)[v]));
        for (auto [u, w] : cycle(5).edges()) CHECK((*pick)[u] != (*pick)[w]);
    }
}

TEST_CASE("choosability examples") {
    CHECK(is_f_choosable(cycle(4), constant_func(4, 2)));
    CHECK_FALSE(is_f_choosable(cycle(5), constant_func(5, 2)));
    CHECK(is_f_choosable(complete(3), constant_func(3, 3)));
    CHECK_FALSE(is_f_choosable(complete(3), constant_func(3, 2)));
    CHECK(is_f_choosable(cycle(6), constant_func(6, 2)));
    CHECK(is_f_choosable(Graph(0), {}));
    CHECK(is_f_choosable(Graph(3), constant_func(3, 1)));
    CHECK_FALSE(is_f_choosable(path(2), constant_func(2, 1)));
    CHECK(is_f_choosable(path(2), {1, 2}));
    CHECK_FALSE(is_f_choosable(path(3), {1, 1, 1}));
    CHECK_FALSE(is_f_choosable(path(3), {1, 2, 1}));  // lists {a}, {a,b}, {b}
    CHECK(is_f_choosable(path(3), {2, 2, 1}));
    CHECK_THROWS_AS(is_f_choosable(complete(4), constant_func(4, 4)), budget_error);
}

TEST_CASE("online choosability examples") {
    CHECK(is_online_f_choosable(Graph(1), {1}));
    CHECK_FALSE(is_online_f_choosable(Graph(1), {0}));
    CHECK(is_online_f_choosable(cycle(4), constant_func(4, 2)));
    CHECK_FALSE(is_online_f_choosable(complete(3), constant_func(3, 2)));
    CHECK(is_online_f_choosable(complete(3), constant_func(3, 3)));
    CHECK_FALSE(is_online_f_choosable(cycle(5), constant_func(5, 2)));
    CHECK(is_online_f_choosable(cycle(6), constant_func(6, 2)));
    CHECK(is_online_f_choosable(complete(8), constant_func(8, 8)));
    CHECK_THROWS_AS(is_online_f_choosable(Graph(9), constant_func(9, 1)), budget_error);
}

TEST_CASE("online game is monotone in f") {
    for (const Graph& g : enumerate_graphs(4))
        for_each_f(g, [&](const DegreeFunc& f) {
            if (!is_online_f_choosable(g, f)) return;
            for (int v = 0; v < g.n; ++v) {
                DegreeFunc up = f;
                ++up[v];
                CHECK(is_online_f_choosable(g, up));
            }
        });
}

TEST_CASE("cut composition") {
    // pendant vertex with f = d+1 over an online-choosable base
    Graph g = glue_at(cycle(4), 0, path(2), 0);  // C_4 with a pendant at 0
    DegreeFunc f = {2, 2, 2, 2, 2};
    VSet pendant = vs_single(4);
    CHECK(compose_online_cut(g, pendant, f));
    CHECK(is_online_f_choosable(g, f));

    // disjoint union splits cleanly
    Graph two = disjoint_union(cycle(4), complete(3));
    DegreeFunc ft = {2, 2, 2, 2, 3, 3, 3};
    CHECK(compose_online_cut(two, vs_all(7) & ~vs_all(4), ft) ==
          (is_online_f_choosable(cycle(4), constant_func(4, 2)) &&
           is_online_f_choosable(complete(3), constant_func(3, 3))));

    // an endpoint of K_2 with f = 1 starves: f_H drops to 0
    CHECK_FALSE(compose_online_cut(complete(2), vs_single(1), constant_func(2, 1)));

    // composition never claims more than the direct solver
    for (const Graph& g5 : enumerate_graphs(4)) {
        for_each_f(g5, [&](const DegreeFunc& f4) {
            for (VSet h = 1; h < vs_all(g5.n); ++h)
                if (compose_online_cut(g5, h, f4)) CHECK(is_online_f_choosable(g5, f4));
        });
    }
}

TEST_CASE("implication chain on small graphs") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            AtProfile prof = at_profile(g);
            for_each_f(g, [&](const DegreeFunc& f) {
                bool at = prof.admits(f);
                bool online = is_online_f_choosable(g, f);
                if (at) CHECK(online);
                int total = std::accumulate(f.begin(), f.end(), 0);
                if (online && total <= 12) CHECK(is_f_choosable(g, f));
            });
        }
}

TEST_CASE("degree-list equivalence for sparse connected graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!connected(g) || 2 * g.size() > 12) continue;
            DegreeFunc d0 = degree_func(g);
            bool gallai = is_gallai_tree(g);
            CHECK(is_f_choosable(g, d0) == !gallai);
            CHECK(is_f_at(g, d0).has_value() == !gallai);
        }
}

TEST_CASE("choosability is monotone in f") {
    for (const Graph& g : enumerate_graphs(4))
        for_each_f(g, [&](const DegreeFunc& f) {
            if (std::accumulate(f.begin(), f.end(), 0) + 1 > 12) return;
            if (!is_f_choosable(g, f)) return;
            for (int v = 0; v < g.n; ++v) {
                DegreeFunc up = f;
                ++up[v];
                CHECK(is_f_choosable(g, up));
            }
        });
}
