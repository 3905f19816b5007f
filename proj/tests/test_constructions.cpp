#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <variant>

#include "atlab/blocks.hpp"
#include "atlab/constructions.hpp"
#include "atlab/enumerate.hpp"
#include "test_util.hpp"

using namespace atlab;
using namespace testutil;

namespace {

Graph diamond() { return from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

bool shape_ok(const ATCertificate& c) {
    return (c.ee == 2 && c.eo == 0) || (c.ee == 3 && c.eo == 0) || (c.ee == 2 && c.eo == 1);
}

}  // namespace

TEST_CASE("even cycle orientation on examples") {
    auto c4 = d0_orientation(cycle(4));
    CHECK(c4.ee == 2);
    CHECK(c4.eo == 0);
    CHECK(c4.f == degree_func(cycle(4)));
    CHECK(verify_certificate(c4));

    auto dia = d0_orientation(diamond());
    CHECK(shape_ok(dia));
    CHECK(verify_certificate(dia));

    CHECK_THROWS_WITH_AS(d0_orientation(cycle(5)), "d0_orientation: not d_0-AT (Gallai tree)",
                         hypothesis_error);
    CHECK_THROWS_WITH_AS(d0_orientation(complete(4)), "d0_orientation: not d_0-AT (Gallai tree)",
                         hypothesis_error);
    CHECK_THROWS_WITH_AS(d0_orientation(disjoint_union(cycle(4), cycle(4))),
                         "d0_orientation: graph not connected", hypothesis_error);
}

TEST_CASE("even cycle orientation across small graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!connected(g)) continue;
            if (is_gallai_tree(g)) {
                CHECK_THROWS_AS(d0_orientation(g), hypothesis_error);
                continue;
            }
            auto cert = d0_orientation(g);
            CHECK(cert.f == degree_func(g));
            CHECK(shape_ok(cert));
            CHECK(verify_certificate(cert));
        }
}

TEST_CASE("cut vertex composition") {
    Graph squares = glue_at(cycle(4), 0, cycle(4), 0);
    auto cert = compose_at_cut_vertex(squares, 0x0F, 0x71);
    CHECK(cert.ee == 4);
    CHECK(cert.eo == 0);
    CHECK(cert.f[0] == 3);
    for (int v = 1; v < 7; ++v) CHECK(cert.f[v] == 2);
    CHECK(verify_certificate(cert));

    Graph diamonds = glue_at(diamond(), 0, diamond(), 0);
    auto cert2 = compose_at_cut_vertex(diamonds, 0x0F, 0x71);
    CHECK(std::abs(cert2.ee - cert2.eo) == 1);
    CHECK(cert2.f[0] == 3);
    CHECK(verify_certificate(cert2));

    Graph mixed = glue_at(cycle(4), 0, cycle(5), 0);
    CHECK_THROWS_WITH_AS(compose_at_cut_vertex(mixed, 0x0F, 0xF1),
                         "compose_at_cut_vertex: side b is a Gallai tree", hypothesis_error);

    CHECK_THROWS_WITH_AS(compose_at_cut_vertex(cycle(4), 0x3, 0x6),
                         "compose_at_cut_vertex: sides must cover the graph", hypothesis_error);
    CHECK_THROWS_WITH_AS(compose_at_cut_vertex(cycle(4), 0x7, 0xD),
                         "compose_at_cut_vertex: sides must share exactly one vertex",
                         hypothesis_error);
    CHECK_THROWS_WITH_AS(compose_at_cut_vertex(complete(4), 0xB, 0xC),
                         "compose_at_cut_vertex: edge 0-2 crosses the separation",
                         hypothesis_error);
}

TEST_CASE("split composition") {
    // Splitting off the whole graph against an empty remainder changes nothing.
    Graph g = diamond();
    auto whole = d0_orientation(g);
    ATCertificate empty;
    empty.ee = 1;
    auto idcert = compose_at_split(g, vs_all(4), degree_func(g), whole, empty);
    CHECK(idcert.ee == whole.ee);
    CHECK(idcert.eo == whole.eo);
    CHECK(verify_certificate(idcert));

    Graph two = disjoint_union(cycle(4), cycle(4));
    auto side = d0_orientation(cycle(4));
    auto un = compose_at_split(two, 0x0F, constant_func(8, 2), side, side);
    CHECK(un.ee == 4);
    CHECK(un.eo == 0);
    CHECK(verify_certificate(un));

    Graph joined = two;
    joined.add_edge(0, 4);
    DegreeFunc f = constant_func(8, 2);
    f[0] = 3;
    auto jo = compose_at_split(joined, 0x0F, f, side, side);
    CHECK(jo.ee == 4);
    CHECK(jo.eo == 0);
    CHECK(verify_certificate(jo));
    for (int e = 0; e < jo.d.g.size(); ++e)
        if (jo.d.g.edges[e] == std::pair(0, 4)) CHECK(jo.d.tail(e) == 0);

    DegreeFunc bad = f;
    bad[2] = 3;
    CHECK_THROWS_WITH_AS(compose_at_split(joined, 0x0F, bad, side, side),
                         "compose_at_split: f mismatch at vertex 2", hypothesis_error);
    CHECK_THROWS_WITH_AS(compose_at_split(two, 0x0F, constant_func(8, 2), whole, side),
                         "compose_at_split: certificate does not match g[h]", hypothesis_error);
}

TEST_CASE("frame extension with core only") {
    ExtensionFrame fr;
    fr.g = Multigraph::of(complete(3));
    fr.f = {3, 3, 3};
    fr.y = 0x7;
    auto cert = extend_type_two(fr);
    CHECK(cert.d.forward == std::vector<std::uint8_t>{1, 1, 1});
    CHECK(cert.ee == 1);
    CHECK(cert.eo == 0);
    CHECK(verify_certificate(cert));

    Multigraph m(3);
    m.add_edge(0, 1);
    m.add_edge(0, 1);
    m.add_edge(0, 2);
    m.add_edge(1, 2);
    ExtensionFrame fm{m, {4, 4, 3}, {}, 0x7};
    auto cm = extend_type_two(fm);
    CHECK(cm.ee == 1);
    CHECK(cm.eo == 0);
    CHECK(verify_certificate(cm));
}

TEST_CASE("frame extension with paired attachments") {
    // Square with the far pair excised onto a second 0-1 edge.
    ExtensionFrame fr;
    fr.g = Multigraph::of(cycle(4));  // edges (0,1) (0,3) (1,2) (2,3)
    fr.f = {3, 3, 2, 2};
    fr.f_edges = {1, 2};
    fr.y = 0x3;
    auto cert = extend_type_two(fr);
    CHECK(cert.d.out_degrees() == std::vector<int>{2, 0, 1, 1});
    CHECK(cert.ee == 1);
    CHECK(cert.eo == 0);
    CHECK(cert.f == fr.f);
    CHECK(verify_certificate(cert));
}

TEST_CASE("frame extension with single attachment") {
    ExtensionFrame fr;
    fr.g = Multigraph::of(path(3));
    fr.f = {2, 2, 1};
    fr.f_edges = {0};
    fr.y = 0x1;
    auto cert = extend_type_two(fr);
    CHECK(cert.d.out_degrees() == std::vector<int>{1, 1, 0});
    CHECK(cert.ee == 1);
    CHECK(cert.eo == 0);
    CHECK(verify_certificate(cert));

    // Two components off y = {0, 1}: a square half and a pendant pair.
    Graph sp = from_edges(6, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {0, 4}, {4, 5}});
    ExtensionFrame fs;
    fs.g = Multigraph::of(sp);  // edges (0,1) (0,3) (0,4) (1,2) (2,3) (4,5)
    fs.f = {4, 3, 2, 2, 2, 1};
    fs.f_edges = {1, 3, 2};
    fs.y = 0x3;
    auto cs = extend_type_two(fs);
    CHECK(cs.d.out_degrees() == std::vector<int>{3, 0, 1, 1, 1, 0});
    CHECK(cs.ee == 1);
    CHECK(cs.eo == 0);
    CHECK(verify_certificate(cs));
}

TEST_CASE("frame extension guards") {
    Multigraph m(3);
    m.add_edge(0, 1);
    m.add_edge(1, 2);
    m.add_edge(1, 2);
    CHECK_THROWS_WITH_AS(extend_type_two({m, {3, 3, 3}, {}, 0x1}),
                         "extend_type_two: (1) violated: parallel edge 1-2 leaves y",
                         hypothesis_error);

    Multigraph c4 = Multigraph::of(cycle(4));
    CHECK_THROWS_WITH_AS(extend_type_two({c4, {3, 3, 1, 2}, {1, 2}, 0x3}),
                         "extend_type_two: (2) violated at vertex 2", hypothesis_error);
    CHECK_THROWS_WITH_AS(extend_type_two({c4, {2, 3, 2, 2}, {1, 2}, 0x3}),
                         "extend_type_two: (3) violated at vertex 0", hypothesis_error);
    CHECK_THROWS_WITH_AS(extend_type_two({c4, {1, 2, 2, 2}, {}, 0x1}),
                         "extend_type_two: (4) violated in the component containing vertex 1",
                         hypothesis_error);
    CHECK_THROWS_WITH_AS(extend_type_two({c4, {3, 3, 2, 2}, {0, 0}, 0x3}),
                         "extend_type_two: f_edges invalid", hypothesis_error);
    CHECK_THROWS_WITH_AS(extend_type_two({c4, {3, 3, 2}, {}, 0x3}),
                         "extend_type_two: f size mismatch", hypothesis_error);
    CHECK_THROWS_WITH_AS(extend_type_two({c4, {3, 3, 2, 2}, {}, VSet{1} << 10}),
                         "extend_type_two: y out of range", hypothesis_error);
}

TEST_CASE("vertex extension, one component") {
    Graph g5 = complete(4);
    {
        Graph t(5);
        for (auto [u, v] : g5.edges()) t.add_edge(u, v);
        t.add_edge(0, 4);
        t.add_edge(1, 4);
        t.add_edge(2, 4);
        g5 = t;
    }
    auto cert = extend_type_one(g5, 4, 5);
    CHECK(cert.f == DegreeFunc{4, 4, 4, 3, 2});
    CHECK(verify_certificate(cert));

    Graph g6(6);
    for (auto [u, v] : complete(5).edges()) g6.add_edge(u, v);
    for (int v = 0; v < 4; ++v) g6.add_edge(v, 5);
    auto c6 = extend_type_one(g6, 5, 6, 2);
    CHECK(c6.f == DegreeFunc{5, 5, 5, 5, 4, 2});
    CHECK(verify_certificate(c6));

    // A pendant vertex of g - x peels off before the twin pair is handed over.
    Graph gp(6);
    for (auto [u, v] : complete(4).edges()) gp.add_edge(u, v);
    gp.add_edge(3, 4);
    for (int v = 0; v < 3; ++v) gp.add_edge(v, 5);
    auto cp = extend_type_one(gp, 5, 5);
    CHECK(cp.f == DegreeFunc{4, 4, 4, 4, 1, 2});
    CHECK(verify_certificate(cp));
}

TEST_CASE("vertex extension, two components") {
    Graph g(9);
    for (auto [u, v] : complete(4).edges()) {
        g.add_edge(u, v);
        g.add_edge(u + 4, v + 4);
    }
    g.add_edge(0, 8);
    g.add_edge(1, 8);
    g.add_edge(4, 8);
    g.add_edge(5, 8);
    auto cert = extend_type_one(g, 8, 5);
    CHECK(cert.f == DegreeFunc{4, 4, 3, 3, 4, 4, 3, 3, 3});
    CHECK(std::abs(cert.ee - cert.eo) == 1);
    CHECK(verify_certificate(cert));
}

TEST_CASE("vertex extension, general form") {
    Graph g(13);
    for (auto [u, v] : complete(4).edges())
        for (int off : {0, 4, 8}) g.add_edge(u + off, v + off);

    Graph one = g;
    for (int v : {0, 1, 2, 4, 8}) one.add_edge(v, 12);
    auto cert = extend_type_one(one, 12, 5);
    CHECK(cert.f[12] == 4);
    CHECK(verify_certificate(cert));

    Graph two = g;
    for (int v : {0, 1, 4, 5, 8, 9}) two.add_edge(v, 12);
    auto c2 = extend_type_one(two, 12, 5);
    CHECK(c2.f[12] == 5);
    CHECK(verify_certificate(c2));
}

TEST_CASE("vertex extension rejects") {
    CHECK_THROWS_WITH_AS(
        extend_type_one(complete(5), 0, 5),
        "extend_type_one: no construction applies\n  one component: g is complete of order k\n  "
        "two components: g - x must have exactly two components\n  general: g contains a clique "
        "of order k",
        hypothesis_error);
    CHECK_THROWS_WITH_AS(extend_type_one(cycle(4), 7, 5), "extend_type_one: x out of range",
                         hypothesis_error);
    try {
        extend_type_one(path(4), 0, 5);
        CHECK(false);
    } catch (const hypothesis_error& ex) {
        CHECK(std::string(ex.what()).find("no construction applies") != std::string::npos);
    }
}

TEST_CASE("orientation demands on examples") {
    Multigraph star = Multigraph::of(from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
    IncidencePreference a{star, {{0, 1, 2}, {0}, {1}, {2}}};

    auto res = solve_in_orientation(a, 0x1, {3, 0, 0, 0});
    REQUIRE(std::holds_alternative<Orientation>(res));
    const auto& d = std::get<Orientation>(res);
    for (int e = 0; e < 3; ++e) CHECK(d.head(e) == 0);
    auto again = solve_in_orientation(a, 0x1, {3, 0, 0, 0});
    CHECK(std::get<Orientation>(again).forward == d.forward);

    auto hungry = solve_in_orientation(a, 0x1, {4, 0, 0, 0});
    REQUIRE(std::holds_alternative<WitnessSubgraph>(hungry));
    auto w = std::get<WitnessSubgraph>(hungry);
    CHECK(w.vertices == 0x1);
    CHECK(w.pref_degree_sum == 3);
    CHECK(w.good_edges == 0);
    CHECK(w.demand == 4);

    IncidencePreference k2{Multigraph::of(complete(2)), {{0}, {0}}};
    auto both = solve_in_orientation(k2, 0x3, {1, 1});
    REQUIRE(std::holds_alternative<WitnessSubgraph>(both));
    auto wk = std::get<WitnessSubgraph>(both);
    CHECK(wk.vertices == 0x3);
    CHECK(wk.pref_degree_sum == 2);
    CHECK(wk.good_edges == 1);
    CHECK(wk.demand == 2);

    IncidencePreference blank{Multigraph::of(path(3)), {{}, {}, {}}};
    auto nb = solve_in_orientation(blank, 0x2, {0, 1, 0});
    REQUIRE(std::holds_alternative<WitnessSubgraph>(nb));
    auto wb = std::get<WitnessSubgraph>(nb);
    CHECK(wb.vertices == 0x2);
    CHECK(wb.pref_degree_sum == 0);
    CHECK(wb.demand == 1);

    IncidencePreference ring{Multigraph::of(cycle(4)), {{0, 1}, {0, 2}, {2, 3}, {1, 3}}};
    auto rot = solve_in_orientation(ring, 0xF, {1, 1, 1, 1});
    REQUIRE(std::holds_alternative<Orientation>(rot));

    CHECK_THROWS_AS(solve_in_orientation({star, {{3}, {0}, {1}, {2}}}, 0x1, {1, 0, 0, 0}),
                    hypothesis_error);
}

TEST_CASE("orientation demands match brute force") {
    std::mt19937 rng(20240811);
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    for (int round = 0; round < 300; ++round) {
        int n = pick(1, 5);
        Multigraph g(n);
        int m = n < 2 ? 0 : pick(0, 8);
        for (int e = 0; e < m; ++e) {
            int u = pick(0, n - 1), v = pick(0, n - 1);
            if (u == v) continue;
            g.add_edge(u, v);
        }
        m = g.size();
        IncidencePreference a{g, std::vector<std::vector<int>>(n)};
        for (int e = 0; e < m; ++e) {
            if (rng() % 5 < 3) a.pref[g.edges[e].first].push_back(e);
            if (rng() % 5 < 3) a.pref[g.edges[e].second].push_back(e);
        }
        VSet s = rng() % (VSet{1} << n);
        DegreeFunc demand(n);
        for (int v = 0; v < n; ++v) demand[v] = pick(0, 3);

        bool feasible = false;
        for (std::uint32_t bits = 0; bits < (1u << m) && !feasible; ++bits) {
            std::vector<int> din(n, 0);
            for (int e = 0; e < m; ++e) {
                int head = (bits >> e & 1) ? g.edges[e].second : g.edges[e].first;
                din[head] += a.prefers(head, e);
            }
            feasible = true;
            ATLAB_FOR_VSET(v, s) feasible = feasible && din[v] >= demand[v];
        }

        auto res = solve_in_orientation(a, s, demand);
        if (std::holds_alternative<Orientation>(res)) {
            CHECK(feasible);
            const auto& d = std::get<Orientation>(res);
            ATLAB_FOR_VSET(v, s) {
                int din = 0;
                for (int e = 0; e < m; ++e) din += d.head(e) == v && a.prefers(v, e);
                CHECK(din >= demand[v]);
            }
        } else {
            CHECK_FALSE(feasible);
            auto w = std::get<WitnessSubgraph>(res);
            CHECK((w.vertices & ~s) == 0);
            int supply = 0, good = 0, need = 0;
            ATLAB_FOR_VSET(v, w.vertices) {
                supply += static_cast<int>(a.pref[v].size());
                need += demand[v];
            }
            for (int e = 0; e < m; ++e) {
                auto [u, v] = g.edges[e];
                if (vs_has(w.vertices, u) && vs_has(w.vertices, v) && a.prefers(u, e) &&
                    a.prefers(v, e))
                    ++good;
            }
            CHECK(w.pref_degree_sum == supply);
            CHECK(w.good_edges == good);
            CHECK(w.demand == need);
            CHECK(supply - good < need);
        }
    }
}
