#include "atlab/reduction.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <variant>

#include "atlab/at_solver.hpp"
#include "atlab/constructions.hpp"
#include "atlab/errors.hpp"

namespace atlab {

namespace {

std::string vname(int v) { return std::to_string(v); }

VSet to_host(const AuxComponent& c, VSet local) {
    VSet out = 0;
    ATLAB_FOR_VSET(v, local) out |= vs_single(c.vertex_of[v]);
    return out;
}

int local_of(const AuxComponent& c, int host) {
    for (size_t i = 0; i < c.vertex_of.size(); ++i)
        if (c.vertex_of[i] == host) return static_cast<int>(i);
    throw invariant_error("reduction: vertex " + vname(host) + " is not in the component");
}

// Edges from a host vertex set into y, sorted lexicographically.
std::vector<std::pair<int, int>> edges_to_y(const Graph& g, VSet from, VSet y) {
    std::vector<std::pair<int, int>> out;
    ATLAB_FOR_VSET(x, from) ATLAB_FOR_VSET(w, g.neighbors(x) & y) out.emplace_back(x, w);
    return out;
}

bool saturated_block(const AuxBipartite& aux, const AuxComponent& c, size_t b) {
    ATLAB_FOR_VSET(v, c.blocks.nonseparating(b))
        if ((aux.g.neighbors(c.vertex_of[v]) & aux.y) == 0) return false;
    return true;
}

bool block_is_kk1(const AuxComponent& c, size_t b, int k) {
    VSet bl = c.blocks.blocks[b];
    if (vs_count(bl) != k - 1) return false;
    ATLAB_FOR_VSET(v, bl)
        if (vs_count(c.sub.neighbors(v) & bl) != k - 2) return false;
    return true;
}

// Greedy prefix with pairwise-distinct y ends; present iff enough ends exist.
std::optional<std::vector<std::pair<int, int>>> pick_distinct_ends(
    const std::vector<std::pair<int, int>>& es, int need) {
    std::vector<std::pair<int, int>> out;
    VSet used = 0;
    for (const auto& e : es)
        if (!vs_has(used, e.second)) {
            out.push_back(e);
            used |= vs_single(e.second);
            if (static_cast<int>(out.size()) == need) return out;
        }
    return std::nullopt;
}

void check_degree_floors(const AuxBipartite& aux, MhVariant variant, const std::string& prefix) {
    int yfloor = variant == MhVariant::symmetric ? 3 : 4;
    int tfloor = variant == MhVariant::symmetric ? 3 : 2;
    ATLAB_FOR_VSET(v, aux.y) {
        int d = aux.degree_y(v);
        if (d < yfloor)
            throw hypothesis_error(prefix + "d_B(" + vname(v) + ") = " + std::to_string(d) +
                                   " is below the floor " + std::to_string(yfloor));
    }
    for (size_t t = 0; t < aux.components.size(); ++t) {
        int d = aux.degree_t(static_cast<int>(t));
        if (d < tfloor)
            throw hypothesis_error(prefix + "the component at vertex " +
                                   vname(vs_min(aux.components[t].vertices)) + " has B-degree " +
                                   std::to_string(d) + ", below the floor " +
                                   std::to_string(tfloor));
    }
}

// Any type-sized independent subset of u must reach an unsaturated block or
// hit one block twice; the attachment ends are non-separating, so each lies
// in exactly one block.
void check_u_property(const AuxBipartite& aux, const AuxComponent& c, const ComponentProfile& p) {
    size_t nu = p.u.size();
    std::vector<size_t> blk(nu);
    std::vector<char> sat(nu);
    for (size_t i = 0; i < nu; ++i) {
        int x = local_of(c, p.u[i].first);
        if (vs_has(c.blocks.cut_vertices, x))
            throw invariant_error("classify_components: attachment at the cut vertex " +
                                  vname(p.u[i].first));
        for (size_t b = 0; b < c.blocks.blocks.size(); ++b)
            if (vs_has(c.blocks.blocks[b], x)) {
                blk[i] = b;
                break;
            }
        sat[i] = saturated_block(aux, c, blk[i]);
    }
    auto indep = [&](size_t i, size_t j) {
        return p.u[i].first != p.u[j].first && p.u[i].second != p.u[j].second;
    };
    auto fail = [&] {
        throw invariant_error("classify_components: u misses the block property in the component at vertex " +
                              vname(vs_min(c.vertices)));
    };
    switch (type_size(p.type)) {
        case 1:
            for (size_t i = 0; i < nu; ++i)
                if (sat[i]) fail();
            break;
        case 2:
            for (size_t i = 0; i < nu; ++i)
                for (size_t j = i + 1; j < nu; ++j)
                    if (indep(i, j) && sat[i] && sat[j] && blk[i] != blk[j]) fail();
            break;
        default:
            for (size_t i = 0; i < nu; ++i)
                for (size_t j = i + 1; j < nu; ++j)
                    for (size_t l = j + 1; l < nu; ++l) {
                        if (!indep(i, j) || !indep(i, l) || !indep(j, l)) continue;
                        if (sat[i] && sat[j] && sat[l] && blk[i] != blk[j] &&
                            blk[i] != blk[l] && blk[j] != blk[l])
                            fail();
                    }
    }
}

}  // namespace

int AuxBipartite::degree_y(int v) const {
    int d = 0;
    for (const AuxEdge& e : edges) d += e.y == v;
    return d;
}

int AuxBipartite::degree_t(int t) const {
    int d = 0;
    for (const AuxEdge& e : edges) d += e.t == t;
    return d;
}

int AuxBipartite::heavy_at(int v) const {
    int h = 0;
    for (const AuxEdge& e : edges) h += e.y == v && e.mult == 2;
    return h;
}

AuxBipartite build_aux_bipartite(const Graph& g, VSet y, int k) {
    if ((y & ~vs_all(g.n)) != 0) throw hypothesis_error("build_aux_bipartite: y out of range");
    VSet rest = vs_all(g.n) & ~y;
    if (rest == 0) throw hypothesis_error("build_aux_bipartite: no vertices outside y");
    AuxBipartite aux;
    aux.g = g;
    aux.y = y;
    aux.k = k;
    for (VSet comp : components_in(g, rest)) {
        AuxComponent c;
        c.vertices = comp;
        c.sub = induced(g, comp, &c.vertex_of);
        c.blocks = block_decomposition(c.sub);
        c.wk = to_host(c, w_k_vertices(c.sub, k));
        aux.components.push_back(std::move(c));
    }
    ATLAB_FOR_VSET(v, y) {
        for (size_t t = 0; t < aux.components.size(); ++t) {
            const AuxComponent& c = aux.components[t];
            VSet witness = g.neighbors(v) & c.wk;
            if (witness == 0) continue;
            AuxEdge e;
            e.y = v;
            e.t = static_cast<int>(t);
            e.mult = vs_count(g.neighbors(v) & c.vertices);
            e.wk_witness = witness;
            aux.edges.push_back(e);
        }
    }
    return aux;
}

int type_size(ComponentType t) {
    switch (t) {
        case ComponentType::t1: return 1;
        case ComponentType::t3: return 3;
        default: return 2;
    }
}

std::vector<ComponentProfile> classify_components(const AuxBipartite& aux, MhVariant variant) {
    int k = aux.k;
    check_degree_floors(aux, variant, "classify_components: ");
    for (const AuxEdge& e : aux.edges)
        if (e.mult >= 3)
            throw hypothesis_error("classify_components: y " + vname(e.y) + " has " +
                                   std::to_string(e.mult) + " edges into the component at vertex " +
                                   vname(vs_min(aux.components[e.t].vertices)));
    std::vector<ComponentProfile> out;
    for (size_t t = 0; t < aux.components.size(); ++t) {
        const AuxComponent& c = aux.components[t];
        ComponentProfile p;
        p.t = static_cast<int>(t);
        for (size_t b = 0; b < c.blocks.blocks.size(); ++b) {
            if (!c.blocks.is_endblock(b)) continue;
            if (!block_is_kk1(c, b, k))
                throw hypothesis_error("classify_components: the endblock at vertex " +
                                       vname(vs_min(to_host(c, c.blocks.blocks[b]))) +
                                       " is not K_" + std::to_string(k - 1));
            if (edges_to_y(aux.g, to_host(c, c.blocks.nonseparating(b)), aux.y).empty())
                throw hypothesis_error("classify_components: the endblock at vertex " +
                                       vname(vs_min(to_host(c, c.blocks.blocks[b]))) +
                                       " has no attachment into y");
            p.endblocks.push_back(b);
        }
        std::stable_partition(p.endblocks.begin(), p.endblocks.end(),
                              [&](size_t b) { return saturated_block(aux, c, b); });
        for (size_t b : p.endblocks) p.saturated.push_back(saturated_block(aux, c, b));
        // lexicographically least attachment per endblock
        auto attach = [&](size_t b) {
            return edges_to_y(aux.g, to_host(c, c.blocks.nonseparating(b)), aux.y).front();
        };
        size_t tcount = p.endblocks.size();
        auto too_few = [&] {
            return invariant_error("classify_components: too few attachment ends in the component at vertex " +
                                   vname(vs_min(c.vertices)));
        };
        if (p.saturated[0]) {
            if (tcount == 1) {
                p.type = ComponentType::t2a;
                p.u = edges_to_y(aux.g, c.vertices, aux.y);
            } else if (p.saturated[1]) {
                p.type = ComponentType::t3;
                p.u = edges_to_y(aux.g,
                                 to_host(c, c.blocks.nonseparating(p.endblocks[0]) |
                                                c.blocks.nonseparating(p.endblocks[1])),
                                 aux.y);
            } else {
                p.type = ComponentType::t2b;
                p.u = edges_to_y(aux.g, to_host(c, c.blocks.nonseparating(p.endblocks[0])), aux.y);
                p.u.push_back(attach(p.endblocks[1]));
            }
        } else if (variant == MhVariant::lopsided) {
            p.type = ComponentType::t1;
            if (tcount == 1) {
                auto picked = pick_distinct_ends(edges_to_y(aux.g, c.vertices, aux.y), 2);
                if (!picked) throw too_few();
                p.u = *picked;
            } else {
                p.u = {attach(p.endblocks[0]), attach(p.endblocks[1])};
            }
        } else if (tcount == 1) {
            p.type = ComponentType::t1;
            auto picked = pick_distinct_ends(edges_to_y(aux.g, c.vertices, aux.y), 3);
            if (!picked) throw too_few();
            p.u = *picked;
        } else if (tcount == 2) {
            bool done = false;
            for (size_t i = 0; i < 2 && !done; ++i) {
                auto es = edges_to_y(aux.g, to_host(c, c.blocks.nonseparating(p.endblocks[i])),
                                     aux.y);
                if (auto picked = pick_distinct_ends(es, 2)) {
                    p.type = ComponentType::t1;
                    p.u = *picked;
                    p.u.push_back(attach(p.endblocks[1 - i]));
                    done = true;
                }
            }
            if (!done) {
                // an internal complete block must carry a third attachment end
                auto e1 = attach(p.endblocks[0]), e2 = attach(p.endblocks[1]);
                VSet spare_y = aux.y & ~vs_single(e1.second) & ~vs_single(e2.second);
                std::optional<size_t> b0;
                std::pair<int, int> e0;
                for (size_t b = 0; b < c.blocks.blocks.size() && !b0; ++b) {
                    if (c.blocks.is_endblock(b) || !block_is_kk1(c, b, k)) continue;
                    auto es = edges_to_y(aux.g, to_host(c, c.blocks.nonseparating(b)), spare_y);
                    if (!es.empty()) {
                        b0 = b;
                        e0 = es.front();
                    }
                }
                if (!b0)
                    throw invariant_error("classify_components: no internal K_" +
                                          std::to_string(k - 1) +
                                          " with a spare attachment in the component at vertex " +
                                          vname(vs_min(c.vertices)));
                if (saturated_block(aux, c, *b0)) {
                    p.type = ComponentType::t2c;
                    p.u = {e1, e2};
                    for (const auto& e :
                         edges_to_y(aux.g, to_host(c, c.blocks.nonseparating(*b0)), aux.y))
                        p.u.push_back(e);
                } else {
                    p.type = ComponentType::t1;
                    p.u = {e1, e2, e0};
                }
            }
        } else {
            p.type = ComponentType::t1;
            p.u = {attach(p.endblocks[0]), attach(p.endblocks[1]), attach(p.endblocks[2])};
        }
        std::sort(p.u.begin(), p.u.end());
        p.u.erase(std::unique(p.u.begin(), p.u.end()), p.u.end());
        for (const AuxEdge& e : aux.edges) {
            if (e.t != p.t || e.mult != 2) continue;
            bool meets_u = std::any_of(p.u.begin(), p.u.end(),
                                       [&](const auto& xy) { return xy.second == e.y; });
            p.heavy_count += meets_u;
        }
        p.heavy = type_size(p.type) <= p.heavy_count;
        check_u_property(aux, c, p);
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

struct BSnapshot {
    std::vector<std::pair<int, int>> ydeg;     // (input label, degree)
    std::vector<std::pair<VSet, int>> comps;   // (input-labelled set, degree)
    bool operator==(const BSnapshot&) const = default;
};

BSnapshot take_snapshot(const AuxBipartite& aux, const std::vector<int>& v_of) {
    BSnapshot s;
    ATLAB_FOR_VSET(v, aux.y) s.ydeg.emplace_back(v_of[v], aux.degree_y(v));
    for (size_t t = 0; t < aux.components.size(); ++t) {
        VSet set = 0;
        ATLAB_FOR_VSET(v, aux.components[t].vertices) set |= vs_single(v_of[v]);
        s.comps.emplace_back(set, aux.degree_t(static_cast<int>(t)));
    }
    return s;
}

}  // namespace

MhReduction multiple_high_reduction(const Graph& g, VSet y, int k, MhVariant variant,
                                    const Budget& budget) {
    int kfloor = variant == MhVariant::symmetric ? 7 : 5;
    if (k < kfloor)
        throw hypothesis_error("multiple_high_reduction: k = " + std::to_string(k) +
                               " is below the variant floor " + std::to_string(kfloor));
    if ((y & ~vs_all(g.n)) != 0) throw hypothesis_error("multiple_high_reduction: y out of range");
    if ((vs_all(g.n) & ~y) == 0)
        throw hypothesis_error("multiple_high_reduction: no vertices outside y");
    if (has_clique(g, k))
        throw hypothesis_error("multiple_high_reduction: (1) violated: K_" + std::to_string(k) +
                               " is a subgraph");
    for (VSet comp : components_in(g, vs_all(g.n) & ~y))
        if (!in_gallai_class(induced(g, comp), k))
            throw hypothesis_error("multiple_high_reduction: (2) violated by the component at vertex " +
                                   vname(vs_min(comp)));
    ATLAB_FOR_VSET(v, vs_all(g.n) & ~y)
        if (g.degree(v) > k - 1)
            throw hypothesis_error("multiple_high_reduction: (3) violated at vertex " + vname(v));
    AuxBipartite aux = build_aux_bipartite(g, y, k);
    check_degree_floors(aux, variant, "multiple_high_reduction: (4) violated: ");

    // one y with three edges into a component, or two doubled edges, carries
    // the whole reduction by itself
    int short_y = -1;
    ATLAB_FOR_VSET(v, y) {
        bool triple = false;
        int doubled = 0;
        for (const AuxEdge& e : aux.edges) {
            if (e.y != v) continue;
            triple = triple || e.mult >= 3;
            doubled += e.mult == 2;
        }
        if (triple || doubled >= 2) {
            short_y = v;
            break;
        }
    }
    if (short_y >= 0) {
        MhReduction out;
        out.kept = vs_single(short_y);
        for (const AuxEdge& e : aux.edges)
            if (e.y == short_y) out.kept |= aux.components[e.t].vertices;
        out.sub = induced(g, out.kept, &out.vertex_of);
        out.shortcut_y = short_y;
        int x = vs_count(out.kept & (vs_single(short_y) - 1));
        try {
            out.cert = extend_type_one(out.sub, x, k, 1, budget);
        } catch (const hypothesis_error& ex) {
            throw invariant_error(std::string("multiple_high_reduction: shortcut patch failed: ") +
                                  ex.what());
        }
        return out;
    }

    // delete the non-separating part of every bad endblock; the bipartite
    // degrees must not move
    VSet kept = vs_all(g.n);
    std::vector<TrimStep> trim;
    std::optional<BSnapshot> expected;
    Graph sub;
    std::vector<int> v_of;
    for (;;) {
        v_of.clear();
        sub = induced(g, kept, &v_of);
        VSet y_local = 0;
        ATLAB_FOR_VSET(v, y) y_local |= vs_single(vs_count(kept & (vs_single(v) - 1)));
        aux = build_aux_bipartite(sub, y_local, k);
        BSnapshot snap = take_snapshot(aux, v_of);
        if (expected && !(snap == *expected))
            throw invariant_error("multiple_high_reduction: trimming changed the bipartite degrees");
        const AuxComponent* bad = nullptr;
        size_t bad_b = 0;
        for (size_t t = 0; t < aux.components.size() && !bad; ++t) {
            const AuxComponent& c = aux.components[t];
            for (size_t b = 0; b < c.blocks.blocks.size(); ++b) {
                if (!c.blocks.is_endblock(b)) continue;
                if (block_is_kk1(c, b, k) &&
                    !edges_to_y(aux.g, to_host(c, c.blocks.nonseparating(b)), aux.y).empty())
                    continue;
                bad = &c;
                bad_b = b;
                break;
            }
        }
        if (!bad) break;
        VSet block_in = 0, removed_in = 0;
        ATLAB_FOR_VSET(v, to_host(*bad, bad->blocks.blocks[bad_b]))
            block_in |= vs_single(v_of[v]);
        ATLAB_FOR_VSET(v, to_host(*bad, bad->blocks.nonseparating(bad_b)))
            removed_in |= vs_single(v_of[v]);
        trim.push_back({block_in, removed_in});
        kept &= ~removed_in;
        expected = std::move(snap);
        for (auto& [set, deg] : expected->comps) set &= ~removed_in;
        std::sort(expected->comps.begin(), expected->comps.end(),
                  [](const auto& a, const auto& b) {
                      auto key = [](VSet s) { return s ? vs_min(s) : 64; };
                      return key(a.first) < key(b.first);
                  });
    }

    std::vector<ComponentProfile> profiles = classify_components(aux, variant);

    // bipartite multigraph: components first, then the y vertices ascending
    int comps = static_cast<int>(aux.components.size());
    std::vector<int> ylist;
    ATLAB_FOR_VSET(v, aux.y) ylist.push_back(v);
    auto yindex = [&](int v) {
        return comps + static_cast<int>(std::lower_bound(ylist.begin(), ylist.end(), v) -
                                        ylist.begin());
    };
    IncidencePreference a;
    a.g = Multigraph(comps + static_cast<int>(ylist.size()));
    a.pref.assign(a.g.n, {});
    for (const AuxEdge& e : aux.edges) {
        int idx = a.g.add_edge(e.t, yindex(e.y));
        if (e.mult == 2) continue;  // doubled edges are favored by nobody
        a.pref[yindex(e.y)].push_back(idx);
        const ComponentProfile& p = profiles[e.t];
        if (p.heavy) continue;
        int x = vs_min(sub.neighbors(e.y) & aux.components[e.t].vertices);
        if (std::binary_search(p.u.begin(), p.u.end(), std::pair(x, e.y)))
            a.pref[e.t].push_back(idx);
    }
    DegreeFunc demand(a.g.n, 0);
    for (int t = 0; t < comps; ++t)
        demand[t] = profiles[t].heavy ? 0 : type_size(profiles[t].type) - profiles[t].heavy_count;
    for (size_t j = 0; j < ylist.size(); ++j)
        demand[comps + j] = 2 - aux.heavy_at(ylist[j]);

    // direct check of the supply-demand inequality: favored degrees minus
    // internal favored edges must cover the demands on every vertex subset,
    // or the full set when B is too large to sweep
    auto margin = [&](VSet s) {
        long long eta = 0;
        ATLAB_FOR_VSET(v, s) eta += a.pref_degree(v) - demand[v];
        for (size_t e = 0; e < a.g.edges.size(); ++e) {
            auto [p, q] = a.g.edges[e];
            int ei = static_cast<int>(e);
            if (vs_has(s, p) && vs_has(s, q) && (a.prefers(p, ei) || a.prefers(q, ei))) --eta;
        }
        return eta;
    };
    if (a.g.n <= 16) {
        for (VSet s = 1; s < vs_single(a.g.n); ++s)
            if (margin(s) < 0)
                throw invariant_error("multiple_high_reduction: negative supply margin on a subgraph of B");
    } else if (margin(vs_all(a.g.n)) < 0) {
        throw invariant_error("multiple_high_reduction: negative supply margin on B");
    }

    auto solved = solve_in_orientation(a, vs_all(a.g.n), demand);
    if (std::holds_alternative<WitnessSubgraph>(solved))
        throw invariant_error("multiple_high_reduction: bipartite demands refuted");
    Orientation bd = std::get<Orientation>(std::move(solved));

    MhReduction out;
    out.kept = kept;
    out.sub = sub;
    out.vertex_of = v_of;
    out.trim = std::move(trim);
    for (const AuxComponent& c : aux.components) out.component_vertices.push_back(c.vertices);
    for (size_t i = 0; i < aux.edges.size(); ++i) {
        const AuxEdge& e = aux.edges[i];
        out.b_orientation.push_back({e.y, e.t, bd.head(static_cast<int>(i)) == e.t});
    }

    // attachment edges: every doubled edge contributes one, preferably inside
    // u; a favored single edge contributes its g-edge when oriented into the
    // component
    std::vector<std::pair<int, int>> fpairs;
    for (size_t i = 0; i < aux.edges.size(); ++i) {
        const AuxEdge& e = aux.edges[i];
        const ComponentProfile& p = profiles[e.t];
        VSet hits = sub.neighbors(e.y) & aux.components[e.t].vertices;
        if (e.mult == 2) {
            std::pair<int, int> pick{-1, -1};
            ATLAB_FOR_VSET(x, hits) {
                if (std::binary_search(p.u.begin(), p.u.end(), std::pair(x, e.y))) {
                    pick = {x, e.y};
                    break;
                }
            }
            if (pick.first < 0) pick = {vs_min(hits), e.y};
            fpairs.push_back(pick);
        } else if (a.prefers(e.t, static_cast<int>(i)) && bd.head(static_cast<int>(i)) == e.t) {
            fpairs.push_back({vs_min(hits), e.y});
        }
    }
    std::sort(fpairs.begin(), fpairs.end());
    fpairs.erase(std::unique(fpairs.begin(), fpairs.end()), fpairs.end());
    out.f_edges = fpairs;
    out.profiles = std::move(profiles);

    ExtensionFrame frame;
    frame.g = Multigraph::of(sub);
    frame.y = aux.y;
    frame.f.resize(sub.n);
    for (int v = 0; v < sub.n; ++v) frame.f[v] = sub.degree(v) - vs_has(aux.y, v);
    std::map<std::pair<int, int>, int> eidx;
    for (size_t e = 0; e < frame.g.edges.size(); ++e)
        eidx[frame.g.edges[e]] = static_cast<int>(e);
    for (const auto& xy : fpairs)
        frame.f_edges.push_back(eidx.at({std::min(xy.first, xy.second), std::max(xy.first, xy.second)}));
    try {
        out.cert = extend_type_two(frame, budget);
    } catch (const hypothesis_error& ex) {
        throw invariant_error(std::string("multiple_high_reduction: final extension rejected: ") +
                              ex.what());
    }
    return out;
}

std::optional<AtReduction> find_at_reduction(const Graph& g, int cap, const Budget& budget) {
    if (g.n > cap)
        throw budget_error("find_at_reduction: " + std::to_string(g.n) +
                           " vertices exceeds cap " + std::to_string(cap));
    if (g.n == 0) return std::nullopt;
    int delta = g.degree(0);
    for (int v = 1; v < g.n; ++v) delta = std::min(delta, g.degree(v));
    for (int size = 1; size <= g.n; ++size) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        for (;;) {
            VSet h = 0;
            for (int v : pick) h |= vs_single(v);
            AtReduction red;
            red.vertices = h;
            red.sub = induced(g, h, &red.vertex_of);
            DegreeFunc f(red.sub.n);
            bool viable = true;
            for (int i = 0; i < red.sub.n; ++i) {
                f[i] = delta + red.sub.degree(i) - g.degree(red.vertex_of[i]);
                viable = viable && f[i] > 0;
            }
            if (viable) {
                if (auto cert = is_f_at(red.sub, f, budget)) {
                    red.cert = std::move(*cert);
                    return red;
                }
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == g.n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace atlab
