#include "atlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "atlab/blocks.hpp"
#include "atlab/errors.hpp"

namespace atlab {

namespace {

std::string vname(int v) { return std::to_string(v); }

std::pair<int, int> ekey(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Edge pair -> index.  Callers only use this on simple multigraphs.
std::map<std::pair<int, int>, int> edge_index(const Multigraph& m) {
    std::map<std::pair<int, int>, int> idx;
    for (int e = 0; e < m.size(); ++e) idx[m.edges[e]] = e;
    return idx;
}

// BFS over g[inside] seeded in the given order; neighbours join smallest first.
std::vector<int> bfs_order(const Graph& g, VSet inside, const std::vector<int>& seeds) {
    std::vector<int> order;
    VSet seen = 0;
    for (int s : seeds) {
        order.push_back(s);
        seen |= vs_single(s);
    }
    for (size_t i = 0; i < order.size(); ++i) {
        ATLAB_FOR_VSET(w, g.neighbors(order[i]) & inside & ~seen) {
            seen |= vs_single(w);
            order.push_back(w);
        }
    }
    return order;
}

// Copies the arcs of a certificate on an induced subgraph back onto d, with
// verts mapping subgraph labels to labels of d's graph.
void lift_arcs(Orientation& d, const std::map<std::pair<int, int>, int>& gidx,
               const ATCertificate& sub, const std::vector<int>& verts) {
    for (int i = 0; i < sub.d.g.size(); ++i) {
        auto [p, q] = sub.d.g.edges[i];
        int e = gidx.at(ekey(verts[p], verts[q]));
        d.forward[e] = d.g.edges[e].first == verts[sub.d.tail(i)];
    }
}

}  // namespace

bool IncidencePreference::prefers(int v, int e) const {
    return std::find(pref[v].begin(), pref[v].end(), e) != pref[v].end();
}

int IncidencePreference::pref_degree(int v) const { return static_cast<int>(pref[v].size()); }

std::variant<Orientation, WitnessSubgraph> solve_in_orientation(const IncidencePreference& a,
                                                                VSet s, const DegreeFunc& demand) {
    const Multigraph& g = a.g;
    const int n = g.n;
    const int m = g.size();
    if (static_cast<int>(a.pref.size()) != n)
        throw hypothesis_error("solve_in_orientation: preference table size mismatch");
    if (static_cast<int>(demand.size()) != n)
        throw hypothesis_error("solve_in_orientation: demand size mismatch");
    if (s & ~vs_all(n)) throw hypothesis_error("solve_in_orientation: s out of range");

    std::vector<std::vector<char>> fav(n, std::vector<char>(m, 0));
    for (int v = 0; v < n; ++v)
        for (int e : a.pref[v]) {
            if (e < 0 || e >= m || (g.edges[e].first != v && g.edges[e].second != v))
                throw hypothesis_error("solve_in_orientation: preference of vertex " + vname(v) +
                                       " is not an incident edge");
            if (fav[v][e]) throw hypothesis_error("solve_in_orientation: duplicate preference");
            fav[v][e] = 1;
        }

    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < m; ++e) {
        inc[g.edges[e].first].push_back(e);
        inc[g.edges[e].second].push_back(e);
    }

    Orientation d = lexicographic_orientation(g);
    std::vector<int> din(n, 0);  // favored in-degree d^-(v, A)
    for (int e = 0; e < m; ++e) din[d.head(e)] += fav[d.head(e)][e];

    for (;;) {
        int x0 = -1;
        ATLAB_FOR_VSET(v, s) {
            if (din[v] < demand[v]) {
                x0 = v;
                break;
            }
        }
        if (x0 < 0) return d;

        // Grow the set reachable from x0 along favored out-arcs.  An arc may
        // be a path endpoint once its head can absorb the lost in-arc: it is
        // outside s, does not favor the edge, or sits above its demand.
        std::vector<int> par_v(n, -1), par_e(n, -1), queue{x0};
        VSet seen = vs_single(x0);
        int term_e = -1, term_from = -1;
        for (size_t qi = 0; qi < queue.size() && term_e < 0; ++qi) {
            int u = queue[qi];
            std::vector<std::pair<int, int>> outs;
            for (int e : inc[u])
                if (d.tail(e) == u && fav[u][e]) outs.emplace_back(d.head(e), e);
            std::sort(outs.begin(), outs.end());
            for (auto [w, e] : outs) {
                if (!vs_has(s, w) || !fav[w][e] || din[w] > demand[w]) {
                    term_e = e;
                    term_from = u;
                    break;
                }
                if (!vs_has(seen, w)) {
                    seen |= vs_single(w);
                    par_v[w] = u;
                    par_e[w] = e;
                    queue.push_back(w);
                }
            }
        }

        if (term_e < 0) {
            // Every favored arc out of the explored set ends at a vertex that
            // favors it and sits at or below demand, so the supply inside the
            // set falls short.
            WitnessSubgraph h;
            h.vertices = seen;
            ATLAB_FOR_VSET(v, seen) {
                h.pref_degree_sum += static_cast<int>(a.pref[v].size());
                h.demand += demand[v];
            }
            for (int e = 0; e < m; ++e) {
                auto [u, v] = g.edges[e];
                if (vs_has(seen, u) && vs_has(seen, v) && fav[u][e] && fav[v][e]) ++h.good_edges;
            }
            if (h.pref_degree_sum - h.good_edges >= h.demand)
                throw invariant_error("solve_in_orientation: stalled without a valid witness");
            return h;
        }

        int u = term_from, e = term_e;
        for (;;) {
            din[d.head(e)] -= fav[d.head(e)][e];
            d.forward[e] ^= 1;
            din[u] += fav[u][e];
            if (u == x0) break;
            e = par_e[u];
            u = par_v[u];
        }
    }
}

ATCertificate d0_orientation(const Graph& g) {
    if (!connected(g)) throw hypothesis_error("d0_orientation: graph not connected");
    auto w = find_even_cycle_one_chord(g);
    if (!w) throw hypothesis_error("d0_orientation: not d_0-AT (Gallai tree)");

    const auto& cyc = w->cycle;
    const int len = static_cast<int>(cyc.size());
    std::vector<int> order = bfs_order(g, vs_all(g.n), cyc);
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    Multigraph m = Multigraph::of(g);
    Orientation d(m);
    auto gidx = edge_index(m);
    std::vector<char> in_h(m.size(), 0);
    for (int i = 0; i < len; ++i) {
        int u = cyc[i], v = cyc[(i + 1) % len];
        int e = gidx.at(ekey(u, v));
        in_h[e] = 1;
        d.forward[e] = u < v;
    }

    // The cycle arcs close into one directed cycle (even), and a chord adds
    // exactly one more through the wrap arc.  Every other arc runs forward in
    // the order, so these are the only Eulerian arc sets besides the empty one.
    long long ee = 2, eo = 0;
    if (w->chord) {
        auto [ca, cb] = *w->chord;
        if (pos[ca] > pos[cb]) std::swap(ca, cb);
        int e = gidx.at(ekey(ca, cb));
        in_h[e] = 1;
        d.forward[e] = ca < cb;
        int chord_cycle = len - (pos[cb] - pos[ca]) + 1;
        if (chord_cycle % 2 == 0)
            ee = 3;
        else
            eo = 1;
    }
    for (int e = 0; e < m.size(); ++e) {
        if (in_h[e]) continue;
        auto [u, v] = m.edges[e];
        d.forward[e] = pos[u] < pos[v];
    }
    return {d, degree_func(g), ee, eo};
}

ATCertificate compose_at_cut_vertex(const Graph& g, VSet a, VSet b) {
    const int n = g.n;
    if ((a | b) != vs_all(n))
        throw hypothesis_error("compose_at_cut_vertex: sides must cover the graph");
    if (vs_count(a & b) != 1)
        throw hypothesis_error("compose_at_cut_vertex: sides must share exactly one vertex");
    int x = vs_min(a & b);
    for (auto [u, v] : g.edges())
        if (!((vs_has(a, u) && vs_has(a, v)) || (vs_has(b, u) && vs_has(b, v))))
            throw hypothesis_error("compose_at_cut_vertex: edge " + vname(u) + "-" + vname(v) +
                                   " crosses the separation");

    auto side = [&](VSet sv, const char* name) {
        std::vector<int> verts;
        Graph gs = induced(g, sv, &verts);
        if (!connected(gs))
            throw hypothesis_error(std::string("compose_at_cut_vertex: side ") + name +
                                   " not connected");
        try {
            return std::pair(d0_orientation(gs), verts);
        } catch (const hypothesis_error&) {
            throw hypothesis_error(std::string("compose_at_cut_vertex: side ") + name +
                                   " is a Gallai tree");
        }
    };
    auto [ca, va] = side(a, "a");
    auto [cb, vb] = side(b, "b");

    Multigraph m = Multigraph::of(g);
    Orientation d(m);
    auto gidx = edge_index(m);
    lift_arcs(d, gidx, ca, va);
    lift_arcs(d, gidx, cb, vb);

    DegreeFunc f = degree_func(g);
    f[x] -= 1;
    // A directed cycle stays on one side of x, so Eulerian arc sets split and
    // the parity classes multiply.
    long long ee = ca.ee * cb.ee + ca.eo * cb.eo;
    long long eo = ca.ee * cb.eo + ca.eo * cb.ee;
    return {d, f, ee, eo};
}

ATCertificate compose_at_split(const Graph& g, VSet h, const DegreeFunc& f,
                               const ATCertificate& cert_h, const ATCertificate& cert_rest) {
    const int n = g.n;
    if (static_cast<int>(f.size()) != n) throw hypothesis_error("compose_at_split: f size mismatch");
    if (h & ~vs_all(n)) throw hypothesis_error("compose_at_split: h out of range");

    std::vector<int> vh, vr;
    Graph gh = induced(g, h, &vh);
    Graph gr = induced(g, vs_all(n) & ~h, &vr);
    if (cert_h.d.g.n != gh.n || cert_h.d.g.edges != gh.edges() ||
        static_cast<int>(cert_h.f.size()) != gh.n)
        throw hypothesis_error("compose_at_split: certificate does not match g[h]");
    if (cert_rest.d.g.n != gr.n || cert_rest.d.g.edges != gr.edges() ||
        static_cast<int>(cert_rest.f.size()) != gr.n)
        throw hypothesis_error("compose_at_split: certificate does not match g - h");
    for (int i = 0; i < gh.n; ++i) {
        int v = vh[i];
        if (cert_h.f[i] != f[v] + gh.degree(i) - g.degree(v))
            throw hypothesis_error("compose_at_split: f mismatch at vertex " + vname(v));
    }
    for (int j = 0; j < gr.n; ++j) {
        int v = vr[j];
        if (cert_rest.f[j] != f[v])
            throw hypothesis_error("compose_at_split: f mismatch at vertex " + vname(v));
    }

    Multigraph m = Multigraph::of(g);
    Orientation d(m);
    auto gidx = edge_index(m);
    lift_arcs(d, gidx, cert_h, vh);
    lift_arcs(d, gidx, cert_rest, vr);
    for (int e = 0; e < m.size(); ++e) {
        auto [u, v] = m.edges[e];
        if (vs_has(h, u) != vs_has(h, v)) d.forward[e] = vs_has(h, u);
    }

    // Crossing arcs all leave h, so no directed cycle crosses and the parity
    // classes multiply as in the cut-vertex case.
    long long ee = cert_h.ee * cert_rest.ee + cert_h.eo * cert_rest.eo;
    long long eo = cert_h.ee * cert_rest.eo + cert_h.eo * cert_rest.ee;
    return {d, f, ee, eo};
}

ATCertificate extend_type_two(const ExtensionFrame& frame, const Budget& budget) {
    const Multigraph& g = frame.g;
    const int n = g.n;
    const int m = g.size();
    if (static_cast<int>(frame.f.size()) != n)
        throw hypothesis_error("extend_type_two: f size mismatch");
    if (frame.y & ~vs_all(n)) throw hypothesis_error("extend_type_two: y out of range");
    {
        auto fe = frame.f_edges;
        std::sort(fe.begin(), fe.end());
        if (std::adjacent_find(fe.begin(), fe.end()) != fe.end() ||
            (!fe.empty() && (fe.front() < 0 || fe.back() >= m)))
            throw hypothesis_error("extend_type_two: f_edges invalid");
    }
    const VSet y = frame.y;

    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        if (g.multiplicity(u, v) > 1 && !(vs_has(y, u) && vs_has(y, v)))
            throw hypothesis_error("extend_type_two: (1) violated: parallel edge " + vname(u) +
                                   "-" + vname(v) + " leaves y");
    }
    std::vector<int> dg(n, 0), dy(n, 0), df(n, 0);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        ++dg[u], ++dg[v];
        if (vs_has(y, u) && vs_has(y, v)) ++dy[u], ++dy[v];
    }
    for (int e : frame.f_edges) {
        ++df[g.edges[e].first];
        ++df[g.edges[e].second];
    }
    ATLAB_FOR_VSET(v, vs_all(n) & ~y) {
        if (frame.f[v] < dg[v])
            throw hypothesis_error("extend_type_two: (2) violated at vertex " + vname(v));
    }
    ATLAB_FOR_VSET(v, y) {
        if (frame.f[v] < dy[v] + df[v] + 1)
            throw hypothesis_error("extend_type_two: (3) violated at vertex " + vname(v));
    }

    const Graph sup = g.support();
    struct Stage {
        VSet t = 0;
        int x1 = -1, x2 = -1, y1 = -1, y2 = -1;
        int synth = -1;  // work index of the replacement edge, -1 for the charge variant
    };
    std::vector<std::pair<int, int>> work(g.edges);
    std::vector<char> f_alive(m, 0);
    for (int e : frame.f_edges) f_alive[e] = 1;
    auto f_has = [&](int p, int q) {
        for (int e = 0; e < m; ++e)
            if (f_alive[e] && work[e] == ekey(p, q)) return true;
        return false;
    };

    std::vector<Stage> stages;
    VSet active = vs_all(n);
    while (active & ~y) {
        VSet t = components_in(sup, active & ~y).front();
        std::optional<Stage> found;
        ATLAB_FOR_VSET(x1, t) {
            ATLAB_FOR_VSET(x2, t) {
                if (x1 == x2) continue;
                if (((sup.neighbors(x1) & t) | vs_single(x1)) !=
                    ((sup.neighbors(x2) & t) | vs_single(x2)))
                    continue;
                VSet trest = t & ~vs_single(x1) & ~vs_single(x2);
                if (trest && !connected_in(sup, trest)) continue;
                VSet ny1 = sup.neighbors(x1) & y, ny2 = sup.neighbors(x2) & y;
                if (vs_count(ny1) != 1) continue;
                int y1 = vs_min(ny1);
                if (!f_has(x1, y1)) continue;
                if (vs_count(ny2) == 1) {
                    int y2 = vs_min(ny2);
                    if (y2 != y1 && f_has(x2, y2)) {
                        found = Stage{t, x1, x2, y1, y2, -1};
                        break;
                    }
                }
                if (ny2 == 0) {
                    found = Stage{t, x1, x2, y1, -1, -1};
                    break;
                }
            }
            if (found) break;
        }
        if (!found)
            throw hypothesis_error("extend_type_two: (4) violated in the component containing vertex " +
                                   vname(vs_min(t)));
        if (found->y2 >= 0) {
            found->synth = static_cast<int>(work.size());
            work.push_back(ekey(found->y1, found->y2));
        }
        for (int e = 0; e < m; ++e)
            if (f_alive[e] && (vs_has(t, work[e].first) || vs_has(t, work[e].second)))
                f_alive[e] = 0;
        stages.push_back(*found);
        active &= ~t;
    }

    // Base: everything that is left lives in y and runs small to large, which
    // is acyclic.  Unwind the excisions newest first: each component comes
    // back ordered from its twin pair, its edges running forward, with y1
    // feeding x1 and every other boundary edge leaving the component.
    std::vector<std::uint8_t> fwd(work.size(), 1);
    std::vector<int> pos(n, -1);
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        Stage st = *it;
        if (st.synth >= 0) {
            int headv = fwd[st.synth] ? work[st.synth].second : work[st.synth].first;
            if (headv != st.y2) {
                std::swap(st.x1, st.x2);
                std::swap(st.y1, st.y2);
            }
        }
        auto order = bfs_order(sup, st.t, {st.x1, st.x2});
        for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = work[e];
            bool ut = vs_has(st.t, u), vt = vs_has(st.t, v);
            if (!ut && !vt) continue;
            if (ut && vt) {
                fwd[e] = pos[u] < pos[v];
                continue;
            }
            int tv = ut ? u : v, yv = ut ? v : u;
            int tailv = (tv == st.x1 && yv == st.y1) ? yv : tv;
            fwd[e] = u == tailv;
        }
    }

    Orientation d(g);
    d.forward.assign(fwd.begin(), fwd.begin() + m);
    auto [ee, eo] = count_eulerian(d, budget);
    if (ee == eo) throw invariant_error("extend_type_two: parity counts agree after unwinding");
    auto outs = d.out_degrees();
    for (int v = 0; v < n; ++v)
        if (outs[v] > frame.f[v] - 1)
            throw invariant_error("extend_type_two: out-degree cap broken at vertex " + vname(v));
    return {d, frame.f, ee, eo};
}

namespace {

// True if some neighbour of x lies in a clique of order k-1 of g[comp].
bool x_sees_wk(const Graph& g, int x, VSet comp, int k) {
    std::vector<int> verts;
    Graph hc = induced(g, comp, &verts);
    VSet wk = w_k_vertices(hc, k);
    ATLAB_FOR_VSET(i, wk) {
        if (g.has_edge(x, verts[i])) return true;
    }
    return false;
}

std::optional<std::string> t1_single_violation(const Graph& g, int x, int k, int r) {
    if (r < 0) return "r must be nonnegative";
    if (k < r + 4) return "k must be at least r + 4";
    if (g.n == k && is_complete(g)) return "g is complete of order k";
    VSet rest = vs_all(g.n) & ~vs_single(x);
    if (!rest) return "g - x is empty";
    if (!connected_in(g, rest)) return "g - x is disconnected";
    if (!in_gallai_class(induced(g, rest), k)) return "g - x is outside the Gallai class for k";
    if (g.degree(x) < r + 2) return "x has degree below r + 2";
    ATLAB_FOR_VSET(v, rest) {
        if (g.degree(v) > k - 1) return "a vertex other than x has degree above k - 1";
    }
    if (!x_sees_wk(g, x, rest, k))
        return "x has no neighbour inside a clique of order k - 1 in g - x";
    return std::nullopt;
}

std::optional<std::string> t1_double_violation(const Graph& g, int x, int k, int r) {
    if (r != 1) return "r must be 1";
    if (k < 4) return "k must be at least 4";
    auto comps = components_in(g, vs_all(g.n) & ~vs_single(x));
    if (comps.size() != 2) return "g - x must have exactly two components";
    for (VSet c : comps) {
        if (vs_count(g.neighbors(x) & c) != 2)
            return "x must have exactly two neighbours in each component";
        if (!in_gallai_class(induced(g, c), k))
            return "a component of g - x is outside the Gallai class for k";
        if (!x_sees_wk(g, x, c, k))
            return "a component has no x-neighbour inside a clique of order k - 1";
    }
    return std::nullopt;
}

std::optional<std::string> t1_general_violation(const Graph& g, int x, int k, int r) {
    if (r != 1) return "r must be 1";
    if (k < 5) return "k must be at least 5";
    if (has_clique(g, k)) return "g contains a clique of order k";
    VSet rest = vs_all(g.n) & ~vs_single(x);
    if (!rest) return "g - x is empty";
    auto comps = components_in(g, rest);
    if (g.degree(x) < static_cast<int>(comps.size()) + 2)
        return "x needs degree at least the component count plus 2";
    ATLAB_FOR_VSET(v, rest) {
        if (g.degree(v) > k - 1) return "a vertex other than x has degree above k - 1";
    }
    for (VSet c : comps) {
        if (!in_gallai_class(induced(g, c), k))
            return "a component of g - x is outside the Gallai class for k";
        if (!x_sees_wk(g, x, c, k))
            return "a component has no x-neighbour inside a clique of order k - 1";
    }
    return std::nullopt;
}

// One-component form.  Peels a non-separating vertex of g - x whose removal
// keeps every hypothesis, orienting its edges into it; when nothing peels,
// hands the twin pair at x over to the frame extension.
ATCertificate t1_single(const Graph& g, int x, int k, int r, const Budget& budget) {
    VSet rest = vs_all(g.n) & ~vs_single(x);
    std::vector<int> verts;
    Graph h = induced(g, rest, &verts);
    VSet q = vs_all(h.n) & ~block_decomposition(h).cut_vertices;

    ATLAB_FOR_VSET(yh, q) {
        int y = verts[yh];
        std::vector<int> gverts;
        Graph g2 = remove_vertex(g, y, &gverts);
        int x2 = x - (x > y);
        if (t1_single_violation(g2, x2, k, r)) continue;
        ATCertificate sub = t1_single(g2, x2, k, r, budget);
        Multigraph mg = Multigraph::of(g);
        Orientation d(mg);
        auto gidx = edge_index(mg);
        lift_arcs(d, gidx, sub, gverts);
        ATLAB_FOR_VSET(w, g.neighbors(y)) {
            int e = gidx.at(ekey(w, y));
            d.forward[e] = d.g.edges[e].first == w;
        }
        DegreeFunc f = degree_func(g);
        f[x] -= r;
        // y is a sink, so every Eulerian arc set avoids it and the counts of
        // the peeled graph carry over.
        return {d, f, sub.ee, sub.eo};
    }

    ATLAB_FOR_VSET(zh, q) {
        int z = verts[zh];
        if (!g.has_edge(x, z)) continue;
        ATLAB_FOR_VSET(yh, q) {
            int yv = verts[yh];
            if (yh == zh || g.has_edge(x, yv)) continue;
            if (((h.neighbors(zh) | vs_single(zh))) != ((h.neighbors(yh) | vs_single(yh))))
                continue;
            VSet hrest = vs_all(h.n) & ~vs_single(zh) & ~vs_single(yh);
            if (hrest && !connected_in(h, hrest)) continue;
            ExtensionFrame fr;
            fr.g = Multigraph::of(g);
            fr.f = degree_func(g);
            fr.f[x] -= r;
            fr.y = vs_single(x);
            fr.f_edges = {edge_index(fr.g).at(ekey(x, z))};
            return extend_type_two(fr, budget);
        }
    }
    throw invariant_error("extend_type_one: peeling stalled without a terminal twin pair");
}

ATCertificate t1_double(const Graph& g, int x) {
    auto comps = components_in(g, vs_all(g.n) & ~vs_single(x));
    try {
        return compose_at_cut_vertex(g, comps[0] | vs_single(x), comps[1] | vs_single(x));
    } catch (const hypothesis_error& ex) {
        throw invariant_error(std::string("extend_type_one: two-component patch failed: ") +
                              ex.what());
    }
}

ATCertificate t1_general(const Graph& g, int x, int k, const Budget& budget) {
    VSet rest = vs_all(g.n) & ~vs_single(x);
    auto comps = components_in(g, rest);
    int single_core = -1;
    std::vector<int> pairs;
    for (size_t i = 0; i < comps.size(); ++i) {
        int nb = vs_count(g.neighbors(x) & comps[i]);
        if (nb >= 3 && single_core < 0) single_core = static_cast<int>(i);
        if (nb == 2) pairs.push_back(static_cast<int>(i));
    }

    VSet core_mask = vs_single(x);
    std::vector<int> verts;
    ATCertificate core;
    if (single_core >= 0) {
        core_mask |= comps[single_core];
        Graph gs = induced(g, core_mask, &verts);
        int xs = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
        if (auto bad = t1_single_violation(gs, xs, k, 1))
            throw invariant_error("extend_type_one: core hypotheses failed: " + *bad);
        core = t1_single(gs, xs, k, 1, budget);
    } else if (pairs.size() >= 2) {
        core_mask |= comps[pairs[0]] | comps[pairs[1]];
        Graph gs = induced(g, core_mask, &verts);
        int xs = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
        if (auto bad = t1_double_violation(gs, xs, k, 1))
            throw invariant_error("extend_type_one: core hypotheses failed: " + *bad);
        core = t1_double(gs, xs);
    } else {
        throw invariant_error("extend_type_one: no usable core among the components");
    }

    Multigraph mg = Multigraph::of(g);
    Orientation d(mg);
    auto gidx = edge_index(mg);
    lift_arcs(d, gidx, core, verts);
    std::vector<int> pos(g.n, -1);
    for (VSet c : comps) {
        if (c & core_mask) continue;
        int z = vs_min(g.neighbors(x) & c);
        auto order = bfs_order(g, c, {z});
        for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        for (int e = 0; e < mg.size(); ++e) {
            auto [u, v] = mg.edges[e];
            bool uc = vs_has(c, u), vc = vs_has(c, v);
            if (uc && vc)
                d.forward[e] = pos[u] < pos[v];
            else if (uc || vc)
                d.forward[e] = !vs_has(c, mg.edges[e].first);  // x feeds the component
        }
    }
    DegreeFunc f = degree_func(g);
    f[x] -= 1;
    // Spare components sit below x in a topological order, so they carry no
    // directed cycle and the core counts stand.
    return {d, f, core.ee, core.eo};
}

}  // namespace

ATCertificate extend_type_one(const Graph& g, int x, int k, int r, const Budget& budget) {
    if (x < 0 || x >= g.n) throw hypothesis_error("extend_type_one: x out of range");
    auto vs = t1_single_violation(g, x, k, r);
    auto vd = t1_double_violation(g, x, k, r);
    auto vg = t1_general_violation(g, x, k, r);

    ATCertificate cert;
    if (!vs)
        cert = t1_single(g, x, k, r, budget);
    else if (!vd)
        cert = t1_double(g, x);
    else if (!vg)
        cert = t1_general(g, x, k, budget);
    else
        throw hypothesis_error("extend_type_one: no construction applies\n  one component: " + *vs +
                               "\n  two components: " + *vd + "\n  general: " + *vg);

    auto [ee, eo] = count_eulerian(cert.d, budget);
    if (ee != cert.ee || eo != cert.eo)
        throw invariant_error("extend_type_one: parity counts drifted during assembly");
    auto outs = cert.d.out_degrees();
    for (int v = 0; v < g.n; ++v)
        if (outs[v] > cert.f[v] - 1)
            throw invariant_error("extend_type_one: out-degree cap broken at vertex " + vname(v));
    return cert;
}

}  // namespace atlab
