#include "atlab/json_io.hpp"

#include "atlab/graph6.hpp"

namespace atlab {

std::string rational_string(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

Json json_vset(VSet s) {
    Json a = Json::array();
    ATLAB_FOR_VSET(v, s) a.push_back(v);
    return a;
}

Json json_of(const Graph& g) {
    return {{"graph6", to_graph6(g)}, {"n", g.n}, {"m", g.size()}};
}

Json json_of(const Multigraph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return {{"n", g.n}, {"edges", edges}};
}

Json json_of(const Orientation& d) {
    Json arcs = Json::array();
    for (int i = 0; i < d.g.size(); ++i) arcs.push_back({d.tail(i), d.head(i)});
    return {{"n", d.g.n}, {"arcs", arcs}};
}

Json json_of(const ATCertificate& cert) {
    Json arcs = Json::array();
    for (int i = 0; i < cert.d.g.size(); ++i)
        arcs.push_back({cert.d.tail(i), cert.d.head(i)});
    return {{"graph6", to_graph6(cert.d.g.support())},
            {"n", cert.d.g.n},
            {"arcs", arcs},
            {"f", cert.f},
            {"ee", cert.ee},
            {"eo", cert.eo}};
}

ATCertificate certificate_of_json(const Json& j) {
    ATCertificate cert;
    try {
        const int n = j.at("n").get<int>();
        if (n < 0 || n > 64) throw parse_error("certificate order out of range");
        Multigraph m(n);
        std::vector<std::uint8_t> forward;
        for (const Json& a : j.at("arcs")) {
            const int t = a.at(0).get<int>(), h = a.at(1).get<int>();
            if (t < 0 || t >= n || h < 0 || h >= n)
                throw parse_error("certificate arc endpoint out of range");
            m.add_edge(t, h);
            forward.push_back(t < h);
        }
        cert.d.g = std::move(m);
        cert.d.forward = std::move(forward);
        cert.f = j.at("f").get<DegreeFunc>();
        cert.ee = j.at("ee").get<long long>();
        cert.eo = j.at("eo").get<long long>();
        if (to_graph6(cert.d.g.support()) != j.at("graph6").get<std::string>())
            throw parse_error("certificate graph6 does not match its arcs");
    } catch (const Json::exception& e) {
        throw parse_error(std::string("bad certificate json: ") + e.what());
    }
    if (static_cast<int>(cert.f.size()) != cert.d.g.n)
        throw parse_error("certificate f length mismatch");
    return cert;
}

Json json_of(const ExtensionFrame& frame) {
    Json edges = Json::array();
    for (auto [u, v] : frame.g.edges) edges.push_back({u, v});
    Json fe = Json::array();
    for (int i : frame.f_edges) {
        const auto [u, v] = frame.g.edges[i];
        fe.push_back({u, v});
    }
    return {{"graph6", to_graph6(frame.g.support())},
            {"edges", edges},
            {"f", frame.f},
            {"f_edges", fe},
            {"y_mask", frame.y}};
}

ExtensionFrame frame_of_json(const Json& j) {
    ExtensionFrame frame;
    try {
        const Graph support = parse_graph6(j.at("graph6").get<std::string>());
        Multigraph m(support.n);
        for (const Json& e : j.at("edges")) {
            const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            if (u < 0 || u >= support.n || v < 0 || v >= support.n)
                throw parse_error("frame edge endpoint out of range");
            m.add_edge(u, v);
        }
        if (m.support() != support)
            throw parse_error("frame edges do not match the graph6 support");
        frame.g = std::move(m);
        frame.f = j.at("f").get<DegreeFunc>();
        std::vector<char> used(frame.g.size(), 0);
        for (const Json& e : j.at("f_edges")) {
            int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            if (u > v) std::swap(u, v);
            int found = -1;
            for (int i = 0; i < frame.g.size(); ++i)
                if (!used[i] && frame.g.edges[i] == std::pair(u, v)) {
                    found = i;
                    break;
                }
            if (found < 0)
                throw parse_error("frame F edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") has no free instance");
            used[found] = 1;
            frame.f_edges.push_back(found);
        }
        frame.y = j.at("y_mask").get<VSet>();
    } catch (const Json::exception& e) {
        throw parse_error(std::string("bad frame json: ") + e.what());
    }
    if (static_cast<int>(frame.f.size()) != frame.g.n)
        throw parse_error("frame f length mismatch");
    if (frame.g.n < 64 && frame.y >> frame.g.n)
        throw parse_error("frame y_mask has bits beyond the vertex range");
    return frame;
}

namespace {

std::string type_name(ComponentType t) {
    switch (t) {
        case ComponentType::t1: return "1";
        case ComponentType::t2a: return "2a";
        case ComponentType::t2b: return "2b";
        case ComponentType::t2c: return "2c";
        case ComponentType::t3: return "3";
    }
    return "?";
}

}  // namespace

Json json_of(const ComponentProfile& p) {
    Json u = Json::array();
    for (auto [x, y] : p.u) u.push_back({x, y});
    Json sat = Json::array();
    for (char s : p.saturated) sat.push_back(static_cast<bool>(s));
    return {{"t", p.t},
            {"type", type_name(p.type)},
            {"u", u},
            {"endblocks", p.endblocks},
            {"saturated", sat},
            {"heavy_count", p.heavy_count},
            {"heavy", p.heavy}};
}

Json json_of(const AtReduction& r) {
    return {{"vertices", json_vset(r.vertices)},
            {"certificate", json_of(r.cert)}};
}

Json json_of(const MhReduction& r, const Graph& host, VSet y, int k,
             MhVariant variant) {
    Json trim = Json::array();
    for (const TrimStep& s : r.trim)
        trim.push_back({{"block", json_vset(s.block)},
                        {"removed", json_vset(s.removed)}});
    Json comps = Json::array();
    for (VSet c : r.component_vertices) comps.push_back(json_vset(c));
    Json profiles = Json::array();
    for (const ComponentProfile& p : r.profiles) profiles.push_back(json_of(p));
    Json arcs = Json::array();
    for (const BArc& a : r.b_orientation)
        arcs.push_back({{"y", a.y}, {"t", a.t}, {"into_t", a.into_t}});
    Json fe = Json::array();
    for (auto [x, yy] : r.f_edges) fe.push_back({x, yy});
    return {{"input", json_of(host)},
            {"y_mask", y},
            {"k", k},
            {"variant", variant == MhVariant::symmetric ? "symmetric" : "lopsided"},
            {"kept", json_vset(r.kept)},
            {"shortcut_y", r.shortcut_y},
            {"trim", trim},
            {"components", comps},
            {"profiles", profiles},
            {"b_orientation", arcs},
            {"f_edges", fe},
            {"certificate", json_of(r.cert)}};
}

Json json_of(const FunctionalReport& fr) {
    return {{"k", fr.k},
            {"c", rational_string(fr.c)},
            {"alpha", rational_string(fr.alpha)},
            {"low", json_vset(fr.low_part)},
            {"high", json_vset(fr.high_part)},
            {"sigma", rational_string(fr.sigma)},
            {"tau", rational_string(fr.tau)},
            {"tau_plus", rational_string(fr.tau_plus)},
            {"q", rational_string(fr.q)},
            {"g_bound", rational_string(fr.g_bound)}};
}

Json json_of(const SigmaTauAudit& a) {
    return {{"report", json_of(a.fr)},
            {"hyp_rhs", rational_string(a.hyp_rhs)},
            {"lhs", rational_string(a.lhs)},
            {"lhs_plus", rational_string(a.lhs_plus)},
            {"hypothesis", a.hypothesis},
            {"hypothesis_plus", a.hypothesis_plus},
            {"edges2", rational_string(a.edges2)},
            {"conclusion", a.conclusion},
            {"falsified", a.falsified},
            {"falsified_plus", a.falsified_plus}};
}

Json json_of(const SigmaBoundAudit& a) {
    return {{"sigma", rational_string(a.sigma)},
            {"q", rational_string(a.q)},
            {"bound", rational_string(a.bound)},
            {"clique", a.clique},
            {"ok", a.ok}};
}

Json json_of(const ScanRecord& r) {
    Json j = {{"graph6", r.g6},
              {"n", r.n},
              {"m", r.m},
              {"c", rational_string(r.c)},
              {"lhs", rational_string(r.lhs)},
              {"rhs", rational_string(r.rhs)},
              {"ok", r.ok},
              {"sigma_checked", r.sigma_checked}};
    if (r.sigma_checked) {
        j["sigma_lhs"] = rational_string(r.sigma_lhs);
        j["sigma_rhs"] = rational_string(r.sigma_rhs);
        j["sigma_ok"] = r.sigma_ok;
    } else {
        j["sigma_lhs"] = nullptr;
        j["sigma_rhs"] = nullptr;
        j["sigma_ok"] = nullptr;
    }
    return j;
}

Json scan_summary(const ScanReport& rep) {
    return {{"summary", true},
            {"k", rep.k},
            {"n_max", rep.n_max},
            {"mode", rep.mode == ScanMode::at_critical ? "at-critical" : "critical"},
            {"considered", rep.considered},
            {"qualifying", rep.records.size()},
            {"violations", rep.violations}};
}

}  // namespace atlab
