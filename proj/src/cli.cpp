#include "atlab/cli.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "atlab/at_solver.hpp"
#include "atlab/blocks.hpp"
#include "atlab/bounds.hpp"
#include "atlab/constructions.hpp"
#include "atlab/errors.hpp"
#include "atlab/games.hpp"
#include "atlab/graph6.hpp"
#include "atlab/json_io.hpp"
#include "atlab/poly.hpp"
#include "atlab/reduction.hpp"

namespace atlab::cli {

namespace {

constexpr int kUnset = std::numeric_limits<int>::min();

struct Opts {
    std::string graph_arg;
    std::string file;
    bool json = false;
    int jobs = 0;
    std::string budget_arg;
    int k = kUnset;
    std::string f_arg;
    std::string c_arg;
    std::string forward;
    std::string degrees_arg;
    std::string y_arg;
    std::string variant;
    std::string mode;
    std::string kind;
    std::string frame_file;
    std::string witness_dir;
    bool adj = false;
    int cap = 8;
    int n_max = 0;
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw parse_error("bad integer '" + item + "' in list");
        }
    }
    return out;
}

VSet vset_of_list(const std::vector<int>& vs, int n) {
    VSet s = 0;
    for (int v : vs) {
        if (v < 0 || v >= n)
            throw parse_error("vertex " + std::to_string(v) + " out of range");
        s |= vs_single(v);
    }
    return s;
}

Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw parse_error("bad rational '" + s + "', expected p/q");
    }
}

int resolve_jobs(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("ATLAB_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::string join(const std::vector<int>& xs, const char* sep) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string vset_text(VSet s) {
    std::string out;
    ATLAB_FOR_VSET(v, s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

// "label: 1 2 3" with no trailing space when the set is empty
std::string labeled(const char* label, VSet s) {
    const std::string body = vset_text(s);
    return body.empty() ? std::string(label) + ":" : std::string(label) + ": " + body;
}

void emit(std::ostream& os, const Json& j) { os << j.dump() << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in) {
    Opts o;
    CLI::App app{"Alon-Tarsi orientation certificates, reductions and edge bounds"};
    app.require_subcommand(1);

    auto graph_source = [&](CLI::App* sub, bool with_budget) {
        sub->add_option("graph", o.graph_arg, "graph6 string, or - to stream stdin");
        sub->add_option("--file", o.file, "file with one graph6 per line");
        sub->add_flag("--adj", o.adj,
                      "input is adjacency text, one graph per file or stream");
        sub->add_flag("--json", o.json, "machine-readable output");
        sub->add_option("--jobs", o.jobs,
                        "workers across input graphs (default ATLAB_JOBS or 1)");
        if (with_budget)
            sub->add_option("--budget", o.budget_arg,
                            "EDGES:NODES override of the search caps");
        return sub;
    };

    auto* at_number_c = graph_source(
        app.add_subcommand("at-number", "least k admitting a constant-k certificate"), true);
    auto* is_at_c = graph_source(
        app.add_subcommand("is-at", "test f-AT and print the certificate"), true);
    is_at_c->add_option("-f", o.f_arg, "comma-separated f values");
    is_at_c->add_option("-k", o.k, "constant f");
    is_at_c->add_option("--frame", o.frame_file,
                        "replay an extension-frame JSON file instead");
    auto* ee_eo_c = graph_source(
        app.add_subcommand("ee-eo", "Eulerian parity counts of an orientation"), true);
    ee_eo_c->add_option("--forward", o.forward,
                        "bit per lex-sorted edge, 1 = small-to-large")
        ->required();
    auto* coeff_c = graph_source(
        app.add_subcommand("coeff", "graph polynomial coefficient at a degree vector"),
        false);
    coeff_c->add_option("--degrees", o.degrees_arg, "comma-separated exponents")
        ->required();
    auto* gallai_c = graph_source(
        app.add_subcommand("gallai", "Gallai tree test, with even-cycle witness"),
        false);
    gallai_c->add_option("-k", o.k, "instead test Gallai class membership for k");
    graph_source(app.add_subcommand("blocks", "block-cut decomposition"), false);
    auto* reduce_c = graph_source(
        app.add_subcommand("reduce", "first AT-reduction subgraph, if any"), true);
    reduce_c->add_option("--cap", o.cap, "vertex cap (default 8)");
    auto* mh_c = graph_source(
        app.add_subcommand("mh-reduce", "multiple-high-vertex reduction pipeline"),
        true);
    mh_c->add_option("--y", o.y_arg, "comma-separated high vertices")->required();
    mh_c->add_option("-k", o.k, "clique parameter")->required();
    mh_c->add_option("--variant", o.variant, "degree floors")
        ->required()
        ->check(CLI::IsMember({"symmetric", "lopsided"}));
    auto* choosable_c = graph_source(
        app.add_subcommand("choosable", "f-choosability by list enumeration"), false);
    choosable_c->add_option("-f", o.f_arg, "comma-separated f values");
    choosable_c->add_option("-k", o.k, "constant f");
    auto* online_c = graph_source(
        app.add_subcommand("online", "online f-choosability by game search"), false);
    online_c->add_option("-f", o.f_arg, "comma-separated f values");
    online_c->add_option("-k", o.k, "constant f");
    auto* critical_c = graph_source(
        app.add_subcommand("critical", "k-criticality for the chromatic number"),
        false);
    critical_c->add_option("-k", o.k, "target k")->required();
    auto* at_critical_c = graph_source(
        app.add_subcommand("at-critical", "k-AT-criticality"), false);
    at_critical_c->add_option("-k", o.k, "target k")->required();
    auto* bounds_c = graph_source(
        app.add_subcommand("bounds", "sigma, tau, q and the density target"), false);
    bounds_c->add_option("-k", o.k, "degree split parameter")->required();
    bounds_c->add_option("-c", o.c_arg, "rational c (default the variant constant)");
    auto* table1_c =
        app.add_subcommand("table1", "the eight average-degree table densities");
    table1_c->add_flag("--json", o.json, "machine-readable output");
    auto* scan_c = app.add_subcommand(
        "scan", "sweep small graphs for edge-bound violations");
    scan_c->add_option("--mode", o.mode, "qualifying family")
        ->required()
        ->check(CLI::IsMember({"at-critical", "critical"}));
    scan_c->add_option("-k", o.k, "target k")->required();
    scan_c->add_option("--n-max", o.n_max, "largest order to enumerate")->required();
    scan_c->add_flag("--json", o.json, "JSON lines, one record per graph");
    scan_c->add_option("--witnesses", o.witness_dir,
                       "existing directory for violation witness files");
    auto* audit_c = graph_source(
        app.add_subcommand("audit", "check a bound lemma on one instance"), false);
    audit_c->add_option("--kind", o.kind, "which lemma")
        ->required()
        ->check(CLI::IsMember({"sigma-bound", "sigma-tau"}));
    audit_c->add_option("-k", o.k, "lemma parameter")->required();
    audit_c->add_option("-c", o.c_arg, "rational c for sigma-tau (default 0)");

    (void)at_number_c;

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    const std::string verb = app.get_subcommands().front()->get_name();

    Budget budget;
    if (!o.budget_arg.empty()) {
        const size_t colon = o.budget_arg.find(':');
        bool ok = colon != std::string::npos;
        if (ok) {
            try {
                budget.max_edges = std::stoi(o.budget_arg.substr(0, colon));
                budget.max_nodes = std::stoll(o.budget_arg.substr(colon + 1));
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok || budget.max_edges <= 0 || budget.max_nodes <= 0) {
            err << "error: bad --budget '" << o.budget_arg
                << "', expected EDGES:NODES\n";
            return 2;
        }
        err << "warning: budget " << budget.max_edges << ":" << budget.max_nodes
            << " overrides the default caps\n";
    }

    auto guard = [&err](auto&& body) -> int {
        try {
            return body();
        } catch (const parse_error& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        } catch (const hypothesis_error& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        } catch (const budget_error& e) {
            err << "error: " << e.what() << "\n";
            return 3;
        } catch (const invariant_error& e) {
            err << "error: " << e.what() << "\n";
            return 4;
        }
    };

    if (verb == "table1")
        return guard([&] {
            const auto t = table1_here_column();
            if (o.json) {
                Json d = Json::object();
                for (const auto& [k, v] : t) d[std::to_string(k)] = v;
                emit(out, {{"verb", "table1"}, {"densities", d}});
            } else {
                for (const auto& [k, v] : t) out << k << " " << v << "\n";
            }
            return 0;
        });

    if (verb == "scan")
        return guard([&] {
            const auto mode = o.mode == "at-critical" ? ScanMode::at_critical
                                                      : ScanMode::critical;
            const ScanReport rep = scan_edge_bound(o.k, o.n_max, mode);
            int witness_index = 0;
            for (const ScanRecord& r : rep.records) {
                if (!o.witness_dir.empty() &&
                    (!r.ok || (r.sigma_checked && !r.sigma_ok))) {
                    const std::string path = o.witness_dir + "/witness-" +
                                             std::to_string(witness_index++) +
                                             ".json";
                    std::ofstream wf(path);
                    if (!wf) {
                        err << "error: cannot write " << path << "\n";
                        return 2;
                    }
                    wf << Json{{"k", rep.k},
                               {"mode", o.mode},
                               {"record", json_of(r)}}
                              .dump(2)
                       << "\n";
                }
                if (o.json) {
                    emit(out, json_of(r));
                    continue;
                }
                out << r.g6 << " n=" << r.n << " m=" << r.m
                    << " 2m=" << rational_string(r.lhs)
                    << " bound=" << rational_string(r.rhs)
                    << (r.ok ? " ok" : " VIOLATED");
                if (r.sigma_checked)
                    out << " sigma=" << rational_string(r.sigma_lhs)
                        << " sigma_bound=" << rational_string(r.sigma_rhs)
                        << (r.sigma_ok ? " sigma_ok" : " SIGMA_VIOLATED");
                out << "\n";
            }
            if (o.json)
                emit(out, scan_summary(rep));
            else
                out << "considered=" << rep.considered
                    << " qualifying=" << rep.records.size()
                    << " violations=" << rep.violations << "\n";
            return rep.violations == 0 ? 0 : 4;
        });

    if (verb == "is-at" && !o.frame_file.empty())
        return guard([&] {
            if (!o.graph_arg.empty() || !o.file.empty()) {
                err << "error: choose one input source\n";
                return 2;
            }
            std::ifstream f(o.frame_file);
            if (!f) {
                err << "error: cannot open " << o.frame_file << "\n";
                return 2;
            }
            Json j;
            try {
                j = Json::parse(f);
            } catch (const Json::exception& e) {
                throw parse_error(std::string("bad frame json: ") + e.what());
            }
            const ExtensionFrame frame = frame_of_json(j);
            try {
                const ATCertificate cert = extend_type_two(frame, budget);
                std::string reason;
                if (!verify_certificate(cert, &reason, budget))
                    throw invariant_error(
                        "replayed certificate failed verification: " + reason);
                if (o.json)
                    emit(out, {{"verb", "is-at"},
                               {"frame", json_of(frame)},
                               {"verdict", true},
                               {"certificate", json_of(cert)}});
                else
                    out << "f-AT ee=" << cert.ee << " eo=" << cert.eo << "\n";
                return 0;
            } catch (const hypothesis_error& e) {
                if (o.json)
                    emit(out, {{"verb", "is-at"},
                               {"frame", json_of(frame)},
                               {"verdict", false},
                               {"reason", e.what()}});
                else
                    out << "frame rejected: " << e.what() << "\n";
                return 1;
            }
        });

    auto need_f = [&o](const Graph& g) -> DegreeFunc {
        const bool has_f = !o.f_arg.empty();
        const bool has_k = o.k != kUnset;
        if (has_f == has_k) throw parse_error("give exactly one of -f and -k");
        if (has_k) return constant_func(g.n, o.k);
        DegreeFunc f = parse_int_list(o.f_arg);
        if (static_cast<int>(f.size()) != g.n)
            throw parse_error("f has " + std::to_string(f.size()) +
                              " values for " + std::to_string(g.n) + " vertices");
        return f;
    };

    std::function<int(const Graph&, std::ostream&)> handler;
    if (verb == "at-number") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const int v = at_number(g, budget);
            if (o.json)
                emit(ob, {{"verb", "at-number"},
                          {"graph6", to_graph6(g)},
                          {"at_number", v}});
            else
                ob << v << "\n";
            return 0;
        };
    } else if (verb == "is-at") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const DegreeFunc f = need_f(g);
            const auto cert = is_f_at(g, f, budget);
            if (o.json)
                emit(ob, {{"verb", "is-at"},
                          {"graph6", to_graph6(g)},
                          {"f", f},
                          {"verdict", cert.has_value()},
                          {"certificate", cert ? json_of(*cert) : Json(nullptr)}});
            else if (cert)
                ob << "f-AT ee=" << cert->ee << " eo=" << cert->eo << "\n";
            else
                ob << "not f-AT\n";
            return cert ? 0 : 1;
        };
    } else if (verb == "ee-eo") {
        handler = [&](const Graph& g, std::ostream& ob) {
            if (o.forward.size() != static_cast<size_t>(g.size()))
                throw parse_error("forward mask has " +
                                  std::to_string(o.forward.size()) + " bits for " +
                                  std::to_string(g.size()) + " edges");
            Orientation d{Multigraph::of(g)};
            for (int i = 0; i < g.size(); ++i) {
                if (o.forward[i] != '0' && o.forward[i] != '1')
                    throw parse_error("forward mask must be 0/1");
                d.forward[i] = o.forward[i] == '1';
            }
            const auto [ee, eo] = count_eulerian(d, budget);
            if (o.json)
                emit(ob, {{"verb", "ee-eo"},
                          {"graph6", to_graph6(g)},
                          {"forward", o.forward},
                          {"ee", ee},
                          {"eo", eo},
                          {"diff", ee > eo ? ee - eo : eo - ee}});
            else
                ob << "ee=" << ee << " eo=" << eo
                   << " diff=" << (ee > eo ? ee - eo : eo - ee) << "\n";
            return 0;
        };
    } else if (verb == "coeff") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const std::vector<int> ds = parse_int_list(o.degrees_arg);
            if (static_cast<int>(ds.size()) != g.n)
                throw parse_error("degrees has " + std::to_string(ds.size()) +
                                  " values for " + std::to_string(g.n) +
                                  " vertices");
            const BigInt c = graph_poly_coefficient(g, ds);
            if (o.json)
                emit(ob, {{"verb", "coeff"},
                          {"graph6", to_graph6(g)},
                          {"degrees", ds},
                          {"coefficient", c.str()}});
            else
                ob << c.str() << "\n";
            return 0;
        };
    } else if (verb == "gallai") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const bool classed = o.k != kUnset;
            const bool verdict =
                classed ? in_gallai_class(g, o.k) : is_gallai_tree(g);
            std::optional<EvenCycleWitness> w;
            if (!verdict && g.n > 0 && connected(g))
                w = find_even_cycle_one_chord(g);
            if (o.json) {
                Json wj(nullptr);
                if (w) {
                    wj = Json{{"cycle", w->cycle},
                              {"chord", w->chord
                                            ? Json{w->chord->first, w->chord->second}
                                            : Json(nullptr)}};
                }
                emit(ob, {{"verb", "gallai"},
                          {"graph6", to_graph6(g)},
                          {"k", classed ? Json(o.k) : Json(nullptr)},
                          {"verdict", verdict},
                          {"witness", wj}});
            } else {
                if (classed)
                    ob << (verdict ? "in" : "outside")
                       << " the Gallai class for k=" << o.k;
                else
                    ob << (verdict ? "gallai tree" : "not a gallai tree");
                if (w) {
                    ob << " cycle " << join(w->cycle, " ");
                    if (w->chord)
                        ob << " chord " << w->chord->first << "-"
                           << w->chord->second;
                }
                ob << "\n";
            }
            return verdict ? 0 : 1;
        };
    } else if (verb == "blocks") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const BlockTree bt = block_decomposition(g);
            if (o.json) {
                Json bs = Json::array();
                for (VSet b : bt.blocks) bs.push_back(json_vset(b));
                emit(ob, {{"verb", "blocks"},
                          {"graph6", to_graph6(g)},
                          {"blocks", bs},
                          {"cut_vertices", json_vset(bt.cut_vertices)}});
            } else {
                for (VSet b : bt.blocks) ob << "block: " << vset_text(b) << "\n";
                ob << labeled("cut", bt.cut_vertices) << "\n";
            }
            return 0;
        };
    } else if (verb == "reduce") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const auto r = find_at_reduction(g, o.cap, budget);
            if (o.json)
                emit(ob, {{"verb", "reduce"},
                          {"graph6", to_graph6(g)},
                          {"cap", o.cap},
                          {"found", r.has_value()},
                          {"reduction", r ? json_of(*r) : Json(nullptr)}});
            else if (r)
                ob << "reduction: " << vset_text(r->vertices)
                   << " f=" << join(r->cert.f, ",") << " ee=" << r->cert.ee
                   << " eo=" << r->cert.eo << "\n";
            else
                ob << "no reduction\n";
            return r ? 0 : 1;
        };
    } else if (verb == "mh-reduce") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const VSet y = vset_of_list(parse_int_list(o.y_arg), g.n);
            const MhVariant var = o.variant == "symmetric" ? MhVariant::symmetric
                                                           : MhVariant::lopsided;
            try {
                const MhReduction r =
                    multiple_high_reduction(g, y, o.k, var, budget);
                if (o.json) {
                    emit(ob, {{"verb", "mh-reduce"},
                              {"applies", true},
                              {"report", json_of(r, g, y, o.k, var)}});
                } else {
                    ob << "kept: " << vset_text(r.kept) << "\n";
                    if (r.shortcut_y >= 0) ob << "shortcut y=" << r.shortcut_y << "\n";
                    if (!r.trim.empty())
                        ob << "trimmed: " << r.trim.size() << " steps\n";
                    if (!r.f_edges.empty()) {
                        ob << "f-edges:";
                        for (auto [x, yy] : r.f_edges)
                            ob << " (" << x << "," << yy << ")";
                        ob << "\n";
                    }
                    ob << "certificate: ee=" << r.cert.ee << " eo=" << r.cert.eo
                       << "\n";
                }
                return 0;
            } catch (const hypothesis_error& e) {
                if (o.json)
                    emit(ob, {{"verb", "mh-reduce"},
                              {"applies", false},
                              {"reason", e.what()}});
                else
                    ob << "hypothesis failed: " << e.what() << "\n";
                return 1;
            }
        };
    } else if (verb == "choosable") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const DegreeFunc f = need_f(g);
            const bool v = is_f_choosable(g, f);
            if (o.json)
                emit(ob, {{"verb", "choosable"},
                          {"graph6", to_graph6(g)},
                          {"f", f},
                          {"verdict", v}});
            else
                ob << (v ? "f-choosable" : "not f-choosable") << "\n";
            return v ? 0 : 1;
        };
    } else if (verb == "online") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const DegreeFunc f = need_f(g);
            const bool v = is_online_f_choosable(g, f);
            if (o.json)
                emit(ob, {{"verb", "online"},
                          {"graph6", to_graph6(g)},
                          {"f", f},
                          {"verdict", v}});
            else
                ob << (v ? "online f-choosable" : "not online f-choosable") << "\n";
            return v ? 0 : 1;
        };
    } else if (verb == "critical") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const bool v = is_k_critical(g, o.k);
            if (o.json)
                emit(ob, {{"verb", "critical"},
                          {"graph6", to_graph6(g)},
                          {"k", o.k},
                          {"verdict", v}});
            else
                ob << (v ? "" : "not ") << o.k << "-critical\n";
            return v ? 0 : 1;
        };
    } else if (verb == "at-critical") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const bool v = is_k_at_critical(g, o.k);
            if (o.json)
                emit(ob, {{"verb", "at-critical"},
                          {"graph6", to_graph6(g)},
                          {"k", o.k},
                          {"verdict", v}});
            else
                ob << (v ? "" : "not ") << o.k << "-AT-critical\n";
            return v ? 0 : 1;
        };
    } else if (verb == "bounds") {
        handler = [&](const Graph& g, std::ostream& ob) {
            const Rational c = o.c_arg.empty()
                                   ? (o.k >= 7 ? o.k - 3 : o.k - 4) * alpha_k(o.k)
                                   : parse_rational(o.c_arg);
            const FunctionalReport fr = bound_functionals(g, o.k, c);
            if (o.json) {
                emit(ob, {{"verb", "bounds"},
                          {"graph6", to_graph6(g)},
                          {"report", json_of(fr)}});
            } else {
                ob << "k=" << fr.k << " c=" << rational_string(fr.c)
                   << " alpha=" << rational_string(fr.alpha) << "\n";
                ob << labeled("low", fr.low_part) << "\n";
                ob << labeled("high", fr.high_part) << "\n";
                ob << "sigma=" << rational_string(fr.sigma)
                   << " tau=" << rational_string(fr.tau)
                   << " tau_plus=" << rational_string(fr.tau_plus)
                   << " q=" << rational_string(fr.q)
                   << " g_bound=" << rational_string(fr.g_bound) << "\n";
            }
            return 0;
        };
    } else if (verb == "audit") {
        handler = [&](const Graph& g, std::ostream& ob) {
            if (o.kind == "sigma-bound") {
                const SigmaBoundAudit a = audit_sigma_bound(g, o.k);
                if (o.json)
                    emit(ob, {{"verb", "audit"},
                              {"kind", "sigma-bound"},
                              {"graph6", to_graph6(g)},
                              {"k", o.k},
                              {"audit", json_of(a)}});
                else
                    ob << "sigma=" << rational_string(a.sigma)
                       << " q=" << rational_string(a.q)
                       << " bound=" << rational_string(a.bound)
                       << " clique=" << (a.clique ? "yes" : "no")
                       << (a.ok ? " ok" : " VIOLATED") << "\n";
                return a.ok ? 0 : 4;
            }
            const Rational c =
                o.c_arg.empty() ? Rational(0) : parse_rational(o.c_arg);
            const SigmaTauAudit a = audit_sigma_tau(g, o.k, c);
            if (o.json) {
                emit(ob, {{"verb", "audit"},
                          {"kind", "sigma-tau"},
                          {"graph6", to_graph6(g)},
                          {"k", o.k},
                          {"c", rational_string(c)},
                          {"audit", json_of(a)}});
            } else {
                ob << "sigma+tau=" << rational_string(a.lhs)
                   << " sigma+tau_plus=" << rational_string(a.lhs_plus)
                   << " rhs=" << rational_string(a.hyp_rhs)
                   << " hypothesis=" << (a.hypothesis ? "true" : "false")
                   << " hypothesis_plus=" << (a.hypothesis_plus ? "true" : "false")
                   << "\n";
                ob << "2m=" << rational_string(a.edges2)
                   << " g_bound=" << rational_string(a.fr.g_bound)
                   << " conclusion=" << (a.conclusion ? "true" : "false") << "\n";
                ob << (a.falsified || a.falsified_plus ? "FALSIFIED" : "ok")
                   << "\n";
            }
            return a.falsified || a.falsified_plus ? 4 : 0;
        };
    } else {
        err << "error: unknown verb\n";
        return 2;
    }

    std::vector<std::string> lines;
    const bool have_positional = !o.graph_arg.empty() && o.graph_arg != "-";
    if (!o.file.empty() && !o.graph_arg.empty()) {
        err << "error: choose one input source\n";
        return 2;
    }
    if (o.adj) {
        if (have_positional) {
            err << "error: --adj input comes from a file or stdin\n";
            return 2;
        }
        std::ostringstream whole;
        if (!o.file.empty()) {
            std::ifstream f(o.file);
            if (!f) {
                err << "error: cannot open " << o.file << "\n";
                return 2;
            }
            whole << f.rdbuf();
        } else {
            whole << in.rdbuf();
        }
        lines.push_back(whole.str());
    } else if (have_positional) {
        lines.push_back(o.graph_arg);
    } else if (!o.file.empty()) {
        std::ifstream f(o.file);
        if (!f) {
            err << "error: cannot open " << o.file << "\n";
            return 2;
        }
        for (std::string line; std::getline(f, line);)
            if (!line.empty()) lines.push_back(line);
    } else {
        for (std::string line; std::getline(in, line);)
            if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) {
        err << "error: no input graphs\n";
        return 2;
    }

    struct Item {
        int code = 0;
        std::string out_text, err_text;
    };
    std::vector<Item> items(lines.size());
    auto work = [&](size_t i) {
        std::ostringstream ob, eb;
        int code;
        try {
            const Graph g =
                o.adj ? parse_adjacency_text(lines[i]) : parse_graph6(lines[i]);
            code = handler(g, ob);
        } catch (const parse_error& e) {
            eb << "error: " << e.what() << "\n";
            code = 2;
        } catch (const hypothesis_error& e) {
            eb << "error: " << e.what() << "\n";
            code = 2;
        } catch (const budget_error& e) {
            eb << "error: " << e.what() << "\n";
            code = 3;
        } catch (const invariant_error& e) {
            eb << "error: " << e.what() << "\n";
            code = 4;
        }
        items[i] = {code, ob.str(), eb.str()};
    };

    const size_t jobs =
        std::min<size_t>(resolve_jobs(o.jobs), lines.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < lines.size(); ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (size_t t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < lines.size();
                     i = next.fetch_add(1))
                    work(i);
            });
        for (auto& t : pool) t.join();
    }

    int code = 0;
    for (const Item& it : items) {
        out << it.out_text;
        err << it.err_text;
        code = std::max(code, it.code);
    }
    return code;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    return run(args, out, err, std::cin);
}

}  // namespace atlab::cli
