#include "lpa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "lpa/error.hpp"
#include "lpa/functors.hpp"
#include "lpa/graph.hpp"
#include "lpa/hsets.hpp"
#include "lpa/moves.hpp"
#include "lpa/series.hpp"
#include "lpa/topology.hpp"

namespace lpa::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) {
    try {
        return parse_graph(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
}

VertexSet parse_set(const Graph& g, const std::string& text) {
    std::vector<std::string> names;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = item.find_last_not_of(" \t");
        names.push_back(item.substr(first, last - first + 1));
    }
    return g.make_set(names);
}

Json set_json(const Graph& g, const VertexSet& s) { return Json(g.names(s)); }

void add_warnings(Json& j, const Graph& g) {
    const auto w = hset_warnings(g);
    if (!w.empty()) j["warnings"] = w;
}

std::string brace(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& n : g.names(s)) {
        out += (first ? "" : ",") + n;
        first = false;
    }
    return out + "}";
}

// Human rendering of a JSON result: one `key: value` line per field; string
// arrays print as braces.
void render_value(std::ostream& out, const Json& v, const std::string& indent);

bool is_string_array(const Json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string(); });
}

std::string inline_value(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (is_string_array(v)) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
        return s + "}";
    }
    return v.dump();
}

void render_value(std::ostream& out, const Json& v, const std::string& indent) {
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if ((val.is_object() && !val.empty()) || (val.is_array() && !is_string_array(val) && !val.empty())) {
                out << indent << key << ":\n";
                render_value(out, val, indent + "  ");
            } else {
                out << indent << key << ": " << inline_value(val) << '\n';
            }
        }
    } else if (v.is_array() && !is_string_array(v)) {
        for (const auto& item : v) {
            if (item.is_object()) {
                out << indent << "-\n";
                render_value(out, item, indent + "  ");
            } else {
                out << indent << inline_value(item) << '\n';
            }
        }
    } else {
        out << indent << inline_value(v) << '\n';
    }
}

void emit(std::ostream& out, const Json& j, bool pretty) {
    if (pretty)
        render_value(out, j, "");
    else
        out << j.dump() << '\n';
}

Json graph_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertex_names();
    j["edges"] = Json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back({{"name", e.name}, {"source", g.vertex_name(e.source)}, {"target", g.vertex_name(e.target)}});
    j["infedges"] = Json::array();
    for (const auto& b : g.infinite_bundles())
        j["infedges"].push_back({{"source", g.vertex_name(b.source)}, {"target", g.vertex_name(b.target)}});
    return j;
}

Json chain_json(const Graph& g, const std::vector<HSet>& chain) {
    Json a = Json::array();
    for (const auto& h : chain) a.push_back(set_json(g, h.members()));
    return a;
}

Json series_json(const Graph& g, const SeriesResult& r) {
    Json j;
    j["chain"] = chain_json(g, r.chain);
    j["stabilized_at"] = r.stabilized_at ? Json(*r.stabilized_at) : Json(nullptr);
    return j;
}

std::size_t default_cap(std::size_t module_default) {
    if (const char* env = std::getenv("LPA_CAP"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == nullptr || *end != '\0') throw UsageError("LPA_CAP must be a non-negative integer");
        return static_cast<std::size_t>(v);
    }
    return module_default;
}

std::size_t resolve_cap(const std::optional<std::size_t>& flag, std::size_t module_default) {
    const std::size_t cap = flag ? *flag : default_cap(module_default);
    if (cap > kHardCap) throw UsageError("cap " + std::to_string(cap) + " exceeds hard limit " + std::to_string(kHardCap));
    return cap;
}

SeriesKind parse_kind(const std::string& s) {
    if (s == "pl") return SeriesKind::Pl;
    if (s == "pc") return SeriesKind::Pc;
    throw UsageError("series kind must be 'pl' or 'pc'");
}

ShiftSpec parse_shift(const std::vector<std::string>& uv, const std::string& map) {
    ShiftSpec spec{uv.at(0), uv.at(1), {}};
    std::stringstream ss(map);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
            throw UsageError("--map entries must look like f:g, got '" + item + "'");
        spec.theta.emplace_back(item.substr(0, colon), item.substr(colon + 1));
    }
    return spec;
}

// --- subcommands -------------------------------------------------------

int cmd_show(const std::string& file, bool dot, bool pretty, std::ostream& out) {
    const Graph g = load_graph(file);
    if (dot) {
        out << to_dot(g);
        return kExitOk;
    }
    VertexSet sinks = g.empty_set(), sources = g.empty_set(), emitters = g.empty_set(), regular = g.empty_set();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const VertexProfile p = vertex_profile(g, v);
        if (p.is_sink) sinks.insert(v);
        if (p.is_source) sources.insert(v);
        if (p.is_infinite_emitter) emitters.insert(v);
        if (p.is_regular) regular.insert(v);
    }
    const auto boundary = classify_boundary_vertices(g);
    auto by_loops = [&](bool initial) {
        std::map<Degree, std::vector<std::string>> groups;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const auto& r = boundary.roles[v];
            if (initial && r.initial) groups[r.initial_loops].push_back(g.vertex_name(v));
            if (!initial && r.terminal) groups[r.terminal_loops].push_back(g.vertex_name(v));
        }
        return groups;
    };

    if (pretty) {
        out << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
        auto line = [&](const std::string& label, const VertexSet& s) {
            out << label << ":";
            for (const auto& n : g.names(s)) out << ' ' << n;
            out << '\n';
        };
        line("sinks", sinks);
        line("sources", sources);
        if (!emitters.empty()) line("infinite emitters", emitters);
        line("regular", regular);
        for (const auto& [loops, names] : by_loops(true)) {
            out << "initial(" << loops.to_string() << "):";
            for (const auto& n : names) out << ' ' << n;
            out << '\n';
        }
        for (const auto& [loops, names] : by_loops(false)) {
            out << "terminal(" << loops.to_string() << "):";
            for (const auto& n : names) out << ' ' << n;
            out << '\n';
        }
        out << "condition_L: " << (condition_L(g) ? "true" : "false") << '\n';
        return kExitOk;
    }

    Json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["sinks"] = set_json(g, sinks);
    j["sources"] = set_json(g, sources);
    j["infinite_emitters"] = set_json(g, emitters);
    j["regular"] = set_json(g, regular);
    j["initial"] = Json::object();
    for (const auto& [loops, names] : by_loops(true)) j["initial"][loops.to_string()] = names;
    j["terminal"] = Json::object();
    for (const auto& [loops, names] : by_loops(false)) j["terminal"][loops.to_string()] = names;
    j["condition_L"] = condition_L(g);
    out << j.dump() << '\n';
    return kExitOk;
}

int cmd_functor(const std::string& expr_text, const std::string& file, bool pretty, std::ostream& out) {
    const FunctorExpr expr = parse_functor_expr(expr_text);
    const Graph g = load_graph(file);
    Json j;
    j["set"] = set_json(g, eval(expr, g));
    add_warnings(j, g);
    emit(out, j, pretty);
    return kExitOk;
}

struct TopologyArgs {
    bool closed_sets = false;
    bool connected = false;
    std::optional<std::string> closure, interior, exterior, boundary, is_closed, is_open, is_clopen, dense;
};

int cmd_topology(const std::string& file, const TopologyArgs& a, std::size_t cap, bool pretty, std::ostream& out) {
    const int chosen = int(a.closed_sets) + int(a.connected) + int(a.closure.has_value()) +
                       int(a.interior.has_value()) + int(a.exterior.has_value()) + int(a.boundary.has_value()) +
                       int(a.is_closed.has_value()) + int(a.is_open.has_value()) + int(a.is_clopen.has_value()) +
                       int(a.dense.has_value());
    if (chosen != 1) throw UsageError("topology needs exactly one query option");

    const Graph g = load_graph(file);
    Json j;
    if (a.closed_sets) {
        j["closed_sets"] = Json::array();
        for (const auto& s : closed_sets(g, cap)) j["closed_sets"].push_back(set_json(g, s));
    } else if (a.connected) {
        j["connected"] = is_topologically_connected(g);
    } else if (a.closure) {
        j["set"] = set_json(g, dcc_closure(g, parse_set(g, *a.closure)));
    } else if (a.interior) {
        j["set"] = set_json(g, interior(g, parse_set(g, *a.interior)));
    } else if (a.exterior) {
        j["set"] = set_json(g, exterior(g, parse_set(g, *a.exterior)));
    } else if (a.boundary) {
        j["set"] = set_json(g, boundary(g, parse_set(g, *a.boundary)));
    } else if (a.is_closed) {
        j["closed"] = is_closed(g, parse_set(g, *a.is_closed));
    } else if (a.is_open) {
        j["open"] = is_open(g, parse_set(g, *a.is_open));
    } else if (a.is_clopen) {
        j["clopen"] = is_clopen(g, parse_set(g, *a.is_clopen));
    } else {
        j["dense"] = is_dense(g, parse_set(g, *a.dense));
    }
    emit(out, j, pretty);
    return kExitOk;
}

int cmd_lattice(const std::string& file, std::size_t cap, bool pretty, std::ostream& out) {
    const Graph g = load_graph(file);
    Json j;
    j["lattice"] = chain_json(g, lattice(g, cap));
    add_warnings(j, g);
    emit(out, j, pretty);
    return kExitOk;
}

int cmd_quotient(const std::string& file, const std::string& set, bool pretty, std::ostream& out) {
    const Graph g = load_graph(file);
    const HSet h = HSet::certify(g, parse_set(g, set));
    const QuotientResult q = quotient(g, h);
    if (pretty)
        out << to_text(q.quotient);
    else
        out << graph_json(q.quotient).dump() << '\n';
    return kExitOk;
}

struct SeriesArgs {
    std::size_t n = 1;
    std::optional<std::string> base, direct, cross_check;
    bool verbose = false;
};

int cmd_series(const std::string& file, const SeriesArgs& a, bool pretty, std::ostream& out) {
    const int chosen = int(a.base.has_value()) + int(a.direct.has_value()) + int(a.cross_check.has_value());
    if (chosen != 1) throw UsageError("series needs exactly one of --base, --direct, --cross-check");
    if (a.n == 0) throw UsageError("-n must be at least 1");
    const Graph g = load_graph(file);

    if (a.base) {
        const FunctorExpr base = parse_functor_expr(*a.base);
        Json j = series_json(g, series(g, base, a.n));
        add_warnings(j, g);
        emit(out, j, pretty);
        return kExitOk;
    }
    if (a.direct) {
        const SeriesKind kind = parse_kind(*a.direct);
        const SeriesResult r = kind == SeriesKind::Pl ? pl_series_direct(g, a.n) : pc_series_direct(g, a.n);
        if (a.verbose) {
            for (std::size_t k = 0; k < r.chain.size(); ++k)
                out << "n=" << k + 1 << " stage=" << brace(g, r.stages[k]) << " closed=" << brace(g, r.chain[k].members())
                    << '\n';
            return kExitOk;
        }
        Json j = series_json(g, r);
        j["stages"] = Json::array();
        for (const auto& s : r.stages) j["stages"].push_back(set_json(g, s));
        emit(out, j, pretty);
        return kExitOk;
    }

    const CrossCheckReport rep = cross_check_series(g, parse_kind(*a.cross_check), a.n);
    if (a.verbose) {
        for (std::size_t k = 0; k < a.n; ++k) {
            const bool same = rep.direct.chain[k] == rep.via_quotient.chain[k];
            out << "n=" << k + 1 << " direct=" << brace(g, rep.direct.chain[k].members())
                << " quotient=" << brace(g, rep.via_quotient.chain[k].members()) << " agree=" << (same ? "yes" : "no")
                << " stage=" << brace(g, rep.direct.stages[k]) << '\n';
        }
        return rep.agree ? kExitOk : kExitDomain;
    }
    Json j;
    j["agree"] = rep.agree;
    j["first_divergence"] = rep.first_divergence ? Json(*rep.first_divergence) : Json(nullptr);
    j["direct"] = chain_json(g, rep.direct.chain);
    j["quotient"] = chain_json(g, rep.via_quotient.chain);
    emit(out, j, pretty);
    return rep.agree ? kExitOk : kExitDomain;
}

int cmd_shift(const std::string& file, const std::vector<std::string>& uv, const std::string& map, bool check,
              std::size_t cap, bool pretty, std::ostream& out) {
    const Graph g = load_graph(file);
    const ShiftSpec spec = parse_shift(uv, map);
    const Graph f = shift_graph(g, spec);
    if (pretty && !check) {
        out << to_text(f);
        return kExitOk;
    }
    Json j;
    j["graph"] = graph_json(f);
    if (check) {
        const auto rep = shift_continuity_report(g, spec, cap);
        j["pairwise_ok"] = rep.pairwise_ok;
        j["closed_sets_ok"] = rep.closed_sets_ok ? Json(*rep.closed_sets_ok) : Json("skipped");
    }
    emit(out, j, pretty);
    return kExitOk;
}

int cmd_ann(const std::string& file, const std::string& set, bool pretty, std::ostream& out) {
    const Graph g = load_graph(file);
    const HSet h = HSet::certify(g, parse_set(g, set));
    Json j;
    j["hprime"] = set_json(g, annihilator_set(g, h).members());
    j["hdoubleprime"] = set_json(g, double_annihilator(g, h).members());
    j["regular"] = is_regular_ideal_set(g, h);
    add_warnings(j, g);
    emit(out, j, pretty);
    return kExitOk;
}

int cmd_oracle(const std::string& dir, bool pretty, std::ostream& out) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw UsageError("'" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    Json j;
    std::size_t checked = 0;
    Json skipped = Json::array();
    Json disagreements = Json::array();
    for (const auto& path : files) {
        const Graph g = load_graph(path.string());
        if (g.has_infinite_emitters()) {
            skipped.push_back(path.filename().string());
            continue;
        }
        const std::size_t n = g.vertex_count() + 1;
        for (const auto kind : {SeriesKind::Pl, SeriesKind::Pc}) {
            const auto rep = cross_check_series(g, kind, n);
            if (!rep.agree)
                disagreements.push_back({{"file", path.filename().string()},
                                         {"kind", kind == SeriesKind::Pl ? "pl" : "pc"},
                                         {"first_divergence", *rep.first_divergence}});
        }
        ++checked;
    }
    j["graphs"] = files.size();
    j["checked"] = checked;
    j["skipped"] = skipped;
    j["disagreements"] = disagreements;
    j["agree"] = disagreements.empty();
    emit(out, j, pretty);
    return disagreements.empty() ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vertex-set analysis of directed graphs for Leavitt path algebra ideals", "lpa"};
    app.require_subcommand(1);

    bool pretty = false;
    std::optional<std::size_t> cap;
    std::string file;

    auto add_common = [&](CLI::App* sub, bool with_cap) {
        sub->add_flag("--pretty", pretty, "Human-readable output instead of JSON");
        if (with_cap) sub->add_option("--cap", cap, "Enumeration cap (hard limit 24; env LPA_CAP)");
    };

    bool dot = false;
    auto* show = app.add_subcommand("show", "Summary of a graph file");
    show->add_option("file", file, "Graph file")->required();
    show->add_flag("--dot", dot, "Print Graphviz DOT instead of the summary");
    add_common(show, false);

    std::string expr;
    auto* functor = app.add_subcommand(
        "functor", "Evaluate a functor expression (Pbinf only detects infinite emitters on finite graphs)");
    functor->add_option("expr", expr, "Functor expression")->required();
    functor->add_option("file", file, "Graph file")->required();
    add_common(functor, false);

    TopologyArgs topo;
    auto* topology = app.add_subcommand("topology", "DCC topology queries (the empty graph is not connected)");
    topology->add_option("file", file, "Graph file")->required();
    topology->add_flag("--closed-sets", topo.closed_sets, "List all closed sets");
    topology->add_flag("--connected", topo.connected, "Topological connectedness");
    topology->add_option("--closure", topo.closure, "Closure of a comma list of vertices");
    topology->add_option("--interior", topo.interior, "Interior of a set");
    topology->add_option("--exterior", topo.exterior, "Exterior of a set");
    topology->add_option("--boundary", topo.boundary, "Boundary of a set");
    topology->add_option("--is-closed", topo.is_closed, "Is the set closed");
    topology->add_option("--is-open", topo.is_open, "Is the set open");
    topology->add_option("--is-clopen", topo.is_clopen, "Is the set clopen");
    topology->add_option("--dense", topo.dense, "Is the hereditary set dense");
    add_common(topology, true);

    auto* lattice_cmd = app.add_subcommand("lattice", "All hereditary saturated subsets");
    lattice_cmd->add_option("file", file, "Graph file")->required();
    add_common(lattice_cmd, true);

    std::string set;
    auto* quotient_cmd = app.add_subcommand("quotient", "Quotient graph E/H");
    quotient_cmd->add_option("file", file, "Graph file")->required();
    quotient_cmd->add_option("--set", set, "Hereditary saturated set H")->required();
    add_common(quotient_cmd, false);

    SeriesArgs sargs;
    auto* series_cmd = app.add_subcommand("series", "Ascending series H(1) ⊆ … ⊆ H(n)");
    series_cmd->add_option("file", file, "Graph file")->required();
    series_cmd->add_option("-n", sargs.n, "Length of the chain")->required();
    series_cmd->add_option("--base", sargs.base, "Base functor expression (quotient route)");
    series_cmd->add_option("--direct", sargs.direct, "Direct characterization: pl or pc");
    series_cmd->add_option("--cross-check", sargs.cross_check, "Compare direct and quotient routes: pl or pc");
    series_cmd->add_flag("--verbose", sargs.verbose, "One line per stage");
    add_common(series_cmd, false);

    std::vector<std::string> uv;
    std::string map;
    bool check = false;
    auto* shift = app.add_subcommand("shift", "Shift graph E(u ↪ v)");
    shift->add_option("file", file, "Graph file")->required();
    shift->add_option("--shift", uv, "Vertices u v")->expected(2)->required();
    shift->add_option("--map", map, "theta as f1:g1,f2:g2,...");
    shift->add_flag("--check", check, "Verify continuity of the identity vertex map");
    add_common(shift, true);

    auto* ann = app.add_subcommand("ann", "Annihilator sets H' and H''");
    ann->add_option("file", file, "Graph file")->required();
    ann->add_option("--set", set, "Hereditary saturated set H")->required();
    add_common(ann, false);

    std::string dir;
    auto* oracle = app.add_subcommand("oracle", "Cross-check the P_l and P_c series over a directory of .graph files");
    oracle->add_option("dir", dir, "Directory")->required();
    add_common(oracle, false);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("lpa");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (show->parsed()) return cmd_show(file, dot, pretty, out);
        if (functor->parsed()) return cmd_functor(expr, file, pretty, out);
        if (topology->parsed()) return cmd_topology(file, topo, resolve_cap(cap, kClosedSetCap), pretty, out);
        if (lattice_cmd->parsed()) return cmd_lattice(file, resolve_cap(cap, kLatticeCap), pretty, out);
        if (quotient_cmd->parsed()) return cmd_quotient(file, set, pretty, out);
        if (series_cmd->parsed()) return cmd_series(file, sargs, pretty, out);
        if (shift->parsed()) return cmd_shift(file, uv, map, check, resolve_cap(cap, kClosedSetCap), pretty, out);
        if (ann->parsed()) return cmd_ann(file, set, pretty, out);
        if (oracle->parsed()) return cmd_oracle(dir, pretty, out);
    } catch (const DomainError& e) {
        err << "lpa: " << e.what() << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        err << "lpa: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace lpa::cli
