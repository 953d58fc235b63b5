#include "lpa/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "lpa/error.hpp"

namespace lpa {

// --- Graph ---------------------------------------------------------------

VertexId Graph::add_vertex(std::string name) {
    if (name.empty()) throw DomainError("empty vertex name");
    if (vertex_index_.contains(name)) throw DomainError("duplicate vertex '" + name + "'");
    const VertexId id = names_.size();
    vertex_index_.emplace(name, id);
    names_.push_back(std::move(name));
    out_edges_.emplace_back();
    in_edges_.emplace_back();
    inf_targets_.emplace_back();
    inf_sources_.emplace_back();
    successors_.emplace_back();
    predecessors_.emplace_back();
    return id;
}

EdgeId Graph::add_edge(std::string name, VertexId source, VertexId target) {
    check_vertex(source);
    check_vertex(target);
    if (name.empty()) throw DomainError("empty edge name");
    if (edge_index_.contains(name)) throw DomainError("duplicate edge '" + name + "'");
    const EdgeId id = edges_.size();
    edge_index_.emplace(name, id);
    edges_.push_back({std::move(name), source, target});
    out_edges_[source].push_back(id);
    in_edges_[target].push_back(id);
    insert_sorted(successors_[source], target);
    insert_sorted(predecessors_[target], source);
    return id;
}

void Graph::add_infinite_bundle(VertexId source, VertexId target) {
    check_vertex(source);
    check_vertex(target);
    const InfiniteBundle b{source, target};
    if (std::find(bundles_.begin(), bundles_.end(), b) != bundles_.end())
        throw DomainError("duplicate infedge " + names_[source] + " -> " + names_[target]);
    bundles_.push_back(b);
    inf_targets_[source].push_back(target);
    inf_sources_[target].push_back(source);
    insert_sorted(successors_[source], target);
    insert_sorted(predecessors_[target], source);
}

const std::string& Graph::vertex_name(VertexId v) const {
    check_vertex(v);
    return names_[v];
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) throw LookupError("unknown vertex '" + std::string(name) + "'");
    return *v;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
    auto it = edge_index_.find(std::string(name));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

std::span<const EdgeId> Graph::out_edges(VertexId v) const {
    check_vertex(v);
    return out_edges_[v];
}

std::span<const EdgeId> Graph::in_edges(VertexId v) const {
    check_vertex(v);
    return in_edges_[v];
}

std::span<const VertexId> Graph::infinite_targets(VertexId v) const {
    check_vertex(v);
    return inf_targets_[v];
}

std::span<const VertexId> Graph::infinite_sources(VertexId v) const {
    check_vertex(v);
    return inf_sources_[v];
}

std::span<const VertexId> Graph::successors(VertexId v) const {
    check_vertex(v);
    return successors_[v];
}

std::span<const VertexId> Graph::predecessors(VertexId v) const {
    check_vertex(v);
    return predecessors_[v];
}

bool Graph::is_infinite_emitter(VertexId v) const {
    check_vertex(v);
    return !inf_targets_[v].empty();
}

Degree Graph::out_degree(VertexId v) const {
    if (is_infinite_emitter(v)) return Degree::infinity();
    return {out_edges_[v].size(), false};
}

Degree Graph::in_degree(VertexId v) const {
    check_vertex(v);
    if (!inf_sources_[v].empty()) return Degree::infinity();
    return {in_edges_[v].size(), false};
}

bool Graph::is_regular(VertexId v) const {
    const Degree d = out_degree(v);
    return !d.infinite && d.count >= 1;
}

VertexSet Graph::range_set(VertexId v) const {
    VertexSet s(vertex_count());
    for (VertexId w : successors(v)) s.insert(w);
    return s;
}

VertexSet Graph::make_set(const std::vector<std::string>& names) const {
    VertexSet s(vertex_count());
    for (const auto& n : names) s.insert(vertex(n));
    return s;
}

std::vector<std::string> Graph::names(const VertexSet& s) const {
    if (s.universe() != vertex_count())
        throw LookupError("vertex set universe " + std::to_string(s.universe()) + " does not match graph with " +
                          std::to_string(vertex_count()) + " vertices");
    std::vector<std::string> out;
    s.for_each([&](VertexId v) { out.push_back(names_[v]); });
    return out;
}

void Graph::check_vertex(VertexId v) const {
    if (v >= names_.size()) throw LookupError("vertex id " + std::to_string(v) + " not in graph");
}

void Graph::insert_sorted(std::vector<VertexId>& list, VertexId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
}

// --- text formats --------------------------------------------------------

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Graph parse_graph(std::string_view text) {
    Graph g;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const auto& kw = tokens[0].text;

        auto expect_arity = [&](std::size_t n) {
            if (tokens.size() != n + 1)
                throw ParseError("'" + kw + "' expects " + std::to_string(n) + " argument(s), got " +
                                     std::to_string(tokens.size() - 1),
                                 line_no, tokens[0].column);
        };
        auto endpoint = [&](const Token& t) {
            auto v = g.find_vertex(t.text);
            if (!v) throw ParseError("undeclared vertex '" + t.text + "'", line_no, t.column);
            return *v;
        };

        try {
            if (kw == "vertex") {
                expect_arity(1);
                g.add_vertex(tokens[1].text);
            } else if (kw == "edge") {
                expect_arity(3);
                g.add_edge(tokens[1].text, endpoint(tokens[2]), endpoint(tokens[3]));
            } else if (kw == "infedge") {
                expect_arity(2);
                g.add_infinite_bundle(endpoint(tokens[1]), endpoint(tokens[2]));
            } else {
                throw ParseError("unknown directive '" + kw + "'", line_no, tokens[0].column);
            }
        } catch (const DomainError& e) {
            throw ParseError(e.what(), line_no, tokens[1].column);
        }
    }
    return g;
}

std::string to_text(const Graph& g) {
    std::ostringstream out;
    for (const auto& n : g.vertex_names()) out << "vertex " << n << '\n';
    for (const auto& e : g.edges())
        out << "edge " << e.name << ' ' << g.vertex_name(e.source) << ' ' << g.vertex_name(e.target) << '\n';
    for (const auto& b : g.infinite_bundles())
        out << "infedge " << g.vertex_name(b.source) << ' ' << g.vertex_name(b.target) << '\n';
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "digraph E {\n";
    for (const auto& n : g.vertex_names()) out << "  " << dot_quote(n) << ";\n";
    for (const auto& e : g.edges())
        out << "  " << dot_quote(g.vertex_name(e.source)) << " -> " << dot_quote(g.vertex_name(e.target))
            << " [label=" << dot_quote(e.name) << "];\n";
    for (const auto& b : g.infinite_bundles())
        out << "  " << dot_quote(g.vertex_name(b.source)) << " -> " << dot_quote(g.vertex_name(b.target))
            << " [label=\"\xE2\x88\x9E\"];\n";
    out << "}\n";
    return out.str();
}

// --- reachability --------------------------------------------------------

namespace {

void check_universe(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.vertex_count())
        throw LookupError("vertex set universe " + std::to_string(x.universe()) + " does not match graph with " +
                          std::to_string(g.vertex_count()) + " vertices");
}

template <class Next>
VertexSet bfs(const Graph& g, const VertexSet& seeds, Next next) {
    VertexSet seen = seeds;
    std::deque<VertexId> queue;
    seeds.for_each([&](VertexId v) { queue.push_back(v); });
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : next(g, v)) {
            if (!seen.contains(w)) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

VertexSet tree(const Graph& g, const VertexSet& x) {
    check_universe(g, x);
    return bfs(g, x, [](const Graph& gr, VertexId v) { return gr.successors(v); });
}

VertexSet reaching(const Graph& g, const VertexSet& x) {
    check_universe(g, x);
    return bfs(g, x, [](const Graph& gr, VertexId v) { return gr.predecessors(v); });
}

bool connects(const Graph& g, VertexId u, const VertexSet& x) {
    check_universe(g, x);
    return tree(g, VertexSet(g.vertex_count(), {u})).intersects(x);
}

// --- structure -----------------------------------------------------------

std::vector<std::vector<VertexId>> sccs(const Graph& g) {
    // Iterative Tarjan.
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> out;
    std::size_t counter = 0;

    struct Frame {
        VertexId v;
        std::size_t next;
    };

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto succ = g.successors(f.v);
            if (f.next < succ.size()) {
                const VertexId w = succ[f.next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const VertexId v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<VertexId> comp;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

namespace {

bool has_self_loop(const Graph& g, VertexId v) {
    const auto succ = g.successors(v);
    return std::binary_search(succ.begin(), succ.end(), v);
}

bool component_has_cycle(const Graph& g, const std::vector<VertexId>& comp) {
    return comp.size() > 1 || has_self_loop(g, comp.front());
}

}  // namespace

VertexSet cycle_vertices(const Graph& g) {
    VertexSet out = g.empty_set();
    for (const auto& comp : sccs(g))
        if (component_has_cycle(g, comp))
            for (VertexId v : comp) out.insert(v);
    return out;
}

VertexSet no_exit_cycle_vertices(const Graph& g) {
    // A cycle has no exit exactly when its strongly connected component is
    // the cycle itself and every member emits a single edge.
    VertexSet out = g.empty_set();
    for (const auto& comp : sccs(g)) {
        if (!component_has_cycle(g, comp)) continue;
        const bool bare = std::all_of(comp.begin(), comp.end(),
                                      [&](VertexId v) { return g.out_degree(v) == Degree{1, false}; });
        if (bare)
            for (VertexId v : comp) out.insert(v);
    }
    return out;
}

bool condition_L(const Graph& g) { return no_exit_cycle_vertices(g).empty(); }

VertexProfile vertex_profile(const Graph& g, VertexId v) {
    VertexProfile p;
    p.out_degree = g.out_degree(v);
    p.in_degree = g.in_degree(v);
    p.is_sink = p.out_degree.is_zero();
    p.is_source = p.in_degree.is_zero();
    p.is_infinite_emitter = p.out_degree.infinite;
    p.is_regular = g.is_regular(v);
    p.is_bifurcation = p.out_degree.infinite || p.out_degree.count >= 2;
    p.on_cycle = cycle_vertices(g).contains(v);
    return p;
}

Graph opposite(const Graph& g) {
    Graph op;
    for (const auto& n : g.vertex_names()) op.add_vertex(n);
    for (const auto& e : g.edges()) op.add_edge(e.name, e.target, e.source);
    for (const auto& b : g.infinite_bundles()) op.add_infinite_bundle(b.target, b.source);
    return op;
}

BoundaryClassification classify_boundary_vertices(const Graph& g) {
    BoundaryClassification out;
    out.roles.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto& role = out.roles[v];
        const auto preds = g.predecessors(v);
        const auto succs = g.successors(v);
        role.initial = std::all_of(preds.begin(), preds.end(), [&](VertexId w) { return w == v; });
        role.terminal = std::all_of(succs.begin(), succs.end(), [&](VertexId w) { return w == v; });
        if (role.initial) {
            role.initial_loops = g.in_degree(v);
            ++out.initial_counts[role.initial_loops];
        }
        if (role.terminal) {
            role.terminal_loops = g.out_degree(v);
            ++out.terminal_counts[role.terminal_loops];
        }
    }
    return out;
}

}  // namespace lpa
