#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lpa/vertex_set.hpp"

namespace lpa {

using EdgeId = std::size_t;

struct Edge {
    std::string name;
    VertexId source;
    VertexId target;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// `source` emits infinitely many parallel edges to `target`. Bundles are
/// flags, not materialized edges.
struct InfiniteBundle {
    VertexId source;
    VertexId target;

    friend bool operator==(const InfiniteBundle&, const InfiniteBundle&) = default;
};

/// An edge count that may be infinite. Finite values order before infinity.
struct Degree {
    std::size_t count = 0;
    bool infinite = false;

    static Degree infinity() { return {0, true}; }

    bool is_zero() const { return !infinite && count == 0; }
    std::string to_string() const { return infinite ? "inf" : std::to_string(count); }

    friend bool operator==(const Degree& a, const Degree& b) {
        return a.infinite == b.infinite && (a.infinite || a.count == b.count);
    }
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (a.infinite != b.infinite) return a.infinite ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a.infinite) return std::strong_ordering::equal;
        return a.count <=> b.count;
    }
};

/// Finite directed multigraph with named vertices and edges plus optional
/// infinite-emitter bundles.
///
/// Vertex ids are assigned in declaration order and every listing the graph
/// produces follows that order. Graphs are only grown through the add_*
/// members; the analysis functions below all take `const Graph&`.
class Graph {
public:
    VertexId add_vertex(std::string name);
    EdgeId add_edge(std::string name, VertexId source, VertexId target);
    void add_infinite_bundle(VertexId source, VertexId target);

    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::string& vertex_name(VertexId v) const;
    const std::vector<std::string>& vertex_names() const noexcept { return names_; }
    std::optional<VertexId> find_vertex(std::string_view name) const;
    /// Throws LookupError for an unknown name.
    VertexId vertex(std::string_view name) const;

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::optional<EdgeId> find_edge(std::string_view name) const;
    const std::vector<InfiniteBundle>& infinite_bundles() const noexcept { return bundles_; }

    std::span<const EdgeId> out_edges(VertexId v) const;
    std::span<const EdgeId> in_edges(VertexId v) const;
    /// Targets of bundles leaving `v`, in declaration order.
    std::span<const VertexId> infinite_targets(VertexId v) const;
    std::span<const VertexId> infinite_sources(VertexId v) const;

    /// Distinct targets of edges and bundles leaving `v`, ascending.
    std::span<const VertexId> successors(VertexId v) const;
    /// Distinct sources of edges and bundles entering `v`, ascending.
    std::span<const VertexId> predecessors(VertexId v) const;

    bool is_infinite_emitter(VertexId v) const;
    bool has_infinite_emitters() const noexcept { return !bundles_.empty(); }
    Degree out_degree(VertexId v) const;
    Degree in_degree(VertexId v) const;
    /// Neither a sink nor an infinite emitter.
    bool is_regular(VertexId v) const;
    /// r(s^{-1}(v)) as a set; parallel edges collapse.
    VertexSet range_set(VertexId v) const;

    VertexSet empty_set() const { return VertexSet(vertex_count()); }
    VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
    /// Throws LookupError for unknown names.
    VertexSet make_set(const std::vector<std::string>& names) const;
    /// Member names in declaration order.
    std::vector<std::string> names(const VertexSet& s) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.names_ == b.names_ && a.edges_ == b.edges_ && a.bundles_ == b.bundles_;
    }

private:
    void check_vertex(VertexId v) const;
    static void insert_sorted(std::vector<VertexId>& list, VertexId v);

    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, EdgeId> edge_index_;
    std::vector<InfiniteBundle> bundles_;

    std::vector<std::vector<EdgeId>> out_edges_;
    std::vector<std::vector<EdgeId>> in_edges_;
    std::vector<std::vector<VertexId>> inf_targets_;
    std::vector<std::vector<VertexId>> inf_sources_;
    std::vector<std::vector<VertexId>> successors_;
    std::vector<std::vector<VertexId>> predecessors_;
};

// --- text formats --------------------------------------------------------

/// Parses the line format
///
///     vertex <name>
///     edge <name> <src> <dst>
///     infedge <src> <dst>
///
/// with `#` comments. Endpoints must be declared before use.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph: vertices, then edges, then bundles, each in
/// declaration order.
std::string to_text(const Graph& g);

/// Graphviz digraph; each bundle becomes one edge labelled "∞".
std::string to_dot(const Graph& g);

// --- reachability --------------------------------------------------------

/// T(X): every vertex reachable from X by a possibly trivial path.
VertexSet tree(const Graph& g, const VertexSet& x);

/// u >= X: some (possibly trivial) path runs from u into X.
bool connects(const Graph& g, VertexId u, const VertexSet& x);

/// Every vertex with a path into X (the reverse-reachability closure).
VertexSet reaching(const Graph& g, const VertexSet& x);

// --- structure -----------------------------------------------------------

struct VertexProfile {
    Degree out_degree;
    Degree in_degree;
    bool is_sink = false;
    bool is_source = false;
    bool is_regular = false;
    bool is_infinite_emitter = false;
    bool is_bifurcation = false;
    bool on_cycle = false;
};

VertexProfile vertex_profile(const Graph& g, VertexId v);

/// Strongly connected components. Members ascend; components are ordered by
/// their smallest member.
std::vector<std::vector<VertexId>> sccs(const Graph& g);

/// Vertices lying on some closed path (including loops and loop bundles).
VertexSet cycle_vertices(const Graph& g);

/// Vertices lying on a cycle none of whose vertices emits a second edge.
VertexSet no_exit_cycle_vertices(const Graph& g);

/// Every cycle has an exit.
bool condition_L(const Graph& g);

/// Same vertices and edge names, every edge and bundle reversed.
Graph opposite(const Graph& g);

/// Role of a vertex as an initial (only loops enter) or terminal (only
/// loops leave) vertex, with its loop count.
struct BoundaryRole {
    bool initial = false;
    bool terminal = false;
    Degree initial_loops;   // |r^{-1}(v)| when initial
    Degree terminal_loops;  // |s^{-1}(v)| when terminal
};

struct BoundaryClassification {
    std::vector<BoundaryRole> roles;  // indexed by vertex id
    std::map<Degree, std::size_t> initial_counts;
    std::map<Degree, std::size_t> terminal_counts;
};

BoundaryClassification classify_boundary_vertices(const Graph& g);

}  // namespace lpa
