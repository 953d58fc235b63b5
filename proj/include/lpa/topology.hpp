#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// Default and hard limits on the vertex count for exponential enumerations.
inline constexpr std::size_t kClosedSetCap = 20;
inline constexpr std::size_t kLatticeCap = 16;
inline constexpr std::size_t kHardCap = 24;

// The DCC topology: A is closed iff every vertex connecting to A lies in A.

/// c(A) = {v : v >= A}.
VertexSet dcc_closure(const Graph& g, const VertexSet& a);

bool is_closed(const Graph& g, const VertexSet& a);
bool is_open(const Graph& g, const VertexSet& a);
bool is_clopen(const Graph& g, const VertexSet& a);

/// Complement of the closure: the vertices that do not connect to A.
VertexSet exterior(const Graph& g, const VertexSet& a);
/// Complement of the closure of the complement.
VertexSet interior(const Graph& g, const VertexSet& a);
/// c(A) ∩ c(A^c).
VertexSet boundary(const Graph& g, const VertexSet& a);

/// Streams every closed set to `visit` (in subset-mask order, not canonical
/// order) until `visit` returns false. Throws CapExceeded above `cap`.
void for_each_closed_set(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                         std::size_t cap = kClosedSetCap);

/// All closed sets in canonical order.
std::vector<VertexSet> closed_sets(const Graph& g, std::size_t cap = kClosedSetCap);

/// Only ∅ and E⁰ are clopen. The empty graph is reported as not connected.
bool is_topologically_connected(const Graph& g);

/// c(H) = E⁰ for hereditary H; throws DomainError when H is not hereditary.
bool is_dense(const Graph& g, const VertexSet& h);

struct ContinuityReport {
    bool continuous = false;
    /// First closed set of the target (canonical order) whose preimage is
    /// not closed in the source.
    std::optional<VertexSet> witness;
};

/// Continuity of `vmap` (indexed by source vertex id) for the DCC
/// topologies. A pairwise reachability check settles the passing case; the
/// witness search enumerates the target's closed sets.
ContinuityReport continuity_check(const Graph& src, const Graph& dst, const std::vector<VertexId>& vmap,
                                  std::size_t cap = kClosedSetCap);

}  // namespace lpa
