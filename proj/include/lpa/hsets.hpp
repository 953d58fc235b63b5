#pragma once

#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/topology.hpp"

namespace lpa {

/// Warning attached to results on graphs with infinite emitters, where the
/// set/graded-ideal correspondence needs breaking vertices we do not model.
inline constexpr const char* kInfiniteEmitterWarning = "infinite-emitters: ideal correspondence not guaranteed";

/// Closed under out-edges.
bool is_hereditary(const Graph& g, const VertexSet& x);

/// Every regular vertex whose range set lies in X is itself in X.
bool is_saturated(const Graph& g, const VertexSet& x);

/// A vertex set certified hereditary and saturated in the graph it was
/// built for. The only ways to obtain one are `certify` and the closures
/// below, so holding an HSet is proof of both properties.
class HSet {
public:
    /// Throws DomainError naming the failed property.
    static HSet certify(const Graph& g, VertexSet members);

    const VertexSet& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(VertexId v) const { return members_.contains(v); }

    friend bool operator==(const HSet& a, const HSet& b) { return a.members_ == b.members_; }

private:
    explicit HSet(VertexSet members) : members_(std::move(members)) {}
    friend HSet hs_closure(const Graph& g, const VertexSet& x);

    VertexSet members_;
};

std::vector<std::string> hset_warnings(const Graph& g);

/// T(X).
VertexSet hereditary_closure(const Graph& g, const VertexSet& x);

/// Smallest hereditary saturated superset: Λ⁰ = T(X), then repeatedly add
/// regular vertices whose range set already lies inside.
HSet hs_closure(const Graph& g, const VertexSet& x);

/// E/H with the embedding back into E. Vertex and edge names are kept, so
/// lifting a quotient set to E is the identity on names.
struct QuotientResult {
    Graph quotient;
    /// quotient vertex id -> original vertex id
    std::vector<VertexId> kept_vertices;

    /// Image in the original graph of a set of quotient vertices.
    VertexSet lift(const VertexSet& s, std::size_t original_universe) const;
};

/// Drops H and every edge (or bundle) whose target lies in H.
QuotientResult quotient(const Graph& g, const HSet& h);

/// Every hereditary saturated subset, canonical order.
std::vector<HSet> lattice(const Graph& g, std::size_t cap = kLatticeCap);

HSet meet(const Graph& g, const HSet& a, const HSet& b);
HSet join(const Graph& g, const HSet& a, const HSet& b);

/// H' = {v : v does not connect to H}, the set-level annihilator of I(H).
HSet annihilator_set(const Graph& g, const HSet& h);

/// H''.
HSet double_annihilator(const Graph& g, const HSet& h);

/// I(H) is a regular ideal iff H'' ⊆ H.
bool is_regular_ideal_set(const Graph& g, const HSet& h);

}  // namespace lpa
