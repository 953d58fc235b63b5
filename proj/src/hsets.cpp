#include "lpa/hsets.hpp"

#include <algorithm>

#include "lpa/error.hpp"

namespace lpa {

bool is_hereditary(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.vertex_count()) throw LookupError("vertex set does not belong to this graph");
    bool ok = true;
    x.for_each([&](VertexId v) {
        for (VertexId w : g.successors(v)) ok = ok && x.contains(w);
    });
    return ok;
}

bool is_saturated(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.vertex_count()) throw LookupError("vertex set does not belong to this graph");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (x.contains(v) || !g.is_regular(v)) continue;
        const auto succ = g.successors(v);
        if (std::all_of(succ.begin(), succ.end(), [&](VertexId w) { return x.contains(w); })) return false;
    }
    return true;
}

HSet HSet::certify(const Graph& g, VertexSet members) {
    if (members.universe() != g.vertex_count()) throw LookupError("vertex set does not belong to this graph");
    if (!is_hereditary(g, members)) throw DomainError("set is not hereditary");
    if (!is_saturated(g, members)) throw DomainError("set is not saturated");
    return HSet(std::move(members));
}

std::vector<std::string> hset_warnings(const Graph& g) {
    if (g.has_infinite_emitters()) return {kInfiniteEmitterWarning};
    return {};
}

VertexSet hereditary_closure(const Graph& g, const VertexSet& x) { return tree(g, x); }

HSet hs_closure(const Graph& g, const VertexSet& x) {
    VertexSet layer = tree(g, x);
    // Each pass adds the next Λ layer; at most |E⁰| passes add anything.
    bool grew = true;
    while (grew) {
        grew = false;
        VertexSet next = layer;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (layer.contains(v) || !g.is_regular(v)) continue;
            const auto succ = g.successors(v);
            if (std::all_of(succ.begin(), succ.end(), [&](VertexId w) { return layer.contains(w); })) {
                next.insert(v);
                grew = true;
            }
        }
        layer = std::move(next);
    }
    return HSet(std::move(layer));
}

VertexSet QuotientResult::lift(const VertexSet& s, std::size_t original_universe) const {
    if (s.universe() != kept_vertices.size()) throw LookupError("set does not belong to the quotient graph");
    VertexSet out(original_universe);
    s.for_each([&](VertexId v) { out.insert(kept_vertices[v]); });
    return out;
}

QuotientResult quotient(const Graph& g, const HSet& h) {
    const VertexSet& removed = h.members();
    if (removed.universe() != g.vertex_count()) throw LookupError("set does not belong to this graph");

    QuotientResult out;
    std::vector<VertexId> new_id(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (removed.contains(v)) continue;
        new_id[v] = out.quotient.add_vertex(g.vertex_name(v));
        out.kept_vertices.push_back(v);
    }
    for (const auto& e : g.edges())
        if (!removed.contains(e.source) && !removed.contains(e.target))
            out.quotient.add_edge(e.name, new_id[e.source], new_id[e.target]);
    for (const auto& b : g.infinite_bundles())
        if (!removed.contains(b.source) && !removed.contains(b.target))
            out.quotient.add_infinite_bundle(new_id[b.source], new_id[b.target]);
    return out;
}

std::vector<HSet> lattice(const Graph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n > cap || n > kHardCap) throw CapExceeded(n, std::min(cap, kHardCap));

    std::vector<std::uint64_t> succ_mask(n, 0);
    std::vector<bool> regular(n, false);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : g.successors(v)) succ_mask[v] |= std::uint64_t{1} << w;
        regular[v] = g.is_regular(v);
    }

    std::vector<VertexSet> sets;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool ok = true;
        for (VertexId v = 0; v < n && ok; ++v) {
            const bool in = (mask >> v) & 1U;
            const bool range_inside = (succ_mask[v] & ~mask) == 0;
            if (in)
                ok = range_inside;
            else if (regular[v])
                ok = !range_inside;
        }
        if (ok) sets.push_back(VertexSet::from_mask(n, mask));
    }
    sort_canonical(sets);

    std::vector<HSet> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.push_back(HSet::certify(g, std::move(s)));
    return out;
}

HSet meet(const Graph& g, const HSet& a, const HSet& b) { return HSet::certify(g, a.members() & b.members()); }

HSet join(const Graph& g, const HSet& a, const HSet& b) { return hs_closure(g, a.members() | b.members()); }

HSet annihilator_set(const Graph& g, const HSet& h) { return HSet::certify(g, exterior(g, h.members())); }

HSet double_annihilator(const Graph& g, const HSet& h) { return annihilator_set(g, annihilator_set(g, h)); }

bool is_regular_ideal_set(const Graph& g, const HSet& h) {
    return double_annihilator(g, h).members().is_subset_of(h.members());
}

}  // namespace lpa
