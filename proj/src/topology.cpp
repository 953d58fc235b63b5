#include "lpa/topology.hpp"

#include <string>

#include "lpa/error.hpp"
#include "lpa/hsets.hpp"

namespace lpa {

VertexSet dcc_closure(const Graph& g, const VertexSet& a) { return reaching(g, a); }

bool is_closed(const Graph& g, const VertexSet& a) { return dcc_closure(g, a) == a; }

bool is_open(const Graph& g, const VertexSet& a) { return is_closed(g, a.complement()); }

bool is_clopen(const Graph& g, const VertexSet& a) { return is_closed(g, a) && is_open(g, a); }

VertexSet exterior(const Graph& g, const VertexSet& a) { return dcc_closure(g, a).complement(); }

VertexSet interior(const Graph& g, const VertexSet& a) { return dcc_closure(g, a.complement()).complement(); }

VertexSet boundary(const Graph& g, const VertexSet& a) { return dcc_closure(g, a) & dcc_closure(g, a.complement()); }

void for_each_closed_set(const Graph& g, const std::function<bool(const VertexSet&)>& visit, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n > cap || n > kHardCap) throw CapExceeded(n, std::min(cap, kHardCap));

    std::vector<std::uint64_t> pred_mask(n, 0);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId p : g.predecessors(v)) pred_mask[v] |= std::uint64_t{1} << p;

    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool closed = true;
        for (std::uint64_t bits = mask; bits != 0 && closed; bits &= bits - 1) {
            const auto v = static_cast<VertexId>(std::countr_zero(bits));
            closed = (pred_mask[v] & ~mask) == 0;
        }
        if (closed && !visit(VertexSet::from_mask(n, mask))) return;
    }
}

std::vector<VertexSet> closed_sets(const Graph& g, std::size_t cap) {
    std::vector<VertexSet> out;
    for_each_closed_set(
        g,
        [&](const VertexSet& s) {
            out.push_back(s);
            return true;
        },
        cap);
    sort_canonical(out);
    return out;
}

bool is_topologically_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    // Grow the smallest clopen set around vertex 0: alternate the closure
    // with the smallest open superset (open sets are the hereditary ones).
    VertexSet a(g.vertex_count(), {0});
    while (true) {
        VertexSet next = tree(g, dcc_closure(g, a));
        if (next == a) break;
        a = std::move(next);
    }
    return a == g.all_vertices();
}

bool is_dense(const Graph& g, const VertexSet& h) {
    if (!is_hereditary(g, h)) throw DomainError("is_dense: set is not hereditary");
    return dcc_closure(g, h) == g.all_vertices();
}

ContinuityReport continuity_check(const Graph& src, const Graph& dst, const std::vector<VertexId>& vmap,
                                  std::size_t cap) {
    if (vmap.size() != src.vertex_count())
        throw DomainError("vertex map covers " + std::to_string(vmap.size()) + " of " +
                          std::to_string(src.vertex_count()) + " source vertices");
    for (VertexId image : vmap)
        if (image >= dst.vertex_count())
            throw DomainError("vertex map sends a vertex outside the target graph");

    bool monotone = true;
    for (VertexId u = 0; u < src.vertex_count() && monotone; ++u) {
        const VertexSet from_u = tree(src, VertexSet(src.vertex_count(), {u}));
        const VertexSet from_image = tree(dst, VertexSet(dst.vertex_count(), {vmap[u]}));
        from_u.for_each([&](VertexId w) { monotone = monotone && from_image.contains(vmap[w]); });
    }
    if (monotone) return {true, std::nullopt};

    for (const VertexSet& s : closed_sets(dst, cap)) {
        VertexSet preimage = src.empty_set();
        for (VertexId u = 0; u < src.vertex_count(); ++u)
            if (s.contains(vmap[u])) preimage.insert(u);
        if (!is_closed(src, preimage)) return {false, s};
    }
    return {true, std::nullopt};
}

}  // namespace lpa
