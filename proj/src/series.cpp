#include "lpa/series.hpp"

#include "lpa/error.hpp"

namespace lpa {

HSet series_step(const Graph& g, const FunctorExpr& base, const HSet& current) {
    const QuotientResult q = quotient(g, current);
    const HSet upper = hs_closure(q.quotient, eval(base, q.quotient));
    return HSet::certify(g, current.members() | q.lift(upper.members(), g.vertex_count()));
}

namespace {

void note_stabilization(SeriesResult& r) {
    const std::size_t k = r.chain.size();
    if (!r.stabilized_at && k >= 2 && r.chain[k - 1] == r.chain[k - 2]) r.stabilized_at = k - 1;
}

void refuse_infinite_emitters(const Graph& g, const char* what) {
    if (g.has_infinite_emitters())
        throw DomainError(std::string(what) + " is only characterized for graphs without infinite emitters");
}

// Vertices whose tree is acyclic and whose every vertex sends at most one
// range outside `h`.
VertexSet pl_stage(const Graph& g, const VertexSet& h) {
    VertexSet bad = cycle_vertices(g);
    for (VertexId w = 0; w < g.vertex_count(); ++w)
        if (!subset_except_one(g.range_set(w), h)) bad.insert(w);
    return reaching(g, bad).complement();
}

// Vertices on a cycle whose exits all land in `h`.
VertexSet pc_stage(const Graph& g, const VertexSet& h) {
    const std::size_t n = g.vertex_count();
    // Unique edge leaving x that stays outside h, if exactly one does.
    std::vector<std::optional<VertexId>> forced(n);
    for (VertexId x = 0; x < n; ++x) {
        std::size_t outside = 0;
        VertexId target = 0;
        for (EdgeId e : g.out_edges(x)) {
            const VertexId t = g.edge(e).target;
            if (!h.contains(t)) {
                ++outside;
                target = t;
            }
        }
        if (outside == 1) forced[x] = target;
    }

    const VertexSet on_cycle = cycle_vertices(g);
    VertexSet out = h & on_cycle;
    for (VertexId v = 0; v < n; ++v) {
        if (h.contains(v)) continue;
        VertexId x = v;
        for (std::size_t step = 0; step < n; ++step) {
            if (!forced[x]) break;
            x = *forced[x];
            if (x == v) {
                out.insert(v);
                break;
            }
        }
    }
    return out;
}

}  // namespace

SeriesResult series(const Graph& g, const FunctorExpr& base, std::size_t n) {
    if (n == 0) throw DomainError("series length must be at least 1");
    SeriesResult r;
    r.chain.push_back(series_step(g, base, hs_closure(g, g.empty_set())));
    while (r.chain.size() < n) {
        r.chain.push_back(series_step(g, base, r.chain.back()));
        note_stabilization(r);
    }
    return r;
}

bool subset_except_one(const VertexSet& a, const VertexSet& b) { return (a - b).size() <= 1; }

SeriesResult pl_series_direct(const Graph& g, std::size_t n) {
    if (n == 0) throw DomainError("series length must be at least 1");
    refuse_infinite_emitters(g, "the direct P_l series");
    SeriesResult r;
    r.stages.push_back(p_l(g));
    r.chain.push_back(hs_closure(g, r.stages.back()));
    while (r.chain.size() < n) {
        r.stages.push_back(pl_stage(g, r.chain.back().members()));
        r.chain.push_back(hs_closure(g, r.stages.back()));
        note_stabilization(r);
    }
    return r;
}

SeriesResult pc_series_direct(const Graph& g, std::size_t n) {
    if (n == 0) throw DomainError("series length must be at least 1");
    refuse_infinite_emitters(g, "the direct P_c series");
    SeriesResult r;
    // With nothing removed yet the stage set is exactly P_c.
    r.stages.push_back(pc_stage(g, g.empty_set()));
    r.chain.push_back(hs_closure(g, r.stages.back()));
    while (r.chain.size() < n) {
        r.stages.push_back(pc_stage(g, r.chain.back().members()));
        r.chain.push_back(hs_closure(g, r.stages.back()));
        note_stabilization(r);
    }
    return r;
}

CrossCheckReport cross_check_series(const Graph& g, SeriesKind which, std::size_t n) {
    CrossCheckReport report;
    if (which == SeriesKind::Pl) {
        report.direct = pl_series_direct(g, n);
        report.via_quotient = series(g, FunctorExpr::closure(FunctorExpr::leaf(FunctorExpr::Kind::Pl)), n);
    } else {
        report.direct = pc_series_direct(g, n);
        report.via_quotient = series(g, FunctorExpr::closure(FunctorExpr::leaf(FunctorExpr::Kind::Pc)), n);
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (!(report.direct.chain[k] == report.via_quotient.chain[k])) {
            report.agree = false;
            report.first_divergence = k + 1;
            break;
        }
    }
    return report;
}

}  // namespace lpa
