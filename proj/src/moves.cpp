#include "lpa/moves.hpp"

#include <set>

#include "lpa/error.hpp"

namespace lpa {

std::vector<std::string> validate_shift(const Graph& g, const ShiftSpec& spec) {
    std::vector<std::string> errors;
    const auto u = g.find_vertex(spec.u);
    const auto v = g.find_vertex(spec.v);
    if (!u) errors.push_back("unknown vertex u '" + spec.u + "'");
    if (!v) errors.push_back("unknown vertex v '" + spec.v + "'");
    if (u && v && *u == *v) errors.push_back("u and v must be distinct");
    if (u && g.is_infinite_emitter(*u)) errors.push_back("u '" + spec.u + "' is an infinite emitter");

    std::set<std::string> domain, image;
    for (const auto& [from, to] : spec.theta) {
        const auto f = g.find_edge(from);
        const auto h = g.find_edge(to);
        if (!f) errors.push_back("unknown edge '" + from + "'");
        if (!h) errors.push_back("unknown edge '" + to + "'");
        if (!domain.insert(from).second) errors.push_back("edge '" + from + "' mapped twice");
        if (!image.insert(to).second) errors.push_back("theta not injective: '" + to + "' hit twice");
        if (f && u && g.edge(*f).source != *u)
            errors.push_back("domain edge '" + from + "' does not leave u");
        if (h && v && g.edge(*h).source != *v) errors.push_back("image edge '" + to + "' does not leave v");
        if (f && h && g.edge(*f).target != g.edge(*h).target)
            errors.push_back("range mismatch: '" + from + "' and '" + to + "' end at different vertices");
    }
    return errors;
}

Graph shift_graph(const Graph& g, const ShiftSpec& spec) {
    const auto errors = validate_shift(g, spec);
    if (!errors.empty()) {
        std::string msg = "invalid shift: ";
        for (std::size_t i = 0; i < errors.size(); ++i) msg += (i ? "; " : "") + errors[i];
        throw DomainError(msg);
    }

    std::set<std::string> removed;
    for (const auto& pair : spec.theta) removed.insert(pair.second);

    Graph f;
    for (const auto& n : g.vertex_names()) f.add_vertex(n);
    for (const auto& e : g.edges())
        if (!removed.contains(e.name)) f.add_edge(e.name, e.source, e.target);
    for (const auto& b : g.infinite_bundles()) f.add_infinite_bundle(b.source, b.target);

    std::string fresh = kShiftEdgeName;
    for (std::size_t k = 1; g.find_edge(fresh); ++k) fresh = std::string(kShiftEdgeName) + "_" + std::to_string(k);
    f.add_edge(fresh, g.vertex(spec.v), g.vertex(spec.u));
    return f;
}

ShiftContinuityReport shift_continuity_report(const Graph& g, const ShiftSpec& spec, std::size_t cap) {
    const Graph f = shift_graph(g, spec);
    ShiftContinuityReport report;

    report.pairwise_ok = true;
    for (VertexId a = 0; a < g.vertex_count() && report.pairwise_ok; ++a) {
        const VertexSet seed(g.vertex_count(), {a});
        report.pairwise_ok = tree(g, seed).is_subset_of(tree(f, seed));
    }

    if (f.vertex_count() <= cap && f.vertex_count() <= kHardCap) {
        bool ok = true;
        for_each_closed_set(
            f,
            [&](const VertexSet& s) {
                ok = is_closed(g, s);
                return ok;
            },
            cap);
        report.closed_sets_ok = ok;
    }
    return report;
}

}  // namespace lpa
