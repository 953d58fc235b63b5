#include <doctest.h>

#include <algorithm>

#include "lpa/error.hpp"
#include "lpa/moves.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lpa;
using namespace lpa::test;

namespace {

const char* kAB = "vertex u\nvertex v\nvertex w\nvertex x\nedge a u w\nedge b v w\nedge c v x\n";

bool mentions(const std::vector<std::string>& errs, const std::string& needle) {
    return std::any_of(errs.begin(), errs.end(), [&](const std::string& e) { return e.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("validate_shift") {
    const Graph g = parse_graph(kAB);
    CHECK(validate_shift(g, {"u", "v", {{"a", "b"}}}).empty());
    CHECK(validate_shift(g, {"u", "v", {}}).empty());
    CHECK(mentions(validate_shift(g, {"u", "v", {{"a", "c"}}}), "range mismatch"));
    CHECK(mentions(validate_shift(g, {"u", "v", {{"b", "b"}}}), "does not leave u"));
    CHECK(mentions(validate_shift(g, {"u", "v", {{"a", "a"}}}), "does not leave v"));
    CHECK(mentions(validate_shift(g, {"u", "q", {}}), "unknown vertex"));
    CHECK(mentions(validate_shift(g, {"u", "v", {{"zz", "b"}}}), "unknown edge"));
    CHECK_FALSE(validate_shift(g, {"u", "u", {}}).empty());

    const Graph two = parse_graph("vertex u\nvertex v\nvertex w\nedge a1 u w\nedge a2 u w\nedge b v w\n");
    CHECK(mentions(validate_shift(two, {"u", "v", {{"a1", "b"}, {"a2", "b"}}}), "injective"));
    CHECK_FALSE(validate_shift(two, {"u", "v", {{"a1", "b"}, {"a1", "b"}}}).empty());

    // Two independent faults are both reported.
    CHECK(validate_shift(g, {"u", "v", {{"a", "c"}, {"b", "b"}}}).size() >= 2);

    const Graph f = parse_graph("vertex u\nvertex v\nvertex w\ninfedge u w\nedge b v w\n");
    CHECK(mentions(validate_shift(f, {"u", "v", {}}), "infinite emitter"));
}

TEST_CASE("shift_graph") {
    const Graph g = parse_graph(kAB);
    const Graph f = shift_graph(g, {"u", "v", {{"a", "b"}}});
    CHECK(f.vertex_names() == g.vertex_names());
    CHECK(f.edge_count() == 3);
    CHECK_FALSE(f.find_edge("b").has_value());
    const auto s = f.find_edge(kShiftEdgeName);
    REQUIRE(s.has_value());
    CHECK(f.edge(*s).source == f.vertex("v"));
    CHECK(f.edge(*s).target == f.vertex("u"));

    const Graph e = shift_graph(g, {"u", "v", {}});
    CHECK(e.edge_count() == g.edge_count() + 1);

    const Graph fig = fig1();
    CHECK(shift_graph(fig, {"u", "v", {}}).edge_count() == 4);

    CHECK_THROWS_AS(shift_graph(g, {"u", "v", {{"a", "c"}}}), DomainError);

    const Graph taken = parse_graph("vertex u\nvertex v\nedge __shift u u\nedge __shift_1 v v\n");
    const Graph t = shift_graph(taken, {"u", "v", {}});
    CHECK(t.find_edge("__shift_2").has_value());
}

TEST_CASE("shift_continuity_report") {
    const Graph g = parse_graph(kAB);
    const auto r = shift_continuity_report(g, {"u", "v", {{"a", "b"}}});
    CHECK(r.pairwise_ok);
    CHECK(r.closed_sets_ok == true);
    const auto empty = shift_continuity_report(fig1(), {"u", "v", {}});
    CHECK(empty.pairwise_ok);
    CHECK(empty.closed_sets_ok == true);
    CHECK_FALSE(shift_continuity_report(g, {"u", "v", {}}, 2).closed_sets_ok.has_value());
}

TEST_CASE("property: random valid shifts are continuous") {
    std::mt19937_64 rng(47);
    int checked = 0, nontrivial = 0;
    while (checked < 500) {
        const Graph g = random_shift_graph(rng, 8);
        const auto spec = random_shift(rng, g);
        if (!spec) continue;
        ++checked;
        nontrivial += spec->theta.empty() ? 0 : 1;
        REQUIRE(validate_shift(g, *spec).empty());
        const Graph f = shift_graph(g, *spec);
        CHECK(f.vertex_names() == g.vertex_names());
        CHECK(f.edge_count() == g.edge_count() - spec->theta.size() + 1);

        const auto re = oracle::reach_matrix(g), rf = oracle::reach_matrix(f);
        for (VertexId a = 0; a < g.vertex_count(); ++a)
            for (VertexId b = 0; b < g.vertex_count(); ++b)
                if (re[a][b]) CHECK(rf[a][b]);

        const auto rep = shift_continuity_report(g, *spec);
        CHECK(rep.pairwise_ok);
        CHECK(rep.closed_sets_ok == true);
    }
    CHECK(nontrivial >= 150);
}
