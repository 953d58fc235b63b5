#include <doctest.h>

#include <algorithm>

#include "lpa/error.hpp"
#include "lpa/series.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lpa;
using namespace lpa::test;
using K = FunctorExpr::Kind;

namespace {

const FunctorExpr kClosedPc = FunctorExpr::closure(FunctorExpr::leaf(K::Pc));
const FunctorExpr kClosedPl = FunctorExpr::closure(FunctorExpr::leaf(K::Pl));

std::vector<VertexSet> members_of(const SeriesResult& r) {
    std::vector<VertexSet> out;
    for (const auto& h : r.chain) out.push_back(h.members());
    return out;
}

const Graph kPath = parse_graph("vertex a\nvertex b\nvertex c\nedge x a b\nedge y b c\n");
const Graph kLoop = parse_graph("vertex v\nedge l v v\n");

}  // namespace

TEST_CASE("series_step") {
    const Graph c = chain4();
    CHECK(series_step(c, kClosedPc, HSet::certify(c, S(c, {"v1"}))).members() == S(c, {"v1", "v2"}));
    CHECK(series_step(c, kClosedPc, HSet::certify(c, c.all_vertices())).members() == c.all_vertices());
    const Graph m = mix();
    CHECK(series_step(m, kClosedPc, HSet::certify(m, m.empty_set())).members().empty());
}

TEST_CASE("series via quotients") {
    const Graph c = chain4();
    const auto r = series(c, kClosedPc, 4);
    CHECK(members_of(r) == std::vector<VertexSet>{S(c, {"v1"}), S(c, {"v1", "v2"}), S(c, {"v1", "v2", "v3"}),
                                                  c.all_vertices()});
    CHECK_FALSE(r.stabilized_at.has_value());
    CHECK(series(c, kClosedPc, 5).stabilized_at == 4);

    const Graph m = mix();
    CHECK(members_of(series(m, FunctorExpr::leaf(K::Empty), 3)) ==
          std::vector<VertexSet>(3, m.empty_set()));
    const auto ml = series(m, kClosedPl, 2);
    CHECK(members_of(ml) == std::vector<VertexSet>{S(m, {"w"}), S(m, {"w"})});
    CHECK(ml.stabilized_at == 1);
    CHECK_THROWS_AS(series(m, kClosedPl, 0), DomainError);
}

TEST_CASE("subset_except_one") {
    const VertexSet ab(3, {0, 1}), b(3, {1}), abc(3, {0, 1, 2}), c(3, {2});
    CHECK(subset_except_one(ab, b));
    CHECK_FALSE(subset_except_one(abc, c));
    CHECK(subset_except_one(VertexSet(3), abc));
}

TEST_CASE("pl_series_direct") {
    const Graph g = fig1();
    CHECK(members_of(pl_series_direct(g, 2)) == std::vector<VertexSet>{S(g, {"u", "w"}), S(g, {"u", "w"})});
    const Graph m = mix();
    CHECK(members_of(pl_series_direct(m, 2)) == std::vector<VertexSet>{S(m, {"w"}), S(m, {"w"})});
    CHECK(members_of(pl_series_direct(kPath, 1)) == std::vector<VertexSet>{kPath.all_vertices()});
    CHECK_THROWS_AS(pl_series_direct(fiber(), 2), DomainError);
}

TEST_CASE("pc_series_direct") {
    const Graph c = chain4();
    CHECK(members_of(pc_series_direct(c, 4)) == std::vector<VertexSet>{S(c, {"v1"}), S(c, {"v1", "v2"}),
                                                                       S(c, {"v1", "v2", "v3"}), c.all_vertices()});
    const Graph m = mix();
    CHECK(members_of(pc_series_direct(m, 2)) == std::vector<VertexSet>{m.empty_set(), m.empty_set()});
    CHECK(members_of(pc_series_direct(kPath, 3)) == std::vector<VertexSet>(3, kPath.empty_set()));
    CHECK_THROWS_AS(pc_series_direct(fiber(), 2), DomainError);

    // Two-vertex cycle whose single exit lands in the no-exit loop at z.
    const Graph two = parse_graph("vertex a\nvertex b\nvertex z\nedge ab a b\nedge ba b a\nedge bz b z\nedge zz z z\n");
    CHECK(members_of(pc_series_direct(two, 2)) ==
          std::vector<VertexSet>{S(two, {"z"}), two.all_vertices()});
}

TEST_CASE("cross_check_series") {
    const auto c = cross_check_series(chain4(), SeriesKind::Pc, 4);
    CHECK(c.agree);
    CHECK_FALSE(c.first_divergence.has_value());
    CHECK(cross_check_series(fig1(), SeriesKind::Pl, 3).agree);
    const auto l = cross_check_series(kLoop, SeriesKind::Pl, 2);
    CHECK(l.agree);
    CHECK(members_of(l.direct) == std::vector<VertexSet>(2, kLoop.empty_set()));
    CHECK_THROWS_AS(cross_check_series(fiber(), SeriesKind::Pc, 2), DomainError);
}

TEST_CASE("second socle term is everything exactly on acyclic graphs") {
    for (const Graph& g : {kPath, fig1(), mix(), chain4(), kLoop,
                           parse_graph("vertex a\nvertex b\nvertex c\nedge x a b\nedge y a c\nedge z b c\n")}) {
        const bool whole = series(g, kClosedPl, 2).chain.back().members() == g.all_vertices();
        CHECK(whole == oracle::on_some_cycle(g).empty());
    }
}

TEST_CASE("property: chains ascend, stabilize in |E0| steps and agree with the direct routes") {
    for (const Graph& g : standard_corpus()) {
        if (g.has_infinite_emitters()) continue;
        const std::size_t n = std::max<std::size_t>(g.vertex_count(), 1) + 1;
        for (SeriesKind k : {SeriesKind::Pl, SeriesKind::Pc}) {
            const auto rep = cross_check_series(g, k, n);
            CHECK(rep.agree);
            for (const auto* r : {&rep.direct, &rep.via_quotient}) {
                for (std::size_t i = 1; i < r->chain.size(); ++i)
                    CHECK(r->chain[i - 1].members().is_subset_of(r->chain[i].members()));
                REQUIRE(r->stabilized_at.has_value());
                CHECK(*r->stabilized_at <= std::max<std::size_t>(g.vertex_count(), 1));
            }
        }
        const VertexSet cyc = oracle::on_some_cycle(g);
        for (const auto& stage : pl_series_direct(g, n).stages) CHECK_FALSE(stage.intersects(cyc));
    }
}
