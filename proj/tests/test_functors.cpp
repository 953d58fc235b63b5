#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lpa/error.hpp"
#include "lpa/functors.hpp"
#include "lpa/hsets.hpp"
#include "lpa/topology.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lpa;
using namespace lpa::test;
using K = FunctorExpr::Kind;

namespace {

FunctorExpr L(K k) { return FunctorExpr::leaf(k); }
FunctorExpr C(K k) { return FunctorExpr::closure(L(k)); }

VertexSet ev(const char* text, const Graph& g) { return eval(parse_functor_expr(text), g); }

std::size_t error_column(const char* text) {
    try {
        parse_functor_expr(text);
    } catch (const ParseError& e) {
        return e.column();
    }
    return 0;
}

}  // namespace

TEST_CASE("parse_functor_expr") {
    CHECK(parse_functor_expr("ext(union(Pl,union(Pc,Pec)))") ==
          FunctorExpr::ext(FunctorExpr::union_of(L(K::Pl), FunctorExpr::union_of(L(K::Pc), L(K::Pec)))));
    CHECK(parse_functor_expr("Pl") == L(K::Pl));
    CHECK(parse_functor_expr("star(closure(Pc),closure(Pl))") == FunctorExpr::star(C(K::Pc), C(K::Pl)));
    CHECK(parse_functor_expr("  SERIES ( closure( pc ) , 3 ) ") == FunctorExpr::series(C(K::Pc), 3));
    CHECK(parse_functor_expr("inter(full,EMPTY)") == FunctorExpr::inter(L(K::Full), L(K::Empty)));
    for (const char* t : {"Pbinf", "Plce", "Pbpinf", "series(star(Pl,Pc),2)", "inter(closure(Pec),ext(Full))"})
        CHECK(parse_functor_expr(parse_functor_expr(t).to_string()) == parse_functor_expr(t));
}

TEST_CASE("parse_functor_expr errors report a column") {
    CHECK(error_column("") == 1);
    CHECK(error_column("Px") == 1);
    CHECK(error_column("ext(Pl") == 7);
    CHECK(error_column("union(Pl)") == 9);
    CHECK(error_column("Pl Pc") == 4);
    CHECK(error_column("series(Pl,0)") != 0);
    CHECK(error_column("series(Pl,x)") == 11);
    CHECK_THROWS_AS(FunctorExpr::series(L(K::Pl), 0), DomainError);
}

TEST_CASE("point functors on the worked examples") {
    const Graph f1 = fig1(), m = mix(), fb = fiber(), c4 = chain4();
    CHECK(p_l(f1) == S(f1, {"u", "w"}));
    CHECK(p_l(m) == S(m, {"w"}));
    CHECK(p_l(fb) == S(fb, {"v"}));

    CHECK(p_c(c4) == S(c4, {"v1"}));
    CHECK(p_c(m).empty());
    CHECK(p_c(parse_graph("vertex a\nvertex b\nedge x a b\n")).empty());

    const Graph rose2 = parse_graph("vertex v\nedge a v v\nedge b v v\n");
    CHECK(p_ec(rose2) == rose2.all_vertices());
    CHECK(p_ec(m).empty());
    CHECK(p_ec(parse_graph("vertex a\nvertex b\nedge x a b\n")).empty());

    CHECK(p_binf(fb) == S(fb, {"u"}));
    CHECK_FALSE(is_hereditary(fb, p_binf(fb)));
    CHECK(p_binf(f1).empty());
    const Graph loopbundle = parse_graph("vertex a\nvertex u\nvertex z\nedge x a u\ninfedge u u\n");
    CHECK(p_binf(loopbundle) == S(loopbundle, {"a", "u"}));

    CHECK(p_lce(m) == S(m, {"w"}));
    CHECK(p_bpinf(f1).empty());
    CHECK(p_bpinf(m).empty());
}

TEST_CASE("eval on the worked examples") {
    const Graph m = mix();
    CHECK(ev("star(closure(Pc),closure(Pl))", m) == S(m, {"v", "w"}));
    CHECK(ev("star(closure(Pc),star(closure(Pc),closure(Pl)))", m) == m.all_vertices());
    CHECK(ev("star(closure(Pl),closure(Pc))", m) == S(m, {"w"}));
    CHECK(ev("closure(Pl)", m) == S(m, {"w"}));
    CHECK(ev("closure(Pc)", m).empty());
    CHECK(ev("Pbpinf", m).empty());
    CHECK(ev("union(Pl,Empty)", m) == p_l(m));
    CHECK(ev("Full", m) == m.all_vertices());
    CHECK(ev("inter(Full,Pl)", m) == p_l(m));
    CHECK(ev("ext(Pl)", fig1()).empty());
    // star auto-closes its arguments.
    CHECK(ev("star(Pc,Pl)", m) == S(m, {"v", "w"}));

    const Graph c4 = chain4();
    CHECK(ev("series(closure(Pc),2)", c4) == S(c4, {"v1", "v2"}));
    CHECK(ev("series(Pc,4)", c4) == c4.all_vertices());
}

TEST_CASE("Pbpinf is empty when Plce is dense") {
    for (const Graph& g : standard_corpus()) {
        const VertexSet lce = p_lce(g);
        if (is_dense(g, hereditary_closure(g, lce))) CHECK(p_bpinf(g).empty());
    }
}

TEST_CASE("property: point functors agree with the definitional oracles") {
    for (const Graph& g : standard_corpus()) {
        const VertexSet pl = p_l(g), pc = p_c(g), pec = p_ec(g);
        if (!g.has_infinite_emitters()) CHECK(pl == oracle::line_points(g));
        CHECK(pc == oracle::no_exit_cycle_points(g));
        CHECK(pec == oracle::extreme_cycle_points(g));

        VertexSet emitters = g.empty_set();
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (g.is_infinite_emitter(v)) emitters.insert(v);
        CHECK(p_binf(g) == oracle::closure(g, emitters));
        if (g.has_infinite_emitters()) {
            CHECK_FALSE(pl.intersects(oracle::closure(g, emitters)));
        }

        for (const VertexSet& s : {pl, pc, pec}) CHECK(oracle::hereditary(g, s));
        // Predecessor-closed rather than hereditary: u -> sink v with u an emitter gives {u}.
        CHECK(oracle::closure(g, p_binf(g)) == p_binf(g));
        const VertexSet bp = p_bpinf(g);
        CHECK(oracle::hereditary(g, bp));
        CHECK(oracle::saturated(g, bp));

        CHECK_FALSE(pl.intersects(pc));
        CHECK_FALSE(pl.intersects(pec));
        CHECK_FALSE(pc.intersects(pec));
    }
}

TEST_CASE("property: combinator laws") {
    // Every base evaluates to a hereditary set; ext is only self-stabilizing on those.
    const std::vector<FunctorExpr> bases{L(K::Pl),   L(K::Pc),   L(K::Pec),
                                         C(K::Pbinf), L(K::Plce), FunctorExpr::union_of(L(K::Pl), L(K::Pc))};
    for (const Graph& g : standard_corpus()) {
        for (const auto& e : bases) {
            const VertexSet x = eval(e, g);
            const auto ext1 = FunctorExpr::ext(e);
            CHECK(eval(FunctorExpr::ext(FunctorExpr::ext(ext1)), g) == eval(ext1, g));

            const VertexSet cl = eval(FunctorExpr::closure(e), g);
            CHECK(cl == oracle::minimal_hs_superset(g, x));

            const VertexSet closed = eval(FunctorExpr::closure(e), g);
            CHECK(eval(FunctorExpr::star(e, L(K::Empty)), g) == closed);
            CHECK(eval(FunctorExpr::star(L(K::Empty), e), g) == closed);
        }
    }
}

TEST_CASE("property: star is associative on the closed point functors") {
    const std::vector<FunctorExpr> hs{C(K::Pl), C(K::Pc), C(K::Pec)};
    for (const Graph& g : standard_corpus()) {
        for (const auto& a : hs)
            for (const auto& b : hs)
                for (const auto& c : hs) {
                    const VertexSet left = eval(FunctorExpr::star(FunctorExpr::star(a, b), c), g);
                    const VertexSet right = eval(FunctorExpr::star(a, FunctorExpr::star(b, c)), g);
                    CHECK(left == right);
                    CHECK(oracle::hereditary(g, left));
                    CHECK(oracle::saturated(g, left));
                }
    }
}

TEST_CASE("property: evaluation commutes with renaming") {
    const std::vector<const char*> exprs{"Pl",     "Pc",   "Pec",  "Pbinf", "Plce", "Pbpinf",
                                         "closure(Pl)", "star(Pc,Pl)", "series(Pl,3)", "inter(ext(Pc),Full)"};
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(rng, 1, 7, 12, 0.15);
        std::vector<VertexId> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabel(g, perm);
        for (const char* e : exprs) CHECK(ev(e, h) == map_set(ev(e, g), perm));
    }
}
