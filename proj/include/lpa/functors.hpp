#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

// --- built-in point functors ----------------------------------------------

/// Line points: no bifurcation, cycle or infinite emitter anywhere in T(v).
VertexSet p_l(const Graph& g);

/// Vertices on cycles without exits.
VertexSet p_c(const Graph& g);

/// Vertices on extreme cycles: cycles with exits from which every path can
/// be extended back to the cycle. Computed as the nontrivial strongly
/// connected components that are closed under out-edges and are not a bare
/// cycle.
VertexSet p_ec(const Graph& g);

/// Vertices whose tree holds an infinite emitter. The "infinitely many
/// bifurcations" alternative cannot occur in a finite graph.
VertexSet p_binf(const Graph& g);

/// P_l ∪ P_c ∪ P_ec.
VertexSet p_lce(const Graph& g);

/// ext(P_lce): vertices that connect to no line point and no cycle in
/// P_c ∪ P_ec.
VertexSet p_bpinf(const Graph& g);

// --- expression language ------------------------------------------------

/// A closed term over the built-in functors and the set combinators.
///
///     expr := Pl | Pc | Pec | Pbinf | Plce | Pbpinf | Empty | Full
///           | closure(expr) | ext(expr) | union(expr,expr)
///           | inter(expr,expr) | star(expr,expr) | series(expr,INT)
///
/// `star(a, b)` is a∗b: apply b first, then a on the quotient by b.
class FunctorExpr {
public:
    enum class Kind { Pl, Pc, Pec, Pbinf, Plce, Pbpinf, Empty, Full, Closure, Ext, Union, Inter, Star, Series };

    static FunctorExpr leaf(Kind k);
    static FunctorExpr closure(FunctorExpr e);
    static FunctorExpr ext(FunctorExpr e);
    static FunctorExpr union_of(FunctorExpr a, FunctorExpr b);
    static FunctorExpr inter(FunctorExpr a, FunctorExpr b);
    static FunctorExpr star(FunctorExpr a, FunctorExpr b);
    /// n >= 1, otherwise DomainError.
    static FunctorExpr series(FunctorExpr base, std::size_t n);

    Kind kind() const noexcept { return kind_; }
    const std::vector<FunctorExpr>& children() const noexcept { return children_; }
    std::size_t count() const noexcept { return count_; }

    /// Canonical spelling, re-parseable.
    std::string to_string() const;

    friend bool operator==(const FunctorExpr&, const FunctorExpr&) = default;

private:
    FunctorExpr(Kind k, std::vector<FunctorExpr> children, std::size_t count = 0)
        : kind_(k), children_(std::move(children)), count_(count) {}

    Kind kind_;
    std::vector<FunctorExpr> children_;
    std::size_t count_;
};

/// Case-insensitive and whitespace-tolerant. Throws ParseError with the
/// 1-based column of the offending character.
FunctorExpr parse_functor_expr(std::string_view text);

VertexSet eval(const FunctorExpr& expr, const Graph& g);

}  // namespace lpa
