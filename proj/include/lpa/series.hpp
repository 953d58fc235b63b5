#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lpa/functors.hpp"
#include "lpa/hsets.hpp"

namespace lpa {

/// H⁽ⁿ⁺¹⁾ from H⁽ⁿ⁾: pass to E/H⁽ⁿ⁾, take the hereditary saturated closure
/// of `base` there, and lift back by name. H⁽ⁿ⁾ is kept in the result so the
/// chain ascends.
HSet series_step(const Graph& g, const FunctorExpr& base, const HSet& current);

struct SeriesResult {
    std::vector<HSet> chain;  // H⁽¹⁾ … H⁽ⁿ⁾
    /// 1-based index k with H⁽ᵏ⁾ = H⁽ᵏ⁺¹⁾, when seen within the chain.
    std::optional<std::size_t> stabilized_at;
    /// Stage sets before closure (direct characterizations only).
    std::vector<VertexSet> stages;
};

/// Quotient route: H⁽¹⁾ = closure of base on E, then iterated series_step.
SeriesResult series(const Graph& g, const FunctorExpr& base, std::size_t n);

/// |A ∖ B| <= 1.
bool subset_except_one(const VertexSet& a, const VertexSet& b);

/// Socle-chain sets read off the graph: H⁽¹⁾ is the closure of the line
/// points and H⁽ᵏ⁺¹⁾ the closure of the vertices whose tree is acyclic and
/// whose every vertex has range set ⊆¹ H⁽ᵏ⁾. Refuses infinite emitters.
SeriesResult pl_series_direct(const Graph& g, std::size_t n);

/// P_c chain read off the graph: H⁽¹⁾ is the closure of P_c and H⁽ᵏ⁺¹⁾ the
/// closure of the vertices on a cycle all of whose exits land in H⁽ᵏ⁾.
/// Refuses infinite emitters.
SeriesResult pc_series_direct(const Graph& g, std::size_t n);

enum class SeriesKind { Pl, Pc };

struct CrossCheckReport {
    bool agree = true;
    std::optional<std::size_t> first_divergence;  // 1-based
    SeriesResult direct;
    SeriesResult via_quotient;
};

/// Runs series(g, closure(Pl|Pc), n) against the matching direct chain.
CrossCheckReport cross_check_series(const Graph& g, SeriesKind which, std::size_t n);

}  // namespace lpa
