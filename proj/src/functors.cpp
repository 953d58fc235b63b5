#include "lpa/functors.hpp"

#include <algorithm>
#include <cctype>

#include "lpa/error.hpp"
#include "lpa/hsets.hpp"
#include "lpa/series.hpp"
#include "lpa/topology.hpp"

namespace lpa {

// --- built-in point functors ----------------------------------------------

VertexSet p_l(const Graph& g) {
    VertexSet bad = cycle_vertices(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Degree d = g.out_degree(v);
        if (d.infinite || d.count >= 2) bad.insert(v);
    }
    return reaching(g, bad).complement();
}

VertexSet p_c(const Graph& g) { return no_exit_cycle_vertices(g); }

VertexSet p_ec(const Graph& g) {
    VertexSet out = g.empty_set();
    for (const auto& comp : sccs(g)) {
        const VertexSet members(g.vertex_count(), comp);
        const VertexId head = comp.front();
        const auto head_succ = g.successors(head);
        const bool cyclic = comp.size() > 1 || std::binary_search(head_succ.begin(), head_succ.end(), head);
        if (!cyclic) continue;
        bool closed = true;
        bool bare = true;
        for (VertexId v : comp) {
            for (VertexId w : g.successors(v)) closed = closed && members.contains(w);
            bare = bare && g.out_degree(v) == Degree{1, false};
        }
        if (closed && !bare) out |= members;
    }
    return out;
}

VertexSet p_binf(const Graph& g) {
    VertexSet emitters = g.empty_set();
    for (const auto& b : g.infinite_bundles()) emitters.insert(b.source);
    return reaching(g, emitters);
}

VertexSet p_lce(const Graph& g) { return p_l(g) | p_c(g) | p_ec(g); }

VertexSet p_bpinf(const Graph& g) { return exterior(g, p_lce(g)); }

// --- FunctorExpr ----------------------------------------------------------

FunctorExpr FunctorExpr::leaf(Kind k) {
    switch (k) {
        case Kind::Pl:
        case Kind::Pc:
        case Kind::Pec:
        case Kind::Pbinf:
        case Kind::Plce:
        case Kind::Pbpinf:
        case Kind::Empty:
        case Kind::Full:
            return FunctorExpr(k, {});
        default:
            throw DomainError("FunctorExpr::leaf: not a leaf kind");
    }
}

FunctorExpr FunctorExpr::closure(FunctorExpr e) { return FunctorExpr(Kind::Closure, {std::move(e)}); }
FunctorExpr FunctorExpr::ext(FunctorExpr e) { return FunctorExpr(Kind::Ext, {std::move(e)}); }
FunctorExpr FunctorExpr::union_of(FunctorExpr a, FunctorExpr b) {
    return FunctorExpr(Kind::Union, {std::move(a), std::move(b)});
}
FunctorExpr FunctorExpr::inter(FunctorExpr a, FunctorExpr b) {
    return FunctorExpr(Kind::Inter, {std::move(a), std::move(b)});
}
FunctorExpr FunctorExpr::star(FunctorExpr a, FunctorExpr b) {
    return FunctorExpr(Kind::Star, {std::move(a), std::move(b)});
}
FunctorExpr FunctorExpr::series(FunctorExpr base, std::size_t n) {
    if (n == 0) throw DomainError("series count must be at least 1");
    return FunctorExpr(Kind::Series, {std::move(base)}, n);
}

namespace {

struct KindName {
    FunctorExpr::Kind kind;
    const char* name;
    std::size_t arity;  // 0 leaf, 1 unary, 2 binary; series is special-cased
};

constexpr KindName kKindNames[] = {
    {FunctorExpr::Kind::Pl, "Pl", 0},          {FunctorExpr::Kind::Pc, "Pc", 0},
    {FunctorExpr::Kind::Pec, "Pec", 0},        {FunctorExpr::Kind::Pbinf, "Pbinf", 0},
    {FunctorExpr::Kind::Plce, "Plce", 0},      {FunctorExpr::Kind::Pbpinf, "Pbpinf", 0},
    {FunctorExpr::Kind::Empty, "Empty", 0},    {FunctorExpr::Kind::Full, "Full", 0},
    {FunctorExpr::Kind::Closure, "closure", 1}, {FunctorExpr::Kind::Ext, "ext", 1},
    {FunctorExpr::Kind::Union, "union", 2},    {FunctorExpr::Kind::Inter, "inter", 2},
    {FunctorExpr::Kind::Star, "star", 2},      {FunctorExpr::Kind::Series, "series", 2},
};

const KindName& info(FunctorExpr::Kind k) {
    for (const auto& kn : kKindNames)
        if (kn.kind == k) return kn;
    throw DomainError("unknown functor kind");
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    FunctorExpr parse() {
        FunctorExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    FunctorExpr expr() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a functor name");
        const std::string word = lower(text_.substr(start, pos_ - start));

        const KindName* match = nullptr;
        for (const auto& kn : kKindNames)
            if (lower(kn.name) == word) match = &kn;
        if (match == nullptr) {
            pos_ = start;
            fail("unknown functor '" + std::string(text_.substr(start, word.size())) + "'");
        }
        if (match->arity == 0) return FunctorExpr::leaf(match->kind);

        expect('(');
        FunctorExpr first = expr();
        if (match->kind == FunctorExpr::Kind::Closure || match->kind == FunctorExpr::Kind::Ext) {
            expect(')');
            return match->kind == FunctorExpr::Kind::Closure ? FunctorExpr::closure(std::move(first))
                                                             : FunctorExpr::ext(std::move(first));
        }
        expect(',');
        if (match->kind == FunctorExpr::Kind::Series) {
            const std::size_t n = integer();
            expect(')');
            return FunctorExpr::series(std::move(first), n);
        }
        FunctorExpr second = expr();
        expect(')');
        switch (match->kind) {
            case FunctorExpr::Kind::Union:
                return FunctorExpr::union_of(std::move(first), std::move(second));
            case FunctorExpr::Kind::Inter:
                return FunctorExpr::inter(std::move(first), std::move(second));
            default:
                return FunctorExpr::star(std::move(first), std::move(second));
        }
    }

    std::size_t integer() {
        skip_ws();
        const std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (value > 1'000'000) fail("series count too large");
            value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            ++pos_;
        }
        if (start == pos_) fail("expected a positive integer");
        if (value == 0) {
            pos_ = start;
            fail("series count must be at least 1");
        }
        return value;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string FunctorExpr::to_string() const {
    const auto& kn = info(kind_);
    if (kn.arity == 0) return kn.name;
    std::string out = std::string(kn.name) + "(" + children_[0].to_string();
    if (kind_ == Kind::Series)
        out += "," + std::to_string(count_);
    else if (children_.size() > 1)
        out += "," + children_[1].to_string();
    return out + ")";
}

FunctorExpr parse_functor_expr(std::string_view text) { return ExprParser(text).parse(); }

// --- evaluation -----------------------------------------------------------

namespace {

HSet star_sets(const Graph& g, const FunctorExpr& outer, const HSet& inner) {
    const QuotientResult q = quotient(g, inner);
    const HSet upper = hs_closure(q.quotient, eval(outer, q.quotient));
    return HSet::certify(g, inner.members() | q.lift(upper.members(), g.vertex_count()));
}

}  // namespace

VertexSet eval(const FunctorExpr& expr, const Graph& g) {
    using K = FunctorExpr::Kind;
    const auto& c = expr.children();
    switch (expr.kind()) {
        case K::Pl:
            return p_l(g);
        case K::Pc:
            return p_c(g);
        case K::Pec:
            return p_ec(g);
        case K::Pbinf:
            return p_binf(g);
        case K::Plce:
            return p_lce(g);
        case K::Pbpinf:
            return p_bpinf(g);
        case K::Empty:
            return g.empty_set();
        case K::Full:
            return g.all_vertices();
        case K::Closure:
            return hs_closure(g, eval(c[0], g)).members();
        case K::Ext:
            return exterior(g, eval(c[0], g));
        case K::Union:
            return eval(c[0], g) | eval(c[1], g);
        case K::Inter:
            return eval(c[0], g) & eval(c[1], g);
        case K::Star:
            return star_sets(g, c[0], hs_closure(g, eval(c[1], g))).members();
        case K::Series:
            return series(g, c[0], expr.count()).chain.back().members();
    }
    throw DomainError("unhandled functor kind");
}

}  // namespace lpa
