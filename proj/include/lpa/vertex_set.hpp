#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace lpa {

using VertexId = std::size_t;

/// A subset of the vertices {0, ..., universe-1} of one graph.
///
/// Stored as a packed bitset, so iteration is always in ascending vertex id
/// (which is the graph's declaration order). Two sets over different
/// universes are never equal, and mixing them in a binary operation throws
/// LookupError.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
    VertexSet(std::size_t universe, const std::vector<VertexId>& members);

    static VertexSet full(std::size_t universe);
    /// Low `universe` bits of `mask`; universe must be at most 64.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(VertexId v) const;
    void insert(VertexId v);
    void erase(VertexId v);

    /// Members in ascending id order.
    std::vector<VertexId> members() const;
    std::uint64_t to_mask() const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;
    VertexSet complement() const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = std::countr_zero(bits);
                f(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

    std::size_t hash() const noexcept;

private:
    void check_vertex(VertexId v) const;
    void check_same_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Canonical order for lists of sets: by cardinality, then lexicographically
/// on the ascending member sequence.
bool canonical_less(const VertexSet& a, const VertexSet& b);

void sort_canonical(std::vector<VertexSet>& sets);

}  // namespace lpa

template <>
struct std::hash<lpa::VertexSet> {
    std::size_t operator()(const lpa::VertexSet& s) const noexcept { return s.hash(); }
};
