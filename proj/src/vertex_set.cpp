#include "lpa/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "lpa/error.hpp"

namespace lpa {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members) : VertexSet(universe) {
    for (VertexId v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, const std::vector<VertexId>& members) : VertexSet(universe) {
    for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe above 64");
    VertexSet s(universe);
    if (universe == 0) return s;
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    s.words_[0] = mask;
    return s;
}

std::size_t VertexSet::size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::contains(VertexId v) const {
    check_vertex(v);
    return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(VertexId v) {
    check_vertex(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(VertexId v) {
    check_vertex(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
}

std::uint64_t VertexSet::to_mask() const {
    if (universe_ > 64) throw std::invalid_argument("VertexSet::to_mask: universe above 64");
    return words_.empty() ? 0 : words_[0];
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

std::size_t VertexSet::hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

void VertexSet::check_vertex(VertexId v) const {
    if (v >= universe_)
        throw LookupError("vertex id " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
}

void VertexSet::check_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw LookupError("vertex sets over different universes (" + std::to_string(universe_) + " vs " +
                          std::to_string(other.universe_) + ")");
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
    const auto sa = a.size();
    const auto sb = b.size();
    if (sa != sb) return sa < sb;
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

void sort_canonical(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end(), canonical_less); }

}  // namespace lpa
