#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/topology.hpp"

namespace lpa {

/// Shift of the edges leaving `u` onto `v`: theta pairs an edge of s⁻¹(u)
/// with an edge of s⁻¹(v) having the same range. Edges are named.
struct ShiftSpec {
    std::string u;
    std::string v;
    std::vector<std::pair<std::string, std::string>> theta;
};

/// Name given to the new edge v -> u; a numeric suffix is appended when the
/// graph already uses it.
inline constexpr const char* kShiftEdgeName = "__shift";

/// Every violated condition, one message each. Empty means valid.
std::vector<std::string> validate_shift(const Graph& g, const ShiftSpec& spec);

/// E(u ↪ v): same vertices, the image of theta removed, one edge v -> u
/// appended. Throws DomainError listing the violations when invalid.
Graph shift_graph(const Graph& g, const ShiftSpec& spec);

struct ShiftContinuityReport {
    /// u >=_E w implies u >=_F w for every pair.
    bool pairwise_ok = false;
    /// Every closed set of F is closed in E; empty when skipped for size.
    std::optional<bool> closed_sets_ok;
};

ShiftContinuityReport shift_continuity_report(const Graph& g, const ShiftSpec& spec,
                                              std::size_t cap = kClosedSetCap);

}  // namespace lpa
