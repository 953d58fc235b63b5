#pragma once

// Worked-example graphs shared by the unit and acceptance suites.

#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa::test {

// v carries a loop and feeds the two sinks u and w.
inline constexpr const char* kFig1 =
    "vertex v\nvertex u\nvertex w\n"
    "edge e v v\nedge f v u\nedge g v w\n";

// u emits infinitely many edges into the sink v.
inline constexpr const char* kFiber = "vertex u\nvertex v\ninfedge u v\n";

// u1 -> u2 -> u3 with a loop at u3.
inline constexpr const char* kShiftE =
    "vertex u1\nvertex u2\nvertex u3\n"
    "edge f1 u1 u2\nedge f2 u2 u3\nedge f3 u3 u3\n";

// v1 -> v2 <-> v3.
inline constexpr const char* kShiftF =
    "vertex v1\nvertex v2\nvertex v3\n"
    "edge g1 v1 v2\nedge g2 v2 v3\nedge g3 v3 v2\n";

// Looped u -> looped v -> sink w.
inline constexpr const char* kMix =
    "vertex u\nvertex v\nvertex w\n"
    "edge a u u\nedge b u v\nedge c v v\nedge d v w\n";

// Four looped vertices, v4 -> v3 -> v2 -> v1.
inline constexpr const char* kChain4 =
    "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
    "edge l1 v1 v1\nedge l2 v2 v2\nedge e21 v2 v1\n"
    "edge l3 v3 v3\nedge e32 v3 v2\n"
    "edge l4 v4 v4\nedge e43 v4 v3\n";

inline Graph fig1() { return parse_graph(kFig1); }
inline Graph fiber() { return parse_graph(kFiber); }
inline Graph shift_e() { return parse_graph(kShiftE); }
inline Graph shift_f() { return parse_graph(kShiftF); }
inline Graph mix() { return parse_graph(kMix); }
inline Graph chain4() { return parse_graph(kChain4); }

/// Set from vertex names.
inline VertexSet S(const Graph& g, std::initializer_list<const char*> names) {
    std::vector<std::string> v(names.begin(), names.end());
    return g.make_set(v);
}

}  // namespace lpa::test
