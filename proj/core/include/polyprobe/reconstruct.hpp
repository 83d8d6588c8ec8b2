#pragma once

#include "polyprobe/oracle.hpp"
#include "polyprobe/polygon.hpp"
#include "polyprobe/report.hpp"

#include <variant>

namespace polyprobe {

// Initialization schemes for the planar algorithm. The default three-probe
// triangle {e1, e2, -e1-e2}; the four-probe axis rectangle; an arbitrary
// positively spanning direction set; or constraints already known to the
// caller, consuming no oracle calls.
struct TriangleInit {};
struct AxisRectangleInit {};
struct CustomSpanningInit {
  std::vector<Direction> directions;  // at least 3, must positively span R^2
};
struct PreProbedInit {
  std::vector<Halfspace> constraints;  // must bound a nonempty region
};
using InitScheme = std::variant<TriangleInit, AxisRectangleInit, CustomSpanningInit, PreProbedInit>;

// R^1: one probe when the budget pins the vertex count to one, two otherwise.
ReconstructionReport reconstruct_1d(SupportOracle& oracle, VertexBudget budget);

// R^n with a guaranteed single vertex: exactly n axis probes.
ReconstructionReport reconstruct_nf1(SupportOracle& oracle);

// R^2, any vertex count: maintains an outer polygon and a confirmed vertex
// set until they agree. Worst case 3 nv calls when the budget equals the
// vertex count, 3 nv + 1 otherwise, plus the initialization allowance.
ReconstructionReport reconstruct_2d(SupportOracle& oracle, VertexBudget budget,
                                    const InitScheme& init = TriangleInit{});

// R^n with at most two vertices: box initialization (2n calls) plus at most
// n - 1 coordinate-pairing probes.
ReconstructionReport reconstruct_nd_nf2(SupportOracle& oracle);

// R^n with at most three vertices: reconstruct the planar projection, then
// lift one coordinate at a time (flat stages, point doubling, planar
// sections, or prism height probes). Worst case 5n - 1 calls.
ReconstructionReport reconstruct_nd_nf3(SupportOracle& oracle);

}  // namespace polyprobe
