#pragma once

#include "polyprobe/report.hpp"

#include <string>
#include <vector>

namespace polyprobe {

// Extreme points of the convex hull in any dimension, lexicographically
// sorted. Extremality is decided exactly: a point is dropped iff it is a
// convex combination of the others. Point sets in dimension >= 3 are
// expected to stay small (the n-dimensional algorithms handle at most three
// vertices); larger sets are rejected.
std::vector<Point> canonical_vertices_nd(const std::vector<Point>& points);

// Exact membership of p in the convex hull of a small point set (|hull
// generators| <= 3 in dimension >= 3; any size in dimension <= 2).
bool in_convex_hull(const Point& p, const std::vector<Point>& generators);

// True iff both point sets produce identical support values in every listed
// direction. A finite-direction surrogate for hull equality; certify full
// equivalence with canonical_vertices_nd instead.
bool support_equivalent(const std::vector<Point>& a, const std::vector<Point>& b,
                        const std::vector<Direction>& directions);

// One row of the call-count table: the bound that applies to a run with the
// given dimension, true vertex count and declared budget.
struct AuditRow {
  int dimension = 0;
  int actual_vertices = 0;
  VertexBudget budget = VertexBudget::unbounded();
  long bound = 0;
  std::string source;
};

enum class InitKind { kTriangle, kAxisRectangle, kCustom, kPreProbed };

// Looks up the applicable bound in the embedded call-count table and applies
// the relaxed-initialization adjustment for custom direction sets of size m.
// Returns nothing if the table has no row for the combination.
std::optional<AuditRow> applicable_bound(AlgorithmKind algorithm, int dimension, int actual_vertices,
                                         VertexBudget budget, InitKind init = InitKind::kTriangle,
                                         int init_directions = 3);

struct AuditResult {
  bool pass = false;
  std::string details;
};

AuditResult audit_calls(const ReconstructionReport& report, const AuditRow& row);

}  // namespace polyprobe
