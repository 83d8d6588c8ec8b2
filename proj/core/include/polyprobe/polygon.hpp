#pragma once

#include "polyprobe/geometry.hpp"

#include <vector>

namespace polyprobe {

// Extreme points of the 2-D convex hull, clockwise, lexicographically
// smallest vertex first. Collinear and duplicate points are dropped, so the
// result may have 0, 1, 2 or >= 3 entries.
std::vector<Point> convex_hull_2d(std::vector<Point> points);

// A possibly degenerate convex polygon in canonical form: clockwise vertex
// order starting at the lexicographically smallest vertex, every listed
// vertex extreme. Degenerate values (empty, point, segment) are first-class.
class Polygon2 {
 public:
  Polygon2() = default;

  static Polygon2 hull_of(std::vector<Point> points) {
    Polygon2 p;
    p.verts_ = convex_hull_2d(std::move(points));
    return p;
  }

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  const std::vector<Point>& vertices() const { return verts_; }
  bool empty() const { return verts_.empty(); }
  bool is_point() const { return verts_.size() == 1; }
  bool is_segment() const { return verts_.size() == 2; }

  // Exact membership (boundary included).
  bool contains(const Point& p) const;

  friend bool operator==(const Polygon2&, const Polygon2&) = default;

 private:
  std::vector<Point> verts_;
};

struct ConstraintSet2DResult {
  enum class Kind { kPolygon, kUnbounded, kEmpty };
  Kind kind = Kind::kEmpty;
  Polygon2 polygon;  // meaningful only for kPolygon
};

// Exact intersection of the halfspaces. kUnbounded when the normals fail to
// positively span the plane, kEmpty when the constraints are inconsistent
// (which a consistent support oracle can never produce).
ConstraintSet2DResult generated_constraint_set_2d(const std::vector<Halfspace>& constraints);

// True iff no nonzero direction has nonpositive dot with every normal,
// i.e. the directions positively span the plane.
bool positively_spans_2d(const std::vector<Direction>& directions);

// Exact membership of p in the segment [a, b]; works in any dimension.
bool on_segment(const Point& p, const Point& a, const Point& b);

}  // namespace polyprobe
