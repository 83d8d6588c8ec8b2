#include "polyprobe/geometry.hpp"

namespace polyprobe {

LineIntersection2D intersect_lines_2d(const Hyperplane& a, const Hyperplane& b) {
  assert(a.normal.dimension() == 2 && b.normal.dimension() == 2);
  assert(!a.normal.is_zero() && !b.normal.is_zero());
  const Rational det = cross2(a.normal, b.normal);
  if (det == 0) {
    // Parallel normals; coincident iff the offsets scale the same way.
    const bool same_line = a.normal[0] * b.offset == b.normal[0] * a.offset &&
                           a.normal[1] * b.offset == b.normal[1] * a.offset;
    return {same_line ? LineIntersection2D::Kind::kCoincident : LineIntersection2D::Kind::kParallel, {}};
  }
  Rational x = (a.offset * b.normal[1] - a.normal[1] * b.offset) / det;
  Rational y = (a.normal[0] * b.offset - a.offset * b.normal[0]) / det;
  return {LineIntersection2D::Kind::kPoint, Point{std::move(x), std::move(y)}};
}

Direction outward_probe_direction(const Point& a, const Point& b, const Point& c) {
  assert(a.dimension() == 2 && b.dimension() == 2 && c.dimension() == 2);
  if (a == c) throw DegenerateTriple("probe triple: a and c coincide");
  const Direction chord = c - a;
  Direction d = rotated_ccw(chord);
  const Rational lift = dot(d, b) - dot(d, a);
  if (lift == 0) throw DegenerateTriple("probe triple: b lies on the line through a and c");
  if (lift < 0) d = -d;
  assert(dot(d, a) == dot(d, c));
  assert(dot(d, a) < dot(d, b));
  return d;
}

}  // namespace polyprobe
