#pragma once

#include "polyprobe/vec.hpp"

#include <stdexcept>

namespace polyprobe {

// {v : normal . v <= offset}
struct Halfspace {
  Direction normal;
  Rational offset;
};

// {v : normal . v == offset}
struct Hyperplane {
  Direction normal;
  Rational offset;
};

inline bool contains(const Halfspace& h, const Point& p) { return dot(h.normal, p) <= h.offset; }
inline bool on_boundary(const Halfspace& h, const Point& p) { return dot(h.normal, p) == h.offset; }

struct LineIntersection2D {
  enum class Kind { kPoint, kParallel, kCoincident };
  Kind kind = Kind::kParallel;
  Point point;  // meaningful only for kPoint
};

// Solves the 2x2 system exactly. kParallel for distinct parallel lines,
// kCoincident when the lines agree up to scaling.
LineIntersection2D intersect_lines_2d(const Hyperplane& a, const Hyperplane& b);

struct DegenerateTriple : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// For consecutive clockwise polygon vertices a, b, c: the rotation of (c - a)
// oriented so that d.b > d.a; d.a == d.c holds by construction. Throws
// DegenerateTriple if a == c or b lies on the line through a and c.
Direction outward_probe_direction(const Point& a, const Point& b, const Point& c);

}  // namespace polyprobe
