#pragma once

#include "polyprobe/rational.hpp"

#include <cassert>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace polyprobe {

// Positions (vertex candidates, subgradients) and probe directions are kept
// as distinct types; the algorithms never substitute one for the other.
template <class Tag>
class VecT {
 public:
  VecT() = default;
  explicit VecT(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  VecT(std::initializer_list<Rational> coords) : coords_(coords) {}

  static VecT zero(int dim) { return VecT(std::vector<Rational>(static_cast<size_t>(dim))); }

  int dimension() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return coords_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_) {
      if (c != 0) return false;
    }
    return true;
  }

  friend bool operator==(const VecT& a, const VecT& b) { return a.coords_ == b.coords_; }
  // Lexicographic; the canonical orderings in this library are built on it.
  friend bool operator<(const VecT& a, const VecT& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

using Point = VecT<struct PointTag>;
using Direction = VecT<struct DirectionTag>;

template <class TagA, class TagB>
Rational dot(const VecT<TagA>& a, const VecT<TagB>& b) {
  assert(a.dimension() == b.dimension());
  Rational sum = 0;
  for (int i = 0; i < a.dimension(); ++i) sum += a[i] * b[i];
  return sum;
}

// scale * e_axis in the given dimension.
inline Direction axis_direction(int dim, int axis, const Rational& scale = 1) {
  Direction d = Direction::zero(dim);
  d[axis] = scale;
  return d;
}

inline Direction operator-(const Point& a, const Point& b) {
  assert(a.dimension() == b.dimension());
  std::vector<Rational> c(static_cast<size_t>(a.dimension()));
  for (int i = 0; i < a.dimension(); ++i) c[static_cast<size_t>(i)] = a[i] - b[i];
  return Direction(std::move(c));
}

inline Direction operator+(const Direction& a, const Direction& b) {
  assert(a.dimension() == b.dimension());
  std::vector<Rational> c(static_cast<size_t>(a.dimension()));
  for (int i = 0; i < a.dimension(); ++i) c[static_cast<size_t>(i)] = a[i] + b[i];
  return Direction(std::move(c));
}

inline Direction operator-(const Direction& a) {
  std::vector<Rational> c(static_cast<size_t>(a.dimension()));
  for (int i = 0; i < a.dimension(); ++i) c[static_cast<size_t>(i)] = -a[i];
  return Direction(std::move(c));
}

inline Direction operator*(const Rational& s, const Direction& d) {
  std::vector<Rational> c(static_cast<size_t>(d.dimension()));
  for (int i = 0; i < d.dimension(); ++i) c[static_cast<size_t>(i)] = s * d[i];
  return Direction(std::move(c));
}

inline Point translated(const Point& p, const Direction& d, const Rational& scale = 1) {
  assert(p.dimension() == d.dimension());
  std::vector<Rational> c(static_cast<size_t>(p.dimension()));
  for (int i = 0; i < p.dimension(); ++i) c[static_cast<size_t>(i)] = p[i] + scale * d[i];
  return Point(std::move(c));
}

template <class Tag>
VecT<Tag> padded(const VecT<Tag>& v, int dim) {
  assert(dim >= v.dimension());
  std::vector<Rational> c = v.coords();
  c.resize(static_cast<size_t>(dim));
  return VecT<Tag>(std::move(c));
}

// 2-D helpers.
inline Rational cross2(const Direction& u, const Direction& v) {
  assert(u.dimension() == 2 && v.dimension() == 2);
  return u[0] * v[1] - u[1] * v[0];
}

// Sign of the turn a -> b -> c: positive = counterclockwise, negative =
// clockwise, zero = collinear (y axis pointing up).
inline int orient2(const Point& a, const Point& b, const Point& c) {
  return sign(cross2(b - a, c - a));
}

inline Direction rotated_ccw(const Direction& d) {
  assert(d.dimension() == 2);
  return Direction{-d[1], d[0]};
}

inline Direction rotated_cw(const Direction& d) {
  assert(d.dimension() == 2);
  return Direction{d[1], -d[0]};
}

template <class Tag>
std::string to_string(const VecT<Tag>& v) {
  std::string out = "(";
  for (int i = 0; i < v.dimension(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace polyprobe
