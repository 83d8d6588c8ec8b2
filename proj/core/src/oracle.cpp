#include "polyprobe/oracle.hpp"

#include "polyprobe/verify.hpp"

#include <algorithm>

namespace polyprobe {

namespace {

void require_probe(const SupportOracle& oracle, const Direction& d) {
  if (d.dimension() != oracle.dimension()) {
    throw DimensionMismatch("probe direction dimension does not match the oracle");
  }
  if (d.is_zero()) throw DimensionMismatch("probe direction is zero");
}

}  // namespace

VertexListOracle::VertexListOracle(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  assert(!vertices_.empty());
  for (const auto& v : vertices_) assert(v.dimension() == vertices_[0].dimension());
}

Rational VertexListOracle::support(const Direction& d) {
  require_probe(*this, d);
  Rational best = dot(d, vertices_[0]);
  for (size_t i = 1; i < vertices_.size(); ++i) best = std::max(best, dot(d, vertices_[i]));
  return best;
}

FiniteMaxOracle::FiniteMaxOracle(std::vector<AffinePiece> pieces, Point anchor)
    : pieces_(std::move(pieces)), anchor_(std::move(anchor)) {
  assert(!pieces_.empty());
  for (const auto& piece : pieces_) assert(piece.gradient.dimension() == anchor_.dimension());
  Rational best = dot(pieces_[0].gradient, anchor_) + pieces_[0].offset;
  for (size_t i = 1; i < pieces_.size(); ++i) {
    best = std::max(best, dot(pieces_[i].gradient, anchor_) + pieces_[i].offset);
  }
  for (size_t i = 0; i < pieces_.size(); ++i) {
    if (dot(pieces_[i].gradient, anchor_) + pieces_[i].offset == best) {
      active_.push_back(static_cast<int>(i));
    }
  }
}

Rational FiniteMaxOracle::support(const Direction& d) {
  require_probe(*this, d);
  Rational best = dot(d, pieces_[static_cast<size_t>(active_[0])].gradient);
  for (size_t k = 1; k < active_.size(); ++k) {
    best = std::max(best, dot(d, pieces_[static_cast<size_t>(active_[k])].gradient));
  }
  return best;
}

std::vector<Point> FiniteMaxOracle::subdifferential_vertices() const {
  std::vector<Point> gradients;
  gradients.reserve(active_.size());
  for (int i : active_) gradients.push_back(pieces_[static_cast<size_t>(i)].gradient);
  return canonical_vertices_nd(gradients);
}

NoisyOracle::NoisyOracle(SupportOracle& inner, Rational epsilon, std::uint64_t seed)
    : inner_(inner), epsilon_(std::move(epsilon)), rng_(seed) {
  assert(epsilon_ >= 0);
}

Rational NoisyOracle::support(const Direction& d) {
  Rational value = inner_.support(d);
  if (epsilon_ == 0) return value;
  // Rational noise from a fixed grid: xi = epsilon * k / kGrid with
  // |k| <= kGrid - 1, so |xi| < epsilon holds strictly.
  constexpr std::int64_t kGrid = 4096;
  const std::int64_t k = static_cast<std::int64_t>(rng_() % (2 * kGrid - 1)) - (kGrid - 1);
  return value + epsilon_ * Rational(k, kGrid);
}

CoordinateProjectionOracle::CoordinateProjectionOracle(SupportOracle& inner, int k)
    : inner_(inner), k_(k) {
  assert(k >= 1 && k <= inner.dimension());
}

Rational CoordinateProjectionOracle::support(const Direction& d) {
  require_probe(*this, d);
  return inner_.support(padded(d, inner_.dimension()));
}

PlanarSectionOracle::PlanarSectionOracle(SupportOracle& inner, Point base, Point other, int axis)
    : inner_(inner), base_(std::move(base)), span_(other - base_), axis_(axis) {
  const int n = inner_.dimension();
  assert(base_.dimension() == n && other.dimension() == n);
  assert(axis_ >= 0 && axis_ < n);
  assert(!span_.is_zero());
  for (int i = axis_; i < n; ++i) {
    assert(base_[i] == 0);
    assert(span_[i] == 0);
  }
  const Rational norm2 = dot(span_, span_);
  scaled_ = Rational(1) / norm2 * span_;
  scaled_dot_base_ = dot(scaled_, base_);
}

Rational PlanarSectionOracle::support(const Direction& g) {
  require_probe(*this, g);
  Direction d = g[0] * scaled_ + g[1] * axis_direction(inner_.dimension(), axis_);
  return inner_.support(d) - g[0] * scaled_dot_base_;
}

Point PlanarSectionOracle::lift(const Point& plane_point) const {
  assert(plane_point.dimension() == 2);
  Point out = translated(base_, span_, plane_point[0]);
  out[axis_] = plane_point[1];
  return out;
}

Point PlanarSectionOracle::plane_coordinates(const Point& space_point) const {
  assert(space_point.dimension() == inner_.dimension());
  Rational s = dot(scaled_, space_point) - scaled_dot_base_;
  Rational t = space_point[axis_];
  return Point{std::move(s), std::move(t)};
}

}  // namespace polyprobe
