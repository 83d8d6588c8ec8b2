#pragma once

#include "polyprobe/vec.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polyprobe {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Support-function access to a hidden compact polytope X:
// support(d) = max over the vertices v of X of v . d.
// Exact implementations are positively homogeneous and subadditive; the
// noisy wrapper is exempt from both.
class SupportOracle {
 public:
  virtual ~SupportOracle() = default;
  virtual int dimension() const = 0;
  virtual Rational support(const Direction& d) = 0;
};

class VertexListOracle final : public SupportOracle {
 public:
  explicit VertexListOracle(std::vector<Point> vertices);

  int dimension() const override { return vertices_[0].dimension(); }
  Rational support(const Direction& d) override;

  const std::vector<Point>& vertices() const { return vertices_; }

 private:
  std::vector<Point> vertices_;
};

// One affine piece of a finite max function: x -> gradient . x + offset.
struct AffinePiece {
  Point gradient;
  Rational offset;
};

// The finite-max instantiation: f = max_i f_i with affine pieces, probed at
// a fixed anchor point. Its support values coincide with those of the vertex
// set of the hull of the active gradients.
class FiniteMaxOracle final : public SupportOracle {
 public:
  FiniteMaxOracle(std::vector<AffinePiece> pieces, Point anchor);

  int dimension() const override { return anchor_.dimension(); }
  Rational support(const Direction& d) override;

  // Indices i with f_i(anchor) == max_j f_j(anchor); never empty.
  const std::vector<int>& active_set() const { return active_; }

  // Extreme points of the hull of the active gradients, canonical order.
  std::vector<Point> subdifferential_vertices() const;

  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const Point& anchor() const { return anchor_; }

 private:
  std::vector<AffinePiece> pieces_;
  Point anchor_;
  std::vector<int> active_;
};

// Forwards values unchanged while keeping a full call log.
class CountingOracle final : public SupportOracle {
 public:
  explicit CountingOracle(SupportOracle& inner) : inner_(inner) {}

  int dimension() const override { return inner_.dimension(); }
  Rational support(const Direction& d) override {
    Rational value = inner_.support(d);
    log_.emplace_back(d, value);
    return value;
  }

  int count() const { return static_cast<int>(log_.size()); }
  const std::vector<std::pair<Direction, Rational>>& log() const { return log_; }

 private:
  SupportOracle& inner_;
  std::vector<std::pair<Direction, Rational>> log_;
};

// Adds a seeded rational perturbation xi with |xi| < epsilon to every value.
// Replayable: the noise stream depends only on the seed and call order.
class NoisyOracle final : public SupportOracle {
 public:
  NoisyOracle(SupportOracle& inner, Rational epsilon, std::uint64_t seed);

  int dimension() const override { return inner_.dimension(); }
  Rational support(const Direction& d) override;

 private:
  SupportOracle& inner_;
  Rational epsilon_;
  std::mt19937_64 rng_;
};

// The hidden set projected onto its first k coordinates.
class CoordinateProjectionOracle final : public SupportOracle {
 public:
  CoordinateProjectionOracle(SupportOracle& inner, int k);

  int dimension() const override { return k_; }
  Rational support(const Direction& d) override;

 private:
  SupportOracle& inner_;
  int k_;
};

// A 2-D oracle over the plane {base + s (other - base) + t e_axis}. Both
// base and other must have zero components from index axis on, so the plane
// coordinates (s, t) of a plane point are recoverable exactly.
class PlanarSectionOracle final : public SupportOracle {
 public:
  PlanarSectionOracle(SupportOracle& inner, Point base, Point other, int axis);

  int dimension() const override { return 2; }
  Rational support(const Direction& g) override;

  // (s, t) -> base + s (other - base) + t e_axis.
  Point lift(const Point& plane_point) const;
  // Inverse of lift for points on the plane.
  Point plane_coordinates(const Point& space_point) const;

 private:
  SupportOracle& inner_;
  Point base_;
  Direction span_;     // other - base
  Direction scaled_;   // span / |span|^2
  int axis_;
  Rational scaled_dot_base_;
};

}  // namespace polyprobe
