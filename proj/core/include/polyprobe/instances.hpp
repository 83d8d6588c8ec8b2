#pragma once

#include "polyprobe/oracle.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace polyprobe {

// Seeded generators for test and benchmark instances. Coordinates are drawn
// from a bounded integer grid, which keeps the exact arithmetic small.
struct InstanceGenOptions {
  long coord_min = -100;
  long coord_max = 100;
};

using Rng = std::mt19937_64;

// Deterministic per-instance stream derived from a sweep seed.
Rng make_rng(std::uint64_t seed, std::uint64_t row, std::uint64_t instance);

long random_grid_coordinate(Rng& rng, const InstanceGenOptions& options);

// Exactly target_vertices hull vertices in the plane (1 <= target <= 8 is
// practical on the default grid); rejection-sampled.
std::vector<Point> random_polytope_vertices_2d(Rng& rng, int target_vertices,
                                               const InstanceGenOptions& options = {});

// A point, a proper segment, or a genuine triangle in R^n (target <= 3).
std::vector<Point> random_polytope_vertices_nd(Rng& rng, int dimension, int target_vertices,
                                               const InstanceGenOptions& options = {});

struct FiniteMaxInstance {
  std::vector<AffinePiece> pieces;
  Point anchor;
  std::vector<Point> expected_vertices;  // canonical hull of the active gradients
};

// Builds a finite max function whose active gradients hull to exactly
// target_vertices extreme points; extra_active adds non-extreme active
// gradients (hull-interior combinations or duplicates), inactive adds
// strictly dominated pieces.
FiniteMaxInstance random_finite_max_instance(Rng& rng, int dimension, int target_vertices,
                                             int extra_active, int inactive,
                                             const InstanceGenOptions& options = {});

// m grid directions that positively span the plane.
std::vector<Direction> random_spanning_directions_2d(Rng& rng, int m,
                                                     const InstanceGenOptions& options = {});

}  // namespace polyprobe
