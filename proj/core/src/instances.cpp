#include "polyprobe/instances.hpp"

#include "polyprobe/polygon.hpp"
#include "polyprobe/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyprobe {

Rng make_rng(std::uint64_t seed, std::uint64_t row, std::uint64_t instance) {
  std::seed_seq seq{seed, row, instance};
  return Rng(seq);
}

long random_grid_coordinate(Rng& rng, const InstanceGenOptions& options) {
  const std::uint64_t span = static_cast<std::uint64_t>(options.coord_max - options.coord_min) + 1;
  return options.coord_min + static_cast<long>(rng() % span);
}

namespace {

Point random_grid_point(Rng& rng, int dimension, const InstanceGenOptions& options) {
  std::vector<Rational> coords(static_cast<size_t>(dimension));
  for (auto& c : coords) c = random_grid_coordinate(rng, options);
  return Point(std::move(coords));
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  // b - a and c - a proportional.
  const Direction u = b - a;
  const Direction v = c - a;
  for (int i = 0; i < u.dimension(); ++i) {
    for (int j = i + 1; j < u.dimension(); ++j) {
      if (u[i] * v[j] - u[j] * v[i] != 0) return false;
    }
  }
  return true;
}

constexpr int kMaxAttempts = 100000;

}  // namespace

std::vector<Point> random_polytope_vertices_2d(Rng& rng, int target_vertices,
                                               const InstanceGenOptions& options) {
  assert(target_vertices >= 1);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Point> draw;
    draw.reserve(static_cast<size_t>(target_vertices));
    for (int i = 0; i < target_vertices; ++i) draw.push_back(random_grid_point(rng, 2, options));
    auto hull = convex_hull_2d(std::move(draw));
    if (static_cast<int>(hull.size()) == target_vertices) {
      std::sort(hull.begin(), hull.end());
      return hull;
    }
  }
  throw std::runtime_error("random_polytope_vertices_2d: rejection sampling did not converge");
}

std::vector<Point> random_polytope_vertices_nd(Rng& rng, int dimension, int target_vertices,
                                               const InstanceGenOptions& options) {
  assert(dimension >= 1);
  assert(target_vertices >= 1 && target_vertices <= 3);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Point> draw;
    draw.reserve(static_cast<size_t>(target_vertices));
    for (int i = 0; i < target_vertices; ++i) draw.push_back(random_grid_point(rng, dimension, options));
    if (target_vertices >= 2 && draw[0] == draw[1]) continue;
    if (target_vertices == 3 && (draw[0] == draw[2] || draw[1] == draw[2] ||
                                 collinear(draw[0], draw[1], draw[2]))) {
      continue;
    }
    std::sort(draw.begin(), draw.end());
    return draw;
  }
  throw std::runtime_error("random_polytope_vertices_nd: rejection sampling did not converge");
}

FiniteMaxInstance random_finite_max_instance(Rng& rng, int dimension, int target_vertices,
                                             int extra_active, int inactive,
                                             const InstanceGenOptions& options) {
  FiniteMaxInstance out;
  std::vector<Point> extremes = dimension == 2
                                    ? random_polytope_vertices_2d(rng, target_vertices, options)
                                    : random_polytope_vertices_nd(rng, dimension, target_vertices, options);

  std::vector<Point> active = extremes;
  for (int i = 0; i < extra_active; ++i) {
    // A duplicate or a hull-interior rational combination; either way the
    // gradient is active but not extreme.
    if (rng() % 2 == 0 || extremes.size() == 1) {
      active.push_back(extremes[rng() % extremes.size()]);
    } else {
      const Point& a = extremes[rng() % extremes.size()];
      const Point& b = extremes[rng() % extremes.size()];
      std::vector<Rational> mid(static_cast<size_t>(dimension));
      for (int c = 0; c < dimension; ++c) mid[static_cast<size_t>(c)] = (a[c] + b[c]) / 2;
      active.push_back(Point(std::move(mid)));
    }
  }

  out.anchor = random_grid_point(rng, dimension, options);
  const Rational anchor_value = random_grid_coordinate(rng, options);
  for (const auto& gradient : active) {
    out.pieces.push_back({gradient, anchor_value - dot(gradient, out.anchor)});
  }
  for (int i = 0; i < inactive; ++i) {
    const Point gradient = random_grid_point(rng, dimension, options);
    const Rational gap = 1 + static_cast<long>(rng() % 10);
    out.pieces.push_back({gradient, anchor_value - dot(gradient, out.anchor) - gap});
  }
  // Scatter the active pieces among the dominated ones.
  std::shuffle(out.pieces.begin(), out.pieces.end(), rng);
  out.expected_vertices = canonical_vertices_nd(extremes);
  return out;
}

std::vector<Direction> random_spanning_directions_2d(Rng& rng, int m,
                                                     const InstanceGenOptions& options) {
  assert(m >= 3);
  InstanceGenOptions small = options;
  small.coord_min = std::max<long>(options.coord_min, -9);
  small.coord_max = std::min<long>(options.coord_max, 9);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Direction> directions;
    directions.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      Direction d{Rational(random_grid_coordinate(rng, small)), Rational(random_grid_coordinate(rng, small))};
      if (d.is_zero()) {
        directions.clear();
        break;
      }
      directions.push_back(std::move(d));
    }
    if (static_cast<int>(directions.size()) == m && positively_spans_2d(directions)) return directions;
  }
  throw std::runtime_error("random_spanning_directions_2d: rejection sampling did not converge");
}

}  // namespace polyprobe
