#include "polyprobe/polygon.hpp"

#include <algorithm>
#include <set>

namespace polyprobe {

std::vector<Point> convex_hull_2d(std::vector<Point> points) {
  for (const auto& p : points) assert(p.dimension() == 2);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const size_t n = points.size();
  if (n <= 2) return points;

  // Monotone chain, strict turns only, counterclockwise.
  std::vector<Point> ring(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient2(ring[k - 2], ring[k - 1], points[i]) <= 0) --k;
    ring[k++] = points[i];
  }
  const size_t lower_end = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower_end && orient2(ring[k - 2], ring[k - 1], points[i]) <= 0) --k;
    ring[k++] = points[i];
  }
  ring.resize(k - 1);  // counterclockwise, starts at the lexicographic minimum

  if (ring.size() <= 2) return ring;
  std::reverse(ring.begin() + 1, ring.end());  // clockwise, same starting vertex
  return ring;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  assert(p.dimension() == a.dimension() && a.dimension() == b.dimension());
  if (a == b) return p == a;
  // p = a + t (b - a) with a consistent t in [0, 1].
  const Direction span = b - a;
  int pivot = -1;
  for (int i = 0; i < span.dimension(); ++i) {
    if (span[i] != 0) {
      pivot = i;
      break;
    }
  }
  const Rational t = (p[pivot] - a[pivot]) / span[pivot];
  if (t < 0 || t > 1) return false;
  for (int i = 0; i < p.dimension(); ++i) {
    if (p[i] != a[i] + t * span[i]) return false;
  }
  return true;
}

bool Polygon2::contains(const Point& p) const {
  assert(p.dimension() == 2);
  switch (verts_.size()) {
    case 0:
      return false;
    case 1:
      return p == verts_[0];
    case 2:
      return on_segment(p, verts_[0], verts_[1]);
    default:
      break;
  }
  // Clockwise ring: the interior lies to the right of every directed edge.
  for (size_t i = 0; i < verts_.size(); ++i) {
    const Point& u = verts_[i];
    const Point& v = verts_[(i + 1) % verts_.size()];
    if (orient2(u, v, p) > 0) return false;
  }
  return true;
}

bool positively_spans_2d(const std::vector<Direction>& directions) {
  // The nonnegative span is all of R^2 iff the polar cone
  // {d : d . n <= 0 for all n} is trivial. If that cone is nontrivial it
  // contains one of the candidate rays below.
  std::vector<Direction> candidates;
  candidates.reserve(3 * directions.size());
  for (const auto& n : directions) {
    candidates.push_back(rotated_ccw(n));
    candidates.push_back(rotated_cw(n));
    candidates.push_back(-n);
  }
  for (const auto& c : candidates) {
    if (c.is_zero()) continue;
    bool in_cone = true;
    for (const auto& n : directions) {
      if (dot(n, c) > 0) {
        in_cone = false;
        break;
      }
    }
    if (in_cone) return false;
  }
  return true;
}

namespace {

// Exact Fourier-Motzkin feasibility test for a system of 2-D halfspaces.
bool feasible_2d(const std::vector<Halfspace>& constraints) {
  // Rows a x + b y <= c.
  struct Row {
    Rational a, b, c;
  };
  std::vector<Row> pos, neg;
  std::vector<std::pair<Rational, Rational>> one_dim;  // q y <= r
  for (const auto& h : constraints) {
    Row row{h.normal[0], h.normal[1], h.offset};
    if (row.a > 0) {
      pos.push_back(row);
    } else if (row.a < 0) {
      neg.push_back(row);
    } else {
      one_dim.emplace_back(row.b, row.c);
    }
  }
  if (!pos.empty() && !neg.empty()) {
    for (const auto& p : pos) {
      for (const auto& m : neg) {
        // Eliminate x: (-m.a) * p + p.a * m, both multipliers positive.
        one_dim.emplace_back(-m.a * p.b + p.a * m.b, -m.a * p.c + p.a * m.c);
      }
    }
  }
  // 1-D feasibility in y.
  bool has_lower = false, has_upper = false;
  Rational lower, upper;
  for (const auto& [q, r] : one_dim) {
    if (q == 0) {
      if (r < 0) return false;
    } else if (q > 0) {
      Rational bound = r / q;
      if (!has_upper || bound < upper) upper = bound;
      has_upper = true;
    } else {
      Rational bound = r / q;
      if (!has_lower || bound > lower) lower = bound;
      has_lower = true;
    }
  }
  if (has_lower && has_upper && lower > upper) return false;
  return true;
}

}  // namespace

ConstraintSet2DResult generated_constraint_set_2d(const std::vector<Halfspace>& constraints) {
  assert(!constraints.empty());
  for (const auto& h : constraints) {
    assert(h.normal.dimension() == 2);
    assert(!h.normal.is_zero());
  }

  if (!feasible_2d(constraints)) return {ConstraintSet2DResult::Kind::kEmpty, {}};

  std::vector<Direction> normals;
  normals.reserve(constraints.size());
  for (const auto& h : constraints) normals.push_back(h.normal);
  if (!positively_spans_2d(normals)) return {ConstraintSet2DResult::Kind::kUnbounded, {}};

  // Bounded and nonempty: every vertex of the set is the intersection of two
  // constraint boundaries, so pairwise intersections cover them all.
  std::set<Point> candidates;
  for (size_t i = 0; i < constraints.size(); ++i) {
    for (size_t j = i + 1; j < constraints.size(); ++j) {
      auto hit = intersect_lines_2d(Hyperplane{constraints[i].normal, constraints[i].offset},
                                    Hyperplane{constraints[j].normal, constraints[j].offset});
      if (hit.kind != LineIntersection2D::Kind::kPoint) continue;
      bool inside = true;
      for (const auto& h : constraints) {
        if (!contains(h, hit.point)) {
          inside = false;
          break;
        }
      }
      if (inside) candidates.insert(hit.point);
    }
  }
  assert(!candidates.empty());
  auto polygon = Polygon2::hull_of(std::vector<Point>(candidates.begin(), candidates.end()));
  return {ConstraintSet2DResult::Kind::kPolygon, std::move(polygon)};
}

}  // namespace polyprobe
