#include "polyprobe/reconstruct.hpp"

#include "polyprobe/linear.hpp"
#include "polyprobe/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace polyprobe {

namespace {

// Loop-probe cap when no vertex budget is known. Exact oracles never get
// close; an inexact oracle that keeps splitting without confirming anything
// is cut off here.
constexpr long kUnboundedLoopCap = 3072;

std::vector<Point> sorted_points(const std::set<Point>& points) {
  return std::vector<Point>(points.begin(), points.end());
}

Hyperplane line_through(const Point& p, const Point& q) {
  Direction normal = rotated_ccw(q - p);
  Rational offset = dot(normal, p);
  return {std::move(normal), std::move(offset)};
}

// State of one planar probing run: the outer polygon (clockwise, anchored at
// the most recently re-anchored vertex), the confirmed vertex set, and the
// full constraint history.
class PlanarRun {
 public:
  PlanarRun(SupportOracle& oracle, VertexBudget budget, const InitScheme& init)
      : counter_(oracle), budget_(budget) {
    if (oracle.dimension() != 2) {
      throw DimensionMismatch("planar reconstruction needs a 2-dimensional oracle");
    }
    initialize(init);
  }

  ReconstructionReport run() {
    if (outer_.size() == 1) {
      confirmed_.insert(outer_[0]);
      return finish();
    }
    while (true) {
      if (outer_confirmed()) break;
      if (budget_.is_finite() && static_cast<long>(confirmed_.size()) == budget_.bound()) break;
      if (try_early_stop()) break;
      if (outer_.size() == 2) {
        probe_segment();
      } else {
        probe_corner();
      }
    }
    return finish();
  }

 private:
  void initialize(const InitScheme& init) {
    std::vector<Direction> directions;
    if (std::holds_alternative<TriangleInit>(init)) {
      directions = {Direction{1, 0}, Direction{0, 1}, Direction{-1, -1}};
    } else if (std::holds_alternative<AxisRectangleInit>(init)) {
      directions = {Direction{1, 0}, Direction{0, 1}, Direction{-1, 0}, Direction{0, -1}};
    } else if (const auto* custom = std::get_if<CustomSpanningInit>(&init)) {
      if (custom->directions.size() < 3 || !positively_spans_2d(custom->directions)) {
        throw std::invalid_argument("custom initialization must positively span the plane");
      }
      directions = custom->directions;
    } else {
      const auto& pre = std::get<PreProbedInit>(init);
      if (pre.constraints.empty()) {
        throw std::invalid_argument("pre-probed initialization needs at least one constraint");
      }
      history_ = pre.constraints;
    }

    for (const auto& d : directions) {
      Rational value = counter_.support(d);
      history_.push_back({d, value});
      record(Branch::kInit, d, value);
    }

    auto set = generated_constraint_set_2d(history_);
    switch (set.kind) {
      case ConstraintSet2DResult::Kind::kEmpty:
        throw InconsistentOracle("initial constraints are mutually inconsistent (empty outer set)");
      case ConstraintSet2DResult::Kind::kUnbounded:
        // The built-in schemes are validated to positively span, so only a
        // caller-supplied constraint set can land here.
        throw std::invalid_argument("initialization constraints do not bound the plane");
      case ConstraintSet2DResult::Kind::kPolygon:
        break;
    }
    outer_ = set.polygon.vertices();
    if (!trace_.empty()) trace_.back().outer_vertices = outer_;

    const long m = static_cast<long>(history_.size());
    loop_cap_ = budget_.is_finite() ? 3 * budget_.bound() + 1 + std::max<long>(0, m - 3)
                                    : kUnboundedLoopCap;
  }

  bool outer_confirmed() const {
    if (outer_.size() != confirmed_.size()) return false;
    return std::all_of(outer_.begin(), outer_.end(),
                       [&](const Point& p) { return confirmed_.count(p) > 0; });
  }

  // With one vertex left to find, two outer edges touching no confirmed
  // vertex can only be tangent at that final vertex, so their intersection
  // is it; no oracle call needed.
  bool try_early_stop() {
    if (!budget_.is_finite()) return false;
    if (static_cast<long>(confirmed_.size()) != budget_.bound() - 1) return false;
    if (outer_.size() < 3) return false;
    std::vector<std::pair<Point, Point>> free_edges;
    for (size_t i = 0; i < outer_.size(); ++i) {
      const Point& u = outer_[i];
      const Point& v = outer_[(i + 1) % outer_.size()];
      if (confirmed_.count(u) == 0 && confirmed_.count(v) == 0) free_edges.emplace_back(u, v);
    }
    if (free_edges.size() != 2) return false;
    auto hit = intersect_lines_2d(line_through(free_edges[0].first, free_edges[0].second),
                                  line_through(free_edges[1].first, free_edges[1].second));
    if (hit.kind != LineIntersection2D::Kind::kPoint) return false;
    confirmed_.insert(hit.point);
    record(Branch::kBound, std::nullopt, std::nullopt);
    return true;
  }

  Rational call(const Direction& d) {
    if (loop_calls_ >= loop_cap_) {
      std::ostringstream msg;
      msg << "hard probe budget of " << loop_cap_
          << " loop calls exhausted without convergence; oracle values are inconsistent";
      throw InconsistentOracle(msg.str());
    }
    ++loop_calls_;
    return counter_.support(d);
  }

  void check_constraint_against_confirmed(const Direction& d, const Rational& value) {
    for (const auto& s : confirmed_) {
      if (dot(d, s) > value) {
        std::ostringstream msg;
        msg << "generated constraint " << to_string(d) << " . v <= " << to_string(value)
            << " cuts off confirmed vertex " << to_string(s) << "; oracle values are inconsistent";
        throw InconsistentOracle(msg.str());
      }
    }
  }

  void probe_corner() {
    const size_t m = outer_.size();
    const Point a = outer_[cursor_];
    const Point b = outer_[(cursor_ + 1) % m];
    const Point c = outer_[(cursor_ + 2) % m];
    const Direction d = outward_probe_direction(a, b, c);
    const Rational value = call(d);
    const Rational at_a = dot(d, a);
    const Rational at_b = dot(d, b);
    if (value < at_a || value > at_b) {
      std::ostringstream msg;
      msg << "support value " << to_string(value) << " for probe " << to_string(d)
          << " lies outside the tangency interval [" << to_string(at_a) << ", " << to_string(at_b)
          << "]; oracle values are inconsistent";
      throw InconsistentOracle(msg.str());
    }
    check_constraint_against_confirmed(d, value);
    history_.push_back({d, value});

    if (value == at_b) {
      // Tangent through the corner: b is a true vertex.
      confirmed_.insert(b);
      record(Branch::kConfirmB, d, value);
      cursor_ = (cursor_ + 1) % m;
      return;
    }

    if (value == at_a) {
      // Tangent along the chord: a and c are true vertices, b is cut off.
      if (budget_.is_finite()) {
        const long next_size = static_cast<long>(confirmed_.size()) +
                               (confirmed_.count(a) == 0 ? 1 : 0) +
                               (confirmed_.count(c) == 0 ? 1 : 0);
        if (next_size > budget_.bound()) {
          std::ostringstream msg;
          msg << "confirmed " << next_size << " vertices against a budget of " << budget_.bound()
              << "; the stated bound undercounts the hidden vertex set";
          throw BudgetExhausted(msg.str());
        }
      }
      confirmed_.insert(a);
      confirmed_.insert(c);
      rotate_anchor();
      outer_.erase(outer_.begin() + 1);  // b
      cursor_ = outer_.size() > 1 ? 1 : 0;
      ensure_confirmed_subset();
      record(Branch::kConfirmAC, d, value);
      return;
    }

    // Strictly between: the tangent line cuts the corner, exposing the two
    // crossing points on the edges ab and bc.
    const Point b_new = point_at_value(a, b, at_a, at_b, value);
    const Point c_new = point_at_value(b, c, at_b, at_a, value);
    assert(b_new != c_new);
    assert(dot(d, b_new) == value && dot(d, c_new) == value);
    rotate_anchor();
    outer_[1] = b_new;
    outer_.insert(outer_.begin() + 2, c_new);
    cursor_ = 0;
    record(Branch::kSplit, d, value);
  }

  void probe_segment() {
    const Point a = outer_[cursor_ % 2];
    const Point b = outer_[(cursor_ + 1) % 2];
    const Direction d = b - a;
    const Rational value = call(d);
    const Rational at_a = dot(d, a);
    const Rational at_b = dot(d, b);
    if (value < at_a || value > at_b) {
      std::ostringstream msg;
      msg << "support value " << to_string(value) << " along the flat outer segment lies outside ["
          << to_string(at_a) << ", " << to_string(at_b) << "]; oracle values are inconsistent";
      throw InconsistentOracle(msg.str());
    }
    check_constraint_against_confirmed(d, value);
    history_.push_back({d, value});
    if (value == at_b) {
      confirmed_.insert(b);
      record(Branch::kConfirmB, d, value);
      cursor_ = (cursor_ + 1) % 2;
      return;
    }
    if (value == at_a) {
      // The hidden set collapses to a; with an exact oracle this state is
      // unreachable, so the subset check below is the stall detector.
      confirmed_.insert(a);
      outer_ = {a};
      cursor_ = 0;
      ensure_confirmed_subset();
      record(Branch::kConfirmAC, d, value);
      return;
    }
    throw InconsistentOracle(
        "probe along a flat outer segment produced no confirmation; oracle values are "
        "inconsistent");
  }

  // Rotate so the current triple's first vertex sits at index 0.
  void rotate_anchor() {
    std::rotate(outer_.begin(), outer_.begin() + static_cast<long>(cursor_), outer_.end());
    cursor_ = 0;
  }

  void ensure_confirmed_subset() const {
    for (const auto& s : confirmed_) {
      if (std::find(outer_.begin(), outer_.end(), s) == outer_.end()) {
        throw InconsistentOracle("confirmed vertex " + to_string(s) +
                                 " was cut off the outer polygon; oracle values are inconsistent");
      }
    }
  }

  static Point point_at_value(const Point& p, const Point& q, const Rational& at_p,
                              const Rational& at_q, const Rational& value) {
    assert(at_p != at_q);
    const Rational t = (value - at_p) / (at_q - at_p);
    return translated(p, q - p, t);
  }

  void record(Branch branch, std::optional<Direction> d, std::optional<Rational> v) {
    TraceRecord rec;
    rec.index = counter_.count();
    rec.direction = std::move(d);
    rec.value = std::move(v);
    rec.branch = branch;
    rec.outer_vertices = outer_;
    rec.confirmed_vertices = sorted_points(confirmed_);
    trace_.push_back(std::move(rec));
  }

  ReconstructionReport finish() {
    ReconstructionReport report;
    report.vertices = canonical_vertices_nd(sorted_points(confirmed_));
    report.oracle_calls = counter_.count();
    report.trace = std::move(trace_);
    return report;
  }

  CountingOracle counter_;
  VertexBudget budget_;
  std::vector<TraceRecord> trace_;
  std::vector<Halfspace> history_;
  std::vector<Point> outer_;
  std::set<Point> confirmed_;
  size_t cursor_ = 0;
  long loop_calls_ = 0;
  long loop_cap_ = 0;
};

void absorb_subtrace(std::vector<TraceRecord>& out, const std::vector<TraceRecord>& sub,
                     const std::vector<std::pair<Direction, Rational>>& log, int call_offset,
                     const std::function<Point(const Point&)>& lift) {
  int cursor = call_offset;
  for (const auto& rec : sub) {
    TraceRecord lifted;
    lifted.branch = rec.branch;
    if (rec.direction) {
      lifted.direction = log[static_cast<size_t>(cursor)].first;
      lifted.value = log[static_cast<size_t>(cursor)].second;
      ++cursor;
    }
    lifted.index = cursor;
    lifted.outer_vertices.reserve(rec.outer_vertices.size());
    for (const auto& p : rec.outer_vertices) lifted.outer_vertices.push_back(lift(p));
    lifted.confirmed_vertices.reserve(rec.confirmed_vertices.size());
    for (const auto& p : rec.confirmed_vertices) lifted.confirmed_vertices.push_back(lift(p));
    out.push_back(std::move(lifted));
  }
}

}  // namespace

ReconstructionReport reconstruct_1d(SupportOracle& oracle, VertexBudget budget) {
  if (oracle.dimension() != 1) throw DimensionMismatch("reconstruct_1d needs a 1-dimensional oracle");
  CountingOracle counter(oracle);
  ReconstructionReport report;

  auto record = [&](const Direction& d, const Rational& v) {
    TraceRecord rec;
    rec.index = counter.count();
    rec.direction = d;
    rec.value = v;
    rec.branch = Branch::kInit;
    report.trace.push_back(std::move(rec));
  };

  const Direction plus{1};
  const Rational hi = counter.support(plus);
  record(plus, hi);
  if (budget.is_finite() && budget.bound() == 1) {
    report.vertices = {Point{hi}};
  } else {
    const Direction minus{-1};
    const Rational lo = -counter.support(minus);
    record(minus, -lo);
    if (lo > hi) {
      throw InconsistentOracle("interval bounds cross: lower " + to_string(lo) + " exceeds upper " +
                               to_string(hi));
    }
    if (lo == hi) {
      report.vertices = {Point{hi}};
    } else {
      report.vertices = {Point{lo}, Point{hi}};
    }
  }
  report.oracle_calls = counter.count();
  if (!report.trace.empty()) report.trace.back().confirmed_vertices = report.vertices;
  return report;
}

ReconstructionReport reconstruct_nf1(SupportOracle& oracle) {
  const int n = oracle.dimension();
  CountingOracle counter(oracle);
  ReconstructionReport report;
  std::vector<Rational> coords(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Direction d = axis_direction(n, i);
    coords[static_cast<size_t>(i)] = counter.support(d);
    TraceRecord rec;
    rec.index = counter.count();
    rec.direction = d;
    rec.value = coords[static_cast<size_t>(i)];
    rec.branch = Branch::kInit;
    report.trace.push_back(std::move(rec));
  }
  report.vertices = {Point(std::move(coords))};
  report.oracle_calls = counter.count();
  report.trace.back().confirmed_vertices = report.vertices;
  return report;
}

ReconstructionReport reconstruct_2d(SupportOracle& oracle, VertexBudget budget,
                                    const InitScheme& init) {
  return PlanarRun(oracle, budget, init).run();
}

ReconstructionReport reconstruct_nd_nf2(SupportOracle& oracle) {
  const int n = oracle.dimension();
  if (n < 1) throw DimensionMismatch("reconstruct_nd_nf2 needs a positive dimension");
  CountingOracle counter(oracle);
  ReconstructionReport report;

  auto record = [&](Branch branch, const Direction& d, const Rational& v,
                    const std::vector<Point>& confirmed) {
    TraceRecord rec;
    rec.index = counter.count();
    rec.direction = d;
    rec.value = v;
    rec.branch = branch;
    rec.confirmed_vertices = confirmed;
    report.trace.push_back(std::move(rec));
  };

  std::vector<Rational> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Direction up = axis_direction(n, i);
    hi[static_cast<size_t>(i)] = counter.support(up);
    record(Branch::kInit, up, hi[static_cast<size_t>(i)], {});
    const Direction down = axis_direction(n, i, -1);
    const Rational down_value = counter.support(down);
    lo[static_cast<size_t>(i)] = -down_value;
    record(Branch::kInit, down, down_value, {});
    if (lo[static_cast<size_t>(i)] > hi[static_cast<size_t>(i)]) {
      throw InconsistentOracle("coordinate bounds cross at axis " + std::to_string(i));
    }
  }

  if (lo == hi) {
    report.vertices = {Point(std::move(lo))};
    report.oracle_calls = counter.count();
    report.trace.back().confirmed_vertices = report.vertices;
    return report;
  }

  int pivot = 0;
  while (lo[static_cast<size_t>(pivot)] == hi[static_cast<size_t>(pivot)]) ++pivot;
  const Rational pivot_len = hi[static_cast<size_t>(pivot)] - lo[static_cast<size_t>(pivot)];

  Point a{std::vector<Rational>(lo)};
  Point b{std::vector<Rational>(hi)};
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    if (lo[static_cast<size_t>(i)] == hi[static_cast<size_t>(i)]) continue;
    // Tie the i-th coordinate to the pivot: d . a == d . b by construction,
    // so a strictly larger support value proves the pairing is swapped.
    Direction d = Direction::zero(n);
    d[i] = 1;
    d[pivot] = -(hi[static_cast<size_t>(i)] - lo[static_cast<size_t>(i)]) / pivot_len;
    const Rational value = counter.support(d);
    const Rational at_pair = dot(d, a);
    assert(at_pair == dot(d, b));
    if (value < at_pair) {
      throw InconsistentOracle("pairing probe at axis " + std::to_string(i) +
                               " returned a value below the known floor; oracle values are "
                               "inconsistent");
    }
    if (value > at_pair) std::swap(a[i], b[i]);
    record(Branch::kBound, d, value, {std::min(a, b), std::max(a, b)});
  }

  report.vertices = canonical_vertices_nd({a, b});
  report.oracle_calls = counter.count();
  return report;
}

ReconstructionReport reconstruct_nd_nf3(SupportOracle& oracle) {
  const int n = oracle.dimension();
  if (n < 2) throw DimensionMismatch("reconstruct_nd_nf3 needs dimension at least 2");
  if (n == 2) return reconstruct_2d(oracle, VertexBudget::at_most(3), TriangleInit{});

  CountingOracle counter(oracle);
  ReconstructionReport report;
  std::vector<Point> current;

  auto record_call = [&](Branch branch, const Direction& d, const Rational& v) {
    TraceRecord rec;
    rec.index = counter.count();
    rec.direction = d;
    rec.value = v;
    rec.branch = branch;
    rec.confirmed_vertices = current;
    report.trace.push_back(std::move(rec));
  };
  auto record_event = [&](Branch branch) {
    TraceRecord rec;
    rec.index = counter.count();
    rec.branch = branch;
    rec.confirmed_vertices = current;
    report.trace.push_back(std::move(rec));
  };

  // Certify the planar projection first, then raise one coordinate at a time.
  {
    CoordinateProjectionOracle projection(counter, 2);
    ReconstructionReport base = reconstruct_2d(projection, VertexBudget::at_most(3), TriangleInit{});
    absorb_subtrace(report.trace, base.trace, counter.log(), 0,
                    [&](const Point& p) { return padded(p, n); });
    current.reserve(base.vertices.size());
    for (const auto& v : base.vertices) current.push_back(padded(v, n));
  }

  for (int axis = 2; axis < n; ++axis) {
    const Rational upper = counter.support(axis_direction(n, axis));
    record_call(Branch::kBound, axis_direction(n, axis), upper);
    const Rational down_value = counter.support(axis_direction(n, axis, -1));
    const Rational lower = -down_value;
    record_call(Branch::kBound, axis_direction(n, axis, -1), down_value);
    if (lower > upper) {
      throw InconsistentOracle("coordinate bounds cross at axis " + std::to_string(axis));
    }

    if (lower == upper) {
      // Flat stage: every vertex lives at this height.
      for (auto& x : current) x[axis] = lower;
      record_event(Branch::kBound);
      continue;
    }

    if (current.size() == 1) {
      // A single projected vertex with genuine extent splits into the two
      // extreme heights.
      Point twin = current[0];
      current[0][axis] = lower;
      twin[axis] = upper;
      current.push_back(std::move(twin));
      record_event(Branch::kCaseI);
      continue;
    }

    if (current.size() == 2) {
      // All vertices of this stage lie in the plane spanned by the two
      // lifted points and the new axis; the four bounding lines of that
      // plane section are already known, so the planar run pays only for
      // its loop probes.
      PlanarSectionOracle section(counter, current[0], current[1], axis);
      PreProbedInit pre;
      pre.constraints = {
          Halfspace{Direction{-1, 0}, 0},
          Halfspace{Direction{1, 0}, 1},
          Halfspace{Direction{0, -1}, -lower},
          Halfspace{Direction{0, 1}, upper},
      };
      const int offset = counter.count();
      ReconstructionReport sub = reconstruct_2d(section, VertexBudget::at_most(3), InitScheme{pre});
      absorb_subtrace(report.trace, sub.trace, counter.log(), offset,
                      [&](const Point& p) { return section.lift(p); });
      current.clear();
      for (const auto& p : sub.vertices) current.push_back(section.lift(p));
      record_event(Branch::kCaseII);
      continue;
    }

    // Three projected vertices: the stage's vertices sit on the vertical
    // edges of a triangular prism. One probe per edge, each tuned to be
    // flat on the other two edges, reads off the height directly.
    assert(current.size() == 3);
    const Rational height = upper - lower;
    std::vector<Rational> resolved(3);
    for (int j = 0; j < 3; ++j) {
      RatMatrix matrix(3, std::vector<Rational>(static_cast<size_t>(axis) + 1));
      std::vector<Rational> rhs(3);
      for (int i = 0; i < 3; ++i) {
        for (int c = 0; c < axis; ++c) {
          matrix[static_cast<size_t>(i)][static_cast<size_t>(c)] =
              current[static_cast<size_t>(i)][c] - current[static_cast<size_t>(j)][c];
        }
        matrix[static_cast<size_t>(i)][static_cast<size_t>(axis)] = height;
        rhs[static_cast<size_t>(i)] = i == j ? 1 : 0;
      }
      auto solved = solve_linear(std::move(matrix), std::move(rhs));
      if (!solved.feasible) {
        throw SingularLift("prism probe system is singular; projected vertices are collinear");
      }
      solved.particular.resize(static_cast<size_t>(n));
      const Direction d{std::move(solved.particular)};
      const Rational value = counter.support(d);
      // Rebase by the known value at the bottom prism corner over x^j; the
      // remainder is the height fraction along that vertical edge.
      const Rational floor_value = dot(d, current[static_cast<size_t>(j)]) + lower * d[axis];
      const Rational fraction = value - floor_value;
      if (fraction < 0 || fraction > 1) {
        throw InconsistentOracle("prism height probe returned a fraction of " + to_string(fraction) +
                                 ", outside [0, 1]; oracle values are inconsistent");
      }
      resolved[static_cast<size_t>(j)] = lower + fraction * height;
      record_call(Branch::kCaseIII, d, value);
    }
    for (int j = 0; j < 3; ++j) current[static_cast<size_t>(j)][axis] = resolved[static_cast<size_t>(j)];
    record_event(Branch::kCaseIII);
  }

  report.vertices = canonical_vertices_nd(current);
  report.oracle_calls = counter.count();
  return report;
}

}  // namespace polyprobe
