#include "polyprobe/verify.hpp"

#include "call_bounds_data.hpp"
#include "polyprobe/linear.hpp"
#include "polyprobe/polygon.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace polyprobe {

namespace {

// Membership of p in the hull of exactly three points. Affinely independent
// generators give a unique barycentric solve; degenerate triples reduce to
// the pairwise segments.
bool in_triangle_hull(const Point& p, const std::vector<Point>& g) {
  const int n = p.dimension();
  RatMatrix matrix(static_cast<size_t>(n) + 1, std::vector<Rational>(3));
  std::vector<Rational> rhs(static_cast<size_t>(n) + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < 3; ++c) matrix[static_cast<size_t>(r)][static_cast<size_t>(c)] = g[static_cast<size_t>(c)][r];
    rhs[static_cast<size_t>(r)] = p[r];
  }
  for (int c = 0; c < 3; ++c) matrix[static_cast<size_t>(n)][static_cast<size_t>(c)] = 1;
  rhs[static_cast<size_t>(n)] = 1;

  auto solved = solve_linear(std::move(matrix), std::move(rhs));
  if (!solved.feasible) return false;
  if (solved.nullspace.empty()) {
    return std::all_of(solved.particular.begin(), solved.particular.end(),
                       [](const Rational& l) { return l >= 0; });
  }
  // Affinely dependent generators: their hull is covered by the segments.
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (on_segment(p, g[static_cast<size_t>(i)], g[static_cast<size_t>(j)])) return true;
    }
  }
  return false;
}

}  // namespace

bool in_convex_hull(const Point& p, const std::vector<Point>& generators) {
  if (generators.empty()) return false;
  const int dim = p.dimension();
  for (const auto& g : generators) assert(g.dimension() == dim);
  if (dim <= 2 && generators.size() > 3) {
    if (dim == 1) {
      Rational lo = generators[0][0], hi = generators[0][0];
      for (const auto& g : generators) {
        lo = std::min(lo, g[0]);
        hi = std::max(hi, g[0]);
      }
      return lo <= p[0] && p[0] <= hi;
    }
    return Polygon2::hull_of(generators).contains(p);
  }
  switch (generators.size()) {
    case 1:
      return p == generators[0];
    case 2:
      return on_segment(p, generators[0], generators[1]);
    case 3:
      return in_triangle_hull(p, generators);
    default:
      throw std::invalid_argument(
          "in_convex_hull: more than three hull generators are not supported in dimension >= 3");
  }
}

std::vector<Point> canonical_vertices_nd(const std::vector<Point>& points) {
  assert(!points.empty());
  const int dim = points[0].dimension();
  for (const auto& p : points) assert(p.dimension() == dim);

  std::vector<Point> unique_points = points;
  std::sort(unique_points.begin(), unique_points.end());
  unique_points.erase(std::unique(unique_points.begin(), unique_points.end()), unique_points.end());

  if (dim == 2) {
    auto hull = convex_hull_2d(std::move(unique_points));
    std::sort(hull.begin(), hull.end());
    return hull;
  }

  std::vector<Point> extremes;
  for (size_t i = 0; i < unique_points.size(); ++i) {
    std::vector<Point> others;
    others.reserve(unique_points.size() - 1);
    for (size_t j = 0; j < unique_points.size(); ++j) {
      if (j != i) others.push_back(unique_points[j]);
    }
    if (others.empty() || !in_convex_hull(unique_points[i], others)) {
      extremes.push_back(unique_points[i]);
    }
  }
  return extremes;  // already lexicographically sorted
}

bool support_equivalent(const std::vector<Point>& a, const std::vector<Point>& b,
                        const std::vector<Direction>& directions) {
  assert(!a.empty() && !b.empty() && !directions.empty());
  for (const auto& d : directions) {
    Rational max_a = dot(d, a[0]);
    for (const auto& p : a) max_a = std::max(max_a, dot(d, p));
    Rational max_b = dot(d, b[0]);
    for (const auto& p : b) max_b = std::max(max_b, dot(d, p));
    if (max_a != max_b) return false;
  }
  return true;
}

namespace {

struct BoundRule {
  AlgorithmKind algorithm;
  enum class BudgetMatch { kEqNv, kGtNv, kAny } budget;
  std::optional<int> nv;
  long constant = 0;
  long nv_coeff = 0;
  long n_coeff = 0;
  std::string source;
};

const std::vector<BoundRule>& bound_rules() {
  static const std::vector<BoundRule> rules = [] {
    auto table = nlohmann::json::parse(detail::kCallBoundsJson);
    std::vector<BoundRule> out;
    for (const auto& row : table.at("rows")) {
      BoundRule rule;
      auto algorithm = algorithm_from_name(row.at("algorithm").get<std::string>());
      if (!algorithm) throw std::runtime_error("call bound table: unknown algorithm");
      rule.algorithm = *algorithm;
      const std::string budget = row.value("budget", "any");
      if (budget == "eq-nv") {
        rule.budget = BoundRule::BudgetMatch::kEqNv;
      } else if (budget == "gt-nv") {
        rule.budget = BoundRule::BudgetMatch::kGtNv;
      } else if (budget == "any") {
        rule.budget = BoundRule::BudgetMatch::kAny;
      } else {
        throw std::runtime_error("call bound table: unknown budget kind");
      }
      if (row.contains("nv")) rule.nv = row.at("nv").get<int>();
      rule.constant = row.at("const").get<long>();
      rule.nv_coeff = row.at("nv_coeff").get<long>();
      rule.n_coeff = row.at("n_coeff").get<long>();
      rule.source = row.at("source").get<std::string>();
      out.push_back(std::move(rule));
    }
    return out;
  }();
  return rules;
}

}  // namespace

std::optional<AuditRow> applicable_bound(AlgorithmKind algorithm, int dimension, int actual_vertices,
                                         VertexBudget budget, InitKind init, int init_directions) {
  for (const auto& rule : bound_rules()) {
    if (rule.algorithm != algorithm) continue;
    if (rule.nv && *rule.nv != actual_vertices) continue;
    switch (rule.budget) {
      case BoundRule::BudgetMatch::kEqNv:
        if (!budget.is_finite() || budget.bound() != actual_vertices) continue;
        break;
      case BoundRule::BudgetMatch::kGtNv:
        if (budget.is_finite() && budget.bound() <= actual_vertices) continue;
        break;
      case BoundRule::BudgetMatch::kAny:
        break;
    }
    AuditRow row;
    row.dimension = dimension;
    row.actual_vertices = actual_vertices;
    row.budget = budget;
    row.bound = rule.constant + rule.nv_coeff * actual_vertices + rule.n_coeff * dimension;
    row.source = rule.source;
    if (algorithm == AlgorithmKind::kR2) {
      // Relaxed initializations: a custom positively spanning set of size m
      // may waste m - 3 calls; the axis rectangle wastes one call only when
      // the hidden set is a single point.
      if (init == InitKind::kCustom) {
        row.bound += std::max(0, init_directions - 3);
        row.source += ", custom initialization allowance";
      } else if (init == InitKind::kAxisRectangle && actual_vertices == 1) {
        row.bound = 4;
        row.source = "axis rectangle initialization on a singleton";
      }
    }
    return row;
  }
  return std::nullopt;
}

AuditResult audit_calls(const ReconstructionReport& report, const AuditRow& row) {
  AuditResult out;
  out.pass = report.oracle_calls <= row.bound;
  std::ostringstream detail;
  detail << report.oracle_calls << (out.pass ? " <= " : " > ") << row.bound << " (" << row.source
         << "; n=" << row.dimension << ", vertices=" << row.actual_vertices << ", budget=";
  if (row.budget.is_finite()) {
    detail << row.budget.bound();
  } else {
    detail << "infinity";
  }
  detail << ")";
  out.details = detail.str();
  return out;
}

}  // namespace polyprobe
