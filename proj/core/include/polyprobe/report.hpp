#pragma once

#include "polyprobe/vec.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyprobe {

// Upper bound on the hidden vertex count, possibly unknown.
class VertexBudget {
 public:
  static VertexBudget unbounded() { return VertexBudget(); }
  static VertexBudget at_most(long bound) {
    assert(bound >= 1);
    VertexBudget b;
    b.bound_ = bound;
    return b;
  }

  bool is_finite() const { return bound_.has_value(); }
  long bound() const {
    assert(bound_.has_value());
    return *bound_;
  }

  friend bool operator==(const VertexBudget&, const VertexBudget&) = default;

 private:
  VertexBudget() = default;
  std::optional<long> bound_;
};

enum class Branch {
  kInit,
  kConfirmB,
  kConfirmAC,
  kSplit,
  kBound,
  kCaseI,
  kCaseII,
  kCaseIII,
};

std::string_view branch_name(Branch branch);
std::optional<Branch> branch_from_name(std::string_view name);

// One entry per oracle call, plus call-free bookkeeping events (which carry
// no direction/value). Snapshots show the state after the step.
struct TraceRecord {
  int index = 0;  // oracle calls made so far, including this record's call if any
  std::optional<Direction> direction;
  std::optional<Rational> value;
  Branch branch = Branch::kInit;
  std::vector<Point> outer_vertices;
  std::vector<Point> confirmed_vertices;
};

struct ReconstructionReport {
  std::vector<Point> vertices;  // extreme points, lexicographically sorted
  int oracle_calls = 0;
  std::vector<TraceRecord> trace;
};

enum class AlgorithmKind { kR1, kR2, kNf1, kNf2, kNf3 };

std::string_view algorithm_name(AlgorithmKind kind);
std::optional<AlgorithmKind> algorithm_from_name(std::string_view name);

// A probe value contradicted the exact case analysis (out-of-range value,
// a cut confirmed vertex, or no progress within the hard call budget). This
// is how an inexact oracle surfaces: detected, not repaired.
struct InconsistentOracle : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The stated vertex bound was proven too small: more vertices were confirmed
// than the budget allows.
struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The lifting system had no solution; cannot occur for non-collinear
// projection vertices.
struct SingularLift : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polyprobe
