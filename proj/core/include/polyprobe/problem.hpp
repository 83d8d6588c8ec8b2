#pragma once

#include "polyprobe/reconstruct.hpp"
#include "polyprobe/verify.hpp"

#include <nlohmann/json_fwd.hpp>

#include <memory>
#include <string>
#include <variant>

namespace polyprobe {

struct ProblemParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A (dimension, budget) combination with no supported algorithm.
struct UnsupportedProblem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FiniteMaxSpec {
  Point anchor;
  std::vector<AffinePiece> pieces;
};

// A problem file: the hidden set (explicit vertices or a finite max
// function), the declared vertex budget, and run configuration.
struct ProblemSpec {
  int dimension = 0;
  std::variant<std::vector<Point>, FiniteMaxSpec> body;
  VertexBudget budget = VertexBudget::unbounded();
  std::string algorithm = "auto";
  InitScheme init = TriangleInit{};
};

// Exact JSON rational encoding: integral numbers, "p/q" strings, or exact
// decimal strings.
nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& value);

ProblemSpec problem_from_json(const nlohmann::json& doc);
nlohmann::json problem_to_json(const ProblemSpec& spec);

std::unique_ptr<SupportOracle> make_exact_oracle(const ProblemSpec& spec);
std::vector<Point> ground_truth_vertices(const ProblemSpec& spec);

// Applies the "auto" dispatch rules; throws UnsupportedProblem for
// combinations with no algorithm (dimension >= 3 with a budget above 3 or
// no budget at all).
AlgorithmKind resolve_algorithm(const ProblemSpec& spec);

ReconstructionReport run_reconstruction(AlgorithmKind algorithm, SupportOracle& oracle,
                                        VertexBudget budget, const InitScheme& init);

InitKind init_kind(const InitScheme& init);
int init_direction_count(const InitScheme& init);

}  // namespace polyprobe
