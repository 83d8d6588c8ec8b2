#include "polyprobe/problem.hpp"

#include <nlohmann/json.hpp>

#include <limits>

namespace polyprobe {

nlohmann::json rational_to_json(const Rational& value) {
  if (denominator(value) == 1) {
    const BigInt& num = numerator(value);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return num.convert_to<std::int64_t>();
    }
  }
  return to_string(value);
}

Rational rational_from_json(const nlohmann::json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) {
    auto parsed = parse_rational(value.get<std::string>());
    if (!parsed) throw ProblemParseError("not an exact rational: \"" + value.get<std::string>() + "\"");
    return *parsed;
  }
  throw ProblemParseError("rationals must be integers, \"p/q\" strings or exact decimal strings");
}

namespace {

template <class Tag>
VecT<Tag> vector_from_json(const nlohmann::json& value, int expected_dim) {
  if (!value.is_array() || value.empty()) throw ProblemParseError("expected a coordinate array");
  std::vector<Rational> coords;
  coords.reserve(value.size());
  for (const auto& c : value) coords.push_back(rational_from_json(c));
  if (expected_dim > 0 && static_cast<int>(coords.size()) != expected_dim) {
    throw ProblemParseError("coordinate array has the wrong dimension");
  }
  return VecT<Tag>(std::move(coords));
}

template <class Tag>
nlohmann::json vector_to_json(const VecT<Tag>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < v.dimension(); ++i) out.push_back(rational_to_json(v[i]));
  return out;
}

VertexBudget budget_from_json(const nlohmann::json& value) {
  if (value.is_string()) {
    if (value.get<std::string>() == "infinity") return VertexBudget::unbounded();
    throw ProblemParseError("budget must be a positive integer or \"infinity\"");
  }
  if (value.is_number_integer() && value.get<std::int64_t>() >= 1) {
    return VertexBudget::at_most(value.get<std::int64_t>());
  }
  throw ProblemParseError("budget must be a positive integer or \"infinity\"");
}

}  // namespace

ProblemSpec problem_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ProblemParseError("problem file must be a JSON object");
  ProblemSpec spec;
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
    throw ProblemParseError("missing integer field \"dimension\"");
  }
  spec.dimension = doc["dimension"].get<int>();
  if (spec.dimension < 1) throw ProblemParseError("dimension must be at least 1");

  const std::string kind = doc.value("kind", "");
  if (kind == "vertices") {
    if (!doc.contains("vertices") || !doc["vertices"].is_array() || doc["vertices"].empty()) {
      throw ProblemParseError("kind \"vertices\" needs a nonempty \"vertices\" array");
    }
    std::vector<Point> vertices;
    for (const auto& v : doc["vertices"]) {
      vertices.push_back(vector_from_json<PointTag>(v, spec.dimension));
    }
    spec.body = std::move(vertices);
  } else if (kind == "finite_max") {
    FiniteMaxSpec fm;
    if (!doc.contains("anchor")) throw ProblemParseError("kind \"finite_max\" needs an \"anchor\"");
    fm.anchor = vector_from_json<PointTag>(doc["anchor"], spec.dimension);
    if (!doc.contains("pieces") || !doc["pieces"].is_array() || doc["pieces"].empty()) {
      throw ProblemParseError("kind \"finite_max\" needs a nonempty \"pieces\" array");
    }
    for (const auto& piece : doc["pieces"]) {
      if (!piece.contains("gradient")) throw ProblemParseError("piece needs a \"gradient\"");
      AffinePiece p;
      p.gradient = vector_from_json<PointTag>(piece["gradient"], spec.dimension);
      p.offset = piece.contains("offset") ? rational_from_json(piece["offset"]) : Rational(0);
      fm.pieces.push_back(std::move(p));
    }
    spec.body = std::move(fm);
  } else {
    throw ProblemParseError("field \"kind\" must be \"vertices\" or \"finite_max\"");
  }

  if (doc.contains("budget")) spec.budget = budget_from_json(doc["budget"]);
  if (doc.contains("algorithm")) {
    spec.algorithm = doc["algorithm"].get<std::string>();
    if (spec.algorithm != "auto" && !algorithm_from_name(spec.algorithm)) {
      throw ProblemParseError("unknown algorithm \"" + spec.algorithm + "\"");
    }
  }
  if (doc.contains("init")) {
    const auto& init = doc["init"];
    if (init.is_string()) {
      if (init.get<std::string>() == "paper-triangle") {
        spec.init = TriangleInit{};
      } else if (init.get<std::string>() == "axis-rectangle") {
        spec.init = AxisRectangleInit{};
      } else {
        throw ProblemParseError("init must be \"paper-triangle\", \"axis-rectangle\" or {\"custom\": [...]}");
      }
    } else if (init.is_object() && init.contains("custom")) {
      CustomSpanningInit custom;
      for (const auto& d : init["custom"]) {
        custom.directions.push_back(vector_from_json<DirectionTag>(d, 2));
      }
      spec.init = std::move(custom);
    } else {
      throw ProblemParseError("init must be \"paper-triangle\", \"axis-rectangle\" or {\"custom\": [...]}");
    }
  }
  return spec;
}

nlohmann::json problem_to_json(const ProblemSpec& spec) {
  nlohmann::json doc;
  doc["dimension"] = spec.dimension;
  if (const auto* vertices = std::get_if<std::vector<Point>>(&spec.body)) {
    doc["kind"] = "vertices";
    auto list = nlohmann::json::array();
    for (const auto& v : *vertices) list.push_back(vector_to_json(v));
    doc["vertices"] = std::move(list);
  } else {
    const auto& fm = std::get<FiniteMaxSpec>(spec.body);
    doc["kind"] = "finite_max";
    doc["anchor"] = vector_to_json(fm.anchor);
    auto pieces = nlohmann::json::array();
    for (const auto& piece : fm.pieces) {
      pieces.push_back({{"gradient", vector_to_json(piece.gradient)},
                        {"offset", rational_to_json(piece.offset)}});
    }
    doc["pieces"] = std::move(pieces);
  }
  doc["budget"] = spec.budget.is_finite() ? nlohmann::json(spec.budget.bound())
                                          : nlohmann::json("infinity");
  doc["algorithm"] = spec.algorithm;
  if (std::holds_alternative<TriangleInit>(spec.init)) {
    doc["init"] = "paper-triangle";
  } else if (std::holds_alternative<AxisRectangleInit>(spec.init)) {
    doc["init"] = "axis-rectangle";
  } else if (const auto* custom = std::get_if<CustomSpanningInit>(&spec.init)) {
    auto list = nlohmann::json::array();
    for (const auto& d : custom->directions) list.push_back(vector_to_json(d));
    doc["init"] = {{"custom", std::move(list)}};
  }
  return doc;
}

std::unique_ptr<SupportOracle> make_exact_oracle(const ProblemSpec& spec) {
  if (const auto* vertices = std::get_if<std::vector<Point>>(&spec.body)) {
    return std::make_unique<VertexListOracle>(*vertices);
  }
  const auto& fm = std::get<FiniteMaxSpec>(spec.body);
  return std::make_unique<FiniteMaxOracle>(fm.pieces, fm.anchor);
}

std::vector<Point> ground_truth_vertices(const ProblemSpec& spec) {
  if (const auto* vertices = std::get_if<std::vector<Point>>(&spec.body)) {
    return canonical_vertices_nd(*vertices);
  }
  const auto& fm = std::get<FiniteMaxSpec>(spec.body);
  return FiniteMaxOracle(fm.pieces, fm.anchor).subdifferential_vertices();
}

AlgorithmKind resolve_algorithm(const ProblemSpec& spec) {
  if (spec.algorithm != "auto") {
    const auto kind = *algorithm_from_name(spec.algorithm);
    if (kind == AlgorithmKind::kR1 && spec.dimension != 1) {
      throw UnsupportedProblem("algorithm r1 needs dimension 1");
    }
    if (kind == AlgorithmKind::kR2 && spec.dimension != 2) {
      throw UnsupportedProblem("algorithm r2 needs dimension 2");
    }
    if (kind == AlgorithmKind::kNf3 && spec.dimension < 2) {
      throw UnsupportedProblem("algorithm nf3 needs dimension at least 2");
    }
    return kind;
  }
  if (spec.dimension == 1) return AlgorithmKind::kR1;
  if (spec.dimension == 2) return AlgorithmKind::kR2;
  if (spec.budget.is_finite()) {
    switch (spec.budget.bound()) {
      case 1:
        return AlgorithmKind::kNf1;
      case 2:
        return AlgorithmKind::kNf2;
      case 3:
        return AlgorithmKind::kNf3;
      default:
        break;
    }
  }
  throw UnsupportedProblem(
      "no algorithm for dimension >= 3 with a vertex budget above 3: reconstructing with an "
      "arbitrary vertex bound in higher dimensions is an open problem; supported budgets are 1, 2 "
      "and 3");
}

ReconstructionReport run_reconstruction(AlgorithmKind algorithm, SupportOracle& oracle,
                                        VertexBudget budget, const InitScheme& init) {
  switch (algorithm) {
    case AlgorithmKind::kR1:
      return reconstruct_1d(oracle, budget);
    case AlgorithmKind::kR2:
      return reconstruct_2d(oracle, budget, init);
    case AlgorithmKind::kNf1:
      return reconstruct_nf1(oracle);
    case AlgorithmKind::kNf2:
      return reconstruct_nd_nf2(oracle);
    case AlgorithmKind::kNf3:
      return reconstruct_nd_nf3(oracle);
  }
  throw std::logic_error("unreachable");
}

InitKind init_kind(const InitScheme& init) {
  if (std::holds_alternative<TriangleInit>(init)) return InitKind::kTriangle;
  if (std::holds_alternative<AxisRectangleInit>(init)) return InitKind::kAxisRectangle;
  if (std::holds_alternative<CustomSpanningInit>(init)) return InitKind::kCustom;
  return InitKind::kPreProbed;
}

int init_direction_count(const InitScheme& init) {
  if (std::holds_alternative<TriangleInit>(init)) return 3;
  if (std::holds_alternative<AxisRectangleInit>(init)) return 4;
  if (const auto* custom = std::get_if<CustomSpanningInit>(&init)) {
    return static_cast<int>(custom->directions.size());
  }
  return static_cast<int>(std::get<PreProbedInit>(init).constraints.size());
}

}  // namespace polyprobe
