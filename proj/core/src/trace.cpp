#include "polyprobe/trace.hpp"

#include "polyprobe/oracle.hpp"
#include "polyprobe/problem.hpp"

#include <nlohmann/json.hpp>

namespace polyprobe {

namespace {

template <class Tag>
nlohmann::json vec_to_json(const VecT<Tag>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < v.dimension(); ++i) out.push_back(rational_to_json(v[i]));
  return out;
}

template <class Tag>
VecT<Tag> vec_from_json(const nlohmann::json& value) {
  if (!value.is_array() || value.empty()) throw TraceParseError("expected a coordinate array");
  std::vector<Rational> coords;
  coords.reserve(value.size());
  for (const auto& c : value) coords.push_back(rational_from_json(c));
  return VecT<Tag>(std::move(coords));
}

nlohmann::json points_to_json(const std::vector<Point>& points) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : points) out.push_back(vec_to_json(p));
  return out;
}

std::vector<Point> points_from_json(const nlohmann::json& value) {
  std::vector<Point> out;
  for (const auto& p : value) out.push_back(vec_from_json<PointTag>(p));
  return out;
}

}  // namespace

nlohmann::json trace_to_json(const ReconstructionReport& report) {
  nlohmann::json doc;
  doc["vertices"] = points_to_json(report.vertices);
  doc["oracle_calls"] = report.oracle_calls;
  auto records = nlohmann::json::array();
  for (const auto& rec : report.trace) {
    nlohmann::json r;
    r["index"] = rec.index;
    r["direction"] = rec.direction ? vec_to_json(*rec.direction) : nlohmann::json(nullptr);
    r["value"] = rec.value ? rational_to_json(*rec.value) : nlohmann::json(nullptr);
    r["branch"] = std::string(branch_name(rec.branch));
    r["outer_vertices"] = points_to_json(rec.outer_vertices);
    r["confirmed_vertices"] = points_to_json(rec.confirmed_vertices);
    records.push_back(std::move(r));
  }
  doc["trace"] = std::move(records);
  return doc;
}

ReconstructionReport trace_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw TraceParseError("trace file must be a JSON object");
  ReconstructionReport report;
  if (!doc.contains("vertices") || !doc.contains("oracle_calls") || !doc.contains("trace")) {
    throw TraceParseError("trace file needs \"vertices\", \"oracle_calls\" and \"trace\"");
  }
  report.vertices = points_from_json(doc["vertices"]);
  report.oracle_calls = doc["oracle_calls"].get<int>();
  for (const auto& r : doc["trace"]) {
    TraceRecord rec;
    rec.index = r.value("index", 0);
    if (r.contains("direction") && !r["direction"].is_null()) {
      rec.direction = vec_from_json<DirectionTag>(r["direction"]);
    }
    if (r.contains("value") && !r["value"].is_null()) {
      rec.value = rational_from_json(r["value"]);
    }
    auto branch = branch_from_name(r.value("branch", ""));
    if (!branch) throw TraceParseError("unknown branch name in trace record");
    rec.branch = *branch;
    if (r.contains("outer_vertices")) rec.outer_vertices = points_from_json(r["outer_vertices"]);
    if (r.contains("confirmed_vertices")) {
      rec.confirmed_vertices = points_from_json(r["confirmed_vertices"]);
    }
    report.trace.push_back(std::move(rec));
  }
  return report;
}

std::string replay_mismatch(const ReconstructionReport& report, SupportOracle& oracle) {
  int call = 0;
  for (const auto& rec : report.trace) {
    if (!rec.direction) continue;
    ++call;
    const Rational value = oracle.support(*rec.direction);
    if (!rec.value || value != *rec.value) {
      return "call " + std::to_string(call) + " on " + to_string(*rec.direction) + " replayed to " +
             to_string(value) + " but the trace recorded " +
             (rec.value ? to_string(*rec.value) : std::string("nothing"));
    }
  }
  if (call != report.oracle_calls) {
    return "trace lists " + std::to_string(call) + " probe records but reports " +
           std::to_string(report.oracle_calls) + " oracle calls";
  }
  return {};
}

}  // namespace polyprobe
