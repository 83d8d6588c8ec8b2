#pragma once

#include "polyprobe/report.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace polyprobe {

class SupportOracle;

struct TraceParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A reconstruction report as a trace file: the recovered vertices, the call
// count, and one record per call (plus call-free bookkeeping records).
nlohmann::json trace_to_json(const ReconstructionReport& report);
ReconstructionReport trace_from_json(const nlohmann::json& doc);

// Replays every recorded probe against a fresh oracle; empty on success,
// otherwise a description of the first mismatch.
std::string replay_mismatch(const ReconstructionReport& report, SupportOracle& oracle);

}  // namespace polyprobe
