#pragma once

#include "polyprobe/report.hpp"

#include <string>

namespace polyprobe {

// Renders a 2-D probing trace: the hidden set (when supplied), the final
// outer polygon, every tangent line numbered by oracle call, and the
// recovered vertices. Output is deterministic for identical inputs.
// Throws std::invalid_argument for non-planar traces.
std::string render_trace_svg(const ReconstructionReport& report,
                             const std::vector<Point>* hidden_vertices = nullptr);

}  // namespace polyprobe
