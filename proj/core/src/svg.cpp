#include "polyprobe/svg.hpp"

#include "polyprobe/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace polyprobe {

namespace {

struct Box {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

class Canvas {
 public:
  Canvas(const Box& box, double width, double height, double margin)
      : box_(box), width_(width), height_(height), margin_(margin) {
    const double dx = box_.max_x - box_.min_x;
    const double dy = box_.max_y - box_.min_y;
    scale_ = std::min((width_ - 2 * margin_) / dx, (height_ - 2 * margin_) / dy);
    offset_x_ = (width_ - scale_ * dx) / 2;
    offset_y_ = (height_ - scale_ * dy) / 2;
  }

  double x(double wx) const { return offset_x_ + (wx - box_.min_x) * scale_; }
  double y(double wy) const { return height_ - offset_y_ - (wy - box_.min_y) * scale_; }
  double width() const { return width_; }
  double height() const { return height_; }

 private:
  Box box_;
  double width_, height_, margin_, scale_, offset_x_, offset_y_;
};

void expand(Box& box, double x, double y) {
  box.min_x = std::min(box.min_x, x);
  box.max_x = std::max(box.max_x, x);
  box.min_y = std::min(box.min_y, y);
  box.max_y = std::max(box.max_y, y);
}

// Intersections of the line a x + b y = c with the box boundary; the two
// extreme hits give the visible segment.
bool clip_line(const Box& box, double a, double b, double c, double out[4]) {
  struct Hit {
    double x, y;
  };
  Hit hits[8];
  int count = 0;
  const double eps = 1e-9 * (std::abs(box.max_x - box.min_x) + std::abs(box.max_y - box.min_y) + 1);
  auto push = [&](double x, double y) {
    if (x < box.min_x - eps || x > box.max_x + eps) return;
    if (y < box.min_y - eps || y > box.max_y + eps) return;
    if (count < 8) hits[count++] = {x, y};
  };
  if (std::abs(b) > 1e-12) {
    push(box.min_x, (c - a * box.min_x) / b);
    push(box.max_x, (c - a * box.max_x) / b);
  }
  if (std::abs(a) > 1e-12) {
    push((c - b * box.min_y) / a, box.min_y);
    push((c - b * box.max_y) / a, box.max_y);
  }
  if (count < 2) return false;
  int best_i = 0, best_j = 1;
  double best = -1;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const double d = std::hypot(hits[i].x - hits[j].x, hits[i].y - hits[j].y);
      if (d > best) {
        best = d;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best < eps) return false;
  out[0] = hits[best_i].x;
  out[1] = hits[best_i].y;
  out[2] = hits[best_j].x;
  out[3] = hits[best_j].y;
  return true;
}

void append_polygon(std::string& svg, const Canvas& canvas, const std::vector<Point>& ring,
                    const char* style) {
  if (ring.empty()) return;
  if (ring.size() == 1) {
    svg += "  <circle cx=\"" + num(canvas.x(to_double(ring[0][0]))) + "\" cy=\"" +
           num(canvas.y(to_double(ring[0][1]))) + "\" r=\"5\" " + style + "/>\n";
    return;
  }
  svg += ring.size() == 2 ? "  <polyline points=\"" : "  <polygon points=\"";
  for (size_t i = 0; i < ring.size(); ++i) {
    if (i > 0) svg += " ";
    svg += num(canvas.x(to_double(ring[i][0]))) + "," + num(canvas.y(to_double(ring[i][1])));
  }
  svg += std::string("\" ") + style + "/>\n";
}

}  // namespace

std::string render_trace_svg(const ReconstructionReport& report,
                             const std::vector<Point>* hidden_vertices) {
  for (const auto& rec : report.trace) {
    if (rec.direction && rec.direction->dimension() != 2) {
      throw std::invalid_argument("only 2-dimensional traces can be rendered");
    }
  }
  for (const auto& v : report.vertices) {
    if (v.dimension() != 2) throw std::invalid_argument("only 2-dimensional traces can be rendered");
  }

  bool have_point = false;
  Box box;
  auto take = [&](const Point& p) {
    const double px = to_double(p[0]);
    const double py = to_double(p[1]);
    if (!have_point) {
      box = {px, py, px, py};
      have_point = true;
    } else {
      expand(box, px, py);
    }
  };
  if (hidden_vertices) {
    for (const auto& v : *hidden_vertices) take(v);
  }
  for (const auto& v : report.vertices) take(v);
  for (const auto& rec : report.trace) {
    for (const auto& v : rec.outer_vertices) take(v);
    for (const auto& v : rec.confirmed_vertices) take(v);
  }
  if (!have_point) box = {-1, -1, 1, 1};
  {
    const double pad_x = 0.2 * (box.max_x - box.min_x) + 1;
    const double pad_y = 0.2 * (box.max_y - box.min_y) + 1;
    box.min_x -= pad_x;
    box.max_x += pad_x;
    box.min_y -= pad_y;
    box.max_y += pad_y;
  }

  const Canvas canvas(box, 720, 720, 48);
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(canvas.width()) +
         "\" height=\"" + num(canvas.height()) + "\" viewBox=\"0 0 " + num(canvas.width()) + " " +
         num(canvas.height()) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  if (hidden_vertices && !hidden_vertices->empty()) {
    append_polygon(svg, canvas, convex_hull_2d(*hidden_vertices),
                   "fill=\"#d9e8f7\" stroke=\"#5b8ac5\" stroke-width=\"1.5\"");
  }

  // Final outer polygon: the state snapshot of the last trace record.
  for (auto it = report.trace.rbegin(); it != report.trace.rend(); ++it) {
    if (!it->outer_vertices.empty()) {
      append_polygon(svg, canvas, it->outer_vertices,
                     "fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
      break;
    }
  }

  // One tangent line per oracle call, labelled with the call number.
  int call = 0;
  for (const auto& rec : report.trace) {
    if (!rec.direction || !rec.value) continue;
    ++call;
    const double a = to_double((*rec.direction)[0]);
    const double b = to_double((*rec.direction)[1]);
    const double c = to_double(*rec.value);
    double seg[4];
    if (!clip_line(box, a, b, c, seg)) continue;
    svg += "  <line x1=\"" + num(canvas.x(seg[0])) + "\" y1=\"" + num(canvas.y(seg[1])) +
           "\" x2=\"" + num(canvas.x(seg[2])) + "\" y2=\"" + num(canvas.y(seg[3])) +
           "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    const double tx = canvas.x(seg[0] + 0.12 * (seg[2] - seg[0]));
    const double ty = canvas.y(seg[1] + 0.12 * (seg[3] - seg[1]));
    svg += "  <text x=\"" + num(tx + 4) + "\" y=\"" + num(ty - 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#666666\">" +
           std::to_string(call) + "</text>\n";
  }

  for (const auto& v : report.vertices) {
    svg += "  <circle cx=\"" + num(canvas.x(to_double(v[0]))) + "\" cy=\"" +
           num(canvas.y(to_double(v[1]))) + "\" r=\"4\" fill=\"#c0392b\"/>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace polyprobe
