#include "arck0/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace arck0 {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000")
    s = "0.000";
  return s;
}

Point2 on_circle(double angle, double r, const RenderStyle &style) {
  // clockwise from twelve o'clock
  const double c = style.size / 2;
  return {c + r * std::sin(angle), c - r * std::cos(angle)};
}

} // namespace

double point_angle(const CircleModel &model, const PointIndex &p, int window) {
  const double scale = std::max(1, window) / 2.5;
  const double t = 1.0 / (1.0 + std::exp(-static_cast<double>(p.offset) / scale));
  // keep a gap around the accumulation point
  const double within = 0.04 + 0.92 * t;
  return 2 * std::numbers::pi * (p.segment + within) / model.num_segments();
}

double accumulation_angle(const CircleModel &model, int segment) {
  return 2 * std::numbers::pi * segment / model.num_segments();
}

Point2 point_position(const CircleModel &model, const PointIndex &p, int window,
                      const RenderStyle &style) {
  return on_circle(point_angle(model, p, window), style.radius, style);
}

Box2 Chord::bounds() const {
  // a quadratic Bezier stays inside the hull of its control points
  Box2 b{{std::min({from.x, control.x, to.x}), std::min({from.y, control.y, to.y})},
         {std::max({from.x, control.x, to.x}), std::max({from.y, control.y, to.y})}};
  return b;
}

Chord chord_of(const CircleModel &model, const Arc &a, int window,
               const RenderStyle &style) {
  const Point2 p = point_position(model, a.lo(), window, style);
  const Point2 q = point_position(model, a.hi(), window, style);
  const double c = style.size / 2;
  const Point2 mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
  return {p, {mid.x + (c - mid.x) * style.bend, mid.y + (c - mid.y) * style.bend}, q};
}

std::string render_svg(const CircleModel &model, const std::vector<Arc> &arcs,
                       int window, const RenderStyle &style) {
  std::ostringstream out;
  const double c = style.size / 2;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(style.size) << "\" height=\"" << num(style.size) << "\" viewBox=\"0 0 "
      << num(style.size) << ' ' << num(style.size) << "\">\n";
  out << "<circle class=\"boundary\" cx=\"" << num(c) << "\" cy=\"" << num(c)
      << "\" r=\"" << num(style.radius) << "\" fill=\"none\" stroke=\"#888\"/>\n";

  for (int s = 0; s < model.num_segments(); ++s)
    for (std::int64_t o = -window; o <= window; ++o) {
      const double angle = point_angle(model, {s, o}, window);
      const Point2 p = on_circle(angle, style.radius - 4, style);
      const Point2 q = on_circle(angle, style.radius + 4, style);
      out << "<line class=\"tick\" x1=\"" << num(p.x) << "\" y1=\"" << num(p.y)
          << "\" x2=\"" << num(q.x) << "\" y2=\"" << num(q.y)
          << "\" stroke=\"#000\"/>\n";
    }

  for (int s = 0; s < model.num_segments(); ++s) {
    const Point2 p = on_circle(accumulation_angle(model, s), style.radius, style);
    out << "<circle class=\"accumulation\" cx=\"" << num(p.x) << "\" cy=\""
        << num(p.y) << "\" r=\"5\" fill=\"#fff\" stroke=\"#000\"/>\n";
  }

  for (const Arc &a : arcs) {
    const Chord ch = chord_of(model, a, window, style);
    out << "<path class=\"arc\" d=\"M " << num(ch.from.x) << ' ' << num(ch.from.y)
        << " Q " << num(ch.control.x) << ' ' << num(ch.control.y) << ' '
        << num(ch.to.x) << ' ' << num(ch.to.y)
        << "\" fill=\"none\" stroke=\"#1f4e9c\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace arck0
