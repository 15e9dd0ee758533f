#pragma once

#include "arck0/arc.hpp"
#include "arck0/circle_model.hpp"

#include <string>
#include <vector>

namespace arck0 {

struct Point2 {
  double x = 0;
  double y = 0;
};

struct Box2 {
  Point2 min;
  Point2 max;
  bool overlaps(const Box2 &o) const {
    return min.x <= o.max.x && o.min.x <= max.x && min.y <= o.max.y &&
           o.min.y <= max.y;
  }
};

struct RenderStyle {
  double size = 480;
  double radius = 200;
  /// How far a chord's control point is pulled toward the centre.
  double bend = 0.35;
};

/// Angle of a marked point: segment i fills the sector (i/n, (i+1)/n) of a
/// full turn and offsets are squeezed into it by a logistic curve, so the
/// window's ends crowd toward the accumulation points.
double point_angle(const CircleModel &model, const PointIndex &p, int window);
/// Accumulation point a_{i+1} sits at the start of sector i.
double accumulation_angle(const CircleModel &model, int segment);

Point2 point_position(const CircleModel &model, const PointIndex &p, int window,
                      const RenderStyle &style = {});

/// Quadratic Bezier from one endpoint to the other: start, control, end.
struct Chord {
  Point2 from;
  Point2 control;
  Point2 to;
  Box2 bounds() const;
};

Chord chord_of(const CircleModel &model, const Arc &a, int window,
               const RenderStyle &style = {});

/// SVG 1.1 document: circle, a tick per in-window marked point, an open
/// circle per accumulation point and one <path class="arc"> per arc.
std::string render_svg(const CircleModel &model, const std::vector<Arc> &arcs,
                       int window, const RenderStyle &style = {});

} // namespace arck0
