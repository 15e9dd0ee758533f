#include "arck0/circle_model.hpp"

#include <cstdlib>

namespace arck0 {

std::string to_string(const PointIndex &p) {
  return "(" + std::to_string(p.segment) + "," + std::to_string(p.offset) + ")";
}

CircleModel::CircleModel(int num_segments) : num_segments_(num_segments) {
  if (num_segments < 1)
    throw std::invalid_argument("circle model needs at least one segment");
}

void CircleModel::require(const PointIndex &p) const {
  if (!contains(p))
    throw std::out_of_range("point " + to_string(p) + " outside a model with " +
                            std::to_string(num_segments_) + " segments");
}

PointIndex CircleModel::step(const PointIndex &p, std::int64_t k) const {
  require(p);
  return {p.segment, p.offset + k};
}

bool CircleModel::in_open_interval(const PointIndex &a, const PointIndex &b,
                                   const PointIndex &c) const {
  require(a);
  require(b);
  require(c);
  if (a == c)
    throw std::invalid_argument("empty interval: endpoints coincide at " +
                                to_string(a));
  if (a < c)
    return a < b && b < c;
  // the interval wraps past the cut
  return b > a || b < c;
}

std::optional<std::int64_t>
CircleModel::interior_count(const PointIndex &x, const PointIndex &y) const {
  require(x);
  require(y);
  if (x == y)
    throw std::invalid_argument("interior count of a point with itself");
  if (x.segment != y.segment)
    return std::nullopt;
  return std::llabs(x.offset - y.offset) - 1;
}

} // namespace arck0
