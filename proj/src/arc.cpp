#include "arck0/arc.hpp"

#include <stdexcept>

namespace arck0 {

Arc::Arc(const PointIndex &p, const PointIndex &q)
    : lo_(std::min(p, q)), hi_(std::max(p, q)) {
  if (adjacent_or_equal(p, q))
    throw std::invalid_argument("degenerate arc " + arck0::to_string(p) + "-" +
                                arck0::to_string(q));
}

std::optional<Arc> Arc::make(const PointIndex &p, const PointIndex &q) {
  if (adjacent_or_equal(p, q))
    return std::nullopt;
  return Arc(p, q);
}

std::string to_string(const Arc &a) {
  return "{" + to_string(a.lo()) + "," + to_string(a.hi()) + "}";
}

std::string to_string(const MaybeArc &a) { return a ? to_string(*a) : "0"; }

namespace {

bool strictly_between(const PointIndex &lo, const PointIndex &x,
                      const PointIndex &hi) {
  return lo < x && x < hi;
}

} // namespace

int ext1_dim(const Arc &a, const Arc &b) {
  if (a.has_endpoint(b.lo()) || a.has_endpoint(b.hi()))
    return 0;
  const bool first = strictly_between(a.lo(), b.lo(), a.hi());
  const bool second = strictly_between(a.lo(), b.hi(), a.hi());
  return first != second ? 1 : 0;
}

Arc suspend(const Arc &a, std::int64_t k) {
  return Arc({a.lo().segment, a.lo().offset - k},
             {a.hi().segment, a.hi().offset - k});
}

std::array<MaybeArc, 4> quadrilateral_sides(const Arc &m, const Arc &n) {
  if (!crosses(m, n))
    throw std::invalid_argument("quadrilateral of non-crossing arcs " +
                                to_string(m) + ", " + to_string(n));
  const PointIndex &v0 = m.lo();
  const PointIndex &v2 = m.hi();
  const bool lo_inside = strictly_between(v0, n.lo(), v2);
  const PointIndex &v1 = lo_inside ? n.lo() : n.hi();
  const PointIndex &v3 = lo_inside ? n.hi() : n.lo();
  return {Arc::make(v0, v1), Arc::make(v1, v2), Arc::make(v2, v3),
          Arc::make(v3, v0)};
}

namespace {

std::vector<Arc> nonzero(const MaybeArc &a, const MaybeArc &b) {
  std::vector<Arc> out;
  if (a)
    out.push_back(*a);
  if (b)
    out.push_back(*b);
  return out;
}

} // namespace

std::pair<InducedTriangle, InducedTriangle> induced_triangles(const Arc &m,
                                                              const Arc &n) {
  const auto sides = quadrilateral_sides(m, n);
  return {InducedTriangle{m, nonzero(sides[1], sides[3]), n},
          InducedTriangle{n, nonzero(sides[0], sides[2]), m}};
}

} // namespace arck0
