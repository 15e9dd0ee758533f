#pragma once

#include "arck0/circle_model.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arck0 {

/// An arc {p, q} between two non-adjacent marked points; the model of an
/// indecomposable object. Endpoints are stored sorted, so lo() < hi() in the
/// cut-open cyclic order.
class Arc {
public:
  /// Throws std::invalid_argument for equal or adjacent endpoints.
  Arc(const PointIndex &p, const PointIndex &q);

  /// std::nullopt (the zero object) when the pair is degenerate.
  static std::optional<Arc> make(const PointIndex &p, const PointIndex &q);

  const PointIndex &lo() const { return lo_; }
  const PointIndex &hi() const { return hi_; }

  bool has_endpoint(const PointIndex &p) const { return p == lo_ || p == hi_; }
  bool same_segment() const { return lo_.segment == hi_.segment; }

  friend auto operator<=>(const Arc &, const Arc &) = default;

private:
  PointIndex lo_;
  PointIndex hi_;
};

/// Either an arc or the zero object (a boundary segment between adjacent
/// points, or a collapsed pair).
using MaybeArc = std::optional<Arc>;

std::string to_string(const Arc &a);
std::string to_string(const MaybeArc &a);

/// dim Ext^1(A, B): 1 iff the endpoints strictly interleave. Shared endpoints
/// never cross.
int ext1_dim(const Arc &a, const Arc &b);

inline bool crosses(const Arc &a, const Arc &b) { return ext1_dim(a, b) == 1; }

/// Sigma^k: both endpoints stepped by -k (one marked point clockwise per
/// unit of k).
Arc suspend(const Arc &a, std::int64_t k);

/// Sides of the quadrilateral spanned by crossing arcs M = {v0, v2} and
/// N = {v1, v3}, with v0 = M.lo() and v0 < v1 < v2 < v3 cyclically:
/// [{v0,v1}, {v1,v2}, {v2,v3}, {v3,v0}]. Throws if M and N do not cross.
std::array<MaybeArc, 4> quadrilateral_sides(const Arc &m, const Arc &n);

/// first -> (+)middle -> third -> Sigma first. Zero summands are dropped.
struct InducedTriangle {
  Arc first;
  std::vector<Arc> middle;
  Arc third;
};

/// The two triangles induced by a crossing: M -> {v1v2}+{v3v0} -> N and
/// N -> {v0v1}+{v2v3} -> M.
std::pair<InducedTriangle, InducedTriangle> induced_triangles(const Arc &m,
                                                              const Arc &n);

} // namespace arck0
