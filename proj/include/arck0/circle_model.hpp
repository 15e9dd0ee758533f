#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace arck0 {

/// A marked point, addressed by the segment it lives in and an integer
/// offset inside that segment. Offsets grow anticlockwise; +inf runs into the
/// segment's upper accumulation point and -inf into its lower one.
///
/// The defaulted ordering (segment, then offset) is the cyclic order of the
/// circle cut open just after the accumulation point preceding segment 0.
struct PointIndex {
  int segment = 0;
  std::int64_t offset = 0;

  friend auto operator<=>(const PointIndex &, const PointIndex &) = default;
};

std::string to_string(const PointIndex &p);

/// The admissible marked set with `num_segments` two-sided accumulation
/// points, one bi-infinite segment between each consecutive pair.
///
/// Accumulation points carry no data of their own: the accumulation point
/// a_{i+1} sits between segment i and segment i+1 (mod n).
class CircleModel {
public:
  explicit CircleModel(int num_segments);

  int num_segments() const { return num_segments_; }

  bool contains(const PointIndex &p) const {
    return p.segment >= 0 && p.segment < num_segments_;
  }

  /// Successor (k > 0) or predecessor (k < 0) taken |k| times. Never leaves
  /// the segment, since accumulation points are not marked.
  PointIndex step(const PointIndex &p, std::int64_t k) const;

  /// True iff b lies strictly inside the anticlockwise interval (a, c).
  /// Throws std::invalid_argument when a == c.
  bool in_open_interval(const PointIndex &a, const PointIndex &b,
                        const PointIndex &c) const;

  /// Marked points strictly between x and y on the side that avoids every
  /// accumulation point; std::nullopt when x and y are in different segments
  /// (both sides are then infinite).
  std::optional<std::int64_t> interior_count(const PointIndex &x,
                                             const PointIndex &y) const;

  friend bool operator==(const CircleModel &, const CircleModel &) = default;

private:
  void require(const PointIndex &p) const;

  int num_segments_;
};

/// Equal or successor/predecessor pairs; these are boundary segments of the
/// infinity-gon rather than arcs.
inline bool adjacent_or_equal(const PointIndex &p, const PointIndex &q) {
  if (p.segment != q.segment)
    return false;
  const auto d = p.offset - q.offset;
  return d >= -1 && d <= 1;
}

} // namespace arck0
