#pragma once

#include "arck0/arc.hpp"
#include "arck0/circle_model.hpp"
#include "arck0/integer_matrix.hpp"
#include "arck0/presentation.hpp"
#include "arck0/relation_lattice.hpp"
#include "arck0/tilting.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace arck0 {

class InsufficientWindow : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Exchange-relation route

/// Rows are tilting arcs, columns are the relations.
IntMatrix relation_matrix(const StandardTilting &t,
                          const std::vector<Relation> &relations);

struct K0Report {
  int n = 0;
  int depth = 0;
  GroupPresentation presentation;
  std::size_t basis_size = 0;
  std::size_t relation_count = 0;
  /// Arcs whose far triangle lies beyond the truncation.
  std::vector<std::size_t> frontier;
  /// Frontier arcs that no relation mentions.
  std::size_t frontier_excess = 0;
  /// free_rank == n + frontier_excess and no torsion.
  bool consistent = false;
};

/// K_0 of the discrete cluster category with n accumulation points, as the
/// split Grothendieck group of the truncated standard tilting set modulo the
/// exchange relations. Throws InsufficientDepth for depth < 2.
K0Report compute_k0_cn(int n, std::vector<std::int64_t> anchor_offsets, int depth);
inline K0Report compute_k0_cn(int n, int depth) {
  return compute_k0_cn(n, std::vector<std::int64_t>(n > 0 ? n : 0, 0), depth);
}

// ---------------------------------------------------------------------------
// Brute-force Euler relations over a finite window

/// Every arc with both endpoint offsets in [-window, window], modulo the Euler
/// relations of both triangles induced by each crossing pair and
/// [Sigma A] + [A] = 0 whenever Sigma A stays in the window.
class EulerOracle {
public:
  /// Throws InsufficientWindow for window < 2.
  EulerOracle(int n, int window);

  int n() const { return model_.num_segments(); }
  int window() const { return window_; }
  const CircleModel &model() const { return model_; }

  const std::vector<Arc> &basis() const { return arcs_; }
  std::size_t relation_count() const { return relation_count_; }
  const GroupPresentation &presentation() const { return quotient_.presentation(); }
  const Quotient &quotient() const { return quotient_; }

  bool in_window(const PointIndex &p) const {
    return model_.contains(p) && p.offset >= -window_ && p.offset <= window_;
  }
  bool in_window(const Arc &a) const { return in_window(a.lo()) && in_window(a.hi()); }

  std::optional<std::size_t> find(const Arc &a) const;
  /// Throws std::out_of_range for arcs outside the window.
  const QuotientClass &class_of(const Arc &a) const;
  QuotientClass class_of(const std::vector<std::pair<std::int64_t, Arc>> &combination) const;

  /// Coordinates of [a] in the given arcs' classes when those classes form a
  /// basis of a free quotient; std::nullopt otherwise.
  std::optional<IntVector> coordinates(const Arc &a,
                                       std::span<const Arc> basis_arcs) const;

private:
  CircleModel model_;
  int window_;
  std::vector<Arc> arcs_;
  std::map<Arc, std::size_t> index_;
  std::size_t relation_count_ = 0;
  Quotient quotient_;
};

inline EulerOracle euler_oracle(int n, int window) { return EulerOracle(n, window); }

// ---------------------------------------------------------------------------
// Same-segment classes

/// [W_i] for the one-sided fountain W_i = {anchor, anchor + i + 1} (i marked
/// points inside), as a multiple of w = [W_1].
struct FountainClass {
  Arc arc;
  int w_coefficient;
};

/// Runs [W_{i+1}] = [W_i] + (-1)^i [W_1] up from [W_1] = w. Throws
/// std::invalid_argument for i < 1.
FountainClass parity_class(const PointIndex &anchor, int i);

/// A class written in named basis elements.
struct K0Class {
  std::vector<std::string> basis;
  IntVector coefficients;

  bool is_zero() const { return coefficients.isZero(); }
  friend bool operator==(const K0Class &a, const K0Class &b) {
    return a.basis == b.basis && a.coefficients == b.coefficients;
  }
};

/// "Y1", "X2", ..., "X<n>".
std::vector<std::string> standard_basis_labels(int n);
/// The arcs Y_1 = {z_1, z_2^-} and X_j = {z_1, z_j} behind those labels.
std::vector<Arc> standard_basis_arcs(int n, std::span<const std::int64_t> anchor_offsets);

/// Class of a same-segment arc over {[Y1], [X2], ..., [Xn]} (n >= 2).
///
/// Zero when the arc has an even number of interior points. Otherwise the arc
/// is Sigma^k of the reference arc {z_i^--, z_i} of its segment, with k the
/// distance between lower endpoints, and its class is (-1)^k times
///   [X2] + [Y1]              on the segment of z_1,
///   2[Xi] - [X2] - [Y1]      on the segment of z_i, i >= 2.
/// Throws std::invalid_argument for cross-segment arcs.
K0Class class_same_segment(int n, const Arc &arc,
                           std::span<const std::int64_t> anchor_offsets = {});

} // namespace arck0
