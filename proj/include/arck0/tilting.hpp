#pragma once

#include "arck0/arc.hpp"
#include "arck0/circle_model.hpp"
#include "arck0/integer_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arck0 {

/// Raised when a computation needs arcs beyond the truncation depth.
class InsufficientDepth : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A finite piece of the cluster-tilting arc configuration built from an
/// inscribed n-gon: polygon edges Z_i = {z_i, z_{i+1}}, the fan X_j = {z_1, z_j}
/// and one leapfrog per accumulation point, each cut after 2*depth steps.
///
/// Leapfrog L_{i+1} starts at Z_i and zigzags into a_{i+1}:
///   L_{i+1}[2m]   = {z_i + m, z_{i+1} - m}
///   L_{i+1}[2m+1] = {z_i + m, z_{i+1} - m - 1}
/// so L_{i+1}[1] = Y_i = {z_i, z_{i+1}^-}. With one accumulation point the
/// polygon degenerates to Z_1 = {z_1^-, z_1^+} and the same formula runs with
/// z_i -> z_1^+, z_{i+1} -> z_1^-.
///
/// Names: "Z<i>", "Y<i>", "X<j>" (X2 = Z1 and X<n> = Z<n> are aliases) and
/// "L<k>[t]". Arcs reached through several names are stored once.
class StandardTilting {
public:
  /// Throws std::invalid_argument for n < 1, depth < 1 or a wrong number of
  /// anchors.
  static StandardTilting build(int n, std::vector<std::int64_t> anchor_offsets,
                               int depth);
  static StandardTilting build(int n, int depth) {
    return build(n, std::vector<std::int64_t>(n > 0 ? n : 0, 0), depth);
  }

  const CircleModel &model() const { return model_; }
  const std::vector<PointIndex> &anchors() const { return anchors_; }
  int depth() const { return depth_; }

  const std::vector<Arc> &arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  const Arc &arc(std::size_t index) const { return arcs_.at(index); }

  const std::map<std::string, std::size_t> &names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::optional<std::size_t> find(const Arc &a) const;
  std::size_t at(std::string_view name) const;
  /// All names of an arc, alphabetically; empty for anonymous arcs.
  std::vector<std::string> names_of(std::size_t index) const;
  /// First name of an arc, or its coordinates.
  std::string label(std::size_t index) const;

  /// Third vertex of the triangle on each side of the arc (inside its
  /// lo-hi interval first), when that triangle is fully present.
  std::pair<std::optional<PointIndex>, std::optional<PointIndex>>
  apexes(std::size_t index) const;

  bool is_interior(std::size_t index) const;

  /// Pairwise non-crossing check over the whole set.
  bool is_non_crossing() const;

  /// Same arcs (names and order ignored).
  bool same_arcs(const StandardTilting &other) const;

private:
  StandardTilting(CircleModel model, std::vector<PointIndex> anchors, int depth)
      : model_(model), anchors_(std::move(anchors)), depth_(depth) {}

  std::size_t add(const std::string &name, const Arc &a);
  void reindex();
  bool linked(const PointIndex &p, const PointIndex &q) const;

  friend StandardTilting mutate(const StandardTilting &t, std::size_t m_index);

  CircleModel model_;
  std::vector<PointIndex> anchors_;
  int depth_;
  std::vector<Arc> arcs_;
  std::map<std::string, std::size_t> names_;
  std::map<Arc, std::size_t> index_;
  std::map<PointIndex, std::vector<PointIndex>> incident_;
};

/// The two complements M, M* of the almost cluster-tilting set obtained by
/// dropping M, with the middle terms of the exchange triangles
/// M -> B_{M*} -> M* -> Sigma M and M* -> B_M -> M -> Sigma M*.
struct ExchangePair {
  Arc m;
  Arc m_star;
  std::vector<Arc> b_m;
  std::vector<Arc> b_m_star;
};

/// Throws InsufficientDepth when an adjacent triangle is cut off.
ExchangePair exchange_pair(const StandardTilting &t, std::size_t m_index);

/// [B_{M*}] - [B_M] over the arc indices of t, tagged with the index of M.
struct Relation {
  std::size_t source;
  IntVector coefficients;
};

/// One relation per interior arc, in index order. Frontier arcs contribute
/// none.
std::vector<Relation> palu_relations(const StandardTilting &t);

/// Flip M to M*. Names of M move to M* with a '*' toggled on. Throws
/// InsufficientDepth on frontier arcs.
StandardTilting mutate(const StandardTilting &t, std::size_t m_index);

} // namespace arck0
