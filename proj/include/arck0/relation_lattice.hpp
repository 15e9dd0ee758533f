#pragma once

#include "arck0/integer_matrix.hpp"
#include "arck0/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace arck0 {

struct Term {
  std::uint32_t generator;
  BigInt coefficient;

  friend bool operator==(const Term &, const Term &) = default;
};

/// Sorted by generator, no zero coefficients.
using SparseRelation = std::vector<Term>;

/// Sorts, merges duplicate generators and drops zeros.
SparseRelation normalized(SparseRelation r);

/// An element of Z^f + Z/d_1 + ... + Z/d_k in the coordinates of a Quotient;
/// torsion coordinates are kept in [0, d_i).
struct QuotientClass {
  BigVector free;
  BigVector torsion;

  bool is_zero() const;
  friend bool operator==(const QuotientClass &a, const QuotientClass &b) {
    return a.free.size() == b.free.size() && a.torsion.size() == b.torsion.size() &&
           a.free == b.free && a.torsion == b.torsion;
  }
};

/// Z^generators / L together with the class of every generator.
class Quotient {
public:
  const GroupPresentation &presentation() const { return presentation_; }
  std::size_t generators() const { return classes_.size(); }

  const QuotientClass &class_of(std::size_t generator) const {
    return classes_.at(generator);
  }
  QuotientClass class_of(const SparseRelation &combination) const;
  bool vanishes(const SparseRelation &combination) const {
    return class_of(combination).is_zero();
  }

  /// Sum of scaled classes, torsion reduced.
  QuotientClass combine(const std::vector<std::pair<BigInt, QuotientClass>> &terms) const;
  QuotientClass negate(const QuotientClass &c) const;

private:
  friend class RelationLattice;

  void reduce_torsion(QuotientClass &c) const;

  GroupPresentation presentation_;
  std::vector<QuotientClass> classes_;
};

/// Streaming cokernel of a sparse relation lattice.
///
/// Every relation is reduced against the generators eliminated so far; if a
/// coefficient +-1 survives, that generator is solved for and substituted
/// everywhere (Gauss-Jordan over Z with unit pivots only, which is
/// unimodular). Whatever is left at the end goes through a dense Smith normal
/// form. Relations that reduce to zero cost one pass over their terms.
class RelationLattice {
public:
  explicit RelationLattice(std::size_t generators);

  std::size_t generators() const { return substitution_.size(); }
  std::size_t relations_added() const { return added_; }
  std::size_t eliminated() const { return eliminated_; }

  void add(const SparseRelation &relation);

  /// Finishes elimination and runs the dense Smith step; the lattice stays
  /// usable afterwards.
  Quotient quotient();

private:
  SparseRelation reduce(const SparseRelation &r) const;
  /// Returns true if r was used as a pivot row.
  bool try_eliminate(const SparseRelation &reduced);
  void eliminate(std::uint32_t pivot, const SparseRelation &reduced);

  std::vector<std::optional<SparseRelation>> substitution_;
  std::vector<std::vector<std::uint32_t>> users_;
  std::vector<SparseRelation> residual_;
  std::size_t added_ = 0;
  std::size_t eliminated_ = 0;
};

} // namespace arck0
