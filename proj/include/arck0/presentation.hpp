#pragma once

#include "arck0/integer_matrix.hpp"
#include "arck0/smith_normal_form.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace arck0 {

/// Z^free_rank + Z/d_1 + ... + Z/d_k with every d_i >= 2 and d_i | d_{i+1}.
struct GroupPresentation {
  std::size_t free_rank = 0;
  std::vector<BigInt> invariant_factors;

  bool is_free() const { return invariant_factors.empty(); }
  friend bool operator==(const GroupPresentation &,
                         const GroupPresentation &) = default;
};

/// "Z^3", "Z^2 + (Z/2)^1", "Z/2 + Z/6", "0".
std::string to_string(const GroupPresentation &g);

/// Builds a presentation from a Smith diagonal over `ambient_rank` generators.
template <typename Scalar>
GroupPresentation presentation_from_diagonal(std::size_t ambient_rank,
                                             const std::vector<Scalar> &diag) {
  GroupPresentation g;
  std::size_t nonzero = 0;
  for (const Scalar &d : diag) {
    if (d == 0)
      continue;
    ++nonzero;
    if (d != 1)
      g.invariant_factors.push_back(BigInt(d));
  }
  g.free_rank = ambient_rank - nonzero;
  return g;
}

/// Cokernel of the column span: Z^rows / im(relations).
template <typename Derived>
GroupPresentation cokernel_presentation(const Eigen::MatrixBase<Derived> &relations) {
  const auto diag = smith_normal_form(relations);
  return presentation_from_diagonal(static_cast<std::size_t>(relations.rows()),
                                    diag);
}

/// Z^ambient_rank modulo the span of `columns`. Throws std::invalid_argument
/// when a column has the wrong length.
template <typename Scalar>
GroupPresentation cokernel_presentation(std::size_t ambient_rank,
                                        const std::vector<VectorX<Scalar>> &columns) {
  IntMatrix m(static_cast<Eigen::Index>(ambient_rank),
              static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (static_cast<std::size_t>(columns[j].size()) != ambient_rank)
      throw std::invalid_argument("relation column " + std::to_string(j) +
                                  " has length " +
                                  std::to_string(columns[j].size()) +
                                  ", expected " + std::to_string(ambient_rank));
    for (Eigen::Index i = 0; i < columns[j].size(); ++i)
      m(i, static_cast<Eigen::Index>(j)) = BigInt(columns[j](i));
  }
  return cokernel_presentation(m);
}

} // namespace arck0
