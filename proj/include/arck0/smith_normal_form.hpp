#pragma once

#include "arck0/integer_matrix.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <vector>

namespace arck0 {

enum SmithOptions : unsigned {
  ComputeNone = 0x0,
  ComputeU = 0x1,
  ComputeV = 0x2,
};

/// Smith normal form U * A * V = D of an exact integer matrix, D diagonal with
/// d_0 | d_1 | ... and the zeros trailing.
///
/// Plain elimination: the pivot is always an entry of least nonzero absolute
/// value in the active block, so remainders strictly shrink it. No modular
/// arithmetic, so Scalar must be exact (an integer type or BigInt).
template <typename Scalar_> class SmithNormalForm {
public:
  using Scalar = Scalar_;
  using Matrix = MatrixX<Scalar>;

  SmithNormalForm() = default;

  template <typename Derived>
  explicit SmithNormalForm(const Eigen::MatrixBase<Derived> &a,
                           unsigned options = ComputeNone) {
    compute(a, options);
  }

  template <typename Derived>
  SmithNormalForm &compute(const Eigen::MatrixBase<Derived> &a,
                           unsigned options = ComputeNone);

  /// min(rows, cols) entries.
  const std::vector<Scalar> &diagonal() const { return diagonal_; }
  Eigen::Index rank() const { return rank_; }
  const Matrix &matrixU() const { return u_; }
  const Matrix &matrixV() const { return v_; }

private:
  void swap_rows(Eigen::Index i, Eigen::Index j);
  void swap_cols(Eigen::Index i, Eigen::Index j);
  void add_row(Eigen::Index target, Eigen::Index source, const Scalar &factor,
               Eigen::Index from);
  void add_col(Eigen::Index target, Eigen::Index source, const Scalar &factor,
               Eigen::Index from);
  bool find_pivot(Eigen::Index t, Eigen::Index &row, Eigen::Index &col) const;

  Matrix work_;
  Matrix u_;
  Matrix v_;
  bool track_u_ = false;
  bool track_v_ = false;
  std::vector<Scalar> diagonal_;
  Eigen::Index rank_ = 0;
};

template <typename Scalar>
void SmithNormalForm<Scalar>::swap_rows(Eigen::Index i, Eigen::Index j) {
  if (i == j)
    return;
  work_.row(i).swap(work_.row(j));
  if (track_u_)
    u_.row(i).swap(u_.row(j));
}

template <typename Scalar>
void SmithNormalForm<Scalar>::swap_cols(Eigen::Index i, Eigen::Index j) {
  if (i == j)
    return;
  work_.col(i).swap(work_.col(j));
  if (track_v_)
    v_.col(i).swap(v_.col(j));
}

// row[target] += factor * row[source], touching the work matrix from column
// `from` on (everything left of it is already zero in both rows).
template <typename Scalar>
void SmithNormalForm<Scalar>::add_row(Eigen::Index target, Eigen::Index source,
                                      const Scalar &factor, Eigen::Index from) {
  for (Eigen::Index j = from; j < work_.cols(); ++j)
    if (work_(source, j) != 0)
      work_(target, j) += factor * work_(source, j);
  if (track_u_)
    for (Eigen::Index j = 0; j < u_.cols(); ++j)
      if (u_(source, j) != 0)
        u_(target, j) += factor * u_(source, j);
}

template <typename Scalar>
void SmithNormalForm<Scalar>::add_col(Eigen::Index target, Eigen::Index source,
                                      const Scalar &factor, Eigen::Index from) {
  for (Eigen::Index i = from; i < work_.rows(); ++i)
    if (work_(i, source) != 0)
      work_(i, target) += factor * work_(i, source);
  if (track_v_)
    for (Eigen::Index i = 0; i < v_.rows(); ++i)
      if (v_(i, source) != 0)
        v_(i, target) += factor * v_(i, source);
}

template <typename Scalar>
bool SmithNormalForm<Scalar>::find_pivot(Eigen::Index t, Eigen::Index &row,
                                         Eigen::Index &col) const {
  bool found = false;
  Scalar best = 0;
  for (Eigen::Index j = t; j < work_.cols(); ++j)
    for (Eigen::Index i = t; i < work_.rows(); ++i) {
      const Scalar &x = work_(i, j);
      if (x == 0)
        continue;
      Scalar ax = abs_value(x);
      if (!found || ax < best) {
        best = std::move(ax);
        row = i;
        col = j;
        found = true;
        if (best == 1)
          return true;
      }
    }
  return found;
}

template <typename Scalar>
template <typename Derived>
SmithNormalForm<Scalar> &
SmithNormalForm<Scalar>::compute(const Eigen::MatrixBase<Derived> &a,
                                 unsigned options) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  work_ = a.template cast<Scalar>();
  track_u_ = (options & ComputeU) != 0;
  track_v_ = (options & ComputeV) != 0;
  u_.resize(track_u_ ? rows : 0, track_u_ ? rows : 0);
  v_.resize(track_v_ ? cols : 0, track_v_ ? cols : 0);
  u_.setIdentity();
  v_.setIdentity();
  rank_ = 0;

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    Eigen::Index pr = t;
    Eigen::Index pc = t;
    if (!find_pivot(t, pr, pc))
      break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    for (;;) {
      bool residue = false;
      const Scalar pivot = work_(t, t);
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (work_(i, t) == 0)
          continue;
        const Scalar q = work_(i, t) / pivot;
        if (q != 0)
          add_row(i, t, Scalar(-q), t);
        residue = residue || work_(i, t) != 0;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (work_(t, j) == 0)
          continue;
        const Scalar q = work_(t, j) / pivot;
        if (q != 0)
          add_col(j, t, Scalar(-q), t);
        residue = residue || work_(t, j) != 0;
      }
      if (residue) {
        // a remainder smaller than the pivot survived; re-pivot on it
        find_pivot(t, pr, pc);
        swap_rows(t, pr);
        swap_cols(t, pc);
        continue;
      }

      // divisibility: fold in a row holding an entry the pivot misses
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = t + 1; i < rows && bad_row < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (work_(i, j) % pivot != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0)
        break;
      add_row(t, bad_row, Scalar(1), t);
    }

    if (work_(t, t) < 0) {
      for (Eigen::Index j = t; j < cols; ++j)
        work_(t, j) = -work_(t, j);
      if (track_u_)
        u_.row(t) = -u_.row(t);
    }
    ++rank_;
  }

  diagonal_.assign(static_cast<std::size_t>(steps), Scalar(0));
  for (Eigen::Index t = 0; t < rank_; ++t)
    diagonal_[static_cast<std::size_t>(t)] = work_(t, t);
  work_.resize(0, 0);
  return *this;
}

/// Diagonal of the Smith normal form, d_i | d_{i+1}, zeros last.
template <typename Derived>
std::vector<typename Derived::Scalar>
smith_normal_form(const Eigen::MatrixBase<Derived> &a) {
  return SmithNormalForm<typename Derived::Scalar>(a).diagonal();
}

} // namespace arck0
