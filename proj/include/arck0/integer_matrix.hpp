#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <cstdint>

namespace arck0 {

using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Exact integer matrix; the working type of every cokernel computation.
using IntMatrix = MatrixX<BigInt>;
using BigVector = VectorX<BigInt>;

/// Small relation vectors over an indexed arc basis.
using IntVector = VectorX<std::int64_t>;

template <typename Scalar> Scalar abs_value(const Scalar &x) {
  return x < 0 ? Scalar(-x) : x;
}

/// Floor division and the matching non-negative remainder for b > 0.
template <typename Scalar> Scalar floor_div(const Scalar &a, const Scalar &b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    q -= 1;
  return q;
}

template <typename Scalar> Scalar positive_mod(const Scalar &a, const Scalar &m) {
  Scalar r = a % m;
  if (r < 0)
    r += m;
  return r;
}

template <typename Scalar> Scalar gcd_of(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Scalar r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// Plain matrix-vector product. Eigen's product expressions do not compile
/// with cpp_int scalars on every Boost release, so exact code goes through
/// this loop instead.
template <typename Scalar>
VectorX<Scalar> multiply(const MatrixX<Scalar> &a, const VectorX<Scalar> &x) {
  VectorX<Scalar> out(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Scalar acc = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x(j) != 0)
        acc += a(i, j) * x(j);
    out(i) = acc;
  }
  return out;
}

/// Converts any exact integer matrix to IntMatrix.
template <typename Derived>
IntMatrix to_int_matrix(const Eigen::MatrixBase<Derived> &m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = BigInt(m(i, j));
  return out;
}

} // namespace arck0
