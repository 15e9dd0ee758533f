#include "arck0/completion.hpp"

#include <doctest.h>

using namespace arck0;

namespace {
Arc arc(int s0, std::int64_t o0, int s1, std::int64_t o1) {
  return Arc({s0, o0}, {s1, o1});
}
bool same(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j))
        return false;
  return true;
}
} // namespace

TEST_CASE("completion model") {
  const CompletionModel cm(3);
  CHECK(cm.host().num_segments() == 6);
  CHECK(cm.kernel_segments() == std::vector<int>{0, 2, 4});
  CHECK(cm.kernel_anchor(2) == PointIndex{2, 0});
  CHECK_THROWS_AS(CompletionModel(0), std::invalid_argument);
  CHECK_THROWS_AS(CompletionModel(2, {0, 0}), std::invalid_argument);
}

TEST_CASE("kernel generators") {
  CHECK(kernel_generator_arc(CompletionModel(1), 1) == arc(0, -2, 0, 0));
  const CompletionModel cm(4, {3, 0, -1, 0, 2, 0, 0, 0});
  CHECK(kernel_generator_arc(cm, 2) == arc(2, -3, 2, -1));
  for (int i = 1; i <= 4; ++i) {
    const Arc a = kernel_generator_arc(cm, i);
    CHECK(cm.host().interior_count(a.lo(), a.hi()) == 1);
    CHECK(is_kernel_object(cm, a));
  }
  CHECK_THROWS_AS(kernel_generator_arc(cm, 0), std::out_of_range);
  CHECK_THROWS_AS(kernel_generator_arc(cm, 5), std::out_of_range);
}

TEST_CASE("kernel membership") {
  const CompletionModel cm(2);
  CHECK(is_kernel_object(cm, arc(2, 0, 2, 5)));
  CHECK_FALSE(is_kernel_object(cm, arc(1, 0, 1, 5)));
  CHECK_FALSE(is_kernel_object(cm, arc(0, 0, 2, 0)));
}

TEST_CASE("f matrix") {
  IntMatrix one(2, 1);
  one(0, 0) = 1;
  one(1, 0) = 1;
  CHECK(same(f_matrix(1), one));
  const int entries[4][2] = {{1, -1}, {1, -1}, {0, 2}, {0, 0}};
  IntMatrix two(4, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      two(i, j) = entries[i][j];
  CHECK(same(f_matrix(2), two));
  for (int n = 1; n <= 6; ++n) {
    const IntMatrix f = f_matrix(n);
    CHECK(f.rows() == 2 * n);
    for (Eigen::Index j = 0; j < n; ++j) {
      BigInt s = 0;
      for (Eigen::Index i = 0; i < f.rows(); ++i)
        s += f(i, j);
      CHECK(s == (j == 0 ? 2 : 0));
    }
  }
}

TEST_CASE("K0 of the completion") {
  for (int n = 1; n <= 6; ++n) {
    const GroupPresentation g = compute_k0_completed(n);
    CHECK(g.free_rank == static_cast<std::size_t>(n));
    CHECK(g.invariant_factors == std::vector<BigInt>(static_cast<std::size_t>(n - 1), 2));
  }
}

TEST_CASE("f columns are classes of the generators") {
  for (int n = 1; n <= 4; ++n) {
    const CompletionModel cm(n);
    const IntMatrix f = f_matrix(n);
    for (int i = 1; i <= n; ++i) {
      const K0Class c = class_same_segment(2 * n, kernel_generator_arc(cm, i));
      for (Eigen::Index r = 0; r < f.rows(); ++r)
        CHECK(f(r, i - 1) == c.coefficients(r));
    }
  }
}

TEST_CASE("oracle route for f") {
  for (int n : {1, 2}) {
    const FOracleReport r = verify_f_oracle(n, 6);
    CHECK(r.match);
    CHECK(r.generators_nonzero);
    CHECK(r.oracle == compute_k0_completed(n));
    CHECK(r.generators.size() == static_cast<std::size_t>(n));
  }
  CHECK_THROWS_AS(verify_f_oracle(2, 1), InsufficientWindow);
  CHECK_THROWS_AS(verify_f_oracle(CompletionModel(1, {-5, 0}), 3), InsufficientWindow);
}
