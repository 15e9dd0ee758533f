#include "arck0/k0.hpp"
#include "arck0/presentation.hpp"
#include "arck0/smith_normal_form.hpp"

#include <doctest.h>

using namespace arck0;

namespace {

Arc arc(int s0, std::int64_t o0, int s1, std::int64_t o1) {
  return Arc({s0, o0}, {s1, o1});
}

IntMatrix ints(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto r : rows) {
    Eigen::Index j = 0;
    for (int x : r)
      m(i, j++) = x;
    ++i;
  }
  return m;
}

std::vector<BigInt> bigs(std::initializer_list<int> xs) {
  return {xs.begin(), xs.end()};
}

GroupPresentation group(std::size_t r, std::initializer_list<int> factors) {
  return {r, bigs(factors)};
}

} // namespace

TEST_CASE("smith normal form") {
  CHECK(smith_normal_form(ints({{1, 0}, {0, 1}})) == bigs({1, 1}));
  CHECK(smith_normal_form(ints({{2, 0}, {0, 0}})) == bigs({2, 0}));
  CHECK(smith_normal_form(ints({{0, 0}, {0, 2}})) == bigs({2, 0}));
  CHECK(smith_normal_form(ints({{2, 4}, {6, 8}})) == bigs({2, 4}));
  CHECK(smith_normal_form(ints({{2, 0}, {0, 3}})) == bigs({1, 6}));
  CHECK(smith_normal_form(ints({{4, 0, 0}, {0, 6, 0}})) == bigs({2, 12}));
  CHECK(smith_normal_form(IntMatrix(0, 3)).empty());
  CHECK(smith_normal_form(IntMatrix::Zero(2, 3)) == bigs({0, 0}));
}

TEST_CASE("smith transforms reproduce the diagonal") {
  const IntMatrix a = ints({{3, 5, -2}, {4, 0, 6}, {-1, 7, 9}, {2, 2, 2}});
  const SmithNormalForm<BigInt> snf(a, ComputeU | ComputeV);
  const IntMatrix &u = snf.matrixU();
  const IntMatrix &v = snf.matrixV();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      BigInt x = 0;
      for (Eigen::Index k = 0; k < a.rows(); ++k)
        for (Eigen::Index l = 0; l < a.cols(); ++l)
          x += u(i, k) * a(k, l) * v(l, j);
      const BigInt want = (i == j) ? snf.diagonal()[static_cast<std::size_t>(i)] : BigInt(0);
      CHECK(x == want);
    }
}

TEST_CASE("smith over machine integers") {
  MatrixX<long long> a(2, 2);
  a << 2, 4, 6, 8;
  CHECK(smith_normal_form(a) == std::vector<long long>{2, 4});
}

TEST_CASE("cokernel presentations") {
  std::vector<IntVector> cols(2, IntVector::Zero(4));
  cols[0] << 1, 1, 0, 0;
  cols[1] << -1, -1, 2, 0;
  CHECK(cokernel_presentation(4, cols) == group(2, {2}));
  CHECK(cokernel_presentation(3, std::vector<IntVector>{}) == group(3, {}));
  std::vector<IntVector> unit(2, IntVector::Zero(2));
  unit[0] << 1, 0;
  unit[1] << 0, 1;
  CHECK(cokernel_presentation(2, unit) == group(0, {}));
  CHECK_THROWS_AS(cokernel_presentation(3, unit), std::invalid_argument);

  CHECK(to_string(group(2, {2})) == "Z^2 + (Z/2)^1");
  CHECK(to_string(group(0, {})) == "0");
  CHECK(to_string(group(0, {2, 6})) == "(Z/2)^1 + (Z/6)^1");
}

TEST_CASE("K0 through the exchange relations") {
  CHECK(compute_k0_cn(1, 4).presentation == group(1, {}));
  CHECK(compute_k0_cn(3, 4).presentation == group(3, {}));
  CHECK(compute_k0_cn(6, 8).presentation == group(6, {}));
  const K0Report r = compute_k0_cn(4, {-3, 0, 5, 2}, 3);
  CHECK(r.presentation == group(4, {}));
  CHECK(r.consistent);
  CHECK(r.frontier.size() == 4);
  CHECK(r.frontier_excess == 0);
  CHECK(r.basis_size == 4 + 1 + 4 * 6);
  CHECK_THROWS_AS(compute_k0_cn(3, 1), InsufficientDepth);
}

TEST_CASE("Euler oracle") {
  CHECK_THROWS_AS(EulerOracle(1, 1), InsufficientWindow);
  const EulerOracle o(1, 6);
  CHECK(o.presentation() == group(1, {}));
  CHECK(o.class_of(arc(0, 0, 0, 3)).is_zero());
  CHECK(o.class_of(arc(0, 0, 0, 2)) == o.class_of(arc(0, 0, 0, 4)));
  CHECK_FALSE(o.class_of(arc(0, 0, 0, 2)).is_zero());
  CHECK_THROWS_AS(o.class_of(arc(0, 0, 0, 7)), std::out_of_range);

  const Arc a = arc(0, -2, 0, 3);
  CHECK(o.class_of(suspend(a, 1)) == o.quotient().negate(o.class_of(a)));

  // free rank is already n at the smallest window
  for (int n = 1; n <= 4; ++n)
    for (int w : {2, 3})
      CHECK(EulerOracle(n, w).presentation() ==
            GroupPresentation{static_cast<std::size_t>(n), {}});
}

TEST_CASE("parity of fountain classes") {
  CHECK(parity_class({0, 0}, 1).w_coefficient == 1);
  CHECK(parity_class({0, 0}, 2).w_coefficient == 0);
  CHECK(parity_class({0, 0}, 7).w_coefficient == 1);
  CHECK(parity_class({1, 4}, 3).arc == arc(1, 4, 1, 8));
  CHECK_THROWS_AS(parity_class({0, 0}, 0), std::invalid_argument);
}

TEST_CASE("same-segment classes") {
  const std::vector<std::int64_t> zeros(4, 0);
  const IntVector x = class_same_segment(4, arc(0, -2, 0, 0), zeros).coefficients;
  CHECK(x == (IntVector(4) << 1, 1, 0, 0).finished());
  CHECK(class_same_segment(4, arc(0, -2, 0, 1), zeros).is_zero());
  CHECK(class_same_segment(4, arc(2, -2, 2, 0), zeros).coefficients ==
        (IntVector(4) << -1, -1, 2, 0).finished());
  // one step of suspension flips the sign
  CHECK(class_same_segment(4, arc(2, -3, 2, -1), zeros).coefficients ==
        (IntVector(4) << 1, 1, -2, 0).finished());
  CHECK_THROWS_AS(class_same_segment(4, arc(0, 0, 1, 0), zeros), std::invalid_argument);
  CHECK_THROWS_AS(class_same_segment(1, arc(0, 0, 0, 2)), std::invalid_argument);
  CHECK(class_same_segment(2, arc(0, 0, 0, 2)).basis ==
        std::vector<std::string>{"Y1", "X2"});
}

TEST_CASE("same-segment classes agree with the oracle") {
  for (int n : {2, 3}) {
    const std::vector<std::int64_t> anchors = n == 2 ? std::vector<std::int64_t>{1, -2}
                                                     : std::vector<std::int64_t>{-1, 0, 2};
    const EulerOracle o(n, 5);
    const std::vector<Arc> basis = standard_basis_arcs(n, anchors);
    for (const Arc &a : o.basis()) {
      if (!a.same_segment())
        continue;
      const auto c = o.coordinates(a, basis);
      REQUIRE(c.has_value());
      CHECK(*c == class_same_segment(n, a, anchors).coefficients);
    }
  }
}
