#include "arck0/completion.hpp"

#include <stdexcept>
#include <string>

namespace arck0 {

CompletionModel::CompletionModel(int n, std::vector<std::int64_t> host_anchor_offsets)
    : n_(n), host_(n >= 1 ? 2 * n : 1), anchors_(std::move(host_anchor_offsets)) {
  if (n < 1)
    throw std::invalid_argument("completion needs n >= 1, got " + std::to_string(n));
  if (anchors_.empty())
    anchors_.assign(static_cast<std::size_t>(2 * n), 0);
  if (anchors_.size() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("expected " + std::to_string(2 * n) +
                                " host anchor offsets");
  for (int s = 0; s < 2 * n; s += 2)
    kernel_segments_.push_back(s);
}

PointIndex CompletionModel::kernel_anchor(int i) const {
  if (i < 1 || i > n_)
    throw std::out_of_range("kernel index " + std::to_string(i) +
                            " outside [1, " + std::to_string(n_) + "]");
  const int segment = 2 * i - 2;
  return {segment, anchors_[static_cast<std::size_t>(segment)]};
}

Arc kernel_generator_arc(const CompletionModel &cm, int i) {
  const PointIndex z = cm.kernel_anchor(i);
  return Arc(cm.host().step(z, -2), z);
}

bool is_kernel_object(const CompletionModel &cm, const Arc &a) {
  if (!a.same_segment())
    return false;
  const int s = a.lo().segment;
  return cm.host().contains(a.lo()) && s % 2 == 0;
}

IntMatrix f_matrix(int n) {
  if (n < 1)
    throw std::invalid_argument("f_matrix needs n >= 1");
  // row 0 is Y1, row j-1 is Xj
  IntMatrix f = IntMatrix::Zero(2 * n, n);
  f(0, 0) = 1;
  f(1, 0) = 1;
  for (int i = 2; i <= n; ++i) {
    f(2 * i - 2, i - 1) = 2;
    f(1, i - 1) = -1;
    f(0, i - 1) = -1;
  }
  return f;
}

GroupPresentation compute_k0_completed(int n) {
  return cokernel_presentation(f_matrix(n));
}

FOracleReport verify_f_oracle(int n, int window) {
  return verify_f_oracle(CompletionModel(n), window);
}

FOracleReport verify_f_oracle(const CompletionModel &cm, int window) {
  const int n = cm.n();
  FOracleReport report;
  for (int i = 1; i <= n; ++i)
    report.generators.push_back(kernel_generator_arc(cm, i));

  auto fits = [&](const Arc &a) {
    auto ok = [&](const PointIndex &p) {
      return p.offset >= -window && p.offset <= window;
    };
    return ok(a.lo()) && ok(a.hi());
  };
  if (window < 2)
    throw InsufficientWindow("oracle window must be >= 2, got " + std::to_string(window));
  std::vector<Arc> needed = report.generators;
  for (const Arc &a : standard_basis_arcs(2 * n, cm.host_anchors()))
    needed.push_back(a);
  for (const Arc &a : needed)
    if (!fits(a))
      throw InsufficientWindow("arc " + to_string(a) + " lies outside window " +
                               std::to_string(window));

  const EulerOracle oracle(2 * n, window);
  const GroupPresentation &g = oracle.presentation();
  const auto r = static_cast<Eigen::Index>(g.free_rank);
  const auto t = static_cast<Eigen::Index>(g.invariant_factors.size());

  // generator classes next to the torsion relations of the oracle group
  IntMatrix m = IntMatrix::Zero(r + t, n + t);
  report.generators_nonzero = true;
  for (int i = 0; i < n; ++i) {
    const QuotientClass &c = oracle.class_of(report.generators[static_cast<std::size_t>(i)]);
    report.generators_nonzero = report.generators_nonzero && !c.is_zero();
    for (Eigen::Index k = 0; k < r; ++k)
      m(k, i) = c.free(k);
    for (Eigen::Index k = 0; k < t; ++k)
      m(r + k, i) = c.torsion(k);
  }
  for (Eigen::Index k = 0; k < t; ++k)
    m(r + k, n + k) = g.invariant_factors[static_cast<std::size_t>(k)];

  report.expected = compute_k0_completed(n);
  report.oracle = cokernel_presentation(m);
  report.match = report.expected == report.oracle;
  return report;
}

} // namespace arck0
