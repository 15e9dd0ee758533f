#pragma once

#include "arck0/arc.hpp"
#include "arck0/circle_model.hpp"
#include "arck0/integer_matrix.hpp"
#include "arck0/k0.hpp"
#include "arck0/presentation.hpp"

#include <cstdint>
#include <vector>

namespace arck0 {

/// The completion with n accumulation points seen through its host: the
/// 2n-segment model whose arcs on segments 0, 2, 4, ... get killed.
/// Anchor z_j sits on host segment j-1.
class CompletionModel {
public:
  /// Throws std::invalid_argument for n < 1 or a wrong number of anchors.
  explicit CompletionModel(int n, std::vector<std::int64_t> host_anchor_offsets = {});

  int n() const { return n_; }
  const CircleModel &host() const { return host_; }
  const std::vector<int> &kernel_segments() const { return kernel_segments_; }
  const std::vector<std::int64_t> &host_anchors() const { return anchors_; }
  /// z_{2i-1}, i = 1..n.
  PointIndex kernel_anchor(int i) const;

private:
  int n_;
  CircleModel host_;
  std::vector<int> kernel_segments_;
  std::vector<std::int64_t> anchors_;
};

/// {z_{2i-1}^{--}, z_{2i-1}}, one interior point. Throws std::out_of_range
/// unless 1 <= i <= n.
Arc kernel_generator_arc(const CompletionModel &cm, int i);

bool is_kernel_object(const CompletionModel &cm, const Arc &a);

/// Classes of the kernel generators over (Y1, X2, ..., X_2n), one column each.
IntMatrix f_matrix(int n);

/// Z^2n / im f.
GroupPresentation compute_k0_completed(int n);

struct FOracleReport {
  GroupPresentation expected;
  GroupPresentation oracle;
  bool match = false;
  std::vector<Arc> generators;
  /// Every generator has a nonzero class in the oracle quotient.
  bool generators_nonzero = false;
};

/// Recomputes the cokernel of f from the Euler-relation oracle on the host.
/// Throws InsufficientWindow when the window misses a generator or basis arc.
FOracleReport verify_f_oracle(int n, int window);
FOracleReport verify_f_oracle(const CompletionModel &cm, int window);

} // namespace arck0
