#include "arck0/k0.hpp"

#include <algorithm>
#include <set>

namespace arck0 {

IntMatrix relation_matrix(const StandardTilting &t,
                          const std::vector<Relation> &relations) {
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(t.size()),
                                static_cast<Eigen::Index>(relations.size()));
  for (std::size_t j = 0; j < relations.size(); ++j)
    for (Eigen::Index i = 0; i < relations[j].coefficients.size(); ++i)
      m(i, static_cast<Eigen::Index>(j)) = relations[j].coefficients(i);
  return m;
}

K0Report compute_k0_cn(int n, std::vector<std::int64_t> anchor_offsets, int depth) {
  if (depth < 2)
    throw InsufficientDepth("K0 computation needs leapfrog depth >= 2, got " +
                            std::to_string(depth));
  const StandardTilting t = StandardTilting::build(n, std::move(anchor_offsets), depth);
  const std::vector<Relation> relations = palu_relations(t);

  K0Report report;
  report.n = n;
  report.depth = depth;
  report.basis_size = t.size();
  report.relation_count = relations.size();
  report.presentation = cokernel_presentation(relation_matrix(t, relations));

  std::set<std::size_t> sources;
  for (const Relation &r : relations)
    sources.insert(r.source);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (sources.count(i))
      continue;
    report.frontier.push_back(i);
    const bool mentioned = std::any_of(relations.begin(), relations.end(),
                                       [&](const Relation &r) {
                                         return r.coefficients(static_cast<Eigen::Index>(i)) != 0;
                                       });
    if (!mentioned)
      ++report.frontier_excess;
  }
  report.consistent =
      report.presentation.is_free() &&
      report.presentation.free_rank == static_cast<std::size_t>(n) + report.frontier_excess;
  return report;
}

EulerOracle::EulerOracle(int n, int window) : model_(n), window_(window) {
  if (window < 2)
    throw InsufficientWindow("oracle window must be >= 2, got " +
                             std::to_string(window));

  // marked points in cyclic order
  std::vector<PointIndex> points;
  for (int s = 0; s < n; ++s)
    for (std::int64_t o = -window; o <= window; ++o)
      points.push_back({s, o});
  const std::size_t count = points.size();

  std::vector<std::int32_t> id(count * count, -1);
  auto arc_id = [&](std::size_t i, std::size_t j) -> std::int32_t {
    return i < j ? id[i * count + j] : id[j * count + i];
  };
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (auto a = Arc::make(points[i], points[j])) {
        id[i * count + j] = static_cast<std::int32_t>(arcs_.size());
        index_.emplace(*a, arcs_.size());
        arcs_.push_back(*a);
      }

  RelationLattice lattice(arcs_.size());
  auto term = [](std::int32_t g, int c) {
    return Term{static_cast<std::uint32_t>(g), BigInt(c)};
  };

  // A -> 0 -> Sigma A -> Sigma A
  const std::size_t per_segment = static_cast<std::size_t>(2 * window + 1);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      const std::int32_t a = arc_id(i, j);
      if (a < 0 || i % per_segment == 0 || j % per_segment == 0)
        continue;
      lattice.add(normalized({term(a, 1), term(arc_id(i - 1, j - 1), 1)}));
      ++relation_count_;
    }

  // crossing diagonals {v0,v2}, {v1,v3} and both induced triangles
  for (std::size_t v0 = 0; v0 < count; ++v0)
    for (std::size_t v1 = v0 + 1; v1 < count; ++v1)
      for (std::size_t v2 = v1 + 1; v2 < count; ++v2)
        for (std::size_t v3 = v2 + 1; v3 < count; ++v3) {
          const std::int32_t m = arc_id(v0, v2);
          const std::int32_t nn = arc_id(v1, v3);
          SparseRelation base{term(m, -1), term(nn, -1)};
          for (const auto &[x, y] : {std::pair{arc_id(v1, v2), arc_id(v3, v0)},
                                     std::pair{arc_id(v0, v1), arc_id(v2, v3)}}) {
            SparseRelation r = base;
            if (x >= 0)
              r.push_back(term(x, 1));
            if (y >= 0)
              r.push_back(term(y, 1));
            lattice.add(normalized(std::move(r)));
            ++relation_count_;
          }
        }

  quotient_ = lattice.quotient();
}

std::optional<std::size_t> EulerOracle::find(const Arc &a) const {
  auto it = index_.find(a);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

const QuotientClass &EulerOracle::class_of(const Arc &a) const {
  auto idx = find(a);
  if (!idx)
    throw std::out_of_range("arc " + to_string(a) + " outside oracle window " +
                            std::to_string(window_));
  return quotient_.class_of(*idx);
}

QuotientClass EulerOracle::class_of(
    const std::vector<std::pair<std::int64_t, Arc>> &combination) const {
  std::vector<std::pair<BigInt, QuotientClass>> terms;
  for (const auto &[k, a] : combination)
    terms.emplace_back(BigInt(k), class_of(a));
  return quotient_.combine(terms);
}

std::optional<IntVector>
EulerOracle::coordinates(const Arc &a, std::span<const Arc> basis_arcs) const {
  const GroupPresentation &g = presentation();
  const auto k = static_cast<Eigen::Index>(basis_arcs.size());
  if (!g.is_free() || g.free_rank != basis_arcs.size())
    return std::nullopt;
  IntMatrix b(k, k);
  for (Eigen::Index j = 0; j < k; ++j)
    b.col(j) = class_of(basis_arcs[static_cast<std::size_t>(j)]).free;
  const SmithNormalForm<BigInt> snf(b, ComputeU | ComputeV);
  // unimodular basis change only
  for (const BigInt &d : snf.diagonal())
    if (d != 1)
      return std::nullopt;
  const BigVector x = multiply(snf.matrixV(), multiply(snf.matrixU(), class_of(a).free));
  IntVector out(k);
  for (Eigen::Index i = 0; i < k; ++i)
    out(i) = static_cast<std::int64_t>(x(i));
  return out;
}

FountainClass parity_class(const PointIndex &anchor, int i) {
  if (i < 1)
    throw std::invalid_argument("fountain index must be >= 1");
  int w = 1; // [W_1]
  for (int j = 1; j < i; ++j)
    w += (j % 2 == 0) ? 1 : -1;
  return {Arc(anchor, {anchor.segment, anchor.offset + i + 1}), w};
}

std::vector<std::string> standard_basis_labels(int n) {
  std::vector<std::string> out{"Y1"};
  for (int j = 2; j <= n; ++j)
    out.push_back("X" + std::to_string(j));
  return out;
}

namespace {

std::int64_t anchor_of(std::span<const std::int64_t> anchors, int segment) {
  return anchors.empty() ? 0 : anchors[static_cast<std::size_t>(segment)];
}

void require_basis(int n, std::span<const std::int64_t> anchors) {
  if (n < 2)
    throw std::invalid_argument("the {Y1, X2, ..., Xn} basis needs n >= 2");
  if (!anchors.empty() && anchors.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("expected one anchor offset per segment");
}

} // namespace

std::vector<Arc> standard_basis_arcs(int n, std::span<const std::int64_t> anchors) {
  require_basis(n, anchors);
  const PointIndex z1{0, anchor_of(anchors, 0)};
  std::vector<Arc> out{Arc(z1, {1, anchor_of(anchors, 1) - 1})};
  for (int j = 2; j <= n; ++j)
    out.emplace_back(z1, PointIndex{j - 1, anchor_of(anchors, j - 1)});
  return out;
}

K0Class class_same_segment(int n, const Arc &arc,
                           std::span<const std::int64_t> anchors) {
  require_basis(n, anchors);
  if (!arc.same_segment())
    throw std::invalid_argument("arc " + to_string(arc) + " crosses segments");
  const int segment = arc.lo().segment;
  if (segment >= n)
    throw std::out_of_range("arc " + to_string(arc) + " outside the model");

  K0Class out{standard_basis_labels(n), IntVector::Zero(n)};
  const std::int64_t interior = arc.hi().offset - arc.lo().offset - 1;
  if (interior % 2 == 0)
    return out;

  const std::int64_t shift = anchor_of(anchors, segment) - 2 - arc.lo().offset;
  const std::int64_t sign = (shift % 2 == 0) ? 1 : -1;
  // index 0 is Y1, index j-1 is Xj
  if (segment == 0) {
    out.coefficients(0) = sign;
    out.coefficients(1) = sign;
  } else {
    const int i = segment + 1;
    out.coefficients(i - 1) += 2 * sign;
    out.coefficients(1) -= sign;
    out.coefficients(0) -= sign;
  }
  return out;
}

} // namespace arck0
