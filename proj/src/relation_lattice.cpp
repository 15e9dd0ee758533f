#include "arck0/relation_lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arck0 {

SparseRelation normalized(SparseRelation r) {
  std::sort(r.begin(), r.end(), [](const Term &a, const Term &b) {
    return a.generator < b.generator;
  });
  SparseRelation out;
  out.reserve(r.size());
  for (Term &t : r) {
    if (!out.empty() && out.back().generator == t.generator)
      out.back().coefficient += t.coefficient;
    else
      out.push_back(std::move(t));
    if (out.back().coefficient == 0)
      out.pop_back();
  }
  return out;
}

bool QuotientClass::is_zero() const {
  for (Eigen::Index i = 0; i < free.size(); ++i)
    if (free(i) != 0)
      return false;
  for (Eigen::Index i = 0; i < torsion.size(); ++i)
    if (torsion(i) != 0)
      return false;
  return true;
}

void Quotient::reduce_torsion(QuotientClass &c) const {
  const auto &factors = presentation_.invariant_factors;
  for (std::size_t i = 0; i < factors.size(); ++i)
    c.torsion(static_cast<Eigen::Index>(i)) =
        positive_mod(BigInt(c.torsion(static_cast<Eigen::Index>(i))), factors[i]);
}

QuotientClass
Quotient::combine(const std::vector<std::pair<BigInt, QuotientClass>> &terms) const {
  QuotientClass out{
      BigVector::Zero(static_cast<Eigen::Index>(presentation_.free_rank)),
      BigVector::Zero(
          static_cast<Eigen::Index>(presentation_.invariant_factors.size()))};
  for (const auto &[k, c] : terms) {
    if (k == 0)
      continue;
    for (Eigen::Index i = 0; i < out.free.size(); ++i)
      out.free(i) += k * c.free(i);
    for (Eigen::Index i = 0; i < out.torsion.size(); ++i)
      out.torsion(i) += k * c.torsion(i);
  }
  reduce_torsion(out);
  return out;
}

QuotientClass Quotient::class_of(const SparseRelation &combination) const {
  std::vector<std::pair<BigInt, QuotientClass>> terms;
  for (const Term &t : combination)
    terms.emplace_back(t.coefficient, class_of(t.generator));
  return combine(terms);
}

QuotientClass Quotient::negate(const QuotientClass &c) const {
  return combine({{BigInt(-1), c}});
}

RelationLattice::RelationLattice(std::size_t generators)
    : substitution_(generators), users_(generators) {}

SparseRelation RelationLattice::reduce(const SparseRelation &r) const {
  SparseRelation out;
  out.reserve(r.size() * 2);
  for (const Term &t : r) {
    if (t.generator >= substitution_.size())
      throw std::out_of_range("relation mentions generator " +
                              std::to_string(t.generator) + " of " +
                              std::to_string(substitution_.size()));
    const auto &sub = substitution_[t.generator];
    if (!sub) {
      out.push_back(t);
      continue;
    }
    for (const Term &s : *sub)
      out.push_back({s.generator, t.coefficient * s.coefficient});
  }
  return normalized(std::move(out));
}

void RelationLattice::add(const SparseRelation &relation) {
  ++added_;
  SparseRelation reduced = reduce(relation);
  if (reduced.empty())
    return;
  if (!try_eliminate(reduced))
    residual_.push_back(std::move(reduced));
}

bool RelationLattice::try_eliminate(const SparseRelation &reduced) {
  // unit pivot with the fewest dependents keeps fill-in down
  std::optional<std::uint32_t> pivot;
  std::size_t best = 0;
  for (const Term &t : reduced) {
    if (t.coefficient != 1 && t.coefficient != -1)
      continue;
    const std::size_t load = users_[t.generator].size();
    if (!pivot || load < best) {
      pivot = t.generator;
      best = load;
    }
  }
  if (!pivot)
    return false;
  eliminate(*pivot, reduced);
  return true;
}

void RelationLattice::eliminate(std::uint32_t pivot,
                                const SparseRelation &reduced) {
  // c*g_p + rest = 0 with c = +-1  =>  g_p = -c * rest
  BigInt c;
  SparseRelation expr;
  for (const Term &t : reduced) {
    if (t.generator == pivot)
      c = t.coefficient;
    else
      expr.push_back(t);
  }
  for (Term &t : expr)
    t.coefficient *= -c;

  std::vector<std::uint32_t> users;
  users.swap(users_[pivot]);
  std::sort(users.begin(), users.end());
  users.erase(std::unique(users.begin(), users.end()), users.end());
  for (std::uint32_t q : users) {
    auto &sub = substitution_[q];
    if (!sub)
      continue;
    auto it = std::find_if(sub->begin(), sub->end(),
                           [&](const Term &t) { return t.generator == pivot; });
    if (it == sub->end())
      continue;
    const BigInt a = it->coefficient;
    sub->erase(it);
    std::set<std::uint32_t> before;
    for (const Term &t : *sub)
      before.insert(t.generator);
    SparseRelation merged = *sub;
    for (const Term &t : expr)
      merged.push_back({t.generator, a * t.coefficient});
    *sub = normalized(std::move(merged));
    for (const Term &t : *sub)
      if (!before.count(t.generator))
        users_[t.generator].push_back(q);
  }

  for (const Term &t : expr)
    users_[t.generator].push_back(pivot);
  substitution_[pivot] = std::move(expr);
  ++eliminated_;
}

Quotient RelationLattice::quotient() {
  // residual relations may have picked up unit coefficients since they were
  // stored; keep eliminating until none do
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<SparseRelation> pending;
    pending.swap(residual_);
    for (const SparseRelation &r : pending) {
      SparseRelation reduced = reduce(r);
      if (reduced.empty())
        continue;
      if (try_eliminate(reduced))
        progress = true;
      else
        residual_.push_back(std::move(reduced));
    }
  }
  {
    std::vector<SparseRelation> unique;
    std::set<std::vector<std::pair<std::uint32_t, std::string>>> seen;
    for (SparseRelation &r : residual_) {
      r = reduce(r);
      if (r.empty())
        continue;
      std::vector<std::pair<std::uint32_t, std::string>> key;
      for (const Term &t : r)
        key.emplace_back(t.generator, t.coefficient.str());
      if (seen.insert(key).second)
        unique.push_back(std::move(r));
    }
    residual_.swap(unique);
  }

  std::vector<std::uint32_t> core;
  std::vector<Eigen::Index> position(substitution_.size(), -1);
  for (std::uint32_t g = 0; g < substitution_.size(); ++g)
    if (!substitution_[g]) {
      position[g] = static_cast<Eigen::Index>(core.size());
      core.push_back(g);
    }

  IntMatrix dense = IntMatrix::Zero(static_cast<Eigen::Index>(core.size()),
                                    static_cast<Eigen::Index>(residual_.size()));
  for (std::size_t j = 0; j < residual_.size(); ++j)
    for (const Term &t : residual_[j])
      dense(position[t.generator], static_cast<Eigen::Index>(j)) = t.coefficient;

  const SmithNormalForm<BigInt> snf(dense, ComputeU);
  const auto &diag = snf.diagonal();
  Quotient q;
  q.presentation_ = presentation_from_diagonal(core.size(), diag);

  // coordinate i of U*e is free when d_i = 0, torsion when d_i > 1
  std::vector<Eigen::Index> free_rows;
  std::vector<Eigen::Index> torsion_rows;
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(core.size()); ++i) {
    const BigInt d = i < static_cast<Eigen::Index>(diag.size())
                         ? diag[static_cast<std::size_t>(i)]
                         : BigInt(0);
    if (d == 0)
      free_rows.push_back(i);
    else if (d != 1)
      torsion_rows.push_back(i);
  }

  const auto &u = snf.matrixU();
  std::vector<QuotientClass> core_classes(core.size());
  for (std::size_t k = 0; k < core.size(); ++k) {
    QuotientClass c{BigVector(static_cast<Eigen::Index>(free_rows.size())),
                    BigVector(static_cast<Eigen::Index>(torsion_rows.size()))};
    const auto col = static_cast<Eigen::Index>(k);
    for (std::size_t i = 0; i < free_rows.size(); ++i)
      c.free(static_cast<Eigen::Index>(i)) = u(free_rows[i], col);
    for (std::size_t i = 0; i < torsion_rows.size(); ++i)
      c.torsion(static_cast<Eigen::Index>(i)) = u(torsion_rows[i], col);
    q.reduce_torsion(c);
    core_classes[k] = std::move(c);
  }

  q.classes_.resize(substitution_.size());
  for (std::uint32_t g = 0; g < substitution_.size(); ++g) {
    if (!substitution_[g]) {
      q.classes_[g] = core_classes[static_cast<std::size_t>(position[g])];
      continue;
    }
    std::vector<std::pair<BigInt, QuotientClass>> terms;
    for (const Term &t : *substitution_[g])
      terms.emplace_back(t.coefficient,
                         core_classes[static_cast<std::size_t>(position[t.generator])]);
    q.classes_[g] = q.combine(terms);
  }
  return q;
}

} // namespace arck0
