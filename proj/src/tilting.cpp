#include "arck0/tilting.hpp"

#include <algorithm>
#include <set>

namespace arck0 {

namespace {

std::string leapfrog_name(int k, int t) {
  return "L" + std::to_string(k) + "[" + std::to_string(t) + "]";
}

} // namespace

StandardTilting StandardTilting::build(int n,
                                       std::vector<std::int64_t> anchor_offsets,
                                       int depth) {
  if (n < 1)
    throw std::invalid_argument("number of accumulation points must be >= 1");
  if (depth < 1)
    throw std::invalid_argument("leapfrog depth must be >= 1");
  if (anchor_offsets.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("expected one anchor offset per segment");

  std::vector<PointIndex> anchors;
  for (int s = 0; s < n; ++s)
    anchors.push_back({s, anchor_offsets[s]});
  StandardTilting t(CircleModel(n), anchors, depth);
  const CircleModel &model = t.model_;

  // Leapfrog L_{i+1} grows from the pair (lower, upper) = (z_i, z_{i+1}).
  std::vector<std::pair<PointIndex, PointIndex>> seeds;
  if (n == 1) {
    const PointIndex z = anchors[0];
    t.add("Z1", Arc(model.step(z, -1), model.step(z, 1)));
    seeds.emplace_back(model.step(z, 1), model.step(z, -1));
  } else {
    for (int i = 1; i <= n; ++i) {
      const PointIndex zi = anchors[i - 1];
      const PointIndex znext = anchors[i % n];
      t.add("Z" + std::to_string(i), Arc(zi, znext));
      seeds.emplace_back(zi, znext);
    }
    t.add("X2", Arc(anchors[0], anchors[1]));
    for (int j = 3; j <= n; ++j)
      t.add("X" + std::to_string(j), Arc(anchors[0], anchors[j - 1]));
  }

  for (int i = 1; i <= n; ++i) {
    const int k = i % n + 1;
    const auto [lower, upper] = seeds[i - 1];
    for (int step = 0; step <= 2 * depth; ++step) {
      const std::int64_t m = step / 2;
      const std::int64_t back = m + (step % 2);
      const std::size_t idx = t.add(
          leapfrog_name(k, step),
          Arc(model.step(lower, m), model.step(upper, -back)));
      if (step == 1)
        t.names_["Y" + std::to_string(i)] = idx;
    }
  }

  if (!t.is_non_crossing())
    throw std::logic_error("standard tilting construction produced crossing arcs");
  return t;
}

std::size_t StandardTilting::add(const std::string &name, const Arc &a) {
  auto it = index_.find(a);
  std::size_t idx;
  if (it != index_.end()) {
    idx = it->second;
  } else {
    idx = arcs_.size();
    arcs_.push_back(a);
    index_.emplace(a, idx);
    incident_[a.lo()].push_back(a.hi());
    incident_[a.hi()].push_back(a.lo());
  }
  names_[name] = idx;
  return idx;
}

void StandardTilting::reindex() {
  index_.clear();
  incident_.clear();
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc &a = arcs_[i];
    if (!index_.emplace(a, i).second)
      throw std::logic_error("duplicate arc " + to_string(a));
    incident_[a.lo()].push_back(a.hi());
    incident_[a.hi()].push_back(a.lo());
  }
}

std::optional<std::size_t> StandardTilting::find(std::string_view name) const {
  auto it = names_.find(std::string(name));
  if (it == names_.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> StandardTilting::find(const Arc &a) const {
  auto it = index_.find(a);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::size_t StandardTilting::at(std::string_view name) const {
  if (auto idx = find(name))
    return *idx;
  throw std::out_of_range("no arc named " + std::string(name));
}

std::vector<std::string> StandardTilting::names_of(std::size_t index) const {
  std::vector<std::string> out;
  for (const auto &[name, idx] : names_)
    if (idx == index)
      out.push_back(name);
  return out;
}

std::string StandardTilting::label(std::size_t index) const {
  const auto names = names_of(index);
  if (names.empty())
    return to_string(arc(index));
  // prefer the polygon/fan/Y names over leapfrog positions
  for (const auto &n : names)
    if (n.front() != 'L')
      return n;
  return names.front();
}

bool StandardTilting::linked(const PointIndex &p, const PointIndex &q) const {
  if (p.segment == q.segment && (p.offset - q.offset == 1 || q.offset - p.offset == 1))
    return true;
  auto it = incident_.find(p);
  return it != incident_.end() &&
         std::find(it->second.begin(), it->second.end(), q) != it->second.end();
}

std::pair<std::optional<PointIndex>, std::optional<PointIndex>>
StandardTilting::apexes(std::size_t index) const {
  const Arc &a = arc(index);
  const PointIndex &p = a.lo();
  const PointIndex &q = a.hi();

  std::set<PointIndex> candidates{model_.step(p, -1), model_.step(p, 1)};
  if (auto it = incident_.find(p); it != incident_.end())
    candidates.insert(it->second.begin(), it->second.end());

  std::optional<PointIndex> inside;
  std::optional<PointIndex> outside;
  for (const PointIndex &r : candidates) {
    if (r == q || !linked(r, q))
      continue;
    auto &slot = (p < r && r < q) ? inside : outside;
    if (slot)
      throw std::logic_error("arc " + to_string(a) +
                             " borders two triangles on one side");
    slot = r;
  }
  return {inside, outside};
}

bool StandardTilting::is_interior(std::size_t index) const {
  const auto [inside, outside] = apexes(index);
  return inside.has_value() && outside.has_value();
}

bool StandardTilting::is_non_crossing() const {
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    for (std::size_t j = i + 1; j < arcs_.size(); ++j)
      if (crosses(arcs_[i], arcs_[j]))
        return false;
  return true;
}

bool StandardTilting::same_arcs(const StandardTilting &other) const {
  std::vector<Arc> a = arcs_;
  std::vector<Arc> b = other.arcs_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return model_ == other.model_ && a == b;
}

ExchangePair exchange_pair(const StandardTilting &t, std::size_t m_index) {
  const auto [inside, outside] = t.apexes(m_index);
  if (!inside || !outside)
    throw InsufficientDepth("arc " + t.label(m_index) +
                            " is on the truncation frontier; increase depth");
  const Arc &m = t.arc(m_index);
  const Arc m_star(*inside, *outside);
  auto [forward, backward] = induced_triangles(m, m_star);
  return {m, m_star, std::move(backward.middle), std::move(forward.middle)};
}

std::vector<Relation> palu_relations(const StandardTilting &t) {
  std::vector<Relation> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t.is_interior(i))
      continue;
    const ExchangePair ep = exchange_pair(t, i);
    IntVector r = IntVector::Zero(static_cast<Eigen::Index>(t.size()));
    auto index_of = [&](const Arc &a) {
      auto idx = t.find(a);
      if (!idx)
        throw std::logic_error("exchange term " + to_string(a) +
                               " is not a tilting arc");
      return static_cast<Eigen::Index>(*idx);
    };
    for (const Arc &a : ep.b_m_star)
      r(index_of(a)) += 1;
    for (const Arc &a : ep.b_m)
      r(index_of(a)) -= 1;
    out.push_back({i, std::move(r)});
  }
  return out;
}

StandardTilting mutate(const StandardTilting &t, std::size_t m_index) {
  const ExchangePair ep = exchange_pair(t, m_index);
  StandardTilting out = t;
  out.arcs_[m_index] = ep.m_star;
  out.reindex();
  for (const std::string &name : t.names_of(m_index)) {
    out.names_.erase(name);
    const bool starred = !name.empty() && name.back() == '*';
    out.names_[starred ? name.substr(0, name.size() - 1) : name + "*"] = m_index;
  }
  if (!out.is_non_crossing())
    throw std::logic_error("mutation produced crossing arcs");
  return out;
}

} // namespace arck0
