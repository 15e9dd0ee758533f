#include "arck0/serialize.hpp"

#include <stdexcept>

namespace arck0 {

namespace {

Json big_to_json(const BigInt &x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

} // namespace

Json to_json(const PointIndex &p) { return Json::array({p.segment, p.offset}); }

Json to_json(const Arc &a) { return Json::array({to_json(a.lo()), to_json(a.hi())}); }

Json to_json(const GroupPresentation &g) {
  Json factors = Json::array();
  for (const BigInt &d : g.invariant_factors)
    factors.push_back(big_to_json(d));
  return Json{{"free_rank", g.free_rank}, {"invariant_factors", factors}};
}

Json to_json(const StandardTilting &t) {
  Json anchors = Json::array();
  for (const PointIndex &p : t.anchors())
    anchors.push_back(p.offset);
  Json arcs = Json::array();
  for (const Arc &a : t.arcs())
    arcs.push_back(to_json(a));
  Json names = Json::object();
  for (const auto &[name, index] : t.names())
    names[name] = index;
  return Json{{"n", t.model().num_segments()},
              {"anchors", anchors},
              {"depth", t.depth()},
              {"arcs", arcs},
              {"names", names}};
}

Json to_json(const IntMatrix &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(big_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const K0Report &r) {
  return Json{{"n", r.n},
              {"depth", r.depth},
              {"presentation", to_json(r.presentation)},
              {"basis_size", r.basis_size},
              {"relation_count", r.relation_count},
              {"frontier", r.frontier.size()},
              {"frontier_excess", r.frontier_excess},
              {"consistent", r.consistent}};
}

Json to_json(const FOracleReport &r) {
  Json gens = Json::array();
  for (const Arc &a : r.generators)
    gens.push_back(to_json(a));
  return Json{{"expected", to_json(r.expected)},
              {"oracle", to_json(r.oracle)},
              {"match", r.match},
              {"generators", gens}};
}

Json to_json(const ExchangePair &e, const StandardTilting &t) {
  auto side = [&](const std::vector<Arc> &arcs) {
    Json out = Json::array();
    for (const Arc &a : arcs) {
      auto idx = t.find(a);
      out.push_back(Json{{"arc", to_json(a)}, {"name", idx ? t.label(*idx) : ""}});
    }
    return out;
  };
  return Json{{"m", to_json(e.m)},
              {"m_star", to_json(e.m_star)},
              {"b_m", side(e.b_m)},
              {"b_m_star", side(e.b_m_star)}};
}

PointIndex point_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    throw std::invalid_argument("expected a point [segment, offset], got " + j.dump());
  return {j[0].get<int>(), j[1].get<std::int64_t>()};
}

Arc arc_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected an arc [[s,o],[s,o]], got " + j.dump());
  auto a = Arc::make(point_from_json(j[0]), point_from_json(j[1]));
  if (!a)
    throw std::invalid_argument("degenerate arc " + j.dump());
  return *a;
}

GroupPresentation presentation_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("free_rank") || !j.contains("invariant_factors"))
    throw std::invalid_argument("not a presentation: " + j.dump());
  GroupPresentation g;
  g.free_rank = j.at("free_rank").get<std::size_t>();
  for (const Json &d : j.at("invariant_factors"))
    g.invariant_factors.push_back(
        d.is_string() ? BigInt(d.get<std::string>()) : BigInt(d.get<std::int64_t>()));
  return g;
}

Arc parse_arc(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw std::invalid_argument("cannot parse arc '" + text + "': " + e.what());
  }
  return arc_from_json(j);
}

} // namespace arck0
