#pragma once

#include "arck0/arc.hpp"
#include "arck0/completion.hpp"
#include "arck0/k0.hpp"
#include "arck0/presentation.hpp"
#include "arck0/tilting.hpp"

#include <json.hpp>

#include <string>

namespace arck0 {

using Json = nlohmann::ordered_json;

/// [segment, offset]
Json to_json(const PointIndex &p);
/// [[s, o], [s, o]], lower endpoint first.
Json to_json(const Arc &a);
/// {"free_rank": r, "invariant_factors": [...]}
Json to_json(const GroupPresentation &g);
/// {n, anchors, depth, arcs, names}
Json to_json(const StandardTilting &t);
/// Row-major array of rows.
Json to_json(const IntMatrix &m);
Json to_json(const K0Report &r);
Json to_json(const FOracleReport &r);
Json to_json(const ExchangePair &e, const StandardTilting &t);

/// Throws std::invalid_argument on malformed input.
PointIndex point_from_json(const Json &j);
Arc arc_from_json(const Json &j);
GroupPresentation presentation_from_json(const Json &j);

/// Parses "[[0,-2],[0,0]]"; throws std::invalid_argument.
Arc parse_arc(const std::string &text);

} // namespace arck0
