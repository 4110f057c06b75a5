#pragma once

#include <json.hpp>

#include "htarea/flags.hpp"
#include "htarea/projective.hpp"

namespace htarea::io {

nlohmann::json to_json(const std::vector<Vec2>& pts);
std::vector<Vec2> points_from_json(const nlohmann::json& j);

// array of 3x2 matrices, row-major: [[e1x, e2x], [e1y, e2y], [e1z, e2z]]
nlohmann::json to_json(const FlagTuple& tuple);
FlagTuple flag_tuple_from_json(const nlohmann::json& j);

// {"inner": [[x,y],...], "outer": [[x,y],...], "incidence": [e,...]}
nlohmann::json to_json(const InscribedPair& pair);
InscribedPair inscribed_pair_from_json(const nlohmann::json& j);

}  // namespace htarea::io
