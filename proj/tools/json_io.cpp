#include "json_io.hpp"

#include "htarea/errors.hpp"

namespace htarea::io {

using nlohmann::json;

json to_json(const std::vector<Vec2>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back({p.x, p.y});
    return a;
}

std::vector<Vec2> points_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("expected an array of [x, y] points");
    std::vector<Vec2> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw DomainError("a point must be [x, y]");
        out.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return out;
}

json to_json(const FlagTuple& tuple) {
    json a = json::array();
    for (const auto& f : tuple.flags()) {
        const Vec3 e1 = f.e1(), e2 = f.e2();
        a.push_back({{e1.x, e2.x}, {e1.y, e2.y}, {e1.z, e2.z}});
    }
    return a;
}

FlagTuple flag_tuple_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("a flag tuple is an array of 3x2 matrices");
    std::vector<Flag> flags;
    for (const auto& m : j) {
        if (!m.is_array() || m.size() != 3) throw DomainError("a flag is a 3x2 matrix");
        double v[3][2];
        for (int r = 0; r < 3; ++r) {
            if (!m[r].is_array() || m[r].size() != 2) throw DomainError("a flag is a 3x2 matrix");
            v[r][0] = m[r][0].get<double>();
            v[r][1] = m[r][1].get<double>();
        }
        flags.emplace_back(Vec3{v[0][0], v[1][0], v[2][0]}, Vec3{v[0][1], v[1][1], v[2][1]});
    }
    return FlagTuple(std::move(flags));
}

json to_json(const InscribedPair& pair) {
    return {{"inner", to_json(pair.inner().vertices())},
            {"outer", to_json(pair.outer().vertices())},
            {"incidence", pair.incidence()}};
}

InscribedPair inscribed_pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("inner") || !j.contains("outer"))
        throw DomainError("an inscribed pair needs \"inner\" and \"outer\"");
    ConvexPolygon inner(points_from_json(j.at("inner")));
    ConvexPolygon outer(points_from_json(j.at("outer")));
    if (!j.contains("incidence")) return InscribedPair(std::move(inner), std::move(outer));
    return InscribedPair(std::move(inner), std::move(outer),
                         j.at("incidence").get<std::vector<std::size_t>>());
}

}  // namespace htarea::io
