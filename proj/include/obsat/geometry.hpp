#pragma once

// Exact plane geometry: arbitrary-precision rational points and the
// orientation predicate. No floating point, no epsilons.

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace obsat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExactPoint {
    Rational x;
    Rational y;

    bool operator==(const ExactPoint& o) const { return x == o.x && y == o.y; }
};

enum class Orientation { CW, CCW, COLLINEAR };

// Sign of det [[ax,bx,cx],[ay,by,cy],[1,1,1]]: negative means abc is a
// clockwise triple, positive counter-clockwise.
inline Rational orient_det(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline Orientation orient(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    Rational d = orient_det(a, b, c);
    if (d < 0) return Orientation::CW;
    if (d > 0) return Orientation::CCW;
    return Orientation::COLLINEAR;
}

// ---------------------------------------------------------------------------
// Point-set JSON: {"points": [[x_num,x_den,y_num,y_den],...]}, with the
// integer shorthand [[x,y],...] accepted on input.

inline Rational rational_from_json(const nlohmann::json& num, const nlohmann::json& den) {
    if (!num.is_number_integer() || !den.is_number_integer())
        throw GeometryError("rational components must be integers: " + num.dump() + "/" +
                            den.dump());
    BigInt d(den.get<long long>());
    if (d == 0) throw GeometryError("zero denominator in point coordinates");
    return Rational(BigInt(num.get<long long>()), d);
}

inline ExactPoint point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || (j.size() != 2 && j.size() != 4))
        throw GeometryError("point must be [x,y] or [x_num,x_den,y_num,y_den]: " + j.dump());
    if (j.size() == 2)
        return {rational_from_json(j[0], 1), rational_from_json(j[1], 1)};
    return {rational_from_json(j[0], j[1]), rational_from_json(j[2], j[3])};
}

inline long long json_int(const BigInt& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw GeometryError("coordinate too large for JSON output");
    return v.convert_to<long long>();
}

inline nlohmann::json point_to_json(const ExactPoint& p) {
    return {json_int(numerator(p.x)), json_int(denominator(p.x)),
            json_int(numerator(p.y)), json_int(denominator(p.y))};
}

inline std::string serialize_point_set(const std::vector<ExactPoint>& pts) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (const auto& p : pts) j["points"].push_back(point_to_json(p));
    return j.dump();
}

inline std::vector<ExactPoint> parse_point_set(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GeometryError(std::string("point-set JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw GeometryError("point-set JSON must be an object with a \"points\" array");
    std::vector<ExactPoint> pts;
    for (const auto& p : j["points"]) pts.push_back(point_from_json(p));
    return pts;
}

}  // namespace obsat
