#pragma once

#include <string>

#include "json.hpp"
#include "lgw/scattering.hpp"
#include "lgw/toricgeo.hpp"
#include "lgw/tropical.hpp"

namespace lgw {

using json = nlohmann::json;

// Series serialize as {"order": N, "terms": [{"c": "p/q", "z": [a,b], "t": [p,q]}, ...]}
// in the canonical term order.
json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

json wall_to_json(const Wall& w);
json diagram_to_json(const ScatteringDiagram& d);
// Wall functions in the JSON are read as exact polynomials; order_override,
// when >= 0, replaces the stored truncation order.
ScatteringDiagram diagram_from_json(const json& j, int order_override = -1);

json fan_to_json(const Fan& f);
Fan fan_from_json(const json& j);

// Tropical enumeration config:
// {"leaves": [{"dir": [a,b], "w": k, "fixed": bool}, ...], "points": n,
//  "point_coords": [["p/q","p/q"], ...]?, "line_offsets": ["p/q", ...]?, "seed": n?}
struct TropicalConfig {
    DegreeData degree;
    bool has_instance = false;
    GenericInstance instance;
    bool has_seed = false;
    std::uint64_t seed = default_seed;
};
TropicalConfig tropical_config_from_json(const json& j);

json enum_result_to_json(const EnumResult& r);

json check_report_to_json(const CheckReport& rep);

}  // namespace lgw
