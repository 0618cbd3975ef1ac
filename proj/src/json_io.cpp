#include "lgw/json_io.hpp"

namespace lgw {

namespace {

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw input_error(std::string("json: missing integer field '") + key + "'");
    return j[key].get<int>();
}

const json& get_field(const json& j, const char* key) {
    if (!j.contains(key)) throw input_error(std::string("json: missing field '") + key + "'");
    return j[key];
}

IVec2 vec_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw input_error("json: expected an integer pair");
    long long a = j[0].get<long long>();
    long long b = j[1].get<long long>();
    if (a > 100000000 || a < -100000000 || b > 100000000 || b < -100000000)
        throw input_error("json: integer pair out of the supported range");
    return {static_cast<int>(a), static_cast<int>(b)};
}

}  // namespace

json series_to_json(const TruncatedSeries& s) {
    json terms = json::array();
    for (const auto& [m, c] : s.terms()) {
        terms.push_back({{"c", c.str()}, {"z", {m.a, m.b}}, {"t", {m.p, m.q}}});
    }
    return {{"order", s.order()}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const json& j) {
    TruncatedSeries s(get_int(j, "order"));
    if (!j.contains("terms") || !j["terms"].is_array())
        throw input_error("json: series needs a 'terms' array");
    for (const auto& t : j["terms"]) {
        if (!t.contains("c") || !t["c"].is_string())
            throw input_error("json: series term needs a string coefficient 'c'");
        IVec2 z = vec_from_json(get_field(t, "z"));
        IVec2 tt = vec_from_json(get_field(t, "t"));
        if (tt.x < 0 || tt.y < 0) throw input_error("json: negative t-exponent");
        Rational c = Rational::from_string(t["c"].get<std::string>());
        s = s + TruncatedSeries::monomial(c, {z.x, z.y, tt.x, tt.y}, s.order());
    }
    return s;
}

json wall_to_json(const Wall& w) {
    return {{"dir", {w.dir.x, w.dir.y}}, {"line", w.is_line}, {"f", series_to_json(w.f)}};
}

json diagram_to_json(const ScatteringDiagram& d) {
    json walls = json::array();
    for (const auto& w : d.walls()) walls.push_back(wall_to_json(w));
    return {{"order", d.order()}, {"walls", std::move(walls)}};
}

ScatteringDiagram diagram_from_json(const json& j, int order_override) {
    int order = order_override >= 0 ? order_override : get_int(j, "order");
    ScatteringDiagram d(order);
    if (!j.contains("walls") || !j["walls"].is_array())
        throw input_error("json: diagram needs a 'walls' array");
    for (const auto& wj : j["walls"]) {
        IVec2 dir = vec_from_json(get_field(wj, "dir"));
        if (!wj.contains("line") || !wj["line"].is_boolean())
            throw input_error("json: wall needs a boolean 'line' flag");
        // wall functions are taken as exact: terms are re-seated at the
        // diagram order, dropping only what the truncation cannot hold
        TruncatedSeries f = series_from_json(get_field(wj, "f"));
        TruncatedSeries at_order(order);
        for (const auto& [m, c] : f.terms())
            at_order = at_order + TruncatedSeries::monomial(c, m, order);
        d.add_wall(Wall(dir, wj["line"].get<bool>(), at_order));
    }
    return d;
}

json fan_to_json(const Fan& f) {
    json rays = json::array();
    for (const auto& r : f.rays) rays.push_back({r.x, r.y});
    return {{"rays", std::move(rays)}, {"marks", f.marks}};
}

Fan fan_from_json(const json& j) {
    if (!j.contains("rays") || !j["rays"].is_array())
        throw input_error("json: fan needs a 'rays' array");
    std::vector<IVec2> rays;
    for (const auto& rj : j["rays"]) rays.push_back(vec_from_json(rj));
    std::vector<std::string> marks;
    if (j.contains("marks")) {
        if (!j["marks"].is_array()) throw input_error("json: fan marks must be an array");
        for (const auto& mj : j["marks"]) marks.push_back(mj.get<std::string>());
    }
    return Fan(std::move(rays), std::move(marks));
}

TropicalConfig tropical_config_from_json(const json& j) {
    TropicalConfig cfg;
    if (!j.contains("leaves") || !j["leaves"].is_array())
        throw input_error("json: tropical config needs a 'leaves' array");
    for (const auto& lj : j["leaves"]) {
        LeafSpec leaf;
        leaf.dir = vec_from_json(get_field(lj, "dir"));
        leaf.weight = lj.contains("w") ? lj["w"].get<long>() : 1;
        leaf.fixed_line = lj.contains("fixed") && lj["fixed"].get<bool>();
        cfg.degree.leaves.push_back(leaf);
    }
    cfg.degree.point_count = j.contains("points") ? get_int(j, "points") : 0;
    cfg.degree.validate();

    std::size_t fixed_count = 0;
    for (const auto& leaf : cfg.degree.leaves) fixed_count += leaf.fixed_line ? 1u : 0u;

    if (j.contains("point_coords") || j.contains("line_offsets")) {
        cfg.has_instance = true;
        if (j.contains("point_coords")) {
            for (const auto& pj : j["point_coords"]) {
                if (!pj.is_array() || pj.size() != 2)
                    throw input_error("json: point coordinates must be pairs");
                cfg.instance.points.push_back({Rational::from_string(pj[0].get<std::string>()),
                                               Rational::from_string(pj[1].get<std::string>())});
            }
        }
        if (j.contains("line_offsets"))
            for (const auto& oj : j["line_offsets"])
                cfg.instance.line_offsets.push_back(Rational::from_string(oj.get<std::string>()));
        if (cfg.instance.points.size() != static_cast<std::size_t>(cfg.degree.point_count) ||
            cfg.instance.line_offsets.size() != fixed_count)
            throw input_error("json: explicit generic data does not match the degree data");
    }
    if (j.contains("seed")) {
        cfg.has_seed = true;
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    return cfg;
}

json enum_result_to_json(const EnumResult& r) {
    json curves = json::array();
    for (const auto& [curve, mult] : r.curves) {
        json vertices = json::array();
        for (const auto& p : curve.positions) vertices.push_back({p.x.str(), p.y.str()});
        json edges = json::array();
        for (std::size_t e = 0; e < curve.edges.size(); ++e) {
            edges.push_back({{"nodes", {curve.edges[e].first, curve.edges[e].second}},
                             {"wdir", {curve.edge_wdir[e].x, curve.edge_wdir[e].y}}});
        }
        curves.push_back({{"multiplicity", mult.str()},
                          {"vertices", std::move(vertices)},
                          {"edges", std::move(edges)}});
    }
    json points = json::array();
    for (const auto& p : r.used_instance.points) points.push_back({p.x.str(), p.y.str()});
    json offsets = json::array();
    for (const auto& c : r.used_instance.line_offsets) offsets.push_back(c.str());
    return {{"total", r.total.str()},
            {"curve_count", r.curves.size()},
            {"curves", std::move(curves)},
            {"conditions", {{"points", std::move(points)}, {"line_offsets", std::move(offsets)}}}};
}

json check_report_to_json(const CheckReport& rep) {
    json lines = json::array();
    for (const auto& line : rep.lines)
        lines.push_back({{"check", line.name}, {"detail", line.detail}, {"pass", line.pass}});
    return {{"all_pass", rep.all_pass()}, {"checks", std::move(lines)}};
}

}  // namespace lgw
