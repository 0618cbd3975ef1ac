#include "lgw/toricgeo.hpp"

#include <algorithm>
#include <cstdlib>

namespace lgw {

namespace {

std::string ray_str(const IVec2& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

}  // namespace

Fan::Fan(std::vector<IVec2> r, std::vector<std::string> m) : rays(std::move(r)), marks(std::move(m)) {
    std::size_t n = rays.size();
    if (n < 3) throw input_error("Fan: a complete fan needs at least 3 rays");
    if (marks.empty()) marks.resize(n);
    if (marks.size() != n) throw input_error("Fan: marker list length mismatch");
    for (const auto& v : rays)
        if (!is_primitive(v)) throw input_error("Fan: ray " + ray_str(v) + " is not primitive");
    for (std::size_t i = 0; i < n; ++i) {
        const IVec2& u = rays[i];
        const IVec2& v = rays[(i + 1) % n];
        if (cross(u, v) != 1)
            throw input_error("Fan: consecutive rays " + ray_str(u) + ", " + ray_str(v) +
                              " do not span a unimodular counterclockwise cone");
    }
    // single wrap: from the angular minimum the cyclic list must be strictly increasing
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (angle_less(rays[i], rays[k])) k = i;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!angle_less(rays[(k + i) % n], rays[(k + i + 1) % n]))
            throw input_error("Fan: rays are not in strictly increasing cyclic order");
}

std::vector<long> self_intersections(const Fan& f) {
    std::size_t n = f.size();
    std::vector<long> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const IVec2& prev = f.rays[(i + n - 1) % n];
        const IVec2& cur = f.rays[i];
        const IVec2& next = f.rays[(i + 1) % n];
        // prev + a*cur + next = 0; cur is primitive so some component is nonzero
        long sx = prev.x + next.x;
        long sy = prev.y + next.y;
        long a;
        if (cur.x != 0)
            a = -sx / cur.x;
        else
            a = -sy / cur.y;
        if (a * cur.x != -sx || a * cur.y != -sy)
            throw computation_error("self_intersections: ray relation fails at index " +
                                    std::to_string(i));
        out[i] = a;
    }
    return out;
}

Fan fan_from_self_intersections(const std::vector<long>& a) {
    std::size_t n = a.size();
    if (n < 3) throw input_error("fan_from_self_intersections: need at least 3 entries");
    std::vector<IVec2> rays(n);
    rays[0] = {1, 0};
    rays[1] = {0, 1};
    auto checked = [](long v) {
        if (v > 1000000 || v < -1000000)
            throw input_error("fan_from_self_intersections: ray coordinates overflow");
        return static_cast<int>(v);
    };
    for (std::size_t i = 2; i < n; ++i) {
        rays[i] = {checked(-static_cast<long>(rays[i - 2].x) - a[i - 1] * rays[i - 1].x),
                   checked(-static_cast<long>(rays[i - 2].y) - a[i - 1] * rays[i - 1].y)};
    }
    // closing relations through the wrap-around
    const IVec2& last = rays[n - 1];
    const IVec2& prev = rays[n - 2];
    bool closes = prev.x + a[n - 1] * last.x + rays[0].x == 0 &&
                  prev.y + a[n - 1] * last.y + rays[0].y == 0 &&
                  last.x + a[0] * rays[0].x + rays[1].x == 0 &&
                  last.y + a[0] * rays[0].y + rays[1].y == 0;
    if (!closes)
        throw input_error("fan_from_self_intersections: sequence does not close into a fan");
    try {
        return Fan(std::move(rays));
    } catch (const input_error& e) {
        throw input_error(std::string("fan_from_self_intersections: ") + e.what());
    }
}

Fan blow_up(const Fan& f, std::size_t corner) {
    std::size_t n = f.size();
    if (corner >= n) throw input_error("blow_up: corner index out of range");
    std::vector<IVec2> rays = f.rays;
    std::vector<std::string> marks = f.marks;
    IVec2 fresh{rays[corner].x + rays[(corner + 1) % n].x,
                rays[corner].y + rays[(corner + 1) % n].y};
    if (std::abs(fresh.x) > 100000000 || std::abs(fresh.y) > 100000000)
        throw input_error("blow_up: ray coordinates overflow");
    rays.insert(rays.begin() + static_cast<long>(corner) + 1, fresh);
    marks.insert(marks.begin() + static_cast<long>(corner) + 1, "");
    return Fan(std::move(rays), std::move(marks));
}

Fan blow_down(const Fan& f, std::size_t ray) {
    std::size_t n = f.size();
    if (ray >= n) throw input_error("blow_down: ray index out of range");
    if (self_intersections(f)[ray] != -1)
        throw input_error("blow_down: ray " + ray_str(f.rays[ray]) +
                          " is not a (-1)-curve");
    std::vector<IVec2> rays = f.rays;
    std::vector<std::string> marks = f.marks;
    rays.erase(rays.begin() + static_cast<long>(ray));
    marks.erase(marks.begin() + static_cast<long>(ray));
    return Fan(std::move(rays), std::move(marks));
}

Fan apply_sl2(const Fan& f, const std::array<long, 4>& m) {
    if (m[0] * m[3] - m[1] * m[2] != 1) throw input_error("apply_sl2: matrix determinant is not 1");
    auto checked = [](long v) {
        if (v > 100000000 || v < -100000000)
            throw input_error("apply_sl2: ray coordinates overflow");
        return static_cast<int>(v);
    };
    std::vector<IVec2> rays;
    rays.reserve(f.size());
    for (const auto& v : f.rays)
        rays.push_back({checked(m[0] * v.x + m[1] * v.y), checked(m[2] * v.x + m[3] * v.y)});
    return Fan(std::move(rays), f.marks);
}

bool sl2_equivalent(const Fan& f, const Fan& g) {
    std::size_t n = f.size();
    if (g.size() != n) return false;
    for (std::size_t r = 0; r < n; ++r) {
        // M maps (f0, f1) to (g_r, g_{r+1}); both pairs are unimodular bases
        const IVec2 &f0 = f.rays[0], &f1 = f.rays[1];
        const IVec2 &g0 = g.rays[r], &g1 = g.rays[(r + 1) % n];
        // M = [g0 g1] * [f0 f1]^-1 with det[f0 f1] = 1
        long a = g0.x * static_cast<long>(f1.y) - g1.x * static_cast<long>(f0.y);
        long b = g1.x * static_cast<long>(f0.x) - g0.x * static_cast<long>(f1.x);
        long c = g0.y * static_cast<long>(f1.y) - g1.y * static_cast<long>(f0.y);
        long d = g1.y * static_cast<long>(f0.x) - g0.y * static_cast<long>(f1.x);
        if (a * d - b * c != 1) continue;
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i) {
            const IVec2& v = f.rays[i];
            const IVec2& w = g.rays[(r + i) % n];
            all = (a * v.x + b * v.y == w.x) && (c * v.x + d * v.y == w.y);
        }
        if (all) return true;
    }
    return false;
}

// ---- Chow checks ----

namespace {

using Cls3 = std::array<long, 3>;  // coefficients of (H, e1, e2)

long pair3(const Cls3& u, const Cls3& v) {
    return u[0] * v[0] - u[1] * v[1] - u[2] * v[2];  // diag(1,-1,-1)
}

Cls3 add3(const Cls3& u, const Cls3& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2]}; }

std::string cls_str(const Cls3& u) {
    return "(" + std::to_string(u[0]) + "," + std::to_string(u[1]) + "," + std::to_string(u[2]) + ")";
}

}  // namespace

CheckReport chow_verify_blowup_plane() {
    const Cls3 H{1, 0, 0};
    const Cls3 D1{1, -1, 0};        // H - e1
    const Cls3 L{1, -1, -1};        // H - e1 - e2
    const Cls3 D2{2, -1, -1};       // 2H - e1 - e2
    const Cls3 F1{0, 1, -1};        // e1 - e2
    const Cls3 F2{0, 0, 1};         // e2

    CheckReport rep;
    auto rel = [&](const std::string& name, const Cls3& lhs, const Cls3& rhs) {
        rep.lines.push_back({name, cls_str(lhs) + " vs " + cls_str(rhs), lhs == rhs});
    };
    auto prod = [&](const std::string& name, const Cls3& u, const Cls3& v, long expected) {
        long got = pair3(u, v);
        rep.lines.push_back({name, std::to_string(got) + " == " + std::to_string(expected),
                             got == expected});
    };

    rel("[D1] = [L] + [F2]", D1, add3(L, F2));
    rel("[H] = [D1] + [F1] + [F2]", H, add3(add3(D1, F1), F2));
    rel("[D2] = [H] + [L]", D2, add3(H, L));
    prod("H.D1 = 1", H, D1, 1);
    prod("H.L = 1", H, L, 1);
    prod("L^2 = -1", L, L, -1);
    prod("H^2 = 1", H, H, 1);
    prod("D1^2 = 0", D1, D1, 0);
    prod("D2^2 = 2", D2, D2, 2);
    prod("D2.L = 0", D2, L, 0);
    return rep;
}

// ---- Prelog specialization ----

namespace {

// Hirzebruch side, basis (D2 section, F2 fiber): D2^2 = 2, D2.F2 = 1, F2^2 = 0.
long pair_f2(const std::array<long, 2>& u, const std::array<long, 2>& v) {
    return 2 * u[0] * v[0] + u[0] * v[1] + u[1] * v[0];
}

// Blown-up-quadric side, basis (H1, H2, L): H1.H2 = 1, L^2 = -1, rest 0.
long pair_y(const Cls3& u, const Cls3& v) {
    return u[0] * v[1] + u[1] * v[0] - u[2] * v[2];
}

PrelogClass add_prelog(const PrelogClass& u, const PrelogClass& v) {
    return {{u.f2_side[0] + v.f2_side[0], u.f2_side[1] + v.f2_side[1]},
            {u.y_side[0] + v.y_side[0], u.y_side[1] + v.y_side[1], u.y_side[2] + v.y_side[2]}};
}

long prelog_pair(const PrelogClass& u, const PrelogClass& v) {
    return pair_f2(u.f2_side, v.f2_side) + pair_y(u.y_side, v.y_side);
}

}  // namespace

long prelog_matching_degree_f2(const PrelogClass& c) {
    return pair_f2(c.f2_side, {0, 1});  // against the fiber F2, the gluing divisor
}

long prelog_matching_degree_y(const PrelogClass& c) {
    return pair_y(c.y_side, {1, 0, 0});  // against the gluing divisor of class H1
}

std::pair<PrelogClass, CheckReport> specialize_H() {
    // generator images of the specialization map
    const PrelogClass sD1{{0, 1}, {0, 0, 0}};            // (F2, 0)
    const PrelogClass sF1{{1, -2}, {0, 1, 0}};           // (D2, H2) - 2 (F2, 0)
    const PrelogClass sF2{{0, 1}, {0, 0, -1}};           // (F2, 0) - (0, L)
    const PrelogClass expected{{1, 0}, {0, 1, -1}};      // (D2, H2 - L)

    const PrelogClass gen_D2H2{{1, 0}, {0, 1, 0}};
    const PrelogClass gen_F2{{0, 1}, {0, 0, 0}};
    const PrelogClass gen_H1{{0, 0}, {1, 0, 0}};         // the identified representative of (F2,0)
    const PrelogClass gen_L{{0, 0}, {0, 0, 1}};

    PrelogClass sH = add_prelog(add_prelog(sD1, sF1), sF2);

    CheckReport rep;
    auto check = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.lines.push_back({name, detail, pass});
    };
    check("sigma([H]) = [(D2, H2-L)]",
          sH.f2_side == expected.f2_side && sH.y_side == expected.y_side,
          "additivity over sigma([D1]) + sigma([F1]) + sigma([F2])");
    for (const auto& [name, cls] :
         {std::pair<std::string, const PrelogClass*>{"sigma([D1])", &sD1},
          {"sigma([F1])", &sF1},
          {"sigma([F2])", &sF2},
          {"sigma([H])", &sH}}) {
        long lhs = prelog_matching_degree_f2(*cls);
        long rhs = prelog_matching_degree_y(*cls);
        check("matching condition for " + name, lhs == rhs,
              std::to_string(lhs) + " == " + std::to_string(rhs));
    }
    check("[(D2,H2)].[(F2,0)] = 1", prelog_pair(gen_D2H2, gen_F2) == 1,
          std::to_string(prelog_pair(gen_D2H2, gen_F2)));
    check("[(D2,H2)].[(0,L)] = 0", prelog_pair(gen_D2H2, gen_L) == 0,
          std::to_string(prelog_pair(gen_D2H2, gen_L)));
    check("[(F2,0)].[(0,L)] = 0", prelog_pair(gen_F2, gen_L) == 0,
          std::to_string(prelog_pair(gen_F2, gen_L)));
    // the gluing identifies (F2,0) with (0,H1); their products against the
    // section class must agree
    check("identification (F2,0) = (0,H1) respects products",
          prelog_pair(gen_F2, gen_D2H2) == prelog_pair(gen_H1, gen_D2H2) &&
              prelog_pair(gen_F2, gen_L) == prelog_pair(gen_H1, gen_L),
          "pairings against (D2,H2) and (0,L)");
    return {sH, rep};
}

}  // namespace lgw
