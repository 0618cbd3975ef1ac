#pragma once

#include <array>
#include <string>
#include <vector>

#include "lgw/scattering.hpp"  // IVec2, cross, angle_less

namespace lgw {

// Fan of a smooth complete toric surface: primitive rays in strictly
// increasing counterclockwise order, consecutive rays spanning unimodular
// cones. Optional string markers decorate rays (the blow-up crosses of the
// toric-model figures).
struct Fan {
    std::vector<IVec2> rays;
    std::vector<std::string> marks;  // empty, or one entry per ray

    Fan(std::vector<IVec2> r, std::vector<std::string> m = {});

    std::size_t size() const { return rays.size(); }
};

// Self-intersection of each toric divisor, from rho_{i-1} + a_i rho_i +
// rho_{i+1} = 0.
std::vector<long> self_intersections(const Fan& f);

// Reconstructs a fan with the given self-intersection sequence by propagating
// rho_1 = (1,0), rho_2 = (0,1); rejects sequences that do not close up.
Fan fan_from_self_intersections(const std::vector<long>& a);

// Inserts rho_i + rho_{i+1} into the corner between consecutive rays i and
// i+1 (indices mod n).
Fan blow_up(const Fan& f, std::size_t corner);

// Removes ray i; requires its self-intersection to be -1.
Fan blow_down(const Fan& f, std::size_t ray);

// Applies M (det 1) to every ray, keeping the cyclic order.
Fan apply_sl2(const Fan& f, const std::array<long, 4>& m);  // {a,b,c,d} rows

// True when some M in SL(2,Z) and cyclic rotation map one ray list onto the
// other (markers ignored).
bool sl2_equivalent(const Fan& f, const Fan& g);

// ---- Chow verification for the two-fold blow-up of the plane ----

struct CheckLine {
    std::string name;
    std::string detail;
    bool pass = false;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// Verifies the divisor-class relations of the two-fold blow-up of the plane
// in the basis (H, e1, e2) with pairing diag(1,-1,-1).
CheckReport chow_verify_blowup_plane();

// A prelog class on the degenerate surface: a class on the Hirzebruch side in
// the basis (section D2, fiber F2) and a class on the blown-up-quadric side in
// the basis (H1, H2, L), matching along the gluing divisor.
struct PrelogClass {
    std::array<long, 2> f2_side;  // coefficients of (D2, F2)
    std::array<long, 3> y_side;   // coefficients of (H1, H2, L)
};

// Intersection degree of a class with the gluing divisor, on each side.
long prelog_matching_degree_f2(const PrelogClass& c);
long prelog_matching_degree_y(const PrelogClass& c);

// Computes the specialization of the hyperplane class through the generator
// images, checking additivity, the matching condition, and the generator
// products; returns the class alongside the report.
std::pair<PrelogClass, CheckReport> specialize_H();

}  // namespace lgw
