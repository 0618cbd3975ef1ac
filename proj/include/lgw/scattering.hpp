#pragma once

#include <optional>
#include <vector>

#include "lgw/series.hpp"

namespace lgw {

struct IVec2 {
    int x = 0;
    int y = 0;
    friend bool operator==(const IVec2&, const IVec2&) = default;
    IVec2 operator-() const { return {-x, -y}; }
};

long dot(const IVec2& u, const IVec2& v);
long cross(const IVec2& u, const IVec2& v);
bool is_primitive(const IVec2& v);
IVec2 primitive_part(const IVec2& v);  // v / gcd, v != 0

// n = (-m2, m1): the 90-degree rotation, primitive and orthogonal to m.
IVec2 primitive_normal(const IVec2& m);

// Total angular order on nonzero directions, counterclockwise starting just
// above the positive x-axis. Used to canonicalize ray listings.
bool angle_less(const IVec2& u, const IVec2& v);

// A wall through the origin: a full line or a ray in the primitive direction
// `dir`. The attached function is a unit congruent to 1 mod (t1,t2) whose
// z-exponents are positive integer multiples of `dir`.
struct Wall {
    IVec2 dir;
    bool is_line = false;
    TruncatedSeries f;

    Wall(IVec2 direction, bool line, TruncatedSeries fn);
};

class ScatteringDiagram {
  public:
    explicit ScatteringDiagram(int order) : order_(order) {}

    int order() const { return order_; }
    const std::vector<Wall>& walls() const { return walls_; }

    // Merges multiplicatively into an existing wall of the same direction;
    // a line and a ray may not share a direction.
    void add_wall(Wall w);

    const Wall* find(const IVec2& dir) const;

  private:
    int order_;
    std::vector<Wall> walls_;
};

// The coordinate images of a ring automorphism: x -> image_x, y -> image_y,
// each of the form coordinate * (unit series).
struct AutoAction {
    TruncatedSeries image_x;
    TruncatedSeries image_y;

    static AutoAction identity(int order);
    bool is_identity() const;
};

// Crossing automorphism of a single wall:
//   x -> x * f^(sign*<n,(1,0)>),  y -> y * f^(sign*<n,(0,1)>),  n = primitive_normal(dir).
AutoAction cross(const Wall& w, int sign);

// Term-wise action of a wall crossing on an arbitrary series:
// z^(a,b) -> z^(a,b) * f^(sign*<n,(a,b)>).
TruncatedSeries wall_apply(const Wall& w, int sign, const TruncatedSeries& s);

// Generic substitution z^(a,b) -> image_x^a * image_y^b (t-variables fixed).
TruncatedSeries apply(const AutoAction& act, const TruncatedSeries& s);

// (a o b): first b, then a.
AutoAction compose(const AutoAction& a, const AutoAction& b);

// Path-ordered product of all wall crossings along one counterclockwise loop
// around the origin. Lines are crossed twice with opposite signs. The working
// order defaults to the diagram order.
AutoAction loop_product(const ScatteringDiagram& d);
AutoAction loop_product(const ScatteringDiagram& d, int working_order);

// Order-by-order consistency completion: inserts rays until the loop product
// is the identity mod t-degree N+1.
ScatteringDiagram complete(const ScatteringDiagram& d, int N);

// Function of the wall in direction m, or the constant series 1 if absent.
TruncatedSeries ray_function(const ScatteringDiagram& d, const IVec2& m);

// Initial data for the nodal-cubic pair: lines (-1,0) with 1 + t1*x^-1 and
// (1,3) with 1 + t2*x*y^3, at truncation order N >= 1.
ScatteringDiagram build_nodal_cubic_diagram(int N);

// N_d for d = 1..D_max, read off the central (0,1) ray of the completed
// nodal-cubic diagram: d*N_d = [t1^d t2^d y^(3d)] log f_central.
std::vector<Rational> nodal_cubic_invariants(int D_max);

}  // namespace lgw
