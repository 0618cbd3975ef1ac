#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lgw/rational.hpp"
#include "lgw/scattering.hpp"  // IVec2

namespace lgw {

struct RatPoint {
    Rational x;
    Rational y;
    friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

// An unbounded end of a tropical curve: primitive direction, weight, and
// whether its supporting line is prescribed (a fixed contact point on the
// corresponding boundary divisor).
struct LeafSpec {
    IVec2 dir;
    long weight = 1;
    bool fixed_line = false;
};

// Degree data for an enumeration problem: the multiset of unbounded ends plus
// the number of generic interior point conditions.
struct DegreeData {
    std::vector<LeafSpec> leaves;
    int point_count = 0;

    void validate() const;  // primitive directions, weights >= 1, ends sum to zero
};

// One concrete draw of the generic conditions: interior points, and one line
// offset per fixed leaf (in leaf order). A leaf in direction u is constrained
// to the line { P : cross(P, u) = offset }.
struct GenericInstance {
    std::vector<RatPoint> points;
    std::vector<Rational> line_offsets;
};

// A parametrized genus-0 tropical curve: a trivalent tree with nodes
// 0..L-1 the leaves (unbounded ends) and L..L+V-1 the internal vertices,
// every edge carrying the weighted direction oriented first -> second, and
// exact rational positions for the internal vertices.
struct TropicalCurve {
    std::vector<LeafSpec> leaves;
    std::vector<std::pair<int, int>> edges;
    std::vector<IVec2> edge_wdir;
    std::vector<RatPoint> positions;  // indexed by node - leaf_count()
    std::vector<int> mark_edges;      // edge carrying each point condition
    std::vector<RatPoint> marks;

    int leaf_count() const { return static_cast<int>(leaves.size()); }
    int internal_count() const { return static_cast<int>(positions.size()); }
    int node_count() const { return leaf_count() + internal_count(); }
    bool is_leaf_node(int node) const { return node < leaf_count(); }

    std::vector<std::vector<int>> adjacency() const;  // node -> incident edge ids
    // weighted direction of edge e as seen leaving `node`
    IVec2 outgoing(int node, int e) const;
};

// Balancing at every internal vertex: the outgoing weighted directions sum to 0.
bool check_balancing(const TropicalCurve& c);

// Weight of a trivalent vertex: w_i w_j |det(u_i, u_j)| = |det(W_i, W_j)| for
// any pair of its weighted edge directions; checks pair-independence.
long vertex_multiplicity(const TropicalCurve& c, int internal_node);

// Product of the vertex weights, divided by the weight of each fixed leaf.
Rational curve_multiplicity(const TropicalCurve& c);

// Full embedding validation: tree shape, balancing, strictly positive bounded
// edges, marks in edge interiors, fixed leaves on their lines.
bool validate_curve(const TropicalCurve& c, const GenericInstance& inst);

struct WeightedCurve {
    TropicalCurve curve;
    Rational multiplicity;
};

struct EnumResult {
    std::vector<WeightedCurve> curves;
    Rational total = Rational(0);
    GenericInstance used_instance;  // the conditions the curves were solved against
};

struct EnumOptions {
    std::size_t max_leaves = 10;
    int max_attempts = 5;
};

// Thrown when a draw produces a boundary-touching configuration (a mark on a
// vertex, a zero-length edge); the seeded driver re-draws.
struct degenerate_draw : computation_error {
    explicit degenerate_draw(const std::string& msg) : computation_error(msg) {}
};

// Deterministic source of generic rational points and line offsets.
class PointSource {
  public:
    explicit PointSource(std::uint64_t seed) : rng_(seed) {}

    Rational rational();
    RatPoint point() { return {rational(), rational()}; }
    GenericInstance draw(const DegreeData& deg);

  private:
    std::mt19937_64 rng_;
};

inline constexpr std::uint64_t default_seed = 1000003;

// Exhaustive enumeration over trivalent tree topologies and point-mark
// assignments with the given generic data. Throws degenerate_draw when the
// conditions touch a boundary stratum.
EnumResult enumerate_curves(const DegreeData& deg, const GenericInstance& inst,
                            const EnumOptions& opt = {});

// Seeded driver: draws conditions, retrying degenerate draws up to
// opt.max_attempts times.
EnumResult enumerate_curves(const DegreeData& deg, PointSource& source,
                            const EnumOptions& opt = {});

// Degree data of the plane with its triangle of lines: ends d*(-1,0),
// d*(0,-1), d*(1,1), two interior points.
DegreeData p2_degree_data(int d);

// Degree data on the Hirzebruch surface for contact profile m along the fixed
// fiber: ends (0,-1) weight 2d, (1,2) weight d, and m_l fixed ends (-1,0) of
// weight l; one interior point.
DegreeData f2_degree_data(int d, const std::vector<long>& m);

Rational count_p2_toric(int d, std::uint64_t seed = default_seed);
Rational count_f2(int d, const std::vector<long>& m, std::uint64_t seed = default_seed);

}  // namespace lgw
