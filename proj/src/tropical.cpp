#include "lgw/tropical.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace lgw {

void DegreeData::validate() const {
    if (leaves.size() < 3) throw input_error("DegreeData: at least 3 unbounded ends required");
    if (point_count < 0) throw input_error("DegreeData: negative point count");
    long sx = 0, sy = 0;
    for (const auto& leaf : leaves) {
        if (!is_primitive(leaf.dir)) throw input_error("DegreeData: leaf direction not primitive");
        if (leaf.weight < 1) throw input_error("DegreeData: leaf weight must be >= 1");
        if (leaf.weight > 1000000 || std::abs(leaf.dir.x) > 1000 || std::abs(leaf.dir.y) > 1000)
            throw input_error("DegreeData: leaf data out of the supported range");
        sx += leaf.weight * leaf.dir.x;
        sy += leaf.weight * leaf.dir.y;
    }
    if (sx != 0 || sy != 0)
        throw input_error("DegreeData: weighted ends do not sum to zero");
}

std::vector<std::vector<int>> TropicalCurve::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count()));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[static_cast<std::size_t>(edges[e].first)].push_back(static_cast<int>(e));
        adj[static_cast<std::size_t>(edges[e].second)].push_back(static_cast<int>(e));
    }
    return adj;
}

IVec2 TropicalCurve::outgoing(int node, int e) const {
    const auto& [u, v] = edges[static_cast<std::size_t>(e)];
    const IVec2& w = edge_wdir[static_cast<std::size_t>(e)];
    if (u == node) return w;
    if (v == node) return -w;
    throw input_error("TropicalCurve: edge not incident to node");
}

bool check_balancing(const TropicalCurve& c) {
    auto adj = c.adjacency();
    for (int node = c.leaf_count(); node < c.node_count(); ++node) {
        long sx = 0, sy = 0;
        for (int e : adj[static_cast<std::size_t>(node)]) {
            IVec2 w = c.outgoing(node, e);
            sx += w.x;
            sy += w.y;
        }
        if (sx != 0 || sy != 0) return false;
    }
    return true;
}

long vertex_multiplicity(const TropicalCurve& c, int internal_node) {
    if (c.is_leaf_node(internal_node) || internal_node >= c.node_count())
        throw input_error("vertex_multiplicity: not an internal vertex");
    auto adj = c.adjacency();
    const auto& incident = adj[static_cast<std::size_t>(internal_node)];
    if (incident.size() != 3)
        throw input_error("vertex_multiplicity: vertex is not trivalent");
    IVec2 w0 = c.outgoing(internal_node, incident[0]);
    IVec2 w1 = c.outgoing(internal_node, incident[1]);
    IVec2 w2 = c.outgoing(internal_node, incident[2]);
    long d01 = std::abs(cross(w0, w1));
    long d12 = std::abs(cross(w1, w2));
    long d20 = std::abs(cross(w2, w0));
    if (d01 != d12 || d12 != d20)
        throw computation_error("vertex_multiplicity: pair choice is not well-defined");
    return d01;
}

Rational curve_multiplicity(const TropicalCurve& c) {
    Rational mult(1);
    for (int node = c.leaf_count(); node < c.node_count(); ++node)
        mult *= Rational(vertex_multiplicity(c, node));
    for (const auto& leaf : c.leaves)
        if (leaf.fixed_line) mult /= Rational(leaf.weight);
    return mult;
}

namespace {

Rational rat_cross(const RatPoint& p, const IVec2& u) {
    return p.x * Rational(u.y) - p.y * Rational(u.x);
}

RatPoint sub(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }

// displacement = lambda * w expected; returns false if not parallel
bool parallel_ratio(const RatPoint& disp, const IVec2& w, Rational& lambda) {
    if (w.x != 0)
        lambda = disp.x / Rational(w.x);
    else
        lambda = disp.y / Rational(w.y);
    return disp.x == lambda * Rational(w.x) && disp.y == lambda * Rational(w.y);
}

}  // namespace

bool validate_curve(const TropicalCurve& c, const GenericInstance& inst) {
    // tree shape: connected with V + L - 1 edges
    if (c.edges.size() + 1 != static_cast<std::size_t>(c.node_count())) return false;
    std::vector<int> seen(static_cast<std::size_t>(c.node_count()), 0);
    auto adj = c.adjacency();
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int node = stack.back();
        stack.pop_back();
        for (int e : adj[static_cast<std::size_t>(node)]) {
            int other = c.edges[static_cast<std::size_t>(e)].first == node
                            ? c.edges[static_cast<std::size_t>(e)].second
                            : c.edges[static_cast<std::size_t>(e)].first;
            if (!seen[static_cast<std::size_t>(other)]) {
                seen[static_cast<std::size_t>(other)] = 1;
                stack.push_back(other);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
    if (!check_balancing(c)) return false;

    auto pos = [&](int node) { return c.positions[static_cast<std::size_t>(node - c.leaf_count())]; };

    // bounded edges have strictly positive length along their direction
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        const auto& [u, v] = c.edges[e];
        if (c.is_leaf_node(u) || c.is_leaf_node(v)) continue;
        Rational lambda;
        if (!parallel_ratio(sub(pos(v), pos(u)), c.edge_wdir[e], lambda)) return false;
        if (!(lambda > Rational(0))) return false;
    }
    // marks sit on their assigned edges
    for (std::size_t j = 0; j < c.marks.size(); ++j) {
        int e = c.mark_edges[j];
        const auto& [u, v] = c.edges[static_cast<std::size_t>(e)];
        int base = c.is_leaf_node(u) ? v : u;
        IVec2 w = c.outgoing(base, e);
        Rational mu;
        if (!parallel_ratio(sub(c.marks[j], pos(base)), w, mu)) return false;
        if (!(mu > Rational(0))) return false;
        if (!c.is_leaf_node(u) && !c.is_leaf_node(v)) {
            Rational lambda;
            parallel_ratio(sub(pos(v), pos(u)), c.edge_wdir[static_cast<std::size_t>(e)], lambda);
            // mu was measured from `base`
            if (!(mu < lambda)) return false;
        }
    }
    // fixed leaves lie on their prescribed lines
    std::size_t fixed_idx = 0;
    for (std::size_t leaf = 0; leaf < c.leaves.size(); ++leaf) {
        if (!c.leaves[leaf].fixed_line) continue;
        int e = -1;
        for (int cand : adj[leaf]) e = cand;
        const auto& [u, v] = c.edges[static_cast<std::size_t>(e)];
        int base = c.is_leaf_node(u) ? v : u;
        if (rat_cross(pos(base), c.leaves[leaf].dir) != inst.line_offsets[fixed_idx]) return false;
        ++fixed_idx;
    }
    return true;
}

// ---- genericity source ----

Rational PointSource::rational() {
    static const long primes[] = {99991, 99989, 99971, 99961, 99929, 99923, 99907, 99901,
                                  99881, 99877, 99871, 99859, 99839, 99833, 99823, 99817};
    std::uniform_int_distribution<long> num(-999983, 999983);
    long n = num(rng_);
    long d = primes[rng_() % 16];
    return Rational(n, d);
}

GenericInstance PointSource::draw(const DegreeData& deg) {
    GenericInstance inst;
    for (int j = 0; j < deg.point_count; ++j) inst.points.push_back(point());
    for (const auto& leaf : deg.leaves)
        if (leaf.fixed_line) inst.line_offsets.push_back(rational());
    return inst;
}

// ---- enumeration ----

namespace {

using Edges = std::vector<std::pair<int, int>>;

// All trivalent trees on L labeled leaves, each exactly once: grow by
// subdividing an edge and hanging the next leaf on the new vertex.
void expand_topologies(Edges& edges, int next_leaf, int L, int next_internal,
                       std::vector<Edges>& out) {
    if (next_leaf == L) {
        out.push_back(edges);
        return;
    }
    std::size_t n_edges = edges.size();
    for (std::size_t e = 0; e < n_edges; ++e) {
        auto [u, v] = edges[e];
        int w = next_internal;
        edges[e] = {u, w};
        edges.push_back({w, v});
        edges.push_back({next_leaf, w});
        expand_topologies(edges, next_leaf + 1, L, next_internal + 1, out);
        edges.pop_back();
        edges.pop_back();
        edges[e] = {u, v};
    }
}

std::vector<Edges> topologies(int L) {
    Edges star{{0, L}, {1, L}, {2, L}};
    std::vector<Edges> out;
    expand_topologies(star, 3, L, L + 1, out);
    return out;
}

// Weighted directions forced by the leaves through balancing; false when some
// internal edge direction vanishes (the type carries no curve).
bool propagate_directions(const DegreeData& deg, const Edges& edges, std::vector<IVec2>& wdir) {
    int L = static_cast<int>(deg.leaves.size());
    int nodes = L + (L - 2);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[static_cast<std::size_t>(edges[e].first)].push_back(static_cast<int>(e));
        adj[static_cast<std::size_t>(edges[e].second)].push_back(static_cast<int>(e));
    }
    wdir.assign(edges.size(), IVec2{0, 0});
    std::vector<char> known(edges.size(), 0);
    std::vector<int> unknown_count(static_cast<std::size_t>(nodes), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& [u, v] = edges[e];
        int leaf = u < L ? u : (v < L ? v : -1);
        if (leaf >= 0) {
            const LeafSpec& end = deg.leaves[static_cast<std::size_t>(leaf)];
            IVec2 w{static_cast<int>(end.weight * end.dir.x),
                    static_cast<int>(end.weight * end.dir.y)};
            // oriented first -> second; pointing into the leaf means w * dir
            wdir[e] = (v == leaf) ? w : -w;
            known[e] = 1;
        }
    }
    for (int node = L; node < nodes; ++node)
        for (int e : adj[static_cast<std::size_t>(node)])
            if (!known[static_cast<std::size_t>(e)]) ++unknown_count[static_cast<std::size_t>(node)];

    std::vector<int> queue;
    for (int node = L; node < nodes; ++node)
        if (unknown_count[static_cast<std::size_t>(node)] == 1) queue.push_back(node);
    while (!queue.empty()) {
        int node = queue.back();
        queue.pop_back();
        if (unknown_count[static_cast<std::size_t>(node)] != 1) continue;
        long sx = 0, sy = 0;
        int pending = -1;
        for (int e : adj[static_cast<std::size_t>(node)]) {
            if (!known[static_cast<std::size_t>(e)]) {
                pending = e;
                continue;
            }
            const auto& [u, v] = edges[static_cast<std::size_t>(e)];
            const IVec2& w = wdir[static_cast<std::size_t>(e)];
            sx += (u == node) ? w.x : -w.x;
            sy += (u == node) ? w.y : -w.y;
        }
        IVec2 out{static_cast<int>(-sx), static_cast<int>(-sy)};
        if (out.x == 0 && out.y == 0) return false;
        const auto& [u, v] = edges[static_cast<std::size_t>(pending)];
        wdir[static_cast<std::size_t>(pending)] = (u == node) ? out : -out;
        known[static_cast<std::size_t>(pending)] = 1;
        unknown_count[static_cast<std::size_t>(node)] = 0;
        int other = (u == node) ? v : u;
        if (--unknown_count[static_cast<std::size_t>(other)] == 1) queue.push_back(other);
    }
    for (char k : known)
        if (!k) return false;
    // final balance at every internal vertex
    for (int node = L; node < nodes; ++node) {
        long sx = 0, sy = 0;
        for (int e : adj[static_cast<std::size_t>(node)]) {
            const auto& [u, v] = edges[static_cast<std::size_t>(e)];
            const IVec2& w = wdir[static_cast<std::size_t>(e)];
            sx += (u == node) ? w.x : -w.x;
            sy += (u == node) ? w.y : -w.y;
        }
        if (sx != 0 || sy != 0) return false;
    }
    return true;
}

enum class SolveStatus { unique, inconsistent, underdetermined };

// Gaussian elimination on the augmented matrix (n equations, n unknowns).
SolveStatus solve_square(std::vector<std::vector<Rational>> rows, std::size_t n,
                         std::vector<Rational>& solution) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = Rational(1) / rows[rank][col];
        for (std::size_t j = col; j <= n; ++j) rows[rank][j] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col];
            for (std::size_t j = col; j <= n; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][n].is_zero()) return SolveStatus::inconsistent;
    if (rank < n) return SolveStatus::underdetermined;
    solution.assign(n, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) solution[pivot_col[r]] = rows[r][n];
    return SolveStatus::unique;
}

std::string point_key(const RatPoint& p) { return p.x.str() + ";" + p.y.str(); }

// Canonical key of the embedded curve, independent of leaf labeling and mark
// bookkeeping: the multiset of embedded edges.
std::string curve_key(const TropicalCurve& c) {
    std::vector<std::string> parts;
    auto pos = [&](int node) { return c.positions[static_cast<std::size_t>(node - c.leaf_count())]; };
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        auto [u, v] = c.edges[e];
        IVec2 w = c.edge_wdir[e];
        std::ostringstream os;
        if (c.is_leaf_node(u) || c.is_leaf_node(v)) {
            int leaf = c.is_leaf_node(u) ? u : v;
            int base = c.is_leaf_node(u) ? v : u;
            IVec2 out = c.outgoing(base, static_cast<int>(e));
            os << "L|" << point_key(pos(base)) << "|" << out.x << "," << out.y << "|"
               << c.leaves[static_cast<std::size_t>(leaf)].fixed_line;
        } else {
            RatPoint a = pos(u), b = pos(v);
            if (point_key(b) < point_key(a)) {
                std::swap(a, b);
                w = -w;
            }
            os << "B|" << point_key(a) << "|" << point_key(b) << "|" << w.x << "," << w.y;
        }
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) key += p + "#";
    return key;
}

}  // namespace

EnumResult enumerate_curves(const DegreeData& deg, const GenericInstance& inst,
                            const EnumOptions& opt) {
    deg.validate();
    std::size_t L = deg.leaves.size();
    if (L > opt.max_leaves)
        throw input_error("enumerate_curves: " + std::to_string(L) +
                          " ends exceed the bound max_leaves = " + std::to_string(opt.max_leaves));
    std::size_t fixed_count = 0;
    for (const auto& leaf : deg.leaves) fixed_count += leaf.fixed_line ? 1u : 0u;
    std::size_t conditions = fixed_count + static_cast<std::size_t>(deg.point_count);
    if (conditions != L - 1)
        throw input_error("enumerate_curves: " + std::to_string(conditions) +
                          " conditions do not cut the " + std::to_string(L - 1) +
                          "-dimensional family to points");
    if (inst.points.size() != static_cast<std::size_t>(deg.point_count) ||
        inst.line_offsets.size() != fixed_count)
        throw input_error("enumerate_curves: generic data sizes do not match the degree data");

    std::size_t V = L - 2;
    std::size_t unknowns = 2 * V;

    EnumResult result;
    result.used_instance = inst;
    std::map<std::string, std::size_t> seen;

    for (const Edges& edges : topologies(static_cast<int>(L))) {
        std::vector<IVec2> wdir;
        if (!propagate_directions(deg, edges, wdir)) continue;

        std::size_t n_edges = edges.size();
        std::vector<std::size_t> assignment(static_cast<std::size_t>(deg.point_count), 0);
        while (true) {
            // build the square system for this mark assignment
            std::vector<std::vector<Rational>> rows;
            auto var = [&](int node, int coord) {
                return static_cast<std::size_t>(2 * (node - static_cast<int>(L)) + coord);
            };
            auto blank_row = [&] { return std::vector<Rational>(unknowns + 1, Rational(0)); };

            for (std::size_t e = 0; e < n_edges; ++e) {
                const auto& [u, v] = edges[e];
                if (u < static_cast<int>(L) || v < static_cast<int>(L)) continue;
                const IVec2& w = wdir[e];
                auto row = blank_row();
                row[var(v, 0)] += Rational(w.y);
                row[var(u, 0)] -= Rational(w.y);
                row[var(v, 1)] -= Rational(w.x);
                row[var(u, 1)] += Rational(w.x);
                rows.push_back(std::move(row));
            }
            std::size_t fixed_idx = 0;
            for (std::size_t leaf = 0; leaf < L; ++leaf) {
                if (!deg.leaves[leaf].fixed_line) continue;
                int e = -1;
                for (std::size_t cand = 0; cand < n_edges; ++cand)
                    if (edges[cand].first == static_cast<int>(leaf) ||
                        edges[cand].second == static_cast<int>(leaf))
                        e = static_cast<int>(cand);
                const auto& [u, v] = edges[static_cast<std::size_t>(e)];
                int base = (u == static_cast<int>(leaf)) ? v : u;
                const IVec2& dir = deg.leaves[leaf].dir;
                auto row = blank_row();
                row[var(base, 0)] += Rational(dir.y);
                row[var(base, 1)] -= Rational(dir.x);
                row[unknowns] = inst.line_offsets[fixed_idx++];
                rows.push_back(std::move(row));
            }
            for (std::size_t j = 0; j < assignment.size(); ++j) {
                std::size_t e = assignment[j];
                const auto& [u, v] = edges[e];
                const RatPoint& P = inst.points[j];
                IVec2 dir;
                int base;
                if (u < static_cast<int>(L) || v < static_cast<int>(L)) {
                    int leaf = u < static_cast<int>(L) ? u : v;
                    base = u < static_cast<int>(L) ? v : u;
                    dir = deg.leaves[static_cast<std::size_t>(leaf)].dir;
                } else {
                    base = u;
                    dir = wdir[e];
                }
                auto row = blank_row();
                row[var(base, 0)] += Rational(dir.y);
                row[var(base, 1)] -= Rational(dir.x);
                row[unknowns] = rat_cross(P, dir);
                rows.push_back(std::move(row));
            }

            std::vector<Rational> solution;
            // a singular system is point-independent here: the type has no
            // rigid curve (a positive-dimensional family or nothing), so it
            // contributes zero rather than triggering a re-draw
            if (solve_square(std::move(rows), unknowns, solution) == SolveStatus::unique) {
                TropicalCurve curve;
                curve.leaves = deg.leaves;
                curve.edges = edges;
                curve.edge_wdir = wdir;
                for (std::size_t vtx = 0; vtx < V; ++vtx)
                    curve.positions.push_back({solution[2 * vtx], solution[2 * vtx + 1]});
                for (std::size_t j = 0; j < assignment.size(); ++j) {
                    curve.mark_edges.push_back(static_cast<int>(assignment[j]));
                    curve.marks.push_back(inst.points[j]);
                }

                bool valid = true;
                auto pos = [&](int node) {
                    return curve.positions[static_cast<std::size_t>(node - static_cast<int>(L))];
                };
                for (std::size_t e = 0; e < n_edges && valid; ++e) {
                    const auto& [u, v] = edges[e];
                    if (u < static_cast<int>(L) || v < static_cast<int>(L)) continue;
                    Rational lambda;
                    parallel_ratio(sub(pos(v), pos(u)), wdir[e], lambda);
                    if (lambda.is_zero())
                        throw degenerate_draw(
                        "enumerate_curves: zero-length bounded edge; re-draw the conditions");
                    if (lambda < Rational(0)) valid = false;
                }
                for (std::size_t j = 0; j < assignment.size() && valid; ++j) {
                    std::size_t e = assignment[j];
                    const auto& [u, v] = edges[e];
                    int base = (u < static_cast<int>(L)) ? v : u;
                    IVec2 w = (u < static_cast<int>(L) || v < static_cast<int>(L))
                                  ? curve.outgoing(base, static_cast<int>(e))
                                  : wdir[e];
                    Rational mu;
                    if (!parallel_ratio(sub(inst.points[j], pos(base)), w, mu)) {
                        valid = false;
                        break;
                    }
                    if (mu.is_zero()) throw degenerate_draw(
                        "enumerate_curves: mark on a vertex; re-draw the conditions");
                    if (mu < Rational(0)) {
                        valid = false;
                        break;
                    }
                    if (u >= static_cast<int>(L) && v >= static_cast<int>(L)) {
                        Rational lambda;
                        parallel_ratio(sub(pos(v), pos(u)), wdir[e], lambda);
                        if (mu == lambda)
                            throw degenerate_draw(
                        "enumerate_curves: mark on a vertex; re-draw the conditions");
                        if (mu > lambda) valid = false;
                    }
                }

                if (valid) {
                    Rational mult = curve_multiplicity(curve);
                    std::string key = curve_key(curve);
                    auto it = seen.find(key);
                    if (it == seen.end()) {
                        seen.emplace(key, result.curves.size());
                        result.curves.push_back({std::move(curve), mult});
                        result.total += mult;
                    } else if (result.curves[it->second].multiplicity != mult) {
                        throw computation_error(
                            "enumerate_curves: one curve reached with two multiplicities");
                    }
                }
            }

            // next mark assignment
            std::size_t j = 0;
            while (j < assignment.size() && ++assignment[j] == n_edges) {
                assignment[j] = 0;
                ++j;
            }
            if (j == assignment.size()) break;
        }
    }
    return result;
}

EnumResult enumerate_curves(const DegreeData& deg, PointSource& source, const EnumOptions& opt) {
    std::string last;
    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        GenericInstance inst = source.draw(deg);
        try {
            return enumerate_curves(deg, inst, opt);
        } catch (const degenerate_draw& e) {
            last = e.what();
        }
    }
    throw computation_error("enumerate_curves: degenerate draws exhausted " +
                            std::to_string(opt.max_attempts) + " attempts (" + last + ")");
}

DegreeData p2_degree_data(int d) {
    if (d < 1) throw input_error("p2_degree_data: degree must be >= 1");
    DegreeData deg;
    deg.leaves = {{{-1, 0}, d, false}, {{0, -1}, d, false}, {{1, 1}, d, false}};
    deg.point_count = 2;
    return deg;
}

DegreeData f2_degree_data(int d, const std::vector<long>& m) {
    if (d < 1) throw input_error("f2_degree_data: degree must be >= 1");
    if (m.size() != static_cast<std::size_t>(d))
        throw input_error("f2_degree_data: partition must have d entries");
    long total = 0;
    for (int l = 1; l <= d; ++l) {
        if (m[static_cast<std::size_t>(l) - 1] < 0)
            throw input_error("f2_degree_data: negative partition entry");
        total += l * m[static_cast<std::size_t>(l) - 1];
    }
    if (total != d) throw input_error("f2_degree_data: partition entries do not sum to d");
    DegreeData deg;
    deg.leaves.push_back({{0, -1}, 2L * d, false});
    deg.leaves.push_back({{1, 2}, d, false});
    for (int l = 1; l <= d; ++l)
        for (long k = 0; k < m[static_cast<std::size_t>(l) - 1]; ++k)
            deg.leaves.push_back({{-1, 0}, l, true});
    deg.point_count = 1;
    return deg;
}

Rational count_p2_toric(int d, std::uint64_t seed) {
    PointSource source(seed);
    return enumerate_curves(p2_degree_data(d), source).total;
}

Rational count_f2(int d, const std::vector<long>& m, std::uint64_t seed) {
    PointSource source(seed);
    return enumerate_curves(f2_degree_data(d, m), source).total;
}

}  // namespace lgw
