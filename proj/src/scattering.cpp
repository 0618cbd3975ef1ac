#include "lgw/scattering.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lgw {

long dot(const IVec2& u, const IVec2& v) {
    return static_cast<long>(u.x) * v.x + static_cast<long>(u.y) * v.y;
}

long cross(const IVec2& u, const IVec2& v) {
    return static_cast<long>(u.x) * v.y - static_cast<long>(u.y) * v.x;
}

bool is_primitive(const IVec2& v) {
    return std::gcd(std::abs(v.x), std::abs(v.y)) == 1;
}

IVec2 primitive_part(const IVec2& v) {
    int g = std::gcd(std::abs(v.x), std::abs(v.y));
    if (g == 0) throw input_error("primitive_part: zero vector");
    return {v.x / g, v.y / g};
}

IVec2 primitive_normal(const IVec2& m) {
    if (!is_primitive(m)) throw input_error("primitive_normal: vector is not primitive");
    return {-m.y, m.x};
}

bool angle_less(const IVec2& u, const IVec2& v) {
    auto half = [](const IVec2& w) { return (w.y > 0 || (w.y == 0 && w.x > 0)) ? 0 : 1; };
    if (half(u) != half(v)) return half(u) < half(v);
    return cross(u, v) > 0;
}

static std::string dir_str(const IVec2& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

Wall::Wall(IVec2 direction, bool line, TruncatedSeries fn)
    : dir(direction), is_line(line), f(std::move(fn)) {
    if (!is_primitive(dir)) throw input_error("Wall: direction " + dir_str(dir) + " is not primitive");
    if (!f.constant_term().is_one() || !f.unit_t_filtered())
        throw input_error("Wall: function must be congruent to 1 mod (t1,t2)");
    for (const auto& [m, c] : f.terms()) {
        if (m.a == 0 && m.b == 0) continue;
        long k = dir.x != 0 ? m.a / dir.x : m.b / dir.y;
        if (k < 1 || m.a != k * dir.x || m.b != k * dir.y)
            throw input_error("Wall: z-exponent (" + std::to_string(m.a) + "," + std::to_string(m.b) +
                              ") is not a positive multiple of direction " + dir_str(dir));
    }
}

void ScatteringDiagram::add_wall(Wall w) {
    for (auto& existing : walls_) {
        if (existing.dir == w.dir) {
            if (existing.is_line != w.is_line)
                throw computation_error("ScatteringDiagram: a line and a ray share direction " +
                                        dir_str(w.dir));
            existing = Wall(existing.dir, existing.is_line, existing.f * w.f);
            return;
        }
    }
    walls_.push_back(std::move(w));
}

const Wall* ScatteringDiagram::find(const IVec2& dir) const {
    for (const auto& w : walls_)
        if (w.dir == dir) return &w;
    return nullptr;
}

AutoAction AutoAction::identity(int order) {
    return {TruncatedSeries::monomial(Rational(1), ZMonomial::x(), order),
            TruncatedSeries::monomial(Rational(1), ZMonomial::y(), order)};
}

bool AutoAction::is_identity() const {
    return image_x == TruncatedSeries::monomial(Rational(1), ZMonomial::x(), image_x.order()) &&
           image_y == TruncatedSeries::monomial(Rational(1), ZMonomial::y(), image_y.order());
}

TruncatedSeries wall_apply(const Wall& w, int sign, const TruncatedSeries& s) {
    IVec2 n = primitive_normal(w.dir);
    TruncatedSeries f = w.f.truncated(s.order());
    // group terms by the pairing <n, z-exponent>, then multiply each group by f^(sign*e)
    std::map<long, TruncatedSeries> groups;
    for (const auto& [m, c] : s.terms()) {
        long e = static_cast<long>(n.x) * m.a + static_cast<long>(n.y) * m.b;
        auto [it, fresh] = groups.try_emplace(e, s.order());
        it->second = it->second + TruncatedSeries::monomial(c, m, s.order());
    }
    TruncatedSeries out(s.order());
    for (const auto& [e, group] : groups) {
        if (e == 0)
            out = out + group;
        else
            out = out + group * int_pow(f, sign * e);
    }
    return out;
}

AutoAction cross(const Wall& w, int sign) {
    int order = w.f.order();
    return {wall_apply(w, sign, TruncatedSeries::monomial(Rational(1), ZMonomial::x(), order)),
            wall_apply(w, sign, TruncatedSeries::monomial(Rational(1), ZMonomial::y(), order))};
}

TruncatedSeries apply(const AutoAction& act, const TruncatedSeries& s) {
    int order = std::min({act.image_x.order(), act.image_y.order(), s.order()});
    // factor the images as coordinate * unit so Laurent powers stay representable
    TruncatedSeries ux = act.image_x.shifted({-1, 0, 0, 0}).truncated(order);
    TruncatedSeries uy = act.image_y.shifted({0, -1, 0, 0}).truncated(order);
    if (!ux.constant_term().is_one() || !uy.constant_term().is_one())
        throw input_error("apply: action images are not coordinate*(unit series)");
    std::map<std::pair<long, long>, TruncatedSeries> cache;
    TruncatedSeries out(order);
    for (const auto& [m, c] : s.terms()) {
        if (m.tdeg() > order) break;
        auto key = std::make_pair<long, long>(m.a, m.b);
        auto it = cache.find(key);
        if (it == cache.end()) {
            TruncatedSeries units = int_pow(ux, m.a) * int_pow(uy, m.b);
            it = cache.emplace(key, units).first;
        }
        out = out + it->second.shifted({m.a, m.b, m.p, m.q}, c);
    }
    return out;
}

AutoAction compose(const AutoAction& a, const AutoAction& b) {
    return {apply(a, b.image_x), apply(a, b.image_y)};
}

namespace {

struct CrossEvent {
    std::size_t wall;
    IVec2 v;  // direction at which the loop meets the wall (dir or -dir)
    int sign;
};

// A base direction off every event direction; candidates (1,0),(1,1),(2,1),...
// all have distinct slopes, so one of them misses the finite event set.
IVec2 choose_base(const std::vector<CrossEvent>& events) {
    for (int k = 0;; ++k) {
        IVec2 cand = k == 0 ? IVec2{1, 0} : IVec2{k, 1};
        bool clear = true;
        for (const auto& e : events)
            if (cross(cand, e.v) == 0) {
                clear = false;
                break;
            }
        if (clear) return cand;
    }
}

// Angular position in (0, 2pi) measured counterclockwise from `base`.
bool event_angle_less(const IVec2& base, const IVec2& u, const IVec2& v) {
    auto half = [&](const IVec2& w) { return cross(base, w) > 0 ? 0 : 1; };
    if (half(u) != half(v)) return half(u) < half(v);
    return cross(u, v) > 0;
}

std::vector<CrossEvent> sorted_events(const ScatteringDiagram& d) {
    std::vector<CrossEvent> events;
    for (std::size_t i = 0; i < d.walls().size(); ++i) {
        const Wall& w = d.walls()[i];
        events.push_back({i, w.dir, +1});
        if (w.is_line) events.push_back({i, -w.dir, -1});
    }
    for (std::size_t i = 0; i < events.size(); ++i)
        for (std::size_t j = i + 1; j < events.size(); ++j)
            if (cross(events[i].v, events[j].v) == 0 && dot(events[i].v, events[j].v) > 0)
                throw input_error("loop_product: two walls share direction " + dir_str(events[i].v) +
                                  " and must be merged first");
    IVec2 base = choose_base(events);
    std::sort(events.begin(), events.end(), [&](const CrossEvent& a, const CrossEvent& b) {
        return event_angle_less(base, a.v, b.v);
    });
    return events;
}

}  // namespace

AutoAction loop_product(const ScatteringDiagram& d, int working_order) {
    auto events = sorted_events(d);
    AutoAction act = AutoAction::identity(working_order);
    for (const auto& e : events) {
        const Wall& w = d.walls()[e.wall];
        act.image_x = wall_apply(w, e.sign, act.image_x);
        act.image_y = wall_apply(w, e.sign, act.image_y);
    }
    return act;
}

AutoAction loop_product(const ScatteringDiagram& d) { return loop_product(d, d.order()); }

namespace {

// One monomial c * z^M t1^p t2^q of the order-k deviation, read as the
// coefficient of the Hamiltonian derivation z^m'' -> <n(M'), m''> c z^M z^m''.
struct ErrorTerm {
    IVec2 M;
    int p, q;
    Rational c;
};

std::vector<ErrorTerm> extract_deviation(const AutoAction& theta, int k) {
    TruncatedSeries one = TruncatedSeries::one(theta.image_x.order());
    TruncatedSeries dev_x = theta.image_x.shifted({-1, 0, 0, 0}) - one;
    TruncatedSeries dev_y = theta.image_y.shifted({0, -1, 0, 0}) - one;

    std::map<ZMonomial, std::pair<Rational, Rational>, ZMonomialLess> by_monomial;
    for (const auto& [m, c] : dev_x.terms()) by_monomial[m].first = c;
    for (const auto& [m, c] : dev_y.terms()) by_monomial[m].second = c;

    std::vector<ErrorTerm> out;
    for (const auto& [m, dxy] : by_monomial) {
        if (m.tdeg() < k)
            throw computation_error("complete: residual deviation at t-degree " +
                                    std::to_string(m.tdeg()) + " below current order " +
                                    std::to_string(k));
        if (m.tdeg() > k) continue;
        if (m.a == 0 && m.b == 0)
            throw computation_error("complete: deviation term with z-exponent (0,0)");
        IVec2 M{m.a, m.b};
        IVec2 n = primitive_normal(primitive_part(M));
        const auto& [dx, dy] = dxy;
        // the deviation of a derivation by c*z^M hits (x,y) in ratio (n1 : n2)
        if (dx * Rational(n.y) != dy * Rational(n.x))
            throw computation_error("complete: deviation at z-exponent " + dir_str(M) +
                                    " is not of Hamiltonian shape");
        Rational c = n.x != 0 ? dx / Rational(n.x) : dy / Rational(n.y);
        if (!c.is_zero()) out.push_back({M, m.p, m.q, c});
    }
    return out;
}

ScatteringDiagram with_correction_rays(const ScatteringDiagram& d,
                                       const std::vector<ErrorTerm>& terms, int gamma_sign) {
    ScatteringDiagram result = d;
    for (const auto& term : terms) {
        IVec2 dir = primitive_part(term.M);
        if (const Wall* existing = result.find(dir); existing && existing->is_line)
            throw computation_error(
                "complete: correction ray parallel to an initial line is unsupported");
        TruncatedSeries arg = TruncatedSeries::monomial(
            term.c * Rational(-gamma_sign), {term.M.x, term.M.y, term.p, term.q}, d.order());
        result.add_wall(Wall(dir, false, exp(arg)));
    }
    return result;
}

bool consistent_at_order(const ScatteringDiagram& d, int k) {
    return extract_deviation(loop_product(d, k), k).empty();
}

}  // namespace

ScatteringDiagram complete(const ScatteringDiagram& d, int N) {
    if (N < 0) throw input_error("complete: negative order");
    ScatteringDiagram result = d;
    for (int k = 1; k <= N; ++k) {
        auto deviation = extract_deviation(loop_product(result, k), k);
        if (deviation.empty()) continue;
        // the sign cancelling the deviation is a fixed global convention;
        // determine it constructively rather than by a derived lemma
        ScatteringDiagram candidate = with_correction_rays(result, deviation, +1);
        if (!consistent_at_order(candidate, k)) {
            candidate = with_correction_rays(result, deviation, -1);
            if (!consistent_at_order(candidate, k))
                throw computation_error("complete: neither insertion sign cancels order " +
                                        std::to_string(k));
        }
        result = candidate;
    }
    return result;
}

TruncatedSeries ray_function(const ScatteringDiagram& d, const IVec2& m) {
    if (const Wall* w = d.find(m)) return w->f;
    return TruncatedSeries::one(d.order());
}

ScatteringDiagram build_nodal_cubic_diagram(int N) {
    if (N < 1) throw input_error("build_nodal_cubic_diagram: order must be >= 1");
    ScatteringDiagram d(N);
    TruncatedSeries f1 = TruncatedSeries::one(N) +
                         TruncatedSeries::monomial(Rational(1), {-1, 0, 1, 0}, N);
    TruncatedSeries f2 = TruncatedSeries::one(N) +
                         TruncatedSeries::monomial(Rational(1), {1, 3, 0, 1}, N);
    d.add_wall(Wall({-1, 0}, true, f1));
    d.add_wall(Wall({1, 3}, true, f2));
    return d;
}

std::vector<Rational> nodal_cubic_invariants(int D_max) {
    if (D_max < 1) throw input_error("nodal_cubic_invariants: max degree must be >= 1");
    int order = 2 * D_max;
    ScatteringDiagram completed = complete(build_nodal_cubic_diagram(order), order);
    TruncatedSeries central = ray_function(completed, {0, 1});
    TruncatedSeries lf = log1p(central);
    // the monomials on the (0,1) ray sit at 3x the primitive direction, so the
    // crossing convention overweights log f_central by that index:
    // 3 * d * N_d = [t1^d t2^d y^(3d)] log f_central
    const Rational index(3);
    std::vector<Rational> out;
    for (int d = 1; d <= D_max; ++d)
        out.push_back(lf.coefficient({0, 3 * d, d, d}) / (index * Rational(d)));
    return out;
}

}  // namespace lgw
