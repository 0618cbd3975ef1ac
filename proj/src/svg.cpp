#include "lgw/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lgw {

namespace {

// Math coordinates, y up; the canvas flips to screen coordinates on output.
class Canvas {
  public:
    Canvas(double xmin, double xmax, double ymin, double ymax, int width = 560)
        : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax), width_(width) {
        scale_ = width_ / (xmax_ - xmin_);
        height_ = static_cast<int>(std::lround((ymax_ - ymin_) * scale_));
    }

    void line(double x1, double y1, double x2, double y2, const char* stroke, double w) {
        body_ << "<line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2)
              << "\" y2=\"" << py(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << w
              << "\"/>\n";
    }

    void circle(double x, double y, double r, const char* fill) {
        body_ << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << r << "\" fill=\""
              << fill << "\"/>\n";
    }

    void text(double x, double y, const std::string& s, const char* fill = "#222") {
        body_ << "<text x=\"" << px(x) << "\" y=\"" << py(y) << "\" font-size=\"13\" fill=\"" << fill
              << "\" font-family=\"monospace\">" << escape(s) << "</text>\n";
    }

    void grid() {
        for (int gx = static_cast<int>(std::ceil(xmin_)); gx <= static_cast<int>(std::floor(xmax_)); ++gx)
            line(gx, ymin_, gx, ymax_, "#eeeeee", 0.6);
        for (int gy = static_cast<int>(std::ceil(ymin_)); gy <= static_cast<int>(std::floor(ymax_)); ++gy)
            line(xmin_, gy, xmax_, gy, "#eeeeee", 0.6);
    }

    std::string finish() const {
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
           << height_ << "\" viewBox=\"0 0 " << width_ << " " << height_ << "\">\n"
           << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
           << body_.str() << "</svg>\n";
        return os.str();
    }

    double span() const { return std::max(xmax_ - xmin_, ymax_ - ymin_); }

  private:
    double px(double x) const { return (x - xmin_) * scale_; }
    double py(double y) const { return (ymax_ - y) * scale_; }

    static std::string escape(const std::string& s) {
        std::string out;
        for (char ch : s) {
            if (ch == '<')
                out += "&lt;";
            else if (ch == '>')
                out += "&gt;";
            else if (ch == '&')
                out += "&amp;";
            else
                out += ch;
        }
        return out;
    }

    double xmin_, xmax_, ymin_, ymax_;
    int width_, height_ = 0;
    double scale_;
    std::ostringstream body_;
};

double norm(const IVec2& v) { return std::sqrt(static_cast<double>(dot(v, v))); }

std::string series_label(const TruncatedSeries& f, std::size_t max_terms = 2) {
    std::ostringstream os;
    std::size_t shown = 0;
    for (const auto& [m, c] : f.terms()) {
        if (shown >= max_terms + 1) {
            os << " + ...";
            break;
        }
        if (shown > 0) os << " + ";
        os << c.str();
        if (m.a) os << " x^" << m.a;
        if (m.b) os << " y^" << m.b;
        if (m.p) os << " t1^" << m.p;
        if (m.q) os << " t2^" << m.q;
        ++shown;
    }
    if (shown == 0) os << "0";
    return os.str();
}

}  // namespace

std::string fan_to_svg(const Fan& f) {
    Canvas canvas(-3.2, 3.2, -3.2, 3.2);
    canvas.grid();
    auto selfints = self_intersections(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const IVec2& r = f.rays[i];
        double len = 2.8 / norm(r);
        canvas.line(0, 0, r.x * len, r.y * len, "#000000", 1.6);
        std::ostringstream label;
        label << "(" << selfints[i] << ")";
        if (!f.marks[i].empty()) label << " " << f.marks[i];
        canvas.text(r.x * (len + 0.12), r.y * (len + 0.12), label.str());
    }
    canvas.circle(0, 0, 2.5, "#000000");
    return canvas.finish();
}

std::string diagram_to_svg(const ScatteringDiagram& d) {
    Canvas canvas(-3.4, 3.4, -3.4, 3.4);
    canvas.grid();
    for (const auto& w : d.walls()) {
        double len = 3.0 / norm(w.dir);
        const char* color = w.is_line ? "#000000" : "#c03020";
        canvas.line(0, 0, w.dir.x * len, w.dir.y * len, color, w.is_line ? 1.8 : 1.2);
        if (w.is_line) canvas.line(0, 0, -w.dir.x * len, -w.dir.y * len, color, 1.8);
        canvas.text(w.dir.x * len * 0.72 + 0.08, w.dir.y * len * 0.72, series_label(w.f), color);
    }
    canvas.circle(0, 0, 2.5, "#000000");
    return canvas.finish();
}

std::string curves_to_svg(const EnumResult& result, const GenericInstance& inst) {
    double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
    auto grow = [&](double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    auto approx = [](const Rational& r) {
        return mpq_get_d(mpq_class(r.num(), r.den()).get_mpq_t());
    };
    for (const auto& [curve, mult] : result.curves)
        for (const auto& p : curve.positions) grow(approx(p.x), approx(p.y));
    for (const auto& p : inst.points) grow(approx(p.x), approx(p.y));
    double pad = 0.18 * std::max(xmax - xmin, ymax - ymin) + 1.0;
    Canvas canvas(xmin - pad, xmax + pad, ymin - pad, ymax + pad);
    canvas.grid();

    for (const auto& [curve, mult] : result.curves) {
        auto pos = [&](int node) {
            const RatPoint& p = curve.positions[static_cast<std::size_t>(node - curve.leaf_count())];
            return std::pair<double, double>(approx(p.x), approx(p.y));
        };
        for (std::size_t e = 0; e < curve.edges.size(); ++e) {
            auto [u, v] = curve.edges[e];
            IVec2 w = curve.edge_wdir[e];
            long weight = std::gcd(std::abs(w.x), std::abs(w.y));
            if (curve.is_leaf_node(u) || curve.is_leaf_node(v)) {
                int leaf = curve.is_leaf_node(u) ? u : v;
                int base = curve.is_leaf_node(u) ? v : u;
                auto [bx, by] = pos(base);
                IVec2 out = curve.outgoing(base, static_cast<int>(e));
                double len = 1.4 * canvas.span() / norm(out);
                canvas.line(bx, by, bx + out.x * len, by + out.y * len, "#000000", 1.4);
                canvas.text(bx + out.x * len * 0.4, by + out.y * len * 0.4 + 0.15,
                            std::to_string(curve.leaves[static_cast<std::size_t>(leaf)].weight));
            } else {
                auto [ax, ay] = pos(u);
                auto [bx, by] = pos(v);
                canvas.line(ax, ay, bx, by, "#000000", 1.4);
                canvas.text((ax + bx) / 2 + 0.1, (ay + by) / 2 + 0.15, std::to_string(weight));
            }
        }
        for (int n = curve.leaf_count(); n < curve.node_count(); ++n) {
            auto [x, y] = pos(n);
            canvas.circle(x, y, 3.0, "#000000");
            canvas.text(x + 0.15, y - 0.2, std::to_string(vertex_multiplicity(curve, n)), "#555");
        }
    }
    for (const auto& p : inst.points) canvas.circle(approx(p.x), approx(p.y), 4.0, "#c03020");
    return canvas.finish();
}

}  // namespace lgw
