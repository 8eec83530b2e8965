#include "trp/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace trp {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b"};

struct Box {
    double x0 = -2, x1 = 2, y0 = -2, y1 = 2;
};

std::optional<std::array<double, 2>> affine(const ProjectivePoint& p, double clip) {
    const double z = p[2].get_d();
    if (p[2] == 0) return std::nullopt;
    const double x = p[0].get_d() / z, y = p[1].get_d() / z;
    if (!std::isfinite(x) || !std::isfinite(y) || std::abs(x) > clip || std::abs(y) > clip) return std::nullopt;
    return std::array<double, 2>{x, y};
}

double eval(const TernaryForm& f, double x, double y) {
    double s = 0;
    for (const auto& [e, c] : f.coeffs()) s += c.get_d() * std::pow(x, e[0]) * std::pow(y, e[1]);
    return s;
}

class Canvas {
public:
    Canvas(const Box& b, int w, int h) : b_(b), w_(w), h_(h) {}

    std::string px(double x, double y) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f,%.2f", (x - b_.x0) / (b_.x1 - b_.x0) * w_,
                      (b_.y1 - y) / (b_.y1 - b_.y0) * h_);
        return buf;
    }
    std::string cx(double x, double y) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "cx=\"%.2f\" cy=\"%.2f\"", (x - b_.x0) / (b_.x1 - b_.x0) * w_,
                      (b_.y1 - y) / (b_.y1 - b_.y0) * h_);
        return buf;
    }
    bool inside(double x, double y) const { return x >= b_.x0 && x <= b_.x1 && y >= b_.y0 && y <= b_.y1; }

    void polylines(std::ostringstream& os, const std::vector<std::optional<std::array<double, 2>>>& pts,
                   const std::string& style) const {
        std::vector<std::string> run;
        auto flush = [&] {
            if (run.size() >= 2) {
                os << "<polyline fill=\"none\" " << style << " points=\"";
                for (size_t i = 0; i < run.size(); ++i) os << (i ? " " : "") << run[i];
                os << "\"/>\n";
            }
            run.clear();
        };
        for (const auto& p : pts) {
            if (!p || !inside((*p)[0], (*p)[1])) {
                flush();
                continue;
            }
            run.push_back(px((*p)[0], (*p)[1]));
        }
        flush();
    }

private:
    Box b_;
    int w_, h_;
};

Box window(const CurveTopology& t, double clip) {
    bool any = false;
    Box b{0, 0, 0, 0};
    auto grow = [&](const ProjectivePoint& p) {
        auto a = affine(p, clip);
        if (!a) return;
        if (!any) b = {(*a)[0], (*a)[0], (*a)[1], (*a)[1]};
        any = true;
        b.x0 = std::min(b.x0, (*a)[0]);
        b.x1 = std::max(b.x1, (*a)[0]);
        b.y0 = std::min(b.y0, (*a)[1]);
        b.y1 = std::max(b.y1, (*a)[1]);
    };
    for (const auto& c : t.components)
        if (c.kind == ComponentKind::oval) {
            for (const auto& p : c.trace) grow(p);
            grow(c.witness);
        }
    if (!any)
        for (const auto& c : t.components) {
            for (const auto& p : c.trace) grow(p);
            grow(c.witness);
        }
    if (!any) return Box{};
    const double span = std::max({b.x1 - b.x0, b.y1 - b.y0, 1.0}) * 0.8;
    const double mx = (b.x0 + b.x1) / 2, my = (b.y0 + b.y1) / 2;
    return {mx - span, mx + span, my - span, my + span};
}

using Seg = std::array<std::array<double, 2>, 2>;

// Zero set of f in the window by marching squares.
std::vector<Seg> contour(const Box& b, const TernaryForm& f, int n) {
    std::vector<Seg> out;
    std::vector<double> v(static_cast<size_t>((n + 1) * (n + 1)));
    auto X = [&](int i) { return b.x0 + (b.x1 - b.x0) * i / n; };
    auto Y = [&](int j) { return b.y0 + (b.y1 - b.y0) * j / n; };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) v[static_cast<size_t>(i * (n + 1) + j)] = eval(f, X(i), Y(j));
    auto at = [&](int i, int j) { return v[static_cast<size_t>(i * (n + 1) + j)]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::array<std::array<double, 3>, 4> c{{{X(i), Y(j), at(i, j)},
                                                           {X(i + 1), Y(j), at(i + 1, j)},
                                                           {X(i + 1), Y(j + 1), at(i + 1, j + 1)},
                                                           {X(i), Y(j + 1), at(i, j + 1)}}};
            std::vector<std::array<double, 2>> cut;
            for (size_t e = 0; e < 4; ++e) {
                const auto& p = c[e];
                const auto& q = c[(e + 1) % 4];
                if ((p[2] < 0) != (q[2] < 0)) {
                    const double s = p[2] / (p[2] - q[2]);
                    cut.push_back({p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])});
                }
            }
            for (size_t k = 0; k + 1 < cut.size(); k += 2) out.push_back({cut[k], cut[k + 1]});
        }
    return out;
}

void draw_path(std::ostringstream& os, const Canvas& cv, const std::vector<Seg>& segs, const std::string& style) {
    if (segs.empty()) return;
    os << "<path fill=\"none\" " << style << " d=\"";
    for (const auto& sg : segs) os << 'M' << cv.px(sg[0][0], sg[0][1]) << 'L' << cv.px(sg[1][0], sg[1][1]);
    os << "\"/>\n";
}

double segment_distance(const std::array<double, 2>& p, const std::array<double, 2>& a, const std::array<double, 2>& b) {
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len = dx * dx + dy * dy;
    double s = len > 0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len : 0;
    s = std::clamp(s, 0.0, 1.0);
    return std::hypot(p[0] - a[0] - s * dx, p[1] - a[1] - s * dy);
}

}  // namespace

std::string render_svg(const CurveTopology& t, const RenderOptions& o) {
    const Box b = window(t, o.clip);
    const Canvas cv(b, o.width, o.height);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.width << "\" height=\"" << o.height
       << "\" viewBox=\"0 0 " << o.width << ' ' << o.height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (o.pencil) {
        std::vector<PencilParameter> members = o.members;
        if (members.empty()) {
            for (int s : {-2, -1, 0, 1, 2}) members.push_back({Rational(s)});
            members.push_back({});
        }
        for (const auto& m : members)
            draw_path(os, cv, contour(b, o.pencil->member(m), 160),
                      "stroke=\"#999999\" stroke-width=\"0.8\" stroke-opacity=\"0.6\"");
        for (const auto& p : o.pencil->base_points)
            if (auto a = affine(p, o.clip)) os << "<circle " << cv.cx((*a)[0], (*a)[1]) << " r=\"4\" fill=\"black\"/>\n";
    }
    // The curve is contoured finely; each piece takes the color of the nearest component trace.
    std::vector<std::vector<Seg>> traces(static_cast<size_t>(t.count()));
    for (int i = 0; i < t.count(); ++i) {
        const auto& c = t.components[static_cast<size_t>(i)];
        const size_t n = c.trace.size();
        const size_t m = c.kind == ComponentKind::oval ? n : (n ? n - 1 : 0);
        for (size_t k = 0; k < m; ++k) {
            auto p = affine(c.trace[k], 1e6), q = affine(c.trace[(k + 1) % n], 1e6);
            if (p && q) traces[static_cast<size_t>(i)].push_back({*p, *q});
        }
    }
    std::vector<std::vector<Seg>> pieces(static_cast<size_t>(std::max(t.count(), 1)));
    if (t.count() > 0)
        for (const auto& sg : contour(b, t.sweep->curve(), 400)) {
            const std::array<double, 2> mid{(sg[0][0] + sg[1][0]) / 2, (sg[0][1] + sg[1][1]) / 2};
            size_t best = 0;
            double dist = INFINITY;
            for (size_t i = 0; i < traces.size(); ++i)
                for (const auto& tr : traces[i]) {
                    const double d = segment_distance(mid, tr[0], tr[1]);
                    if (d < dist) dist = d, best = i;
                }
            pieces[best].push_back(sg);
        }
    for (int i = 0; i < t.count(); ++i) {
        const auto& c = t.components[static_cast<size_t>(i)];
        const std::string color = kPalette[static_cast<size_t>(i) % std::size(kPalette)];
        draw_path(os, cv, pieces[static_cast<size_t>(i)], "stroke=\"" + color + "\" stroke-width=\"2\"");
        if (auto a = affine(c.witness, o.clip))
            os << "<circle " << cv.cx((*a)[0], (*a)[1]) << " r=\"3\" fill=\"" << color << "\"/>\n";
    }
    if (o.triangle) {
        static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (size_t i = 0; i < 3; ++i) {
            const auto& p = o.triangle->points[static_cast<size_t>(pairs[i][0])];
            const auto& q = o.triangle->points[static_cast<size_t>(pairs[i][1])];
            std::vector<std::optional<std::array<double, 2>>> pts;
            constexpr int steps = 400;
            for (int k = 0; k <= steps; ++k) {
                const double s = o.triangle->arcs[i] * std::tan(1.5707963267948966 * k / (steps + 1));
                const double z = p[2].get_d() + s * q[2].get_d();
                if (std::abs(z) < 1e-12) {
                    pts.push_back(std::nullopt);
                    continue;
                }
                pts.push_back(std::array<double, 2>{(p[0].get_d() + s * q[0].get_d()) / z,
                                                    (p[1].get_d() + s * q[1].get_d()) / z});
            }
            cv.polylines(os, pts, "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace trp
