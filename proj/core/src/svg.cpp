#include "vogel/sketch.hpp"

#include "vogel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace vogel {

namespace {

std::vector<ProjPoint> primed_points(const IncidenceSketch& sk) {
    std::vector<ProjPoint> out;
    for (const auto& p : sk.points) out.push_back(in_basis(p.point, Basis::Primed));
    return out;
}

bool all_finite(const std::vector<ProjPoint>& pts, const LinearForm& chart) {
    return std::none_of(pts.begin(), pts.end(), [&](const ProjPoint& p) { return chart(p) == 0; });
}

// Fallback charts in a fixed order: coordinate lines, then small integer forms.
std::vector<LinearForm> chart_candidates(const LinearForm& first) {
    std::vector<LinearForm> out{first};
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c)
                if (a || b || c) out.emplace_back(a, b, c, Basis::Primed);
    std::stable_sort(out.begin() + 1, out.end(), [](const LinearForm& x, const LinearForm& y) {
        auto w = [](const LinearForm& f) {
            Rational s = 0;
            for (int i = 0; i < 3; ++i) s += abs(f[i]);
            return s;
        };
        return w(x) < w(y);
    });
    return out;
}

// Two forms completing the chart line to a basis of the dual space.
std::array<LinearForm, 2> affine_coordinates(const LinearForm& chart) {
    const std::array<LinearForm, 3> e{LinearForm(1, 0, 0, Basis::Primed), LinearForm(0, 1, 0, Basis::Primed),
                                      LinearForm(0, 0, 1, Basis::Primed)};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Triple& a = chart.coeffs();
            const Triple& b = e[i].coeffs();
            const Triple& c = e[j].coeffs();
            const Rational det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                                 a[2] * (b[0] * c[1] - b[1] * c[0]);
            if (det != 0) return {e[i], e[j]};
        }
    throw DegenerateInput("chart line is zero");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

}  // namespace

LinearForm svg_chart(const IncidenceSketch& sk, const SvgOptions& opts) {
    const auto pts = primed_points(sk);
    const LinearForm first = in_basis(opts.chart, Basis::Primed);
    for (const auto& cand : chart_candidates(first))
        if (all_finite(pts, cand)) return cand;
    throw DegenerateInput("no chart keeps every point finite");
}

std::string render_svg(const IncidenceSketch& sk, const SvgOptions& opts) {
    const auto pts = primed_points(sk);
    const LinearForm chart = svg_chart(sk, opts);
    const auto uv = affine_coordinates(chart);
    std::vector<std::array<double, 2>> xy;
    for (const auto& p : pts) {
        const Rational w = chart(p);
        xy.push_back({Rational(uv[0](p) / w).get_d(), Rational(uv[1](p) / w).get_d()});
    }
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    if (!xy.empty()) {
        minx = maxx = xy[0][0];
        miny = maxy = xy[0][1];
        for (const auto& q : xy) {
            minx = std::min(minx, q[0]);
            maxx = std::max(maxx, q[0]);
            miny = std::min(miny, q[1]);
            maxy = std::max(maxy, q[1]);
        }
    }
    const double span = std::max({maxx - minx, maxy - miny, 1e-9});
    const double margin = 0.1 * opts.size;
    const double scale = (opts.size - 2 * margin) / span;
    auto X = [&](double x) { return margin + (x - minx) * scale; };
    auto Y = [&](double y) { return opts.size - margin - (y - miny) * scale; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(opts.size) +
           "\" height=\"" + fmt(opts.size) + "\" viewBox=\"0 0 " + fmt(opts.size) + " " + fmt(opts.size) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<!-- chart: line (" + to_string(chart[0]) + ", " + to_string(chart[1]) + ", " + to_string(chart[2]) +
           ") sent to infinity -->\n";
    for (std::size_t li = 0; li < sk.lines.size(); ++li) {
        std::vector<std::size_t> on;
        for (std::size_t pi = 0; pi < sk.points.size(); ++pi) {
            const auto& sp = sk.points[pi];
            if (sp.black == li || sp.red == li || sp.green == li) on.push_back(pi);
        }
        if (on.size() < 2) continue;
        // Extreme points along the line's direction, extended by 10%.
        const auto& a0 = xy[on[0]];
        std::size_t far = on[1];
        for (auto pi : on)
            if (std::hypot(xy[pi][0] - a0[0], xy[pi][1] - a0[1]) > std::hypot(xy[far][0] - a0[0], xy[far][1] - a0[1]))
                far = pi;
        std::size_t near = on[0];
        const auto& b0 = xy[far];
        for (auto pi : on)
            if (std::hypot(xy[pi][0] - b0[0], xy[pi][1] - b0[1]) > std::hypot(xy[near][0] - b0[0], xy[near][1] - b0[1]))
                near = pi;
        const auto& p = xy[near];
        const auto& q = xy[far];
        const double dx = q[0] - p[0], dy = q[1] - p[1];
        const double x1 = p[0] - 0.1 * dx, y1 = p[1] - 0.1 * dy, x2 = q[0] + 0.1 * dx, y2 = q[1] + 0.1 * dy;
        const std::string color(to_string(sk.lines[li].color));
        out += "<line x1=\"" + fmt(X(x1)) + "\" y1=\"" + fmt(Y(y1)) + "\" x2=\"" + fmt(X(x2)) + "\" y2=\"" +
               fmt(Y(y2)) + "\" stroke=\"" + color + "\" stroke-width=\"1.500\"/>\n";
        out += "<text x=\"" + fmt(X(x2)) + "\" y=\"" + fmt(Y(y2)) + "\" font-size=\"12\" fill=\"" + color + "\">" +
               sk.lines[li].label + "</text>\n";
    }
    for (std::size_t pi = 0; pi < xy.size(); ++pi) {
        out += "<circle cx=\"" + fmt(X(xy[pi][0])) + "\" cy=\"" + fmt(Y(xy[pi][1])) + "\" r=\"3.000\" fill=\"black\"/>\n";
        out += "<text x=\"" + fmt(X(xy[pi][0]) + 4) + "\" y=\"" + fmt(Y(xy[pi][1]) - 4) + "\" font-size=\"10\">P" +
               std::to_string(pi + 1) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

void emit_svg(const IncidenceSketch& sk, const std::string& path, const SvgOptions& opts) {
    const std::string doc = render_svg(sk, opts);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << doc;
    if (!f) throw Error("failed writing " + path);
}

}  // namespace vogel
