#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pptgraph/enumerate.hpp"
#include "pptgraph/parabola.hpp"
#include "pptgraph/triple.hpp"

namespace pptgraph {

struct PlotColors {
    std::string below = "red";        // points (a, b), a < b
    std::string above = "black";      // reflected points (b, a)
    std::string up_curve = "green";   // opens-up and opens-right overlays
    std::string down_curve = "orange";
    std::string left_curve = "darkblue";
};

struct PlotConfig {
    int64_t max_leg = 120;
    int64_t canvas_px = 1000;
    double point_radius_px = 2.0;
    std::vector<int64_t> overlay_up;                       // allowable d values
    std::vector<std::pair<int64_t, int64_t>> overlay_down; // (a1, d0) anchors
    bool draw_diagonal = true;
    PlotColors colors;
};

namespace detail {

inline std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Sample a curve at one point per pixel column (or row) and append every
// in-viewport run of two or more samples as a polyline.
template <typename F>
void append_curve(std::string& svg, int64_t canvas, const std::string& color, bool by_column,
                  double s, F curve) {
    std::vector<std::string> run;
    auto flush = [&] {
        if (run.size() >= 2) {
            svg += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1\" points=\"";
            for (size_t i = 0; i < run.size(); ++i) {
                if (i) svg += ' ';
                svg += run[i];
            }
            svg += "\"/>\n";
        }
        run.clear();
    };
    for (int64_t i = 0; i <= canvas; ++i) {
        double px, py;
        if (by_column) {
            px = double(i);
            py = double(canvas) - curve(double(i) / s) * s;
        } else {
            py = double(i);
            px = curve((double(canvas) - double(i)) / s) * s;
        }
        double other = by_column ? py : px;
        if (other < 0.0 || other > double(canvas)) {
            flush();
            continue;
        }
        run.push_back(fmt2(px) + "," + fmt2(py));
    }
    flush();
}

} // namespace detail

// Deterministic SVG rendering of the PPT graph: two circles per PPT and
// polyline overlays for the requested parabolas. Identical configuration
// gives byte-identical output.
inline std::string render_svg(const PlotConfig& cfg) {
    if (cfg.max_leg < 4) throw std::domain_error("max_leg must be at least 4");
    if (cfg.canvas_px < 100) throw std::domain_error("canvas_px must be at least 100");
    if (!(cfg.point_radius_px > 0)) throw std::domain_error("point_radius_px must be positive");

    const int64_t canvas = cfg.canvas_px;
    const double s = double(canvas) / double(cfg.max_leg);
    const std::string dim = std::to_string(canvas);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + dim + "\" height=\"" + dim +
           "\" viewBox=\"0 0 " + dim + " " + dim + "\">\n";
    svg += "<rect width=\"" + dim + "\" height=\"" + dim + "\" fill=\"white\"/>\n";

    if (cfg.draw_diagonal)
        svg += "<line x1=\"0\" y1=\"" + dim + "\" x2=\"" + dim +
               "\" y2=\"0\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

    for (int64_t d : cfg.overlay_up) {
        UpParabola up(d, UpOrient::up); // validates allowable d
        auto f = [d](double v) { return (v * v - double(d) * double(d)) / (2.0 * double(d)); };
        detail::append_curve(svg, canvas, cfg.colors.up_curve, true, s, f);
        detail::append_curve(svg, canvas, cfg.colors.up_curve, false, s, f);
    }
    for (auto [a1, d0] : cfg.overlay_down) {
        DownParabola down(a1, d0, DownOrient::down); // validates the anchor
        double top = double(a1) * double(a1) / (2.0 * double(d0));
        double k = double(d0) / (2.0 * double(a1) * double(a1));
        auto f = [top, k](double v) { return top - k * v * v; };
        detail::append_curve(svg, canvas, cfg.colors.down_curve, true, s, f);
        detail::append_curve(svg, canvas, cfg.colors.left_curve, false, s, f);
    }

    const std::string r = detail::fmt2(cfg.point_radius_px);
    for (const auto& p : plot_points(enumerate_ppts(cfg.max_leg))) {
        const std::string& fill =
            p.region == Region::below_diagonal ? cfg.colors.below : cfg.colors.above;
        svg += "<circle cx=\"" + detail::fmt2(double(p.x) * s) + "\" cy=\"" +
               detail::fmt2(double(canvas) - double(p.y) * s) + "\" r=\"" + r + "\" fill=\"" +
               fill + "\"/>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace pptgraph
