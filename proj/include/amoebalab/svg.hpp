/*
 * svg.hpp
 * -------
 * Deterministic SVG figures: the raster as run-length grouped cells, real
 * amoeba arcs as polylines colored by quadrant, pinch markers, and the
 * Newton polygon with its lattice points in a side panel.
 */
#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "amoebalab/curvature.hpp"
#include "amoebalab/lattice.hpp"
#include "amoebalab/raster.hpp"
#include "amoebalab/trace.hpp"

namespace amoebalab {

struct SvgLayers {
    const NewtonPolygon* polygon = nullptr;
    const ArcSet* arcs = nullptr;
    const AmoebaRaster* raster = nullptr;
    const std::vector<PinchPoint>* pinches = nullptr;
    const std::vector<MomentImage>* moment_overlay = nullptr;
};

namespace svgdetail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

inline const char* quadrant_color(int sx, int sy) {
    if (sx > 0 && sy > 0) return "#1f77b4";
    if (sx < 0 && sy > 0) return "#2ca02c";
    if (sx < 0 && sy < 0) return "#d62728";
    return "#9467bd";
}

}  // namespace svgdetail

inline std::string render_svg(const SvgLayers& layers) {
    using svgdetail::num;
    if (!layers.polygon && !layers.arcs && !layers.raster && !layers.pinches &&
        !layers.moment_overlay)
        throw std::invalid_argument("render_svg: at least one layer required");

    const double plot = 640.0;
    const double panel = layers.polygon ? 220.0 : 0.0;
    LogWindow win = LogWindow::square(6.0);
    if (layers.raster)
        win = layers.raster->window;
    else if (layers.arcs)
        win = LogWindow::square(layers.arcs->window);

    auto X = [&](double u) { return (u - win.u0) / win.width() * plot; };
    auto Y = [&](double v) { return plot - (v - win.v0) / win.height() * plot; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(plot + panel)
        << " " << num(plot) << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << num(plot) << "\" height=\"" << num(plot)
        << "\" fill=\"#ffffff\" stroke=\"#888888\"/>\n";

    if (layers.raster && layers.raster->nx > 0) {
        const AmoebaRaster& r = *layers.raster;
        const double cw = plot / r.nx, ch = plot / r.ny;
        for (int j = 0; j < r.ny; ++j) {
            int i = 0;
            while (i < r.nx) {
                if (!r.at(i, j)) {
                    ++i;
                    continue;
                }
                int run = i;
                while (run < r.nx && r.at(run, j)) ++run;
                out << "<rect x=\"" << num(i * cw) << "\" y=\"" << num(plot - (j + 1) * ch)
                    << "\" width=\"" << num((run - i) * cw) << "\" height=\"" << num(ch)
                    << "\" fill=\"#ffd9a0\"/>\n";
                i = run;
            }
        }
    }

    if (layers.arcs) {
        for (const Arc& arc : layers.arcs->arcs) {
            out << "<polyline fill=\"none\" stroke=\""
                << svgdetail::quadrant_color(arc.sx, arc.sy) << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t k = 0; k < arc.log_pts.size(); ++k) {
                if (k) out << " ";
                out << num(X(arc.log_pts[k].x)) << "," << num(Y(arc.log_pts[k].y));
            }
            out << "\"/>\n";
        }
    }

    if (layers.pinches) {
        for (const PinchPoint& pp : *layers.pinches)
            out << "<circle cx=\"" << num(X(pp.location.x)) << "\" cy=\""
                << num(Y(pp.location.y)) << "\" r=\"5\" fill=\"none\" stroke=\"#ff0000\""
                << " stroke-width=\"2\"/>\n";
    }

    if (layers.polygon) {
        const NewtonPolygon& np = *layers.polygon;
        long long xmin = np.vertices[0].x, xmax = xmin, ymin = np.vertices[0].y, ymax = ymin;
        for (const LatticePoint& v : np.vertices) {
            xmin = std::min(xmin, v.x);
            xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y);
            ymax = std::max(ymax, v.y);
        }
        const double span = static_cast<double>(std::max(xmax - xmin, ymax - ymin)) + 2.0;
        const double s = (panel - 40.0) / span;
        auto PX = [&](double x) { return plot + 20.0 + (x - xmin + 1.0) * s; };
        auto PY = [&](double y) { return plot / 2 + (span / 2 - (y - ymin + 1.0)) * s; };
        out << "<polygon fill=\"#e8f0fe\" stroke=\"#1a53a0\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < np.vertices.size(); ++k) {
            if (k) out << " ";
            out << num(PX(static_cast<double>(np.vertices[k].x))) << ","
                << num(PY(static_cast<double>(np.vertices[k].y)));
        }
        out << "\"/>\n";
        for (const LatticePoint& pt : polygon_lattice_points(np))
            out << "<circle cx=\"" << num(PX(static_cast<double>(pt.x))) << "\" cy=\""
                << num(PY(static_cast<double>(pt.y)))
                << "\" r=\"2.5\" fill=\"#1a53a0\"/>\n";
        if (layers.moment_overlay) {
            for (const MomentImage& m : *layers.moment_overlay)
                out << "<circle cx=\"" << num(PX(m.x)) << "\" cy=\"" << num(PY(m.y))
                    << "\" r=\"3\" fill=\"#d62728\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace amoebalab
