/*
 * raster.hpp
 * ----------
 * Rasterization of the full (complex) amoeba. The slice of the amoeba over
 * a fixed |x| = e^u is the set of log-moduli of roots of f(e^{u+i phi}, .)
 * as phi runs over the circle. Roots move continuously in phi, so between
 * two consecutive phi samples a (greedily matched) root pair sweeps the
 * whole modulus interval between them; marking the swept intervals makes
 * the cell count converge to the true area instead of dotting the steep
 * stretches. The point-wise membership test below keeps the plain
 * sampled-root form.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "amoebalab/lattice.hpp"
#include "amoebalab/laurent.hpp"
#include "amoebalab/parallel.hpp"
#include "amoebalab/roots.hpp"

namespace amoebalab {

struct LogWindow {
    double u0 = -6.0, u1 = 6.0;
    double v0 = -6.0, v1 = 6.0;

    static LogWindow square(double w) { return {-w, w, -w, w}; }
    double width() const { return u1 - u0; }
    double height() const { return v1 - v0; }
    bool empty() const { return u1 <= u0 || v1 <= v0; }
};

struct AmoebaRaster {
    LogWindow window;
    int nx = 0, ny = 0;
    // row-major bitmap[iv * nx + iu]: 2 = cell center inside a swept slice
    // interval (these carry the area estimate), 1 = a sampled root landed in
    // the cell (coverage of sub-cell tentacles), 0 = outside
    std::vector<std::uint8_t> bitmap;
    double area_estimate = 0.0;
    double area_bound = 0.0;  // pi^2 * vol

    bool at(int iu, int iv) const {
        return bitmap[static_cast<std::size_t>(iv) * nx + iu] != 0;
    }
    bool interior_at(int iu, int iv) const {
        return bitmap[static_cast<std::size_t>(iv) * nx + iu] == 2;
    }
};

/// Point membership: does some root of a phi-slice have log-modulus within
/// half a cell of v? Exact in the n_phi -> infinity, cell -> 0 limit.
inline bool membership(const LaurentPoly& p, double u, double v, int n_phi,
                       double cell_height, bool* degenerate_flag = nullptr) {
    if (n_phi < 32) throw std::invalid_argument("membership: n_phi >= 32");
    if (degenerate_flag) *degenerate_flag = false;
    const double half = 0.5 * cell_height;
    for (int k = 0; k < n_phi; ++k) {
        double phi = 2.0 * M_PI * k / n_phi;
        UnivariateSlice s = slice(p, Var::X, std::polar(std::exp(u), phi));
        if (s.coeffs.empty()) {
            if (degenerate_flag) *degenerate_flag = true;
            continue;
        }
        if (static_cast<int>(s.coeffs.size()) - 1 < 1) continue;
        for (const cplx& r : complex_roots(s)) {
            double a = std::abs(r);
            if (a <= 0.0) continue;
            if (std::abs(std::log(a) - v) < half) return true;
        }
    }
    return false;
}

namespace rasterdetail {

/// One sweep direction: pin |coord| on column centers, follow the slice
/// roots around the phi circle. Interval crossings of row centers set level
/// 2 (interior); the root's own cell gets at least level 1 (cover).
/// With transpose the roles of the two axes swap.
inline void sweep(const LaurentPoly& f, const LogWindow& window, int ncol, int nrow,
                  int n_phi, bool transpose, std::vector<std::uint8_t>& bitmap, int nx,
                  int threads) {
    const double c0 = transpose ? window.v0 : window.u0;
    const double cw = (transpose ? window.height() : window.width()) / ncol;
    const double r0 = transpose ? window.u0 : window.v0;
    const double rw = (transpose ? window.width() : window.height()) / nrow;
    const Var pinned = transpose ? Var::Y : Var::X;

    parallel_for(static_cast<std::size_t>(ncol), threads, [&](std::size_t ic) {
        const double c = c0 + (static_cast<double>(ic) + 0.5) * cw;
        auto cell_of = [&](int col, int row) -> std::uint8_t& {
            int iu = transpose ? row : col;
            int iv = transpose ? col : row;
            return bitmap[static_cast<std::size_t>(iv) * nx + static_cast<std::size_t>(iu)];
        };
        auto mark_interior = [&](double lo, double hi) {
            int j0 = std::max(0, static_cast<int>(std::ceil((lo - r0) / rw - 0.5)));
            int j1 = std::min(nrow - 1, static_cast<int>(std::floor((hi - r0) / rw - 0.5)));
            for (int j = j0; j <= j1; ++j) cell_of(static_cast<int>(ic), j) = 2;
        };
        auto mark_cover = [&](double v) {
            int j = static_cast<int>(std::floor((v - r0) / rw));
            if (j < 0 || j >= nrow) return;
            std::uint8_t& b = cell_of(static_cast<int>(ic), j);
            if (b == 0) b = 1;
        };
        std::vector<cplx> prev;
        std::vector<double> prev_v;
        for (int k = 0; k <= n_phi; ++k) {
            double phi = 2.0 * M_PI * (k % n_phi) / n_phi;
            UnivariateSlice s = slice(f, pinned, std::polar(std::exp(c), phi));
            std::vector<cplx> roots = complex_roots(s);
            std::vector<double> vs(roots.size());
            for (std::size_t i = 0; i < roots.size(); ++i) {
                double a = std::abs(roots[i]);
                // roots at zero sweep out of the bottom of the window
                vs[i] = a > 0.0 ? std::log(a) : r0 - 1.0;
                mark_cover(vs[i]);
            }
            if (!prev.empty() && prev.size() == roots.size()) {
                std::vector<bool> used(roots.size(), false);
                for (std::size_t i = 0; i < prev.size(); ++i) {
                    double best = 1e300;
                    std::size_t bj = 0;
                    for (std::size_t j = 0; j < roots.size(); ++j) {
                        if (used[j]) continue;
                        double d = std::abs(roots[j] - prev[i]);
                        if (d < best) {
                            best = d;
                            bj = j;
                        }
                    }
                    used[bj] = true;
                    mark_interior(std::min(prev_v[i], vs[bj]), std::max(prev_v[i], vs[bj]));
                }
            }
            prev = std::move(roots);
            prev_v = std::move(vs);
        }
    });
}

}  // namespace rasterdetail

/// Raster over cell centers. Both sweep directions are run so that x <-> y
/// symmetric inputs produce cell-exact symmetric rasters and every tentacle
/// is covered; the area estimate counts only interior (center-in-slice)
/// cells, which is the estimator that converges to the true area.
inline AmoebaRaster rasterize(const LaurentPoly& p, const LogWindow& window, int nx, int ny,
                              int n_phi, int threads = 1) {
    AmoebaRaster r;
    r.window = window;
    r.nx = nx;
    r.ny = ny;
    r.area_bound = M_PI * M_PI * newton_polygon(p).vol.value();
    if (window.empty() || nx <= 0 || ny <= 0) {
        r.nx = std::max(nx, 0);
        r.ny = std::max(ny, 0);
        return r;
    }
    r.bitmap.assign(static_cast<std::size_t>(nx) * ny, 0);
    const LaurentPoly f = p.normalized_coeffs();
    rasterdetail::sweep(f, window, nx, ny, n_phi, false, r.bitmap, nx, threads);
    rasterdetail::sweep(f, window, ny, nx, n_phi, true, r.bitmap, nx, threads);

    std::size_t count = 0;
    for (std::uint8_t b : r.bitmap) count += (b == 2);
    r.area_estimate =
        static_cast<double>(count) * (window.width() / nx) * (window.height() / ny);
    return r;
}

/// P1 (ASCII portable bitmap) dump, one row per raster row, top row first.
inline std::string to_pgm(const AmoebaRaster& r) {
    std::ostringstream out;
    out << "P1\n" << r.nx << " " << r.ny << "\n";
    for (int j = r.ny - 1; j >= 0; --j) {
        for (int i = 0; i < r.nx; ++i) out << (r.at(i, j) ? '1' : '0');
        out << "\n";
    }
    return out.str();
}

inline nlohmann::ordered_json to_json(const AmoebaRaster& r) {
    return {{"area_estimate", r.area_estimate},
            {"area_bound", r.area_bound},
            {"resolution", {r.nx, r.ny}},
            {"window", {{"u0", r.window.u0},
                        {"u1", r.window.u1},
                        {"v0", r.window.v0},
                        {"v1", r.window.v1}}}};
}

}  // namespace amoebalab
