/*
 * lattice.hpp
 * -----------
 * Newton polygon of the support and the lattice data every counting argument
 * runs on: Euclidean area (kept rational so Pick's identity is an exact
 * equality), interior and boundary lattice point counts, integer edge
 * lengths, and the moment map into the polygon interior.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "amoebalab/laurent.hpp"

namespace amoebalab {

struct LatticePoint {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Rational with a small denominator; areas out of the shoelace formula
/// only ever need den in {1, 2}.
struct Rational {
    long long num = 0;
    long long den = 1;

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(std::abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
};

struct PolygonEdge {
    LatticePoint normal;  // primitive outward normal
    long long d = 0;      // integer length: d+1 lattice points on the edge
};

struct NewtonPolygon {
    std::vector<LatticePoint> vertices;  // counterclockwise, no three collinear
    std::vector<PolygonEdge> edges;      // edges[k] joins vertices[k] -> vertices[k+1]
    Rational vol;                        // Euclidean area
    long long g = 0;                     // interior lattice points
    long long s = 0;                     // boundary lattice points

    bool pick_ok() const {
        // vol == g + s/2 - 1, both sides times 2*den
        return 2 * vol.num == vol.den * (2 * g + s - 2);
    }
};

struct MomentImage {
    double x = 0.0;
    double y = 0.0;
};

namespace detail {

inline long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Monotone-chain convex hull, counterclockwise, collinear points dropped.
inline std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// Strictly inside the convex CCW polygon?
inline bool strictly_inside(const std::vector<LatticePoint>& hull, const LatticePoint& q) {
    for (std::size_t k = 0; k < hull.size(); ++k) {
        const LatticePoint& a = hull[k];
        const LatticePoint& b = hull[(k + 1) % hull.size()];
        if (cross(a, b, q) <= 0) return false;
    }
    return true;
}

inline bool on_boundary(const std::vector<LatticePoint>& hull, const LatticePoint& q) {
    for (std::size_t k = 0; k < hull.size(); ++k) {
        const LatticePoint& a = hull[k];
        const LatticePoint& b = hull[(k + 1) % hull.size()];
        if (cross(a, b, q) != 0) continue;
        if (q.x >= std::min(a.x, b.x) && q.x <= std::max(a.x, b.x) &&
            q.y >= std::min(a.y, b.y) && q.y <= std::max(a.y, b.y))
            return true;
    }
    return false;
}

}  // namespace detail

/// Convex hull of the support with all invariants filled in.
inline NewtonPolygon newton_polygon(const LaurentPoly& p) {
    p.require_nondegenerate();
    std::vector<LatticePoint> pts;
    for (const Term& t : p.terms()) pts.push_back({t.i, t.j});
    NewtonPolygon np;
    np.vertices = detail::convex_hull(std::move(pts));
    if (np.vertices.size() < 3)
        throw DegenerateSupportError("support is collinear: Newton polygon is degenerate");

    long long twice_area = 0;
    for (std::size_t k = 0; k < np.vertices.size(); ++k) {
        const LatticePoint& a = np.vertices[k];
        const LatticePoint& b = np.vertices[(k + 1) % np.vertices.size()];
        twice_area += a.x * b.y - b.x * a.y;
        long long dx = b.x - a.x, dy = b.y - a.y;
        long long d = std::gcd(std::abs(dx), std::abs(dy));
        // outward normal of a CCW polygon: rotate the edge vector by -90 deg
        np.edges.push_back({{dy / d, -dx / d}, d});
        np.s += d;
    }
    np.vol = {twice_area, 2};
    np.vol.reduce();

    long long xmin = np.vertices[0].x, xmax = xmin, ymin = np.vertices[0].y, ymax = ymin;
    for (const LatticePoint& v : np.vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    for (long long x = xmin; x <= xmax; ++x)
        for (long long y = ymin; y <= ymax; ++y)
            if (detail::strictly_inside(np.vertices, {x, y})) ++np.g;
    return np;
}

/// (interior, boundary) lattice point counts by scanning the bounding box.
inline std::pair<long long, long long> lattice_counts(const NewtonPolygon& np) {
    long long xmin = np.vertices[0].x, xmax = xmin, ymin = np.vertices[0].y, ymax = ymin;
    for (const LatticePoint& v : np.vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    long long interior = 0, boundary = 0;
    for (long long x = xmin; x <= xmax; ++x)
        for (long long y = ymin; y <= ymax; ++y) {
            if (detail::strictly_inside(np.vertices, {x, y}))
                ++interior;
            else if (detail::on_boundary(np.vertices, {x, y}))
                ++boundary;
        }
    return {interior, boundary};
}

/// The universal total-curvature bound 2*pi*vol.
inline double curvature_bound(const NewtonPolygon& np) {
    return 2.0 * M_PI * np.vol.value();
}

/// All lattice points of the polygon (interior and boundary).
inline std::vector<LatticePoint> polygon_lattice_points(const NewtonPolygon& np) {
    long long xmin = np.vertices[0].x, xmax = xmin, ymin = np.vertices[0].y, ymax = ymin;
    for (const LatticePoint& v : np.vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    std::vector<LatticePoint> pts;
    for (long long x = xmin; x <= xmax; ++x)
        for (long long y = ymin; y <= ymax; ++y)
            if (detail::strictly_inside(np.vertices, {x, y}) ||
                detail::on_boundary(np.vertices, {x, y}))
                pts.push_back({x, y});
    return pts;
}

/// mu(x, y) = sum |x^a1 y^a2| * a / sum |x^a1 y^a2| over lattice points a of
/// the polygon. Weights are computed with a shifted exponent so very large
/// windows cannot overflow.
inline MomentImage moment_map(const NewtonPolygon& np, double x, double y) {
    if (x == 0.0 || y == 0.0)
        throw DomainError("moment_map: the domain is the real torus");
    const double u = std::log(std::abs(x));
    const double v = std::log(std::abs(y));
    std::vector<LatticePoint> pts = polygon_lattice_points(np);
    double emax = -1e300;
    for (const LatticePoint& a : pts)
        emax = std::max(emax, static_cast<double>(a.x) * u + static_cast<double>(a.y) * v);
    double wsum = 0.0, xs = 0.0, ys = 0.0;
    for (const LatticePoint& a : pts) {
        double w = std::exp(static_cast<double>(a.x) * u + static_cast<double>(a.y) * v - emax);
        wsum += w;
        xs += w * static_cast<double>(a.x);
        ys += w * static_cast<double>(a.y);
    }
    return {xs / wsum, ys / wsum};
}

inline nlohmann::ordered_json to_json(const NewtonPolygon& np) {
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const LatticePoint& v : np.vertices) verts.push_back({v.x, v.y});
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const PolygonEdge& e : np.edges)
        edges.push_back({{"normal", {e.normal.x, e.normal.y}}, {"d", e.d}});
    return {{"vertices", verts},
            {"edges", edges},
            {"vol", {{"num", np.vol.num}, {"den", np.vol.den}}},
            {"g", np.g},
            {"s", np.s},
            {"pick_ok", np.pick_ok()}};
}

}  // namespace amoebalab
