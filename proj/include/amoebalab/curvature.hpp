/*
 * curvature.hpp
 * -------------
 * Total absolute curvature of the real amoeba, two ways:
 *
 *   1. directly, as the total variation of the lifted Gauss angle along each
 *      traced arc (the log-Gauss map factors through the amoeba's ordinary
 *      Gauss map, so the analytic normal (x f_x, y f_y) is exact), and
 *   2. by integral geometry, as (pi / n) * sum of real fiber counts over
 *      sampled directions: the multiplicity-weighted volume of the Gauss
 *      image in RP^1.
 *
 * Also locates inflections (sign changes of the angle increments) and pinch
 * points (transverse close encounters of arcs from different quadrants).
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <json.hpp>

#include "amoebalab/config.hpp"
#include "amoebalab/gauss.hpp"
#include "amoebalab/lattice.hpp"
#include "amoebalab/trace.hpp"

namespace amoebalab {

class LiftError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ArcCurvature {
    int arc = 0;
    double total = 0.0;                     // radians
    int inflections = 0;
    std::vector<double> inflection_params;  // arclength positions
    std::vector<double> lifted;             // lifted angle per point
};

struct PinchPoint {
    Vec2 location;
    int arc_a = 0;
    int arc_b = 0;
    double alpha = 0.0;  // crossing angle in [0, pi/2]
    double gap = 0.0;    // closest approach of the two polylines
};

struct CurvatureReport {
    std::vector<ArcCurvature> per_arc;
    double total = 0.0;
    double bound = 0.0;          // 2 pi vol
    double crofton_total = 0.0;
    int p = 0;
    int t = 0;
    double eq2_bound = 0.0;      // 2 pi p + pi t
    double truncation_uncertainty = 0.0;  // end-angle gap to the nearest edge normal
    std::vector<PinchPoint> pinches;
};

/// Total variation of the Gauss angle along one arc, plus inflection data.
/// The traversal is canonicalized so reversing the arc gives a bitwise
/// identical result.
inline ArcCurvature arc_total_curvature(const Arc& arc, const LaurentPoly& p,
                                        const Tolerances& tol = {}) {
    ArcCurvature out;
    const std::size_t n = arc.log_pts.size();
    if (n < 2) return out;

    const LaurentPoly f = p.normalized_coeffs();
    auto [gx, gy] = log_gauss_pair(f);
    auto angle_at = [&](std::size_t k) {
        double x = arc.sx * std::exp(arc.log_pts[k].x);
        double y = arc.sy * std::exp(arc.log_pts[k].y);
        return RP1Angle::from_components(gx.eval_real(x, y), gy.eval_real(x, y)).theta;
    };

    // canonical traversal direction
    bool reversed = false;
    if (!arc.closed) {
        Vec2 a = arc.log_pts.front(), b = arc.log_pts.back();
        reversed = (b.x < a.x) || (b.x == a.x && b.y < a.y);
    } else if (n >= 3) {
        Vec2 a = arc.log_pts[1], b = arc.log_pts[n - 2];
        reversed = (b.x < a.x) || (b.x == a.x && b.y < a.y);
    }
    auto idx = [&](std::size_t k) { return reversed ? n - 1 - k : k; };

    out.lifted.resize(n);
    double lift = angle_at(idx(0));
    out.lifted[0] = lift;
    double arclen = 0.0;
    double prev_delta = 0.0;
    bool have_sign = false;
    double prev_theta = lift;
    for (std::size_t k = 1; k < n; ++k) {
        double theta = angle_at(idx(k));
        double delta = theta - prev_theta;
        while (delta > M_PI / 2) delta -= M_PI;
        while (delta <= -M_PI / 2) delta += M_PI;
        if (std::abs(delta) > M_PI / 2 - 1e-9)
            throw LiftError("angle gap at the wrap boundary: retrace with smaller steps");
        lift += delta;
        out.lifted[k] = lift;
        out.total += std::abs(delta);
        arclen += (arc.log_pts[idx(k)] - arc.log_pts[idx(k - 1)]).norm();
        if (std::abs(delta) >= 1e-9) {
            if (have_sign && (delta > 0) != (prev_delta > 0)) {
                ++out.inflections;
                out.inflection_params.push_back(arclen);
            }
            prev_delta = delta;
            have_sign = true;
        }
        prev_theta = theta;
    }
    (void)tol;
    return out;
}

/// Crofton-style total curvature: (pi / n) * sum over sampled directions of
/// the real fiber count.
inline double crofton_total_curvature(const LaurentPoly& p, int n_samples,
                                      const Tolerances& tol = {}, int threads = 1,
                                      std::uint64_t seed = 0) {
    if (n_samples < 64)
        throw std::invalid_argument("crofton_total_curvature: n_samples >= 64");
    std::vector<ScanSample> samples = sample_fibers(p, n_samples, tol, threads, seed);
    int degenerate = 0;
    long sum = 0;
    for (const ScanSample& s : samples) {
        if (s.degenerate)
            ++degenerate;
        else
            sum += s.real;
    }
    if (degenerate * 10 > n_samples)
        throw FiberDegenerateError("more than 10% of crofton samples degenerate");
    return M_PI * static_cast<double>(sum) / static_cast<double>(n_samples);
}

/// Transverse close encounters between arcs of different quadrants (or
/// distant stretches of one arc). Tangential overlaps are not crossings:
/// branches from different quadrants may share one log image.
inline std::vector<PinchPoint> pinch_detect(const ArcSet& set, const Tolerances& tol = {}) {
    struct SegRef {
        int arc;
        int seg;
    };
    const double cell = std::max(0.02, 10.0 * tol.pinch);
    SegmentGrid grid(cell);
    for (std::size_t a = 0; a < set.arcs.size(); ++a)
        for (std::size_t k = 0; k + 1 < set.arcs[a].log_pts.size(); ++k)
            grid.insert(static_cast<int>(a), static_cast<int>(k), set.arcs[a].log_pts[k],
                        set.arcs[a].log_pts[k + 1]);

    std::vector<PinchPoint> events;
    for (std::size_t a = 0; a < set.arcs.size(); ++a) {
        const Arc& A = set.arcs[a];
        const std::size_t na = A.log_pts.size();
        for (std::size_t k = 0; k + 1 < na; ++k) {
            Vec2 a0 = A.log_pts[k], a1 = A.log_pts[k + 1];
            for (const SegmentGrid::Entry& e : grid.near((a0 + a1) * 0.5)) {
                // visit each unordered pair once
                if (e.arc < static_cast<int>(a)) continue;
                if (e.arc == static_cast<int>(a)) {
                    std::size_t gapidx = static_cast<std::size_t>(
                        std::abs(e.seg - static_cast<int>(k)));
                    std::size_t wrapped = A.closed ? std::min(gapidx, na - 1 - gapidx) : gapidx;
                    if (wrapped <= 10) continue;
                    if (e.seg <= static_cast<int>(k)) continue;
                } else if (set.arcs[static_cast<std::size_t>(e.arc)].sx == A.sx &&
                           set.arcs[static_cast<std::size_t>(e.arc)].sy == A.sy) {
                    continue;  // same quadrant: the log map is injective there
                }
                const Arc& B = set.arcs[static_cast<std::size_t>(e.arc)];
                Vec2 b0 = B.log_pts[static_cast<std::size_t>(e.seg)];
                Vec2 b1 = B.log_pts[static_cast<std::size_t>(e.seg) + 1];
                SegmentApproach ap = segment_closest_approach(a0, a1, b0, b1);
                if (ap.distance > tol.pinch) continue;
                Vec2 ta = (a1 - a0).normalized();
                Vec2 tb = (b1 - b0).normalized();
                double alpha = std::acos(std::clamp(std::abs(ta.dot(tb)), 0.0, 1.0));
                if (alpha < tol.pinch_angle) continue;  // tangential contact
                PinchPoint pp;
                pp.location = ap.midpoint;
                pp.arc_a = static_cast<int>(a);
                pp.arc_b = e.arc;
                pp.alpha = alpha;
                pp.gap = ap.distance;
                events.push_back(pp);
            }
        }
    }
    // keep the sharpest representative of each cluster of nearby events
    std::sort(events.begin(), events.end(),
              [](const PinchPoint& x, const PinchPoint& y) { return x.gap < y.gap; });
    std::vector<PinchPoint> out;
    for (const PinchPoint& e : events) {
        bool near_existing = false;
        for (const PinchPoint& o : out)
            if ((e.location - o.location).norm() < 50.0 * tol.pinch) {
                near_existing = true;
                break;
            }
        if (!near_existing) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const PinchPoint& x, const PinchPoint& y) {
        if (x.location.x != y.location.x) return x.location.x < y.location.x;
        return x.location.y < y.location.y;
    });
    return out;
}

/// Assemble the full curvature report for a traced amoeba.
inline CurvatureReport total_curvature(const ArcSet& set, const LaurentPoly& p,
                                       const NewtonPolygon& np, int crofton_samples = 64,
                                       const Tolerances& tol = {}, int threads = 1,
                                       std::uint64_t seed = 0) {
    CurvatureReport rep;
    rep.bound = curvature_bound(np);
    rep.p = set.p;
    rep.t = set.tentacle_count;
    rep.eq2_bound = 2.0 * M_PI * rep.p + M_PI * rep.t;

    rep.per_arc.resize(set.arcs.size());
    parallel_for(set.arcs.size(), threads, [&](std::size_t a) {
        rep.per_arc[a] = arc_total_curvature(set.arcs[a], p, tol);
        rep.per_arc[a].arc = static_cast<int>(a);
    });
    for (const ArcCurvature& ac : rep.per_arc) rep.total += ac.total;

    // truncation estimate: open ends should align with an edge normal of the
    // polygon; the residual angle bounds the curvature cut off by the window
    for (const OpenEnd& e : set.open_ends) {
        double end_angle = RP1Angle::from_components(e.direction.x, e.direction.y).theta;
        double best = M_PI;
        for (const PolygonEdge& edge : np.edges) {
            double na = RP1Angle::from_components(static_cast<double>(edge.normal.x),
                                                  static_cast<double>(edge.normal.y))
                            .theta;
            best = std::min(best, RP1Angle::distance(end_angle, na));
        }
        rep.truncation_uncertainty += best;
    }

    rep.crofton_total = crofton_total_curvature(p, crofton_samples, tol, threads, seed);
    rep.pinches = pinch_detect(set, tol);
    return rep;
}

inline nlohmann::ordered_json to_json(const CurvatureReport& r) {
    nlohmann::ordered_json per_arc = nlohmann::ordered_json::array();
    for (const ArcCurvature& a : r.per_arc)
        per_arc.push_back(
            {{"arc", a.arc}, {"total", a.total}, {"inflections", a.inflections}});
    nlohmann::ordered_json pinches = nlohmann::ordered_json::array();
    for (const PinchPoint& pp : r.pinches)
        pinches.push_back({{"u", pp.location.x},
                           {"v", pp.location.y},
                           {"arcs", {pp.arc_a, pp.arc_b}},
                           {"alpha", pp.alpha},
                           {"gap", pp.gap}});
    return {{"per_arc", per_arc},
            {"total", r.total},
            {"bound", r.bound},
            {"crofton_total", r.crofton_total},
            {"p", r.p},
            {"t", r.t},
            {"eq2_bound", r.eq2_bound},
            {"truncation_uncertainty", r.truncation_uncertainty},
            {"pinches", pinches}};
}

}  // namespace amoebalab
