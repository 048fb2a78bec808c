/*
 * trace.hpp
 * ---------
 * Predictor-corrector tracing of the real curve branch by branch, per open
 * quadrant of the real torus, in log coordinates. A branch through
 * (sx e^u, sy e^v) satisfies F(u, v) = f(sx e^u, sy e^v) = 0, and the
 * gradient of F is exactly the logarithmic Gauss numerator (x f_x, y f_y),
 * so the amoeba normal comes for free at every point.
 *
 * Step control keeps the Gauss angle change below a bound per step, which is
 * what makes the later total-variation curvature quadrature accurate.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "amoebalab/config.hpp"
#include "amoebalab/gauss.hpp"
#include "amoebalab/geometry.hpp"
#include "amoebalab/laurent.hpp"
#include "amoebalab/roots.hpp"

namespace amoebalab {

class TraceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularityError : public TraceError {
public:
    SingularityError(double u, double v, int sx, int sy)
        : TraceError(describe(u, v, sx, sy)), u_(u), v_(v) {}
    double u_, v_;

private:
    static std::string describe(double u, double v, int sx, int sy) {
        std::ostringstream os;
        os << "near-singular point on the real curve at quadrant (" << (sx > 0 ? '+' : '-')
           << "," << (sy > 0 ? '+' : '-') << "), log coords (" << u << ", " << v << ")";
        return os.str();
    }
};

enum class ExitTag { None, Left, Right, Bottom, Top };

inline const char* to_string(ExitTag t) {
    switch (t) {
        case ExitTag::Left: return "left";
        case ExitTag::Right: return "right";
        case ExitTag::Bottom: return "bottom";
        case ExitTag::Top: return "top";
        default: return "none";
    }
}

struct SeedPoint {
    int sx = 1;
    int sy = 1;
    double u = 0.0;
    double v = 0.0;
};

struct Arc {
    int sx = 1;
    int sy = 1;
    std::vector<Vec2> log_pts;  // (u, v); curve point is (sx e^u, sy e^v)
    bool closed = false;
    ExitTag left_exit = ExitTag::None;   // exit tag of log_pts.front()
    ExitTag right_exit = ExitTag::None;  // exit tag of log_pts.back()

    double x_at(std::size_t k) const { return sx * std::exp(log_pts[k].x); }
    double y_at(std::size_t k) const { return sy * std::exp(log_pts[k].y); }

    double length() const {
        double len = 0.0;
        for (std::size_t k = 1; k < log_pts.size(); ++k)
            len += (log_pts[k] - log_pts[k - 1]).norm();
        return len;
    }
};

/// One open polyline end heading out of the window.
struct OpenEnd {
    int arc = 0;
    bool at_back = false;
    Vec2 pos;
    Vec2 direction;   // outward unit direction, averaged over the last steps
    double drift = 0; // direction change over the averaging stretch (rad)
};

struct ArcSet {
    std::vector<Arc> arcs;
    double window = 12.0;
    std::vector<std::vector<int>> components;  // arc indices per component
    int p = 0;                                 // compact components
    std::vector<OpenEnd> open_ends;
    std::vector<std::pair<int, int>> end_pairs;  // indices into open_ends
    int tentacle_count = 0;                      // pairs + unpaired leftovers
    int unpaired_ends = 0;
};

namespace tracedetail {

struct QuadrantField {
    const LaurentPoly* f;
    const LaurentPoly* gx;
    const LaurentPoly* gy;
    int sx, sy;

    double x(double u) const { return sx * std::exp(u); }
    double y(double v) const { return sy * std::exp(v); }

    double value(Vec2 q) const { return f->eval_real(x(q.x), y(q.y)); }
    double scale(Vec2 q) const { return f->scale(std::exp(q.x), std::exp(q.y)); }

    /// grad F in log coordinates = (x f_x, y f_y) at the point.
    Vec2 grad(Vec2 q) const {
        double xx = x(q.x), yy = y(q.y);
        return {gx->eval_real(xx, yy), gy->eval_real(xx, yy)};
    }

    double angle(Vec2 q) const {
        Vec2 n = grad(q);
        return RP1Angle::from_components(n.x, n.y).theta;
    }
};

/// Newton along the normal direction. Returns false if it did not converge.
inline bool correct(const QuadrantField& qf, Vec2& q, const Tolerances& tol) {
    for (int it = 0; it < 20; ++it) {
        double fv = qf.value(q);
        double sc = qf.scale(q);
        if (sc <= 0.0) return false;
        Vec2 n = qf.grad(q);
        double n2 = n.dot(n);
        if (std::sqrt(n2) < tol.singular_grad * sc)
            throw SingularityError(q.x, q.y, qf.sx, qf.sy);
        if (std::abs(fv) <= tol.corrector_target * sc) return true;
        Vec2 step = n * (-fv / n2);
        if (step.norm() > 0.5) return false;  // diverging
        q = q + step;
    }
    return std::abs(qf.value(q)) <= tol.residual_accept * qf.scale(q);
}

/// Solve F = 0 along a window edge (one coordinate pinned), Newton in 1D.
inline bool correct_on_edge(const QuadrantField& qf, Vec2& q, bool pin_u,
                            const Tolerances& tol) {
    for (int it = 0; it < 30; ++it) {
        double fv = qf.value(q);
        double sc = qf.scale(q);
        if (std::abs(fv) <= tol.corrector_target * sc) return true;
        Vec2 n = qf.grad(q);
        double d = pin_u ? n.y : n.x;
        if (std::abs(d) < 1e-300) return false;
        double step = -fv / d;
        step = std::clamp(step, -0.2, 0.2);
        (pin_u ? q.y : q.x) += step;
    }
    return std::abs(qf.value(q)) <= tol.residual_accept * qf.scale(q);
}

struct HalfTrace {
    std::vector<Vec2> pts;  // excludes the seed itself
    bool closed = false;
    ExitTag exit = ExitTag::None;
};

inline HalfTrace trace_direction(const QuadrantField& qf, Vec2 seed, Vec2 t0,
                                 double window, const Tolerances& tol) {
    HalfTrace out;
    Vec2 q = seed;
    Vec2 tangent = t0;
    double theta = qf.angle(q);
    double h = 1e-3;
    const int max_steps = 200000;
    for (int step = 0; step < max_steps; ++step) {
        bool accepted = false;
        Vec2 qn;
        double theta_n = 0.0;
        for (int halving = 0; halving < 60; ++halving) {
            qn = q + tangent * h;
            bool ok = false;
            try {
                ok = correct(qf, qn, tol);
            } catch (const SingularityError&) {
                throw;
            }
            if (ok) {
                theta_n = qf.angle(qn);
                double dtheta = RP1Angle::distance(theta, theta_n);
                Vec2 seg = qn - q;
                double seglen = seg.norm();
                bool orth_ok = true;
                if (seglen > 0) {
                    Vec2 n_new = qf.grad(qn).normalized();
                    orth_ok = std::abs(seg.normalized().dot(n_new)) < tol.tangent_orth;
                }
                if (dtheta <= tol.theta_step && seglen <= 2.0 * h && seglen > 0 && orth_ok) {
                    accepted = true;
                    if (dtheta < 0.25 * tol.theta_step) h = std::min(h * 1.5, tol.max_step);
                    break;
                }
            }
            h *= 0.5;
            if (h < 1e-11)
                throw SingularityError(q.x, q.y, qf.sx, qf.sy);
        }
        if (!accepted) throw SingularityError(q.x, q.y, qf.sx, qf.sy);

        // window exit: land the endpoint exactly on the boundary
        if (std::abs(qn.x) > window || std::abs(qn.y) > window) {
            double ox = std::max(std::abs(qn.x) - window, 0.0);
            double oy = std::max(std::abs(qn.y) - window, 0.0);
            bool pin_u = ox >= oy;  // pin the coordinate that overshot more
            Vec2 e = qn;
            if (pin_u)
                e.x = qn.x > 0 ? window : -window;
            else
                e.y = qn.y > 0 ? window : -window;
            if (correct_on_edge(qf, e, pin_u, tol) && std::abs(e.x) <= window + 1e-9 &&
                std::abs(e.y) <= window + 1e-9) {
                out.pts.push_back(e);
            } else {
                out.pts.push_back(qn);  // keep the raw crossing if edge solve failed
            }
            out.exit = pin_u ? (qn.x > 0 ? ExitTag::Right : ExitTag::Left)
                             : (qn.y > 0 ? ExitTag::Top : ExitTag::Bottom);
            return out;
        }

        // closure against the seed
        if (step >= 8) {
            double d = point_segment_distance(seed, q, qn);
            double seglen = (qn - q).norm();
            if (d < 0.3 * seglen && (qn - seed).norm() < 2.0 * seglen &&
                tangent.dot(t0) > 0.86) {
                out.pts.push_back(seed);
                out.closed = true;
                return out;
            }
        }

        out.pts.push_back(qn);
        Vec2 t_new = qf.grad(qn).perp().normalized();
        if (t_new.dot(tangent) < 0) t_new = t_new * -1.0;
        tangent = t_new;
        theta = theta_n;
        q = qn;
    }
    throw TraceError("trace exceeded the step budget; curve may be near-singular");
}

}  // namespace tracedetail

/// Curve points on log-coordinate grid lines, both variable directions and
/// all four quadrants. Each point is corrector-polished.
inline std::vector<SeedPoint> seed_points(const LaurentPoly& p, double window, int grid_n,
                                          const Tolerances& tol = {}) {
    if (window <= 0 || grid_n < 8)
        throw std::invalid_argument("seed_points: window > 0 and grid_n >= 8 required");
    const LaurentPoly f = p.normalized_coeffs();
    std::vector<SeedPoint> seeds;
    auto add = [&](int sx, int sy, double u, double v) {
        if (std::abs(u) > window || std::abs(v) > window) return;
        seeds.push_back({sx, sy, u, v});
    };
    for (int m = 0; m < grid_n; ++m) {
        double t = -window + (m + 0.5) * (2.0 * window / grid_n);
        for (int s : {1, -1}) {
            // u-line: x pinned, solve for real y
            UnivariateSlice sl = slice(f, Var::X, cplx{s * std::exp(t), 0.0});
            for (double y : real_roots(sl))
                if (std::abs(y) > 1e-300) add(s, y > 0 ? 1 : -1, t, std::log(std::abs(y)));
            // v-line: y pinned, solve for real x
            UnivariateSlice sv = slice(f, Var::Y, cplx{s * std::exp(t), 0.0});
            for (double x : real_roots(sv))
                if (std::abs(x) > 1e-300) add(x > 0 ? 1 : -1, s, std::log(std::abs(x)), t);
        }
    }
    // polish and keep the convergent ones
    auto [gx, gy] = log_gauss_pair(f);
    std::vector<SeedPoint> polished;
    for (SeedPoint& sp : seeds) {
        tracedetail::QuadrantField qf{&f, &gx, &gy, sp.sx, sp.sy};
        Vec2 q{sp.u, sp.v};
        try {
            if (!tracedetail::correct(qf, q, tol)) continue;
        } catch (const SingularityError&) {
            continue;
        }
        if (std::abs(q.x) > window || std::abs(q.y) > window) continue;
        if (std::abs(qf.value(q)) > 1e-9 * qf.scale(q)) continue;
        polished.push_back({sp.sx, sp.sy, q.x, q.y});
    }
    std::sort(polished.begin(), polished.end(), [](const SeedPoint& a, const SeedPoint& b) {
        if (a.sx != b.sx) return a.sx > b.sx;
        if (a.sy != b.sy) return a.sy > b.sy;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    std::vector<SeedPoint> dedup;
    for (const SeedPoint& sp : polished) {
        bool dup = false;
        for (auto it = dedup.rbegin(); it != dedup.rend(); ++it) {
            if (it->sx != sp.sx || it->sy != sp.sy) break;
            if (std::abs(it->u - sp.u) < 1e-9 && std::abs(it->v - sp.v) < 1e-9) {
                dup = true;
                break;
            }
        }
        if (!dup) dedup.push_back(sp);
    }
    return dedup;
}

/// Trace the branch through a seed, both directions, until it closes or
/// leaves the window.
inline Arc trace_branch(const LaurentPoly& p, const SeedPoint& seed, double window,
                        const Tolerances& tol = {}) {
    const LaurentPoly f = p.normalized_coeffs();
    auto [gx, gy] = log_gauss_pair(f);
    tracedetail::QuadrantField qf{&f, &gx, &gy, seed.sx, seed.sy};
    Vec2 q{seed.u, seed.v};
    if (!tracedetail::correct(qf, q, tol))
        throw TraceError("seed does not converge onto the curve");
    Vec2 t0 = qf.grad(q).perp().normalized();
    if (t0.norm() == 0.0) throw SingularityError(q.x, q.y, seed.sx, seed.sy);

    Arc arc;
    arc.sx = seed.sx;
    arc.sy = seed.sy;
    tracedetail::HalfTrace fwd = tracedetail::trace_direction(qf, q, t0, window, tol);
    if (fwd.closed) {
        arc.closed = true;
        arc.log_pts.push_back(q);
        arc.log_pts.insert(arc.log_pts.end(), fwd.pts.begin(), fwd.pts.end());
        return arc;
    }
    tracedetail::HalfTrace bwd = tracedetail::trace_direction(qf, q, t0 * -1.0, window, tol);
    arc.log_pts.assign(bwd.pts.rbegin(), bwd.pts.rend());
    arc.log_pts.push_back(q);
    arc.log_pts.insert(arc.log_pts.end(), fwd.pts.begin(), fwd.pts.end());
    arc.left_exit = bwd.exit;
    arc.right_exit = fwd.exit;
    return arc;
}

struct TraceOptions {
    bool fiber_seeding = true;  // extra seeds from Gauss fibers; catches small ovals
    int fiber_directions = 6;
};

namespace tracedetail {

inline Vec2 end_position(const Arc& a, bool back) {
    return back ? a.log_pts.back() : a.log_pts.front();
}

/// Outward direction and drift over the last few steps of an open end.
inline std::pair<Vec2, double> end_direction(const Arc& a, bool back) {
    const std::size_t n = a.log_pts.size();
    const std::size_t k = std::min<std::size_t>(10, n - 1);
    Vec2 tip = back ? a.log_pts[n - 1] : a.log_pts[0];
    Vec2 mid = back ? a.log_pts[n - 1 - k / 2] : a.log_pts[k / 2];
    Vec2 base = back ? a.log_pts[n - 1 - k] : a.log_pts[k];
    Vec2 d1 = (tip - mid).normalized();
    Vec2 d2 = (mid - base).normalized();
    double drift = std::acos(std::clamp(d1.dot(d2), -1.0, 1.0));
    return {(tip - base).normalized(), drift};
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace tracedetail

/// Trace every branch found from grid and fiber seeds; merge duplicates,
/// compute connected components, compact count and tentacle ends.
inline ArcSet trace_all(const LaurentPoly& p, double window, int grid_n,
                        const Tolerances& tol = {}, const TraceOptions& opts = {}) {
    const LaurentPoly f = p.normalized_coeffs();
    auto [gx, gy] = log_gauss_pair(f);
    std::vector<SeedPoint> seeds = seed_points(f, window, grid_n, tol);

    if (opts.fiber_seeding) {
        for (int m = 0; m < opts.fiber_directions; ++m) {
            double theta = (m + 0.5) * M_PI / opts.fiber_directions;
            try {
                FiberReport fr = count_fiber(f, {theta}, tol);
                for (const FiberSolution& s : fr.solutions) {
                    if (!s.real) continue;
                    double x = s.x.real(), y = s.y.real();
                    if (x == 0.0 || y == 0.0) continue;
                    double u = std::log(std::abs(x)), v = std::log(std::abs(y));
                    if (std::abs(u) > window || std::abs(v) > window) continue;
                    seeds.push_back({x > 0 ? 1 : -1, y > 0 ? 1 : -1, u, v});
                }
            } catch (const FiberDegenerateError&) {
                // harmless: grid seeds still cover this input
            }
        }
    }

    ArcSet set;
    set.window = window;
    std::vector<bool> consumed(seeds.size(), false);
    for (std::size_t si = 0; si < seeds.size(); ++si) {
        if (consumed[si]) continue;
        consumed[si] = true;
        Arc arc;
        try {
            arc = trace_branch(f, seeds[si], window, tol);
        } catch (const SingularityError&) {
            throw;
        } catch (const TraceError&) {
            continue;  // seed failed to converge; neighbors will cover the branch
        }
        if (arc.log_pts.size() < 2) continue;

        // consume seeds lying on this arc (same quadrant, close to the
        // polyline, matching Gauss angle so near-pinch twins stay distinct)
        SegmentGrid grid(std::max(tol.max_step, 4.0 * tol.merge));
        for (std::size_t k = 0; k + 1 < arc.log_pts.size(); ++k)
            grid.insert(0, static_cast<int>(k), arc.log_pts[k], arc.log_pts[k + 1]);
        tracedetail::QuadrantField qf{&f, &gx, &gy, arc.sx, arc.sy};
        for (std::size_t sj = 0; sj < seeds.size(); ++sj) {
            if (consumed[sj]) continue;
            if (seeds[sj].sx != arc.sx || seeds[sj].sy != arc.sy) continue;
            Vec2 q{seeds[sj].u, seeds[sj].v};
            double best = 1e300;
            int best_seg = -1;
            for (const SegmentGrid::Entry& e : grid.near(q)) {
                double d = point_segment_distance(
                    q, arc.log_pts[static_cast<std::size_t>(e.seg)],
                    arc.log_pts[static_cast<std::size_t>(e.seg) + 1]);
                if (d < best) {
                    best = d;
                    best_seg = e.seg;
                }
            }
            if (best_seg < 0 || best > tol.merge) continue;
            double a_seed = qf.angle(q);
            Vec2 seg = arc.log_pts[static_cast<std::size_t>(best_seg) + 1] -
                       arc.log_pts[static_cast<std::size_t>(best_seg)];
            double a_arc = RP1Angle::from_components(seg.x, seg.y).theta + M_PI / 2;
            if (a_arc >= M_PI) a_arc -= M_PI;
            if (RP1Angle::distance(a_seed, a_arc) < tol.angle_match) consumed[sj] = true;
        }
        set.arcs.push_back(std::move(arc));
    }

    // safety net: drop duplicate arcs (same quadrant, same endpoints, same length)
    {
        std::vector<Arc> unique_arcs;
        for (Arc& a : set.arcs) {
            bool dup = false;
            for (const Arc& b : unique_arcs) {
                if (a.sx != b.sx || a.sy != b.sy) continue;
                if (std::abs(a.length() - b.length()) > 1e-4 * (1.0 + b.length())) continue;
                double d_ff = (a.log_pts.front() - b.log_pts.front()).norm();
                double d_bb = (a.log_pts.back() - b.log_pts.back()).norm();
                double d_fb = (a.log_pts.front() - b.log_pts.back()).norm();
                double d_bf = (a.log_pts.back() - b.log_pts.front()).norm();
                if (std::min(d_ff + d_bb, d_fb + d_bf) < 2e-4) {
                    dup = true;
                    break;
                }
            }
            if (!dup) unique_arcs.push_back(std::move(a));
        }
        set.arcs = std::move(unique_arcs);
    }

    // deterministic order: quadrant, then first log point
    std::sort(set.arcs.begin(), set.arcs.end(), [](const Arc& a, const Arc& b) {
        if (a.sx != b.sx) return a.sx > b.sx;
        if (a.sy != b.sy) return a.sy > b.sy;
        Vec2 pa = a.log_pts.front(), pb = b.log_pts.front();
        if (pa.x != pb.x) return pa.x < pb.x;
        return pa.y < pb.y;
    });

    const int n = static_cast<int>(set.arcs.size());
    tracedetail::UnionFind uf(n);

    // endpoint adjacency: tentacle twins approach each other near the window
    // boundary, which links arcs across the divisor
    for (int a = 0; a < n; ++a) {
        if (set.arcs[a].closed) continue;
        for (int b = a + 1; b < n; ++b) {
            if (set.arcs[b].closed) continue;
            for (bool ea : {false, true})
                for (bool eb : {false, true}) {
                    Vec2 pa = tracedetail::end_position(set.arcs[a], ea);
                    Vec2 pb = tracedetail::end_position(set.arcs[b], eb);
                    if ((pa - pb).norm() < tol.adjacency) uf.unite(a, b);
                }
        }
    }
    // overlap: branches from different quadrants with the same log image
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (uf.find(a) == uf.find(b)) continue;
            const Arc& A = set.arcs[a];
            const Arc& B = set.arcs[b];
            SegmentGrid grid(0.2);
            for (std::size_t k = 0; k + 1 < B.log_pts.size(); ++k)
                grid.insert(b, static_cast<int>(k), B.log_pts[k], B.log_pts[k + 1]);
            int matches = 0, samples = 0;
            for (std::size_t k = 0; k < A.log_pts.size(); k += 5) {
                ++samples;
                double best = 1e300;
                for (const SegmentGrid::Entry& e : grid.near(A.log_pts[k]))
                    best = std::min(best, point_segment_distance(
                                              A.log_pts[k],
                                              B.log_pts[static_cast<std::size_t>(e.seg)],
                                              B.log_pts[static_cast<std::size_t>(e.seg) + 1]));
                if (best < 1e-6) ++matches;
            }
            if (samples > 0 && matches >= std::max(3, samples / 2)) uf.unite(a, b);
        }
    }

    std::map<int, std::vector<int>> comp;
    for (int a = 0; a < n; ++a) comp[uf.find(a)].push_back(a);
    for (auto& [root, members] : comp) {
        bool compact = true;
        for (int a : members)
            if (!set.arcs[a].closed) compact = false;
        if (compact) ++set.p;
        set.components.push_back(members);
    }
    std::sort(set.components.begin(), set.components.end());

    for (int a = 0; a < n; ++a) {
        if (set.arcs[a].closed) continue;
        for (bool back : {false, true}) {
            OpenEnd e;
            e.arc = a;
            e.at_back = back;
            e.pos = tracedetail::end_position(set.arcs[a], back);
            auto [dir, drift] = tracedetail::end_direction(set.arcs[a], back);
            e.direction = dir;
            e.drift = drift;
            set.open_ends.push_back(e);
        }
    }

    // pair ends by position: each real transverse divisor crossing produces
    // two branch ends converging to the same asymptote
    {
        const std::size_t m = set.open_ends.size();
        std::vector<bool> used(m, false);
        while (true) {
            double best = tol.adjacency;
            int bi = -1, bj = -1;
            for (std::size_t i = 0; i < m; ++i) {
                if (used[i]) continue;
                for (std::size_t j = i + 1; j < m; ++j) {
                    if (used[j]) continue;
                    double d = (set.open_ends[i].pos - set.open_ends[j].pos).norm();
                    if (d < best) {
                        best = d;
                        bi = static_cast<int>(i);
                        bj = static_cast<int>(j);
                    }
                }
            }
            if (bi < 0) break;
            used[static_cast<std::size_t>(bi)] = used[static_cast<std::size_t>(bj)] = true;
            set.end_pairs.push_back({bi, bj});
        }
        for (std::size_t i = 0; i < m; ++i)
            if (!used[i]) ++set.unpaired_ends;
        set.tentacle_count = static_cast<int>(set.end_pairs.size()) + set.unpaired_ends;
    }
    return set;
}

inline std::string quadrant_string(int sx, int sy) {
    std::string s;
    s += sx > 0 ? '+' : '-';
    s += sy > 0 ? '+' : '-';
    return s;
}

/// CSV of all arcs: arc, quadrant, x, y, u, v.
inline std::string to_csv(const ArcSet& set) {
    std::ostringstream out;
    out.precision(17);
    out << "arc,quadrant,x,y,u,v\n";
    for (std::size_t a = 0; a < set.arcs.size(); ++a) {
        const Arc& arc = set.arcs[a];
        for (std::size_t k = 0; k < arc.log_pts.size(); ++k)
            out << a << "," << quadrant_string(arc.sx, arc.sy) << "," << arc.x_at(k) << ","
                << arc.y_at(k) << "," << arc.log_pts[k].x << "," << arc.log_pts[k].y << "\n";
    }
    return out.str();
}

inline nlohmann::ordered_json to_json_summary(const ArcSet& set) {
    return {{"arcs", set.arcs.size()},
            {"components", set.components.size()},
            {"p", set.p},
            {"tentacle_count", set.tentacle_count},
            {"open_ends", set.open_ends.size()},
            {"unpaired_ends", set.unpaired_ends},
            {"window", set.window}};
}

}  // namespace amoebalab
