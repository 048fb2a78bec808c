/*
 * gauss.hpp
 * ---------
 * The logarithmic Gauss map gamma(z1, z2) = [z1 df/dz1 : z2 df/dz2] and its
 * fibers over real directions.
 *
 * The fiber over theta in RP^1 is the zero set in the torus of
 *     { f = 0,  sin(theta) * z1 f_1 - cos(theta) * z2 f_2 = 0 }.
 * Both polynomials are cleared of negative exponents and one variable is
 * eliminated through the Sylvester matrix, treated as a matrix polynomial
 * S(x) and solved as a generalized eigenvalue problem (companion-block
 * linearization + QZ). That keeps root recovery stable across the very wide
 * coordinate ranges fiber solutions can have. Candidate pairs are then
 * polished by Newton iteration on the full 2x2 system and filtered by
 * relative residual.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "amoebalab/config.hpp"
#include "amoebalab/laurent.hpp"
#include "amoebalab/parallel.hpp"
#include "amoebalab/roots.hpp"

namespace amoebalab {

class FiberDegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UndefinedDirectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point of RP^1, stored as an angle in [0, pi).
struct RP1Angle {
    double theta = 0.0;

    static RP1Angle from_components(double a, double b) {
        double t = std::atan2(b, a);
        if (t < 0.0) t += M_PI;
        if (t >= M_PI) t -= M_PI;
        return {t};
    }

    /// Projective distance, in [0, pi/2].
    static double distance(double t1, double t2) {
        double d = std::fmod(std::abs(t1 - t2), M_PI);
        return std::min(d, M_PI - d);
    }
};

/// Direction of the logarithmic Gauss map at a real curve point.
inline RP1Angle gauss_direction(const LaurentPoly& p, double x, double y) {
    if (x == 0.0 || y == 0.0)
        throw DomainError("gauss_direction: point must lie in the real torus");
    auto [gx, gy] = log_gauss_pair(p);
    double a = gx.eval_real(x, y);
    double b = gy.eval_real(x, y);
    double sa = gx.scale(std::abs(x), std::abs(y));
    double sb = gy.scale(std::abs(x), std::abs(y));
    if (std::abs(a) <= 1e-9 * sa && std::abs(b) <= 1e-9 * sb)
        throw UndefinedDirectionError("both Gauss components vanish at the point");
    return RP1Angle::from_components(a, b);
}

/// The fiber system over a direction: (f, sin(theta) z1 f_1 - cos(theta) z2 f_2).
inline std::pair<LaurentPoly, LaurentPoly> fiber_system(const LaurentPoly& p,
                                                        RP1Angle theta) {
    const double st = std::sin(theta.theta);
    const double ct = std::cos(theta.theta);
    std::vector<Term> gt;
    for (const Term& t : p.terms()) {
        double c = t.c * (t.i * st - t.j * ct);
        if (c != 0.0) gt.push_back({t.i, t.j, c});
    }
    return {p, LaurentPoly(std::move(gt))};
}

struct FiberSolution {
    cplx x;
    cplx y;
    bool real = false;
    bool ambiguous = false;  // imaginary part in the (tol, 3 tol] gray zone
};

struct FiberReport {
    double theta = 0.0;
    int total_count = 0;
    int real_count = 0;
    int expected = 0;           // 2 vol(Delta), filled by the caller/scan
    double max_residual = 0.0;  // relative back-substitution error
    bool ill_conditioned = false;
    bool has_ambiguous = false;
    std::vector<FiberSolution> solutions;
};

namespace detail {

/// Coefficient matrix of a cleared polynomial: m(i, j) multiplies x^i y^j.
struct ClearedPoly {
    Eigen::MatrixXd m;
    int dx() const { return static_cast<int>(m.rows()) - 1; }
    int dy() const { return static_cast<int>(m.cols()) - 1; }
};

inline ClearedPoly clear_poly(const LaurentPoly& p) {
    int imin = 0, jmin = 0, imax = 0, jmax = 0;
    bool first = true;
    for (const Term& t : p.terms()) {
        if (first) {
            imin = imax = t.i;
            jmin = jmax = t.j;
            first = false;
        } else {
            imin = std::min(imin, t.i);
            imax = std::max(imax, t.i);
            jmin = std::min(jmin, t.j);
            jmax = std::max(jmax, t.j);
        }
    }
    ClearedPoly cp;
    cp.m = Eigen::MatrixXd::Zero(imax - imin + 1, jmax - jmin + 1);
    for (const Term& t : p.terms()) cp.m(t.i - imin, t.j - jmin) += t.c;
    return cp;
}

inline ClearedPoly transpose(const ClearedPoly& c) { return {c.m.transpose()}; }

/// Slice of a cleared polynomial at a fixed x; ascending coefficients in y.
inline std::vector<cplx> cleared_slice(const ClearedPoly& c, cplx x) {
    std::vector<cplx> out(static_cast<std::size_t>(c.dy()) + 1, cplx{0.0, 0.0});
    cplx xp{1.0, 0.0};
    for (int i = 0; i <= c.dx(); ++i) {
        for (int j = 0; j <= c.dy(); ++j) out[static_cast<std::size_t>(j)] += c.m(i, j) * xp;
        xp *= x;
    }
    return out;
}

/// Sylvester matrix of (F, G) in y, evaluated at a fixed x.
inline Eigen::MatrixXcd sylvester_at(const ClearedPoly& F, const ClearedPoly& G, cplx x) {
    const int m = F.dy(), n = G.dy();
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(m + n, m + n);
    std::vector<cplx> fy = cleared_slice(F, x);
    std::vector<cplx> gy = cleared_slice(G, x);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) S(r, r + k) = fy[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) S(n + r, r + k) = gy[static_cast<std::size_t>(n - k)];
    return S;
}

/// Finite eigenvalues of the matrix polynomial S(x) = sum_k S_k x^k obtained
/// from the Sylvester matrix of (F, G) in y. Companion-block linearization,
/// real QZ.
inline std::vector<cplx> pencil_eigenvalues(const ClearedPoly& F, const ClearedPoly& G) {
    const int m = F.dy(), n = G.dy();
    const int N = m + n;
    const int dx = std::max(F.dx(), G.dx());
    if (N == 0 || dx == 0) return {};
    std::vector<Eigen::MatrixXd> Sk(static_cast<std::size_t>(dx) + 1,
                                    Eigen::MatrixXd::Zero(N, N));
    for (int i = 0; i <= F.dx(); ++i)
        for (int r = 0; r < n; ++r)
            for (int k = 0; k <= m; ++k)
                Sk[static_cast<std::size_t>(i)](r, r + k) = F.m(i, m - k);
    for (int i = 0; i <= G.dx(); ++i)
        for (int r = 0; r < m; ++r)
            for (int k = 0; k <= n; ++k)
                Sk[static_cast<std::size_t>(i)](n + r, r + k) = G.m(i, n - k);

    const int dim = N * dx;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd B = Eigen::MatrixXd::Identity(dim, dim);
    for (int b = 0; b + 1 < dx; ++b)
        A.block(b * N, (b + 1) * N, N, N).setIdentity();
    for (int k = 0; k < dx; ++k)
        A.block((dx - 1) * N, k * N, N, N) = -Sk[static_cast<std::size_t>(k)];
    B.block((dx - 1) * N, (dx - 1) * N, N, N) = Sk[static_cast<std::size_t>(dx)];

    std::vector<cplx> out;
    Eigen::RealQZ<Eigen::MatrixXd> qz(dim);
    qz.compute(A, B, false);
    if (qz.info() == Eigen::Success) {
        // read the generalized eigenvalues off the quasi-triangular pair
        const Eigen::MatrixXd& S = qz.matrixS();
        const Eigen::MatrixXd& T = qz.matrixT();
        int i = 0;
        while (i < dim) {
            bool two = i + 1 < dim &&
                       std::abs(S(i + 1, i)) >
                           1e-14 * (std::abs(S(i, i)) + std::abs(S(i + 1, i + 1)));
            if (!two) {
                double alpha = S(i, i), beta = T(i, i);
                if (std::abs(beta) > 1e-12 * (std::abs(alpha) + std::abs(beta)))
                    out.push_back(cplx{alpha / beta, 0.0});
                i += 1;
            } else {
                // det(S2 - lambda T2) with T2 upper triangular
                double a = T(i, i) * T(i + 1, i + 1);
                double b = -(S(i, i) * T(i + 1, i + 1) + T(i, i) * S(i + 1, i + 1) -
                             S(i + 1, i) * T(i, i + 1));
                double c = S(i, i) * S(i + 1, i + 1) - S(i, i + 1) * S(i + 1, i);
                double scale = std::abs(b) + std::sqrt(std::abs(a * c));
                if (std::abs(a) > 1e-14 * scale) {
                    cplx disc = std::sqrt(cplx{b * b - 4.0 * a * c, 0.0});
                    out.push_back((-b + disc) / (2.0 * a));
                    out.push_back((-b - disc) / (2.0 * a));
                } else if (std::abs(b) > 0.0) {
                    out.push_back(cplx{-c / b, 0.0});
                }
                i += 2;
            }
        }
        return out;
    }

    // QZ failed to converge (it can, on sparse companion structures). Use a
    // shift-invert transform instead: the eigenvalues of (A - s B)^{-1} B
    // are 1/(x - s), with infinite x mapped harmlessly to zero.
    static const double shifts[] = {0.6180339887498949, -1.3819660112501051,
                                    2.414213562373095};
    for (double s : shifts) {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A - s * B);
        if (!lu.isInvertible()) continue;
        Eigen::EigenSolver<Eigen::MatrixXd> es(lu.solve(B), false);
        if (es.info() != Eigen::Success) continue;
        for (int k = 0; k < dim; ++k) {
            cplx nu = es.eigenvalues()(k);
            if (std::abs(nu) > 1e-12) out.push_back(s + 1.0 / nu);
        }
        return out;
    }
    throw FiberDegenerateError("pencil eigenvalues unavailable: singular for all shifts");
}

/// Newton iteration on the full system (f, g) from a candidate pair.
inline std::pair<cplx, cplx> polish_system(const LaurentPoly& f, const LaurentPoly& g,
                                           cplx x, cplx y) {
    auto deriv = [](const LaurentPoly& p, cplx x_, cplx y_, bool by_x) {
        cplx acc{0.0, 0.0};
        for (const Term& t : p.terms()) {
            int e = by_x ? t.i : t.j;
            if (e == 0) continue;
            acc += t.c * static_cast<double>(e) *
                   LaurentPoly::ipow(x_, by_x ? t.i - 1 : t.i) *
                   LaurentPoly::ipow(y_, by_x ? t.j : t.j - 1);
        }
        return acc;
    };
    for (int it = 0; it < 12; ++it) {
        if (x == cplx{0.0, 0.0} || y == cplx{0.0, 0.0}) break;
        cplx fv = f.eval(x, y), gv = g.eval(x, y);
        cplx fx = deriv(f, x, y, true), fy = deriv(f, x, y, false);
        cplx gx = deriv(g, x, y, true), gy = deriv(g, x, y, false);
        cplx det = fx * gy - fy * gx;
        if (std::abs(det) == 0.0) break;
        cplx dx = (fv * gy - gv * fy) / det;
        cplx dy = (fx * gv - gx * fv) / det;
        x -= dx;
        y -= dy;
        if (std::abs(dx) + std::abs(dy) < 1e-15 * (1.0 + std::abs(x) + std::abs(y))) break;
    }
    return {x, y};
}

}  // namespace detail

/// Solve the fiber system over theta and classify the solutions.
/// Throws FiberDegenerateError when the resultant vanishes identically
/// (the caller is expected to perturb theta and retry).
inline FiberReport count_fiber(const LaurentPoly& p, RP1Angle theta,
                               const Tolerances& tol = {}) {
    FiberReport rep;
    rep.theta = theta.theta;
    const LaurentPoly f = p.normalized_coeffs();
    const LaurentPoly g = fiber_system(f, theta).second;
    if (g.empty())
        throw FiberDegenerateError("fiber system collapsed to (f, 0)");

    detail::ClearedPoly F = detail::clear_poly(f);
    detail::ClearedPoly G = detail::clear_poly(g);

    // A cleared polynomial reduced to a nonzero constant is a unit: no zeros
    // in the torus, so the fiber is empty.
    if ((F.dx() == 0 && F.dy() == 0) || (G.dx() == 0 && G.dy() == 0)) return rep;

    // Identically vanishing resultant (f shares a component of constant
    // Gauss direction with the fiber equation): the determinant of the
    // Sylvester matrix collapses at every x for this theta but not for a
    // nearby one, which gives a scale-free degeneracy test.
    if (F.dy() > 0 && G.dy() > 0) {
        detail::ClearedPoly Gnear =
            detail::clear_poly(fiber_system(f, {theta.theta + 1e-3}).second);
        static const cplx probes[] = {{0.73, 0.21}, {-1.31, 0.47}, {0.11, -1.57}};
        bool collapsed = Gnear.dy() == G.dy() && Gnear.dx() == G.dx();
        if (collapsed)
            for (const cplx& x : probes) {
                double here = std::abs(detail::sylvester_at(F, G, x).determinant());
                double near = std::abs(detail::sylvester_at(F, Gnear, x).determinant());
                if (here > 1e-10 * near) {
                    collapsed = false;
                    break;
                }
            }
        if (collapsed)
            throw FiberDegenerateError(
                "resultant vanishes identically: component with constant Gauss direction");
    }

    // Candidate x values. If g became univariate the elimination is trivial;
    // otherwise pick the orientation with the smaller linearized pencil.
    std::vector<cplx> xs;
    bool swapped = false;
    if (G.dy() == 0) {
        std::vector<cplx> gc(static_cast<std::size_t>(G.dx()) + 1);
        for (int i = 0; i <= G.dx(); ++i) gc[static_cast<std::size_t>(i)] = G.m(i, 0);
        xs = complex_roots(gc);
    } else if (G.dx() == 0) {
        swapped = true;
        std::vector<cplx> gc(static_cast<std::size_t>(G.dy()) + 1);
        for (int j = 0; j <= G.dy(); ++j) gc[static_cast<std::size_t>(j)] = G.m(0, j);
        xs = complex_roots(gc);
    } else {
        long keep = static_cast<long>(F.dy() + G.dy()) * std::max(F.dx(), G.dx());
        long swap = static_cast<long>(F.dx() + G.dx()) * std::max(F.dy(), G.dy());
        swapped = swap < keep;
        detail::ClearedPoly Fe = swapped ? detail::transpose(F) : F;
        detail::ClearedPoly Ge = swapped ? detail::transpose(G) : G;
        xs = detail::pencil_eigenvalues(Fe, Ge);
    }

    detail::ClearedPoly Fslice = swapped ? detail::transpose(F) : F;

    std::erase_if(xs, [&](const cplx& z) { return std::abs(z) <= tol.cstar_min; });
    std::sort(xs.begin(), xs.end(), [](const cplx& a, const cplx& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    std::vector<cplx> clusters;
    for (const cplx& r : xs) {
        if (!clusters.empty() &&
            std::abs(r - clusters.back()) < tol.cluster * std::max(1.0, std::abs(r)))
            continue;
        clusters.push_back(r);
    }

    std::vector<FiberSolution> sols;
    bool ill = false;
    for (const cplx& xc : clusters) {
        std::vector<cplx> ypoly = detail::cleared_slice(Fslice, xc);
        for (const cplx& yc : complex_roots(std::span<const cplx>(ypoly))) {
            if (std::abs(yc) <= tol.cstar_min) continue;
            cplx x = swapped ? yc : xc;
            cplx y = swapped ? xc : yc;
            auto [xp, yp] = detail::polish_system(f, g, x, y);
            if (std::abs(xp) <= tol.cstar_min || std::abs(yp) <= tol.cstar_min) continue;
            double rf = std::abs(f.eval(xp, yp)) / std::max(f.scale(xp, yp), 1e-300);
            double rg = std::abs(g.eval(xp, yp)) / std::max(g.scale(xp, yp), 1e-300);
            if (rf > tol.fiber_residual || rg > tol.fiber_residual) continue;
            bool dup = false;
            for (const FiberSolution& s : sols) {
                double sep = std::abs(s.x - xp) + std::abs(s.y - yp);
                if (sep < tol.cluster * std::max({1.0, std::abs(xp), std::abs(yp)})) {
                    dup = true;
                    break;
                }
                if (sep < 1e-5 * std::max({1.0, std::abs(xp), std::abs(yp)})) ill = true;
            }
            if (dup) continue;
            FiberSolution s;
            s.x = xp;
            s.y = yp;
            double ix = std::abs(xp.imag()) / std::max(1.0, std::abs(xp));
            double iy = std::abs(yp.imag()) / std::max(1.0, std::abs(yp));
            s.real = ix <= tol.real_imag && iy <= tol.real_imag;
            s.ambiguous = !s.real && ix <= tol.near_miss * tol.real_imag &&
                          iy <= tol.near_miss * tol.real_imag;
            rep.max_residual = std::max(rep.max_residual, std::max(rf, rg));
            sols.push_back(s);
        }
    }
    rep.total_count = static_cast<int>(sols.size());
    for (const FiberSolution& s : sols) {
        if (s.real) ++rep.real_count;
        if (s.ambiguous) rep.has_ambiguous = true;
    }
    rep.ill_conditioned = ill;
    rep.solutions = std::move(sols);
    return rep;
}

struct ScanSample {
    double theta = 0.0;
    int total = 0;
    int real = 0;
    bool ambiguous = false;
    bool degenerate = false;  // all retries failed
};

struct ScanReport {
    std::vector<ScanSample> samples;
    int expected = 0;  // 2 vol(Delta)
    bool totally_real = false;
    bool firm = false;  // no ambiguous classifications anywhere
    int min_real = 0;
    int max_real = 0;
    double fraction_full = 0.0;
    std::vector<double> flagged_thetas;  // samples with total < expected
};

/// Fiber counts at midpoints theta_k = (k + 1/2) pi / n. Samples hitting a
/// degenerate direction are re-tried at seeded perturbations.
inline std::vector<ScanSample> sample_fibers(const LaurentPoly& p, int n_samples,
                                             const Tolerances& tol = {}, int threads = 1,
                                             std::uint64_t seed = 0) {
    std::vector<ScanSample> samples(static_cast<std::size_t>(n_samples));
    std::vector<std::uint64_t> retry_seeds(static_cast<std::size_t>(n_samples));
    {
        std::mt19937_64 rng(seed);
        for (auto& s : retry_seeds) s = rng();
    }
    parallel_for(static_cast<std::size_t>(n_samples), threads, [&](std::size_t k) {
        double theta = (static_cast<double>(k) + 0.5) * M_PI / n_samples;
        ScanSample& s = samples[k];
        std::mt19937_64 rng(retry_seeds[k]);
        std::uniform_real_distribution<double> jitter(1.0, 2.0);
        for (int attempt = 0;; ++attempt) {
            try {
                FiberReport fr = count_fiber(p, {theta}, tol);
                s.theta = theta;
                s.total = fr.total_count;
                s.real = fr.real_count;
                s.ambiguous = fr.has_ambiguous;
                break;
            } catch (const FiberDegenerateError&) {
                if (attempt >= 5) {
                    s.theta = theta;
                    s.degenerate = true;
                    break;
                }
                theta += 1e-4 * jitter(rng);
            }
        }
    });
    return samples;
}

/// Lemma-style total reality check over sampled directions.
inline ScanReport totally_real_scan(const LaurentPoly& p, int n_samples, int expected,
                                    const Tolerances& tol = {}, int threads = 1,
                                    std::uint64_t seed = 0) {
    if (n_samples < 16) throw std::invalid_argument("totally_real_scan: n_samples >= 16");
    ScanReport rep;
    rep.expected = expected;
    rep.samples = sample_fibers(p, n_samples, tol, threads, seed);
    int degenerate = 0, full = 0;
    bool any = false;
    bool any_ambiguous = false;
    for (const ScanSample& s : rep.samples) {
        if (s.degenerate) {
            ++degenerate;
            continue;
        }
        if (!any) {
            rep.min_real = rep.max_real = s.real;
            any = true;
        }
        rep.min_real = std::min(rep.min_real, s.real);
        rep.max_real = std::max(rep.max_real, s.real);
        if (s.total == expected && s.real == expected)
            ++full;
        else
            rep.flagged_thetas.push_back(s.theta);
        if (s.ambiguous) any_ambiguous = true;
    }
    if (degenerate * 10 > n_samples)
        throw FiberDegenerateError("more than 10% of scan samples degenerate");
    rep.fraction_full = static_cast<double>(full) / static_cast<double>(n_samples);
    rep.totally_real = (full == n_samples);
    rep.firm = !any_ambiguous && degenerate == 0;
    return rep;
}

inline nlohmann::ordered_json to_json(const ScanReport& r) {
    nlohmann::ordered_json samples = nlohmann::ordered_json::array();
    for (const ScanSample& s : r.samples)
        samples.push_back({{"theta", s.theta},
                           {"total", s.total},
                           {"real", s.real},
                           {"ambiguous", s.ambiguous},
                           {"degenerate", s.degenerate}});
    return {{"samples", samples},
            {"expected", r.expected},
            {"totally_real", r.totally_real},
            {"firm", r.firm},
            {"min_real", r.min_real},
            {"max_real", r.max_real},
            {"fraction_full", r.fraction_full},
            {"flagged_thetas", r.flagged_thetas}};
}

}  // namespace amoebalab
