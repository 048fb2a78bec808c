/*
 * roots.hpp
 * ---------
 * Univariate root finding through companion-matrix eigenvalues, with a few
 * Newton polishing steps on top.
 */
#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "amoebalab/laurent.hpp"

namespace amoebalab {

namespace detail {

inline cplx horner(std::span<const cplx> coeffs, cplx t) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
    return acc;
}

inline cplx horner_deriv(std::span<const cplx> coeffs, cplx t) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = coeffs.size(); k-- > 1;)
        acc = acc * t + coeffs[k] * static_cast<double>(k);
    return acc;
}

}  // namespace detail

/// Roots of a dense complex polynomial (ascending coefficients). Leading
/// coefficients below rel_trim * max|c| are discarded before forming the
/// companion matrix. Multiple roots come out as eigenvalue clusters.
inline std::vector<cplx> complex_roots(std::span<const cplx> ascending,
                                       double rel_trim = 1e-13) {
    double mx = 0.0;
    for (const cplx& c : ascending) mx = std::max(mx, std::abs(c));
    if (mx == 0.0) return {};
    std::vector<cplx> c(ascending.begin(), ascending.end());
    while (c.size() > 1 && std::abs(c.back()) < rel_trim * mx) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int r = 1; r < n; ++r) comp(r, r - 1) = 1.0;
    for (int r = 0; r < n; ++r) comp(r, n - 1) = -c[static_cast<std::size_t>(r)] / c.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<cplx> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        cplx r = es.eigenvalues()(k);
        // Newton polish; harmless at multiple roots, sharpens simple ones.
        for (int it = 0; it < 4; ++it) {
            cplx d = detail::horner_deriv(c, r);
            if (std::abs(d) == 0.0) break;
            cplx step = detail::horner(c, r) / d;
            r -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(r))) break;
        }
        roots.push_back(r);
    }
    return roots;
}

inline std::vector<cplx> complex_roots(const UnivariateSlice& s) {
    return complex_roots(std::span<const cplx>(s.coeffs));
}

/// Real roots of a slice with (numerically) real coefficients.
inline std::vector<double> real_roots(const UnivariateSlice& s, double imag_tol = 1e-9) {
    std::vector<double> out;
    for (const cplx& r : complex_roots(s))
        if (std::abs(r.imag()) <= imag_tol * std::max(1.0, std::abs(r)))
            out.push_back(r.real());
    return out;
}

}  // namespace amoebalab
