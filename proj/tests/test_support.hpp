/*
 * Shared helpers for the unit tests: fixed-seed random polynomials and an
 * independent brute-force lattice classifier used as the Pick oracle.
 */
#pragma once

#include <random>
#include <set>
#include <vector>

#include "amoebalab/laurent.hpp"

namespace testsupport {

using amoebalab::LaurentPoly;
using amoebalab::Term;

inline bool collinear(const std::vector<std::pair<int, int>>& pts) {
    if (pts.size() < 3) return true;
    for (std::size_t k = 2; k < pts.size(); ++k) {
        long long c = static_cast<long long>(pts[1].first - pts[0].first) *
                          (pts[k].second - pts[0].second) -
                      static_cast<long long>(pts[1].second - pts[0].second) *
                          (pts[k].first - pts[0].first);
        if (c != 0) return false;
    }
    return true;
}

/// Random polynomial with support in [0, max_exp]^2, coefficients in [-2, 2].
inline LaurentPoly random_poly(std::mt19937_64& rng, int max_exp = 3,
                               int min_terms = 3, int max_terms = 8) {
    std::uniform_int_distribution<int> nterms(min_terms, max_terms);
    std::uniform_int_distribution<int> expo(0, max_exp);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    while (true) {
        int n = nterms(rng);
        std::set<std::pair<int, int>> support;
        while (static_cast<int>(support.size()) < n)
            support.insert({expo(rng), expo(rng)});
        std::vector<std::pair<int, int>> pts(support.begin(), support.end());
        if (collinear(pts)) continue;
        std::vector<Term> terms;
        for (auto [i, j] : pts) {
            double c = coeff(rng);
            if (c == 0.0) c = 0.5;
            terms.push_back({i, j, c});
        }
        return LaurentPoly(std::move(terms));
    }
}

/// Independent point-vs-polygon classifier (winding of cross signs) for the
/// brute-force lattice counting oracle. 0 = outside, 1 = boundary, 2 = interior.
inline int classify_point(const std::vector<std::pair<long long, long long>>& hull,
                          long long x, long long y) {
    bool all_pos = true;
    for (std::size_t k = 0; k < hull.size(); ++k) {
        auto [ax, ay] = hull[k];
        auto [bx, by] = hull[(k + 1) % hull.size()];
        long long c = (bx - ax) * (y - ay) - (by - ay) * (x - ax);
        if (c < 0) return 0;
        if (c == 0) {
            if (x < std::min(ax, bx) || x > std::max(ax, bx) ||
                y < std::min(ay, by) || y > std::max(ay, by))
                return 0;
            all_pos = false;
        }
    }
    return all_pos ? 2 : 1;
}

}  // namespace testsupport
