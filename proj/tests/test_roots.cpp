#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "amoebalab/roots.hpp"

using namespace amoebalab;
using Catch::Approx;

namespace {

std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> c{cplx{1.0, 0.0}};
    for (const cplx& r : roots) {
        std::vector<cplx> next(c.size() + 1, cplx{0.0, 0.0});
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = next;
    }
    return c;
}

double match_roots(std::vector<cplx> found, std::vector<cplx> expected) {
    REQUIRE(found.size() == expected.size());
    double worst = 0.0;
    for (const cplx& e : expected) {
        auto it = std::min_element(found.begin(), found.end(), [&](cplx a, cplx b) {
            return std::abs(a - e) < std::abs(b - e);
        });
        worst = std::max(worst, std::abs(*it - e));
        found.erase(it);
    }
    return worst;
}

}  // namespace

TEST_CASE("cubic with integer roots") {
    std::vector<cplx> c = poly_from_roots({{1, 0}, {2, 0}, {-3, 0}});
    CHECK(match_roots(complex_roots(c), {{1, 0}, {2, 0}, {-3, 0}}) < 1e-10);
}

TEST_CASE("random polynomials recover their roots") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<cplx> roots;
        int n = 2 + static_cast<int>(rng() % 6);
        for (int k = 0; k < n; ++k) roots.push_back({u(rng), u(rng)});
        std::vector<cplx> c = poly_from_roots(roots);
        CHECK(match_roots(complex_roots(c), roots) < 1e-7);
    }
}

TEST_CASE("double roots cluster tightly") {
    std::vector<cplx> c = poly_from_roots({{1, 0}, {1, 0}, {-2, 0}});
    auto r = complex_roots(c);
    REQUIRE(r.size() == 3);
    int near_one = 0;
    for (const cplx& z : r)
        if (std::abs(z - cplx{1, 0}) < 1e-6) ++near_one;
    CHECK(near_one == 2);
}

TEST_CASE("tiny leading coefficients are trimmed") {
    // 1e-16*y^3 + y - 1: effectively linear
    std::vector<cplx> c{{-1, 0}, {1, 0}, {0, 0}, {1e-16, 0}};
    auto r = complex_roots(c);
    REQUIRE(r.size() == 1);
    CHECK(std::abs(r[0] - cplx{1, 0}) < 1e-12);
}

TEST_CASE("real root filter") {
    UnivariateSlice s;
    s.coeffs = {{1, 0}, {0, 0}, {1, 0}};  // y^2 + 1
    CHECK(real_roots(s).empty());
    s.coeffs = {{-4, 0}, {0, 0}, {1, 0}};  // y^2 - 4
    auto r = real_roots(s);
    REQUIRE(r.size() == 2);
    std::sort(r.begin(), r.end());
    CHECK(r[0] == Approx(-2.0));
    CHECK(r[1] == Approx(2.0));
}
