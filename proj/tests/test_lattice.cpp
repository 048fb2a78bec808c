#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "amoebalab/lattice.hpp"
#include "test_support.hpp"

using namespace amoebalab;
using Catch::Approx;

namespace {

std::vector<std::pair<long long, long long>> hull_of(const NewtonPolygon& np) {
    std::vector<std::pair<long long, long long>> h;
    for (const LatticePoint& v : np.vertices) h.push_back({v.x, v.y});
    return h;
}

// brute-force (g, s) over the bounding box with the independent classifier
std::pair<long long, long long> brute_counts(const NewtonPolygon& np) {
    auto hull = hull_of(np);
    long long xmin = hull[0].first, xmax = xmin, ymin = hull[0].second, ymax = ymin;
    for (auto [x, y] : hull) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    long long g = 0, s = 0;
    for (long long x = xmin; x <= xmax; ++x)
        for (long long y = ymin; y <= ymax; ++y) {
            int c = testsupport::classify_point(hull, x, y);
            if (c == 2) ++g;
            if (c == 1) ++s;
        }
    return {g, s};
}

}  // namespace

TEST_CASE("unit triangle invariants") {
    NewtonPolygon np = newton_polygon(parse("1 + x + y"));
    REQUIRE(np.vertices.size() == 3);
    CHECK(np.vol == Rational{1, 2});
    CHECK(np.g == 0);
    CHECK(np.s == 3);
    CHECK(np.pick_ok());
    CHECK(curvature_bound(np) == Approx(M_PI));
    auto [g, s] = lattice_counts(np);
    CHECK(g == 0);
    CHECK(s == 3);
}

TEST_CASE("doubled triangle invariants") {
    NewtonPolygon np = newton_polygon(parse("x^2 + y^2 + 1"));
    CHECK(np.vol == Rational{2, 1});
    CHECK(np.g == 0);
    CHECK(np.s == 6);
    CHECK(np.pick_ok());
    CHECK(curvature_bound(np) == Approx(4.0 * M_PI));
    auto [g, s] = lattice_counts(np);
    CHECK(g == 0);
    CHECK(s == 6);
}

TEST_CASE("dense cubic invariants match brute force") {
    std::vector<Term> terms;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) terms.push_back({i, j, 1.0});
    NewtonPolygon np = newton_polygon(LaurentPoly(std::move(terms)));
    CHECK(np.vol == Rational{9, 2});
    CHECK(np.g == 1);
    CHECK(np.s == 9);
    CHECK(np.pick_ok());
    CHECK(curvature_bound(np) == Approx(9.0 * M_PI));
    auto [bg, bs] = brute_counts(np);
    CHECK(np.g == bg);
    CHECK(np.s == bs);
}

TEST_CASE("square support") {
    NewtonPolygon np = newton_polygon(parse("1 + x^2 + y^2 + x^2*y^2 + x*y"));
    auto [g, s] = lattice_counts(np);
    CHECK(g == 1);
    CHECK(s == 8);
    CHECK(np.vol == Rational{4, 1});
    CHECK(np.pick_ok());
}

TEST_CASE("edges carry primitive outward normals and integer lengths") {
    NewtonPolygon np = newton_polygon(parse("x^2 + y^2 + 1"));
    long long sum_d = 0;
    for (const PolygonEdge& e : np.edges) {
        sum_d += e.d;
        CHECK(std::gcd(std::abs(e.normal.x), std::abs(e.normal.y)) == 1);
    }
    CHECK(sum_d == np.s);
    // outward: normals of the CCW hull point away from the centroid
    double cx = 0, cy = 0;
    for (const LatticePoint& v : np.vertices) {
        cx += static_cast<double>(v.x) / np.vertices.size();
        cy += static_cast<double>(v.y) / np.vertices.size();
    }
    for (std::size_t k = 0; k < np.edges.size(); ++k) {
        const LatticePoint& a = np.vertices[k];
        double off = (a.x - cx) * np.edges[k].normal.x + (a.y - cy) * np.edges[k].normal.y;
        CHECK(off > 0.0);
    }
}

TEST_CASE("moment map at symmetric points") {
    NewtonPolygon tri = newton_polygon(parse("1 + x + y"));
    MomentImage m = moment_map(tri, -1.0, -1.0);
    CHECK(m.x == Approx(1.0 / 3.0));
    CHECK(m.y == Approx(1.0 / 3.0));

    // x-dominant point drives the image toward the vertex (1, 0)
    MomentImage far = moment_map(tri, 1e6, 1.0);
    CHECK(far.x == Approx(1.0).margin(1e-4));
    CHECK(far.y == Approx(0.0).margin(1e-4));

    // equal weights on the six lattice points of conv{(0,0),(2,0),(0,2)}:
    // (0,0),(1,0),(2,0),(0,1),(1,1),(0,2) average to (2/3, 2/3)
    NewtonPolygon tri2 = newton_polygon(parse("x^2 + y^2 + 1"));
    MomentImage c = moment_map(tri2, 1.0, 1.0);
    CHECK(c.x == Approx(2.0 / 3.0));
    CHECK(c.y == Approx(2.0 / 3.0));

    CHECK_THROWS_AS(moment_map(tri, 0.0, 1.0), DomainError);
}

TEST_CASE("Pick identity on 200 random supports") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly p = testsupport::random_poly(rng, 5, 3, 9);
        NewtonPolygon np = newton_polygon(p);
        // exact rational identity: 2*vol = den*(2g + s - 2)
        CHECK(np.pick_ok());
        auto [bg, bs] = brute_counts(np);
        CHECK(np.g == bg);
        CHECK(np.s == bs);
        long long sum_d = 0;
        for (const PolygonEdge& e : np.edges) sum_d += e.d;
        CHECK(sum_d == np.s);

        // the exterior angles of any convex polygon sum to 2 pi
        double ext = 0.0;
        const std::size_t n = np.edges.size();
        for (std::size_t k = 0; k < n; ++k) {
            const LatticePoint& n0 = np.edges[k].normal;
            const LatticePoint& n1 = np.edges[(k + 1) % n].normal;
            double a0 = std::atan2(static_cast<double>(n0.y), static_cast<double>(n0.x));
            double a1 = std::atan2(static_cast<double>(n1.y), static_cast<double>(n1.x));
            double d = a1 - a0;
            while (d < 0) d += 2.0 * M_PI;
            while (d >= 2.0 * M_PI) d -= 2.0 * M_PI;
            ext += d;
        }
        CHECK(ext == Approx(2.0 * M_PI).epsilon(1e-9));
    }
}

TEST_CASE("moment map lands strictly inside on random inputs") {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly p = testsupport::random_poly(rng, 4);
        NewtonPolygon np = newton_polygon(p);
        double x = u(rng), y = u(rng);
        if (x == 0.0 || y == 0.0) continue;
        MomentImage m = moment_map(np, x, y);
        for (std::size_t k = 0; k < np.vertices.size(); ++k) {
            const LatticePoint& a = np.vertices[k];
            const LatticePoint& b = np.vertices[(k + 1) % np.vertices.size()];
            double cross = (b.x - a.x) * (m.y - a.y) - (b.y - a.y) * (m.x - a.x);
            CHECK(cross > 0.0);
        }
    }
}

TEST_CASE("degenerate supports are rejected") {
    CHECK_THROWS_AS(newton_polygon(LaurentPoly({{0, 0, 1.0}, {1, 1, 1.0}, {2, 2, 1.0}})),
                    DegenerateSupportError);
}
