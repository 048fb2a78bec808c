#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "amoebalab/curvature.hpp"

using namespace amoebalab;
using Catch::Approx;

TEST_CASE("line arcs carry pi/2, pi/4, pi/4 with no inflections") {
    LaurentPoly line = parse("1 + x + y");
    ArcSet set = trace_all(line, 12.0, 32);
    REQUIRE(set.arcs.size() == 3);
    std::vector<double> per;
    for (const Arc& a : set.arcs) {
        ArcCurvature ac = arc_total_curvature(a, line);
        CHECK(ac.inflections == 0);
        per.push_back(ac.total);
    }
    std::sort(per.begin(), per.end());
    CHECK(per[0] == Approx(M_PI / 4).margin(1e-2));
    CHECK(per[1] == Approx(M_PI / 4).margin(1e-2));
    CHECK(per[2] == Approx(M_PI / 2).margin(1e-2));
}

TEST_CASE("reversing an arc leaves its total curvature bitwise unchanged") {
    LaurentPoly line = parse("1 + x + y");
    ArcSet set = trace_all(line, 12.0, 32);
    for (const Arc& a : set.arcs) {
        Arc rev = a;
        std::reverse(rev.log_pts.begin(), rev.log_pts.end());
        std::swap(rev.left_exit, rev.right_exit);
        CHECK(arc_total_curvature(a, line).total == arc_total_curvature(rev, line).total);
    }
}

TEST_CASE("line total curvature is maximal: pi with eq2 bound 3 pi") {
    LaurentPoly line = parse("1 + x + y");
    NewtonPolygon np = newton_polygon(line);
    ArcSet set = trace_all(line, 12.0, 32);
    CurvatureReport rep = total_curvature(set, line, np);
    CHECK(rep.total == Approx(M_PI).margin(1e-2));
    CHECK(rep.bound == Approx(M_PI));
    CHECK(rep.eq2_bound == Approx(3.0 * M_PI));
    CHECK(rep.p == 0);
    CHECK(rep.t == 3);
    CHECK(rep.total <= rep.bound * 1.02);
    CHECK(std::abs(rep.total - rep.crofton_total) <
          std::max(0.02 * rep.bound, 0.05));
    CHECK(rep.pinches.empty());
}

TEST_CASE("empty locus: zero curvature against a 4 pi bound") {
    LaurentPoly p = parse("x^2 + y^2 + 1");
    NewtonPolygon np = newton_polygon(p);
    ArcSet set = trace_all(p, 12.0, 32);
    CurvatureReport rep = total_curvature(set, p, np);
    CHECK(rep.total == 0.0);
    CHECK(rep.bound == Approx(4.0 * M_PI));
    CHECK(rep.crofton_total == 0.0);
}

TEST_CASE("circle: both computations see 2 pi, strictly below the bound") {
    LaurentPoly circ = parse("x^2 + y^2 - 1");
    NewtonPolygon np = newton_polygon(circ);
    ArcSet set = trace_all(circ, 12.0, 32);
    CurvatureReport rep = total_curvature(set, circ, np);
    // four quarter-branches, each sweeping a quarter turn
    CHECK(rep.total == Approx(2.0 * M_PI).margin(0.02));
    CHECK(rep.total < rep.bound);
    CHECK(std::abs(rep.total - rep.crofton_total) < std::max(0.02 * rep.bound, 0.05));
    // the four coincident branch images are tangential contacts, not pinches
    CHECK(rep.pinches.empty());
}

TEST_CASE("crofton closed forms") {
    CHECK(crofton_total_curvature(parse("1 + x + y"), 64) == Approx(M_PI).margin(1e-9));
    CHECK(crofton_total_curvature(parse("x^2 + y^2 + 1"), 64) == 0.0);
    CHECK(crofton_total_curvature(parse("x^2 + y^2 - 1"), 64) ==
          Approx(2.0 * M_PI).margin(1e-9));
}

TEST_CASE("synthetic right-angle crossing is one pinch point") {
    ArcSet set;
    set.window = 2.0;
    Arc a;
    a.sx = 1;
    a.sy = 1;
    for (int k = -20; k <= 20; ++k) a.log_pts.push_back({k * 0.05, 0.0});
    Arc b;
    b.sx = -1;
    b.sy = 1;
    for (int k = -20; k <= 20; ++k) b.log_pts.push_back({0.0, k * 0.05});
    set.arcs = {a, b};
    auto pinches = pinch_detect(set);
    REQUIRE(pinches.size() == 1);
    CHECK(pinches[0].alpha == Approx(M_PI / 2));
    CHECK(pinches[0].location.x == Approx(0.0).margin(1e-6));
    CHECK(pinches[0].location.y == Approx(0.0).margin(1e-6));
}

TEST_CASE("perturbed double line traces and reports near-crossing data") {
    // (1+x+y)^2 is non-reduced; a small xy perturbation is traceable. Smoke
    // test: the pipeline runs and any events it reports carry finite data.
    LaurentPoly p = parse("1 + 2*x + 2*y + x^2 + y^2 + 2.05*x*y");
    ArcSet set = trace_all(p, 8.0, 48);
    CHECK_FALSE(set.arcs.empty());
    for (const PinchPoint& pp : pinch_detect(set)) {
        CHECK(pp.alpha >= 0.0);
        CHECK(pp.alpha <= M_PI / 2 + 1e-12);
        CHECK(pp.gap >= 0.0);
    }
}

TEST_CASE("oval curvature is 2 pi") {
    LaurentPoly p = parse("x^2 + y^2 - 6*x - 6*y + 17");
    NewtonPolygon np = newton_polygon(p);
    ArcSet set = trace_all(p, 12.0, 32);
    CurvatureReport rep = total_curvature(set, p, np);
    // one compact oval: total turning 2 pi, eq2 bound 2 pi p = 2 pi
    CHECK(rep.p == 1);
    CHECK(rep.t == 0);
    CHECK(rep.total == Approx(2.0 * M_PI).margin(0.02));
    CHECK(rep.total <= rep.bound * 1.02);
    CHECK(std::abs(rep.total - rep.crofton_total) < std::max(0.02 * rep.bound, 0.05));
}
