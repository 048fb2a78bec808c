#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "amoebalab/trace.hpp"

using namespace amoebalab;
using Catch::Approx;

namespace {

double min_dist_to(const Arc& arc, Vec2 target) {
    double best = 1e300;
    for (std::size_t k = 0; k + 1 < arc.log_pts.size(); ++k)
        best = std::min(best,
                        point_segment_distance(target, arc.log_pts[k], arc.log_pts[k + 1]));
    return best;
}

}  // namespace

TEST_CASE("seed quadrants for the line") {
    LaurentPoly line = parse("1 + x + y");
    auto seeds = seed_points(line, 3.0, 16);
    REQUIRE_FALSE(seeds.empty());
    std::set<std::pair<int, int>> quads;
    for (const SeedPoint& s : seeds) quads.insert({s.sx, s.sy});
    // x + y = -1 has no solutions with both coordinates positive
    CHECK(quads == std::set<std::pair<int, int>>{{-1, -1}, {1, -1}, {-1, 1}});
}

TEST_CASE("empty real locus has no seeds") {
    CHECK(seed_points(parse("x^2 + y^2 + 1"), 6.0, 16).empty());
}

TEST_CASE("circle seeds hit all four quadrants") {
    auto seeds = seed_points(parse("x^2 + y^2 - 1"), 6.0, 16);
    std::set<std::pair<int, int>> quads;
    for (const SeedPoint& s : seeds) quads.insert({s.sx, s.sy});
    CHECK(quads.size() == 4);
}

TEST_CASE("seeds satisfy the residual bound") {
    LaurentPoly p = parse("1 + x + y");
    for (const SeedPoint& s : seed_points(p, 6.0, 16)) {
        double x = s.sx * std::exp(s.u), y = s.sy * std::exp(s.v);
        CHECK(std::abs(p.eval_real(x, y)) < 1e-9 * p.scale(std::abs(x), std::abs(y)));
    }
}

TEST_CASE("line branch through the center of its quadrant") {
    LaurentPoly line = parse("1 + x + y");
    Arc arc = trace_branch(line, {-1, -1, std::log(0.5), std::log(0.5)}, 12.0);
    CHECK_FALSE(arc.closed);
    CHECK(arc.sx == -1);
    CHECK(arc.sy == -1);
    CHECK(arc.left_exit != ExitTag::None);
    CHECK(arc.right_exit != ExitTag::None);
    CHECK(min_dist_to(arc, {-std::log(2.0), -std::log(2.0)}) < 0.01);
    // every emitted point satisfies the curve equation
    for (std::size_t k = 0; k < arc.log_pts.size(); ++k) {
        double x = arc.x_at(k), y = arc.y_at(k);
        CHECK(std::abs(line.eval_real(x, y)) < 1e-8 * line.scale(std::abs(x), std::abs(y)));
    }
}

TEST_CASE("quarter circle exits toward both axes") {
    LaurentPoly circ = parse("x^2 + y^2 - 1");
    double r = 1.0 / std::sqrt(2.0);
    Arc arc = trace_branch(circ, {1, 1, std::log(r), std::log(r)}, 12.0);
    CHECK_FALSE(arc.closed);
    std::set<ExitTag> exits{arc.left_exit, arc.right_exit};
    CHECK(exits == std::set<ExitTag>{ExitTag::Left, ExitTag::Bottom});
}

TEST_CASE("line branch in the (-,+) quadrant") {
    Arc arc = trace_branch(parse("1 + x + y"), {-1, 1, std::log(2.0), 0.0}, 12.0);
    CHECK(arc.sx == -1);
    CHECK(arc.sy == 1);
}

TEST_CASE("trace_all on the line: three arcs, one component, three tentacles") {
    ArcSet set = trace_all(parse("1 + x + y"), 12.0, 32);
    CHECK(set.arcs.size() == 3);
    CHECK(set.components.size() == 1);
    CHECK(set.p == 0);
    CHECK(set.open_ends.size() == 6);
    CHECK(set.end_pairs.size() == 3);
    CHECK(set.unpaired_ends == 0);
    CHECK(set.tentacle_count == 3);
}

TEST_CASE("trace_all on the empty locus") {
    ArcSet set = trace_all(parse("x^2 + y^2 + 1"), 12.0, 32);
    CHECK(set.arcs.empty());
    CHECK(set.p == 0);
    CHECK(set.tentacle_count == 0);
}

TEST_CASE("trace_all on the circle: four arcs, eight ends in four pairs") {
    ArcSet set = trace_all(parse("x^2 + y^2 - 1"), 12.0, 32);
    CHECK(set.arcs.size() == 4);
    CHECK(set.open_ends.size() == 8);
    CHECK(set.end_pairs.size() == 4);
    CHECK(set.tentacle_count == 4);
    CHECK(set.p == 0);
    // all four branches share one log image, hence one component
    CHECK(set.components.size() == 1);
}

TEST_CASE("an off-axis oval closes and counts as compact") {
    // (x-3)^2 + (y-3)^2 = 1: an oval inside the (+,+) quadrant
    LaurentPoly p = parse("x^2 + y^2 - 6*x - 6*y + 17");
    ArcSet set = trace_all(p, 12.0, 32);
    REQUIRE(set.arcs.size() == 1);
    CHECK(set.arcs[0].closed);
    CHECK(set.arcs[0].log_pts.front().x == set.arcs[0].log_pts.back().x);
    CHECK(set.arcs[0].log_pts.front().y == set.arcs[0].log_pts.back().y);
    CHECK(set.p == 1);
    CHECK(set.tentacle_count == 0);
    // the oval surrounds (log 3, log 3)
    double c = std::log(3.0);
    double lo = 1e300, hi = -1e300;
    for (const Vec2& q : set.arcs[0].log_pts) {
        lo = std::min(lo, q.x);
        hi = std::max(hi, q.x);
    }
    CHECK(lo < c);
    CHECK(hi > c);
}

TEST_CASE("retracing at doubled grid density is stable") {
    LaurentPoly p = parse("x^2 + y^2 - 6*x - 6*y + 17");
    ArcSet a = trace_all(p, 12.0, 32);
    ArcSet b = trace_all(p, 12.0, 64);
    REQUIRE(a.arcs.size() == b.arcs.size());
    double la = 0, lb = 0;
    for (const Arc& arc : a.arcs) la += arc.length();
    for (const Arc& arc : b.arcs) lb += arc.length();
    CHECK(std::abs(la - lb) < 0.01 * std::max(la, lb));
}

TEST_CASE("simple polyline within each quadrant") {
    // within one quadrant the log map is a diffeomorphism: consecutive
    // points of the line's arcs never jump
    ArcSet set = trace_all(parse("1 + x + y"), 12.0, 32);
    for (const Arc& arc : set.arcs)
        for (std::size_t k = 1; k < arc.log_pts.size(); ++k)
            CHECK((arc.log_pts[k] - arc.log_pts[k - 1]).norm() < 0.2);
}

TEST_CASE("csv export carries both coordinate systems") {
    ArcSet set = trace_all(parse("1 + x + y"), 6.0, 16);
    std::string csv = to_csv(set);
    CHECK(csv.find("arc,quadrant,x,y,u,v") == 0);
    CHECK(csv.find("--") != std::string::npos);  // the (-,-) quadrant occurs
}
