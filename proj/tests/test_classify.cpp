#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "amoebalab/classify.hpp"

using namespace amoebalab;
using Catch::Approx;

namespace {

LaurentPoly harnack_cubic(double t = 0.15) {
    std::vector<Term> terms;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            double sign = (i * j) % 2 == 0 ? 1.0 : -1.0;
            terms.push_back({i, j, sign * std::pow(t, i * i + i * j + j * j)});
        }
    return LaurentPoly(std::move(terms));
}

}  // namespace

TEST_CASE("line tentacles: one divisor point per side") {
    LaurentPoly line = parse("1 + x + y");
    NewtonPolygon np = newton_polygon(line);
    ArcSet set = trace_all(line, 12.0, 32);
    auto tents = tentacle_analysis(set, np);
    REQUIRE(tents.size() == 6);
    for (const TentacleData& td : tents) {
        CHECK(td.assigned);
        CHECK(td.direction_gap < 0.05);
    }
    GlueResult glue = glue_tentacles(set, tents, np);
    CHECK(glue.pairs.size() == 3);
    CHECK(glue.unglued.empty());
    CHECK_FALSE(glue.ambiguous);
    REQUIRE(glue.side_points.size() == 3);
    for (std::size_t s = 0; s < 3; ++s) CHECK(glue.side_points[s] == glue.side_budget[s]);
    CHECK(glue.glued_components == 1);
    CHECK(m_curve_check(glue.glued_components, np.g));

    ConditionsReport cond = check_conditions(set, tents, glue, np);
    CHECK(cond.cond1);
    CHECK(cond.cond2);
    CHECK(cond.cond3);
    CHECK(cond.walk_complete);
}

TEST_CASE("classify: the line is Harnack") {
    RunConfig cfg;
    HarnackVerdict v = classify(parse("1 + x + y"), cfg);
    CHECK(v.verdict == Verdict::Harnack);
    CHECK(v.exit_code() == 0);
    CHECK(v.max_curvature.firm_true());
    CHECK(v.totally_real.firm_true());
    CHECK(v.amoeba_smooth.firm_true());
    CHECK(v.is_m_curve.value);
    CHECK(v.weak_max_position.value);
    CHECK(v.cond1.value);
    CHECK(v.cond2.value);
    CHECK(v.cond3.value);
    CHECK_FALSE(v.contradiction);
    CHECK(v.eq1_ok);
    CHECK(v.eq4_ok);
    CHECK(v.curvature.total == Approx(M_PI).margin(1e-2));
}

TEST_CASE("classify: empty real locus is firmly not Harnack") {
    HarnackVerdict v = classify(parse("x^2 + y^2 + 1"));
    CHECK(v.verdict == Verdict::NotHarnack);
    CHECK(v.exit_code() == 1);
    CHECK(v.max_curvature.firm_false());
    CHECK(v.totally_real.firm_false());
    CHECK_FALSE(v.is_m_curve.value);
    CHECK(v.curvature.total == 0.0);
}

TEST_CASE("classify: the real circle is never Harnack") {
    HarnackVerdict v = classify(parse("x^2 + y^2 - 1"));
    CHECK(v.verdict != Verdict::Harnack);
    CHECK(v.exit_code() >= 1);
    // the conic is an M-curve but misses the hypotenuse boundary points
    CHECK(v.is_m_curve.value);
    CHECK_FALSE(v.weak_max_position.value);
    CHECK(v.totally_real.firm_false());
    CHECK(v.conditions.counts_short);
}

TEST_CASE("classify: the dense Harnack cubic") {
    RunConfig cfg;
    // the Viro coefficients span 1e-8, pushing tropical features out to
    // |u| ~ 9.5; the window must leave room past them for the tentacle
    // asymptotics to stabilize
    cfg.window = 20.0;
    cfg.grid_n = 48;
    HarnackVerdict v = classify(harnack_cubic(), cfg);
    CHECK(v.verdict == Verdict::Harnack);
    CHECK(v.genus == 1);
    CHECK(v.glued_components == 2);  // oval + the boundary-carrying component
    CHECK(v.is_m_curve.value);
    CHECK(v.weak_max_position.value);
    CHECK(v.cond1.value);
    CHECK(v.cond2.value);
    CHECK(v.cond3.value);
    CHECK(v.curvature.total == Approx(9.0 * M_PI).epsilon(0.01));
    CHECK(v.eq4_ok);
}

TEST_CASE("split boundary points across two components fail cond1") {
    // (x^2 + y^2 - 4)(x + y - 10): a circle through all four axis points
    // plus a distant line; boundary intersections split between the two
    // glued components
    LaurentPoly p = parse("x^3 + x^2*y - 10*x^2 + x*y^2 + y^3 - 10*y^2 - 4*x - 4*y + 40");
    NewtonPolygon np = newton_polygon(p);
    REQUIRE(np.g == 1);
    ArcSet set = trace_all(p, 12.0, 32);
    auto tents = tentacle_analysis(set, np);
    GlueResult glue = glue_tentacles(set, tents, np);
    CHECK(glue.glued_components == 2);
    ConditionsReport cond = check_conditions(set, tents, glue, np);
    CHECK_FALSE(cond.cond1);
    // two of the three infinity-direction intersections are complex
    CHECK(cond.counts_short);

    HarnackVerdict v = classify(p);
    CHECK(v.verdict == Verdict::NotHarnack);
    CHECK_FALSE(v.contradiction);
}

TEST_CASE("coincident divisor points raise the gluing ambiguity flag") {
    // (x + y - 1)(x + y - 4): parallel lines sharing the point at infinity,
    // a non-transverse boundary intersection
    LaurentPoly p = parse("x^2 + 2*x*y + y^2 - 5*x - 5*y + 4");
    NewtonPolygon np = newton_polygon(p);
    ArcSet set = trace_all(p, 12.0, 32);
    auto tents = tentacle_analysis(set, np);
    GlueResult glue = glue_tentacles(set, tents, np);
    CHECK(glue.ambiguous);

    HarnackVerdict v = classify(p);
    CHECK(v.verdict == Verdict::NotHarnack);
    CHECK_FALSE(v.is_m_curve.firm);
}

TEST_CASE("verdict json carries the full evidence trail") {
    HarnackVerdict v = classify(parse("1 + x + y"));
    nlohmann::ordered_json j = to_json(v);
    CHECK(j["verdict"] == "Harnack");
    CHECK(j["evidence"].contains("curvature"));
    CHECK(j["evidence"].contains("gauss_scan"));
    CHECK(j["evidence"]["tentacles"].size() == 6);
}
