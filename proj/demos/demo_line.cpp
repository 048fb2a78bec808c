// Minimal tour of the library on the line 1 + x + y: trace the real amoeba,
// measure its curvature both ways, and print the verdict.
#include <cstdio>

#include "amoebalab/classify.hpp"

int main() {
    using namespace amoebalab;
    LaurentPoly line = parse("1 + x + y");
    NewtonPolygon np = newton_polygon(line);
    std::printf("vol = %g, g = %lld, s = %lld\n", np.vol.value(), np.g, np.s);

    ArcSet set = trace_all(line, 12.0, 32);
    std::printf("arcs = %zu, tentacle pairs = %d\n", set.arcs.size(), set.tentacle_count);

    CurvatureReport rep = total_curvature(set, line, np);
    std::printf("total |k| = %.6f, bound = %.6f, crofton = %.6f\n", rep.total, rep.bound,
                rep.crofton_total);

    HarnackVerdict v = classify(line);
    std::printf("verdict: %s\n", to_string(v.verdict));
    return v.exit_code();
}
