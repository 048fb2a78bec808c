/*
 * classify.hpp
 * ------------
 * Combines every computed signal into a simple-Harnack verdict:
 *
 *   - maximal curvature (total variation against 2 pi vol),
 *   - total reality of the Gauss map over sampled directions,
 *   - smoothness of the real amoeba (no transverse pinch points),
 *   - M-curve count and the cyclic boundary-position conditions, read off
 *     the tentacle structure.
 *
 * Each leg carries a firmness bit. A firm positive curvature leg together
 * with a firm failure of any other leg is a contradiction of the theory and
 * surfaces as Inconclusive, never as a silent override.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "amoebalab/config.hpp"
#include "amoebalab/curvature.hpp"
#include "amoebalab/gauss.hpp"
#include "amoebalab/lattice.hpp"
#include "amoebalab/trace.hpp"

namespace amoebalab {

class UnassignableEndError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One open arc end matched to a side of the Newton polygon. The divisor
/// point it converges to is pinned by (side, sign, intercept): intercept is
/// the limit of the edge-monomial log-coordinate combination, sign is the
/// sign of that monomial on the end's quadrant.
struct TentacleData {
    int end = -1;
    int side = -1;
    LatticePoint normal;
    double intercept = 0.0;
    int sign = 1;
    bool assigned = false;
    double direction_gap = 0.0;  // angle between end direction and the normal
};

/// Divisor-point pairing of tentacle ends plus the glued component count.
struct GlueResult {
    std::vector<std::pair<int, int>> pairs;      // end indices
    std::vector<int> pair_side;                  // side per pair
    std::vector<int> unglued;                    // end indices left over
    std::vector<long long> side_points;          // glued points per side
    std::vector<long long> side_budget;          // d_i per side
    int glued_components = 0;
    bool ambiguous = false;                      // two intercepts within tolerance
    std::vector<std::vector<int>> component_arcs;
};

inline std::vector<TentacleData> tentacle_analysis(const ArcSet& set,
                                                   const NewtonPolygon& np,
                                                   const Tolerances& tol = {}) {
    std::vector<TentacleData> out;
    for (std::size_t k = 0; k < set.open_ends.size(); ++k) {
        const OpenEnd& e = set.open_ends[k];
        TentacleData td;
        td.end = static_cast<int>(k);
        double best = 1e300;
        for (std::size_t s = 0; s < np.edges.size(); ++s) {
            const LatticePoint& n = np.edges[s].normal;
            Vec2 nv = Vec2{static_cast<double>(n.x), static_cast<double>(n.y)}.normalized();
            double gap = std::acos(std::clamp(e.direction.dot(nv), -1.0, 1.0));
            if (gap < best) {
                best = gap;
                td.side = static_cast<int>(s);
                td.normal = n;
            }
        }
        td.direction_gap = best;
        td.assigned = best < tol.side_match && e.drift < 0.01;
        if (td.assigned) {
            // primitive edge vector of the CCW traversal: (-n.y, n.x)
            double e1 = -static_cast<double>(td.normal.y);
            double e2 = static_cast<double>(td.normal.x);
            td.intercept = e1 * e.pos.x + e2 * e.pos.y;
            const Arc& arc = set.arcs[static_cast<std::size_t>(e.arc)];
            int s = 1;
            if (arc.sx < 0 && (std::llabs(td.normal.y) % 2) == 1) s = -s;
            if (arc.sy < 0 && (std::llabs(td.normal.x) % 2) == 1) s = -s;
            td.sign = s;
        }
        out.push_back(td);
    }
    return out;
}

/// Pair tentacle ends that converge to the same divisor point and count the
/// components of the compactified real curve.
inline GlueResult glue_tentacles(const ArcSet& set, const std::vector<TentacleData>& tents,
                                 const NewtonPolygon& np, const Tolerances& tol = {}) {
    GlueResult out;
    out.side_points.assign(np.edges.size(), 0);
    out.side_budget.clear();
    for (const PolygonEdge& e : np.edges) out.side_budget.push_back(e.d);

    // group assigned ends by (side, sign), pair nearest intercepts first
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (const TentacleData& td : tents) {
        if (!td.assigned) {
            out.unglued.push_back(td.end);
            continue;
        }
        groups[{td.side, td.sign}].push_back(td.end);
    }
    for (auto& [key, ends] : groups) {
        std::vector<bool> used(ends.size(), false);
        while (true) {
            double best = tol.glue;
            int bi = -1, bj = -1;
            for (std::size_t i = 0; i < ends.size(); ++i) {
                if (used[i]) continue;
                for (std::size_t j = i + 1; j < ends.size(); ++j) {
                    if (used[j]) continue;
                    double d = std::abs(tents[static_cast<std::size_t>(ends[i])].intercept -
                                        tents[static_cast<std::size_t>(ends[j])].intercept);
                    if (d < best) {
                        best = d;
                        bi = static_cast<int>(i);
                        bj = static_cast<int>(j);
                    }
                }
            }
            if (bi < 0) break;
            used[static_cast<std::size_t>(bi)] = used[static_cast<std::size_t>(bj)] = true;
            out.pairs.push_back({ends[static_cast<std::size_t>(bi)],
                                 ends[static_cast<std::size_t>(bj)]});
            out.pair_side.push_back(key.first);
            ++out.side_points[static_cast<std::size_t>(key.first)];
        }
        for (std::size_t i = 0; i < ends.size(); ++i)
            if (!used[i]) out.unglued.push_back(ends[i]);
    }

    // ambiguity: two distinct glued points of one side closer than tolerance
    for (std::size_t a = 0; a < out.pairs.size(); ++a)
        for (std::size_t b = a + 1; b < out.pairs.size(); ++b) {
            if (out.pair_side[a] != out.pair_side[b]) continue;
            double ia = tents[static_cast<std::size_t>(out.pairs[a].first)].intercept;
            double ib = tents[static_cast<std::size_t>(out.pairs[b].first)].intercept;
            if (std::abs(ia - ib) < tol.glue) out.ambiguous = true;
        }

    // components of the compactified curve: window components + glue links
    tracedetail::UnionFind uf(static_cast<int>(set.arcs.size()));
    for (const std::vector<int>& comp : set.components)
        for (std::size_t k = 1; k < comp.size(); ++k) uf.unite(comp[0], comp[k]);
    for (const auto& [i, j] : out.pairs)
        uf.unite(set.open_ends[static_cast<std::size_t>(i)].arc,
                 set.open_ends[static_cast<std::size_t>(j)].arc);
    std::map<int, std::vector<int>> comps;
    for (std::size_t a = 0; a < set.arcs.size(); ++a)
        comps[uf.find(static_cast<int>(a))].push_back(static_cast<int>(a));
    for (auto& [root, members] : comps) out.component_arcs.push_back(members);
    std::sort(out.component_arcs.begin(), out.component_arcs.end());
    out.glued_components = static_cast<int>(out.component_arcs.size());
    return out;
}

/// True iff the glued component count equals g + 1 (Harnack's bound).
inline bool m_curve_check(int glued_components, long long genus) {
    return glued_components == genus + 1;
}

struct ConditionsReport {
    bool cond1 = false;
    bool cond2 = false;
    bool cond3 = false;
    bool counts_short = false;   // fewer witnessed boundary points than sum d_i
    bool walk_complete = false;  // the tentacled component closed into a cycle
    std::vector<int> event_sides;  // junction sides along the component walk
};

/// The three positional conditions, read off the cyclic order of divisor
/// crossings along the component that carries them.
inline ConditionsReport check_conditions(const ArcSet& set,
                                         const std::vector<TentacleData>& tents,
                                         const GlueResult& glue, const NewtonPolygon& np) {
    ConditionsReport rep;
    long long budget = 0;
    for (const PolygonEdge& e : np.edges) budget += e.d;
    long long witnessed = 0;
    for (long long c : glue.side_points) witnessed += c;
    if (witnessed < budget || !glue.unglued.empty()) rep.counts_short = true;

    if (glue.pairs.empty()) return rep;

    // all pairs must sit on one glued component
    std::map<int, int> arc_comp;
    for (std::size_t c = 0; c < glue.component_arcs.size(); ++c)
        for (int a : glue.component_arcs[c]) arc_comp[a] = static_cast<int>(c);
    std::set<int> carrying;
    for (const auto& [i, j] : glue.pairs)
        carrying.insert(arc_comp[set.open_ends[static_cast<std::size_t>(i)].arc]);
    if (carrying.size() != 1) return rep;  // split boundary intersections
    if (rep.counts_short) return rep;
    rep.cond1 = true;

    // walk the cycle: ends are paired junctions; each arc joins its two ends
    std::map<int, int> partner;
    std::map<int, int> junction_side;
    for (std::size_t k = 0; k < glue.pairs.size(); ++k) {
        partner[glue.pairs[k].first] = glue.pairs[k].second;
        partner[glue.pairs[k].second] = glue.pairs[k].first;
        junction_side[glue.pairs[k].first] = glue.pair_side[k];
        junction_side[glue.pairs[k].second] = glue.pair_side[k];
    }
    // map (arc, at_back) -> end index
    std::map<std::pair<int, bool>, int> end_of;
    for (std::size_t k = 0; k < set.open_ends.size(); ++k)
        end_of[{set.open_ends[k].arc, set.open_ends[k].at_back}] = static_cast<int>(k);

    int start_end = glue.pairs[0].first;
    int current = start_end;
    std::size_t guard = 0;
    while (guard++ <= 2 * glue.pairs.size() + 2) {
        // cross the junction, then traverse the partner's arc to its far end
        auto it = partner.find(current);
        if (it == partner.end()) break;
        rep.event_sides.push_back(junction_side[current]);
        int other = it->second;
        const OpenEnd& oe = set.open_ends[static_cast<std::size_t>(other)];
        auto far = end_of.find({oe.arc, !oe.at_back});
        if (far == end_of.end()) break;
        current = far->second;
        if (current == start_end) {
            rep.walk_complete = true;
            break;
        }
    }
    if (!rep.walk_complete || rep.event_sides.size() != glue.pairs.size()) return rep;

    // cond2: per side, the events form one contiguous cyclic run
    const std::size_t m = rep.event_sides.size();
    std::set<int> sides_present(rep.event_sides.begin(), rep.event_sides.end());
    bool contiguous = true;
    for (int side : sides_present) {
        int runs = 0;
        for (std::size_t k = 0; k < m; ++k) {
            bool here = rep.event_sides[k] == side;
            bool prev = rep.event_sides[(k + m - 1) % m] == side;
            if (here && !prev) ++runs;
        }
        if (runs != 1) contiguous = false;
    }
    rep.cond2 = contiguous;
    if (!contiguous) return rep;

    // cond3: the block order matches the polygon's side order up to rotation
    // and reflection
    std::vector<int> blocks;
    for (std::size_t k = 0; k < m; ++k)
        if (blocks.empty() || blocks.back() != rep.event_sides[k])
            blocks.push_back(rep.event_sides[k]);
    if (blocks.size() > 1 && blocks.front() == blocks.back()) blocks.pop_back();
    std::vector<int> polygon_order;
    for (std::size_t s = 0; s < np.edges.size(); ++s)
        if (sides_present.count(static_cast<int>(s)))
            polygon_order.push_back(static_cast<int>(s));
    auto cyclic_match = [](std::vector<int> a, const std::vector<int>& b) {
        if (a.size() != b.size()) return false;
        for (int dir = 0; dir < 2; ++dir) {
            for (std::size_t r = 0; r < a.size(); ++r) {
                bool ok = true;
                for (std::size_t k = 0; k < a.size(); ++k)
                    if (a[(r + k) % a.size()] != b[k]) {
                        ok = false;
                        break;
                    }
                if (ok) return true;
            }
            std::reverse(a.begin(), a.end());
        }
        return false;
    };
    rep.cond3 = cyclic_match(blocks, polygon_order);
    return rep;
}

enum class Verdict { Harnack = 0, NotHarnack = 1, Inconclusive = 2 };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Harnack: return "Harnack";
        case Verdict::NotHarnack: return "NotHarnack";
        default: return "Inconclusive";
    }
}

struct Leg {
    bool value = false;
    bool firm = false;
    bool firm_true() const { return value && firm; }
    bool firm_false() const { return !value && firm; }
};

struct HarnackVerdict {
    Leg max_curvature;
    Leg totally_real;
    Leg amoeba_smooth;
    Leg is_m_curve;
    Leg weak_max_position;
    Leg cond1, cond2, cond3;
    bool contradiction = false;
    Verdict verdict = Verdict::Inconclusive;

    long long genus = 0;
    int glued_components = 0;
    CurvatureReport curvature;
    ScanReport scan;
    std::vector<TentacleData> tentacles;
    GlueResult glue;
    ConditionsReport conditions;
    std::vector<PinchPoint> near_pinches;  // gray-zone events (within 3x tolerance)
    bool eq1_ok = false;  // total <= 2 pi vol (1 + tol)
    bool eq4_ok = false;  // 2 pi g + pi s - 2 pi <= 2 pi p + pi t, measured integers

    int exit_code() const { return static_cast<int>(verdict); }
};

/// Run the whole pipeline and assemble the verdict.
inline HarnackVerdict classify(const LaurentPoly& p, const RunConfig& cfg = {}) {
    HarnackVerdict v;
    const NewtonPolygon np = newton_polygon(p);
    v.genus = np.g;
    const int threads = cfg.effective_threads();
    const int expected = static_cast<int>(std::llround(2.0 * np.vol.value()));

    ArcSet arcs = trace_all(p, cfg.window, cfg.grid_n, cfg.tol);
    v.curvature = total_curvature(arcs, p, np, std::max(cfg.theta_samples, 64), cfg.tol,
                                  threads, cfg.seed);
    v.scan = totally_real_scan(p, cfg.theta_samples, expected, cfg.tol, threads, cfg.seed);
    v.tentacles = tentacle_analysis(arcs, np, cfg.tol);
    v.glue = glue_tentacles(arcs, v.tentacles, np, cfg.tol);
    v.glued_components = v.glue.glued_components;
    v.conditions = check_conditions(arcs, v.tentacles, v.glue, np);

    // curvature leg: within 1% of the bound is maximal; more than three
    // thresholds away is a firm no; in between is a near miss
    const double bound = v.curvature.bound;
    const double gap = bound - v.curvature.total;
    v.max_curvature.value = std::abs(gap) <= cfg.tol.maximality * bound;
    v.max_curvature.firm =
        v.max_curvature.value || gap > cfg.tol.near_miss * cfg.tol.maximality * bound;
    v.eq1_ok = v.curvature.total <= bound * (1.0 + 0.02);

    // total reality leg
    v.totally_real.value = v.scan.totally_real;
    v.totally_real.firm = v.scan.firm;

    // smoothness leg: re-detect with a widened tolerance to catch near misses
    {
        Tolerances wide = cfg.tol;
        wide.pinch = cfg.tol.near_miss * cfg.tol.pinch;
        std::vector<PinchPoint> events = pinch_detect(arcs, wide);
        bool any_firm = false, any_near = false;
        for (const PinchPoint& e : events) {
            if (e.gap <= cfg.tol.pinch)
                any_firm = true;
            else {
                any_near = true;
                v.near_pinches.push_back(e);
            }
        }
        v.amoeba_smooth.value = !any_firm;
        v.amoeba_smooth.firm = !any_near;
    }

    // lattice-position legs
    bool structure_clean = !v.glue.ambiguous && v.glue.unglued.empty();
    v.is_m_curve.value = m_curve_check(v.glued_components, v.genus);
    v.is_m_curve.firm = structure_clean;
    bool budget_met = true;
    for (std::size_t s = 0; s < v.glue.side_points.size(); ++s)
        if (v.glue.side_points[s] != v.glue.side_budget[s]) budget_met = false;
    v.weak_max_position.value = budget_met;
    v.weak_max_position.firm = structure_clean;
    v.cond1 = {v.conditions.cond1, structure_clean && !v.conditions.counts_short};
    v.cond2 = {v.conditions.cond2, structure_clean && v.conditions.walk_complete};
    v.cond3 = {v.conditions.cond3, structure_clean && v.conditions.walk_complete};

    // Eq. (4) diagnostic from measured integers
    v.eq4_ok = 2.0 * M_PI * np.g + M_PI * np.s - 2.0 * M_PI <=
               2.0 * M_PI * v.curvature.p + M_PI * v.curvature.t + 1e-9;

    v.contradiction =
        v.max_curvature.firm_true() &&
        (v.totally_real.firm_false() || v.amoeba_smooth.firm_false() ||
         v.is_m_curve.firm_false() || v.cond1.firm_false() || v.cond2.firm_false() ||
         v.cond3.firm_false());

    if (v.contradiction) {
        v.verdict = Verdict::Inconclusive;
    } else if (v.max_curvature.firm_true() && v.totally_real.firm_true() &&
               v.amoeba_smooth.firm_true()) {
        v.verdict = Verdict::Harnack;
    } else if (v.max_curvature.firm_false() || v.totally_real.firm_false() ||
               !v.amoeba_smooth.value) {
        v.verdict = Verdict::NotHarnack;
    } else {
        v.verdict = Verdict::Inconclusive;
    }
    return v;
}

inline nlohmann::ordered_json to_json(const Leg& l) {
    return {{"value", l.value}, {"firm", l.firm}};
}

inline nlohmann::ordered_json to_json(const HarnackVerdict& v) {
    nlohmann::ordered_json tent = nlohmann::ordered_json::array();
    for (const TentacleData& td : v.tentacles)
        tent.push_back({{"end", td.end},
                        {"side", td.side},
                        {"normal", {td.normal.x, td.normal.y}},
                        {"intercept", td.intercept},
                        {"sign", td.sign},
                        {"assigned", td.assigned},
                        {"direction_gap", td.direction_gap}});
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < v.glue.pairs.size(); ++k)
        pairs.push_back({{"ends", {v.glue.pairs[k].first, v.glue.pairs[k].second}},
                         {"side", v.glue.pair_side[k]}});
    return {{"verdict", to_string(v.verdict)},
            {"contradiction", v.contradiction},
            {"max_curvature", to_json(v.max_curvature)},
            {"totally_real", to_json(v.totally_real)},
            {"amoeba_smooth", to_json(v.amoeba_smooth)},
            {"is_m_curve", to_json(v.is_m_curve)},
            {"weak_max_position", to_json(v.weak_max_position)},
            {"cond1", to_json(v.cond1)},
            {"cond2", to_json(v.cond2)},
            {"cond3", to_json(v.cond3)},
            {"genus", v.genus},
            {"glued_components", v.glued_components},
            {"eq1_ok", v.eq1_ok},
            {"eq4_ok", v.eq4_ok},
            {"evidence",
             {{"curvature", to_json(v.curvature)},
              {"gauss_scan", to_json(v.scan)},
              {"tentacles", tent},
              {"glue_pairs", pairs},
              {"side_points", v.glue.side_points},
              {"side_budget", v.glue.side_budget},
              {"event_sides", v.conditions.event_sides},
              {"counts_short", v.conditions.counts_short},
              {"walk_complete", v.conditions.walk_complete}}}};
}

}  // namespace amoebalab
