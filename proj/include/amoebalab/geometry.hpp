/*
 * geometry.hpp
 * ------------
 * Small planar helpers: points, segment distances, and a uniform-grid hash
 * over polyline segments for near-neighbor queries.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace amoebalab {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    Vec2 normalized() const {
        double n = norm();
        return n > 0 ? Vec2{x / n, y / n} : Vec2{0, 0};
    }
    Vec2 perp() const { return {-y, x}; }
};

inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len2 = ab.dot(ab);
    if (len2 == 0.0) return (p - a).norm();
    double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (p - (a + ab * t)).norm();
}

struct SegmentApproach {
    double distance = 0.0;
    Vec2 midpoint;  // halfway between the closest points of the two segments
};

/// Closest approach between two segments, with the location it happens at.
inline SegmentApproach segment_closest_approach(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    auto orient = [](Vec2 p, Vec2 q, Vec2 r) {
        return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    };
    double d1 = orient(a0, a1, b0), d2 = orient(a0, a1, b1);
    double d3 = orient(b0, b1, a0), d4 = orient(b0, b1, a1);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) {
        // proper crossing: intersect the supporting lines
        Vec2 r = a1 - a0, s = b1 - b0;
        double denom = r.x * s.y - r.y * s.x;
        double t = ((b0.x - a0.x) * s.y - (b0.y - a0.y) * s.x) / denom;
        return {0.0, a0 + r * t};
    }
    auto project = [](Vec2 p, Vec2 a, Vec2 b) {
        Vec2 ab = b - a;
        double len2 = ab.dot(ab);
        double t = len2 == 0.0 ? 0.0 : std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
        return a + ab * t;
    };
    SegmentApproach best{1e300, {}};
    for (auto [p, qa, qb] : {std::tuple{b0, a0, a1}, std::tuple{b1, a0, a1},
                             std::tuple{a0, b0, b1}, std::tuple{a1, b0, b1}}) {
        Vec2 pr = project(p, qa, qb);
        double d = (p - pr).norm();
        if (d < best.distance) best = {d, (p + pr) * 0.5};
    }
    return best;
}

inline double segment_segment_distance(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    return segment_closest_approach(a0, a1, b0, b1).distance;
}

/// Uniform grid over segments keyed by (arc id, segment index).
class SegmentGrid {
public:
    struct Entry {
        int arc = 0;
        int seg = 0;
    };

    explicit SegmentGrid(double cell) : cell_(cell) {}

    void insert(int arc, int seg, Vec2 a, Vec2 b) {
        for (std::int64_t key : keys_covering(a, b)) cells_[key].push_back({arc, seg});
    }

    /// Entries in the cell of p and the 8 neighbors.
    std::vector<Entry> near(Vec2 p) const {
        std::vector<Entry> out;
        std::int64_t cx = coord(p.x), cy = coord(p.y);
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells_.find(pack(cx + dx, cy + dy));
                if (it != cells_.end())
                    out.insert(out.end(), it->second.begin(), it->second.end());
            }
        return out;
    }

private:
    std::int64_t coord(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }
    static std::int64_t pack(std::int64_t x, std::int64_t y) {
        return (x << 32) ^ (y & 0xffffffffLL);
    }

    std::vector<std::int64_t> keys_covering(Vec2 a, Vec2 b) const {
        std::int64_t x0 = coord(std::min(a.x, b.x)), x1 = coord(std::max(a.x, b.x));
        std::int64_t y0 = coord(std::min(a.y, b.y)), y1 = coord(std::max(a.y, b.y));
        std::vector<std::int64_t> keys;
        for (std::int64_t x = x0; x <= x1; ++x)
            for (std::int64_t y = y0; y <= y1; ++y) keys.push_back(pack(x, y));
        return keys;
    }

    double cell_;
    std::unordered_map<std::int64_t, std::vector<Entry>> cells_;
};

}  // namespace amoebalab
