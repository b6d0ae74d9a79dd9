#include "marcwt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace marcwt {

bool RatePentagon::is_empty() const {
    return std::min({r1_cap, r2_cap, sum_cap}) < 0;
}

RatePentagon RatePentagon::normalized() const {
    if (is_empty()) return *this;
    RatePentagon p;
    p.r1_cap = std::min(r1_cap, sum_cap);
    p.r2_cap = std::min(r2_cap, sum_cap);
    p.sum_cap = std::min(sum_cap, p.r1_cap + p.r2_cap);
    return p;
}

namespace {

double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool lex_less(const RatePoint& a, const RatePoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

double point_segment_distance(const RatePoint& p, const RatePoint& a, const RatePoint& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = 0;
    if (len2 > 0) t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
    const double dx = p.x - (a.x + t * vx), dy = p.y - (a.y + t * vy);
    return std::hypot(dx, dy);
}

// 0 when p is inside or on the boundary, else Euclidean distance to it.
double distance_to_region(const RateRegion& r, const RatePoint& p) {
    const auto& v = r.vertices();
    if (v.empty()) return std::numeric_limits<double>::infinity();
    if (v.size() == 1) return std::hypot(p.x - v[0].x, p.y - v[0].y);
    if (v.size() >= 3) {
        bool inside = true;
        for (std::size_t i = 0; i < v.size() && inside; ++i)
            inside = cross(v[i], v[(i + 1) % v.size()], p) >= 0;
        if (inside) return 0;
    }
    double best = std::numeric_limits<double>::infinity();
    const std::size_t nedges = v.size() >= 3 ? v.size() : v.size() - 1;
    for (std::size_t i = 0; i < nedges; ++i)
        best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
    return best;
}

}  // namespace

RateRegion RateRegion::from_points(std::vector<RatePoint> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const RatePoint& a, const RatePoint& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    RateRegion r;
    if (pts.empty()) return r;
    if (pts.size() == 1) {
        r.verts_ = std::move(pts);
        return r;
    }
    // Andrew's monotone chain; non-strict pops drop collinear vertices. The
    // result is counterclockwise starting at the lexicographic minimum,
    // which for these regions is the origin.
    std::vector<RatePoint> lower, upper;
    for (const auto& p : pts) {
        while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0) lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0) upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    r.verts_ = std::move(lower);
    return r;
}

RateRegion pentagon_vertices(const RatePentagon& p) {
    if (p.is_empty()) return RateRegion::empty_region();
    const double a = p.r1_cap, b = p.r2_cap;
    const double s = std::min(p.sum_cap, a + b);
    std::vector<RatePoint> pts;
    pts.push_back({0, 0});
    if (s >= a + b) {
        pts.push_back({a, 0});
        pts.push_back({a, b});
        pts.push_back({0, b});
    } else {
        pts.push_back({std::min(a, s), 0});
        if (s >= a) pts.push_back({a, s - a});
        if (s >= b) pts.push_back({s - b, b});
        pts.push_back({0, std::min(b, s)});
    }
    return RateRegion::from_points(std::move(pts));
}

RateRegion hull_union(const std::vector<RateRegion>& regions) {
    if (regions.empty()) throw std::domain_error("hull_union: empty region list");
    std::vector<RatePoint> pts;
    for (const auto& r : regions) pts.insert(pts.end(), r.vertices().begin(), r.vertices().end());
    return RateRegion::from_points(std::move(pts));
}

double area(const RateRegion& r) {
    const auto& v = r.vertices();
    if (v.size() < 3) return 0;
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return std::abs(s) / 2;
}

bool contains(const RateRegion& outer, const RateRegion& inner, double tol) {
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    for (const auto& p : inner.vertices())
        if (distance_to_region(outer, p) > tol) return false;
    return true;
}

double support(const RateRegion& r, double dx, double dy) {
    if (dx == 0 && dy == 0) throw std::domain_error("support: zero direction");
    if (r.is_empty()) return 0;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : r.vertices()) best = std::max(best, v.x * dx + v.y * dy);
    return best;
}

}  // namespace marcwt
