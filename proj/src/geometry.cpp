#include "ccs/geometry.hpp"

#include <algorithm>

namespace ccs {

namespace {

int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    const double v = cross2(b - a, c - a);
    const double scale = (b - a).norm() * (c - a).norm();
    if (std::fabs(v) <= 1e-14 * std::max(1.0, scale)) return 0;
    return v > 0.0 ? 1 : -1;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
    return std::min(a.x(), b.x()) - 1e-14 <= p.x() && p.x() <= std::max(a.x(), b.x()) + 1e-14 &&
           std::min(a.y(), b.y()) - 1e-14 <= p.y() && p.y() <= std::max(a.y(), b.y()) + 1e-14;
}

}  // namespace

bool segments_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    if ((a - c).norm() < 1e-15 || (a - d).norm() < 1e-15 || (b - c).norm() < 1e-15 ||
        (b - d).norm() < 1e-15) {
        return false;  // shared endpoint
    }
    const int o1 = orient(a, b, c);
    const int o2 = orient(a, b, d);
    const int o3 = orient(c, d, a);
    const int o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
    // Collinear overlap or endpoint strictly inside the other segment.
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

double Polygon::signed_area() const {
    double s = 0.0;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) s += cross2(pts[i], pts[(i + 1) % n]);
    return 0.5 * s;
}

bool Polygon::is_simple() const {
    const size_t n = pts.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        if ((pts[i] - pts[(i + 1) % n]).norm() < 1e-14) return false;
        for (size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) return false;
        }
    }
    return std::fabs(signed_area()) > 1e-14;
}

bool Polygon::contains(const Vec2& p) const {
    const size_t n = pts.size();
    bool inside = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[j];
        if (point_segment_distance(p, a, b).dist < 1e-12) return true;
        if ((a.y() > p.y()) != (b.y() > p.y())) {
            const double xint = (b.x() - a.x()) * (p.y() - a.y()) / (b.y() - a.y()) + a.x();
            if (p.x() < xint) inside = !inside;
        }
    }
    return inside;
}

double Polygon::diameter() const {
    double d = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, (pts[i] - pts[j]).norm());
    return d;
}

double convex_intersection_area(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip) {
    std::vector<Vec2> poly = subject;
    const size_t m = clip.size();
    for (size_t i = 0; i < m && !poly.empty(); ++i) {
        const Vec2& a = clip[i];
        const Vec2& b = clip[(i + 1) % m];
        std::vector<Vec2> out;
        const size_t n = poly.size();
        for (size_t j = 0; j < n; ++j) {
            const Vec2& p = poly[j];
            const Vec2& q = poly[(j + 1) % n];
            const double sp = cross2(b - a, p - a);
            const double sq = cross2(b - a, q - a);
            if (sp >= 0.0) out.push_back(p);
            if ((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0)) {
                const double t = sp / (sp - sq);
                out.push_back(p + t * (q - p));
            }
        }
        poly.swap(out);
    }
    Polygon res{poly};
    return poly.size() < 3 ? 0.0 : std::fabs(res.signed_area());
}

}  // namespace ccs
