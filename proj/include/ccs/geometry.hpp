#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace ccs {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Cofactor matrix of a 2x2 matrix; satisfies F * cof(F)^T = det(F) * I.
inline Mat2 cofactor(const Mat2& f) {
    Mat2 c;
    c << f(1, 1), -f(1, 0), -f(0, 1), f(0, 0);
    return c;
}

/// Angle of a nonzero vector in [0, 2*pi).
inline double polar_angle(const Vec2& v) {
    double a = std::atan2(v.y(), v.x());
    if (a < 0.0) a += kTwoPi;
    return a;
}

inline Vec2 unit_from_angle(double a) { return Vec2(std::cos(a), std::sin(a)); }

/// Normalizes an angle to [0, 2*pi).
inline double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

/// Circular distance between two angles, in [0, pi].
inline double angle_distance(double a, double b) {
    double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return d > kPi ? kTwoPi - d : d;
}

/// Distance from point p to segment [a, b], with the closest-point parameter in [0, 1].
struct PointSegment {
    double dist;
    double t;
    Vec2 closest;
};

inline PointSegment point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    double t = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Vec2 c = a + t * ab;
    return {(p - c).norm(), t, c};
}

/// True if open segments (a,b) and (c,d) properly cross, or one endpoint lies
/// strictly inside the other segment. Shared endpoints do not count.
bool segments_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// Simple polygon as a CCW-ordered list of vertices.
struct Polygon {
    std::vector<Vec2> pts;

    double signed_area() const;
    bool is_simple() const;
    bool contains(const Vec2& p) const;  // boundary counts as inside
    double diameter() const;
};

/// Area of the intersection of two convex polygons (Sutherland-Hodgman clip).
double convex_intersection_area(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip);

}  // namespace ccs
