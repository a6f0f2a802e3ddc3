#include "ccs/cones.hpp"

#include <algorithm>
#include <optional>

#include "ccs/body.hpp"
#include "ccs/errors.hpp"

namespace ccs {

namespace {

constexpr double kAngEps = 1e-12;

Vec2 rot90ccw(const Vec2& v) { return Vec2(-v.y(), v.x()); }
Vec2 rot90cw(const Vec2& v) { return Vec2(v.y(), -v.x()); }

/// Smallest single arc covering all given arcs, or nullopt if none shorter
/// than the full circle exists.
std::optional<Sector> min_covering_arc(const std::vector<Sector>& arcs) {
    std::optional<Sector> best;
    for (const Sector& cand : arcs) {
        double needed = 0.0;
        bool ok = true;
        for (const Sector& a : arcs) {
            const double n = wrap_angle(a.start - cand.start) + a.sweep;
            if (n >= kTwoPi - kAngEps) {
                ok = false;
                break;
            }
            needed = std::max(needed, n);
        }
        if (ok && (!best || needed < best->sweep)) best = Sector{cand.start, needed};
    }
    return best;
}

}  // namespace

PolyCone make_union(std::vector<Sector> s) {
    PolyCone c;
    for (Sector& a : s) a.start = wrap_angle(a.start);
    std::sort(s.begin(), s.end(), [](const Sector& a, const Sector& b) { return a.start < b.start; });
    // Merge overlapping or touching arcs, including across the wrap point.
    std::vector<Sector> merged;
    for (const Sector& a : s) {
        if (!merged.empty()) {
            Sector& last = merged.back();
            if (a.start <= last.start + last.sweep + kAngEps) {
                last.sweep = std::max(last.sweep, a.start + a.sweep - last.start);
                continue;
            }
        }
        merged.push_back(a);
    }
    // The last arc may reach past 2*pi and touch the first one.
    if (merged.size() > 1) {
        Sector& last = merged.back();
        const Sector& first = merged.front();
        if (last.start + last.sweep >= first.start + kTwoPi - kAngEps) {
            last.sweep = std::max(last.sweep, first.start + first.sweep + kTwoPi - last.start);
            merged.erase(merged.begin());
        }
    }
    double total = 0.0;
    for (Sector& a : merged) {
        if (a.sweep >= kTwoPi - kAngEps) {
            c.full_ = true;
            return c;
        }
        total += a.sweep;
    }
    if (total >= kTwoPi - kAngEps) {
        c.full_ = true;
        return c;
    }
    if (merged.empty()) {
        c.zero_ = true;
        return c;
    }
    std::sort(merged.begin(), merged.end(),
              [](const Sector& a, const Sector& b) { return a.start < b.start; });
    c.sectors_ = std::move(merged);
    return c;
}

PolyCone PolyCone::zero() {
    PolyCone c;
    c.zero_ = true;
    return c;
}

PolyCone PolyCone::full() {
    PolyCone c;
    c.full_ = true;
    return c;
}

PolyCone PolyCone::sector(double start, double sweep) {
    if (sweep >= kTwoPi - kAngEps) return full();
    PolyCone c;
    c.sectors_.push_back({wrap_angle(start), std::max(0.0, sweep)});
    return c;
}

PolyCone PolyCone::ray(const Vec2& dir) { return sector(polar_angle(dir), 0.0); }

PolyCone PolyCone::halfplane(const Vec2& inward_normal) {
    return sector(polar_angle(inward_normal) - kPi / 2.0, kPi);
}

PolyCone PolyCone::spanned_ccw(const Vec2& a, const Vec2& b) {
    const double s = polar_angle(a);
    return sector(s, wrap_angle(polar_angle(b) - s));
}

bool PolyCone::convex() const {
    if (zero_ || full_) return true;
    return sectors_.size() == 1 && sectors_[0].sweep <= kPi + kAngEps;
}

double PolyCone::total_sweep() const {
    if (full_) return kTwoPi;
    double s = 0.0;
    for (const Sector& a : sectors_) s += a.sweep;
    return s;
}

std::vector<Vec2> PolyCone::generators() const {
    std::vector<Vec2> g;
    for (const Sector& a : sectors_) {
        g.push_back(unit_from_angle(a.start));
        if (a.sweep > kAngEps) g.push_back(unit_from_angle(a.start + a.sweep));
    }
    return g;
}

std::vector<Vec2> PolyCone::halfspaces() const {
    if (full_) return {};
    if (zero_) return {Vec2(1, 0), Vec2(-1, 0), Vec2(0, 1), Vec2(0, -1)};
    if (!convex()) throw Error("NonConvexCone", "halfspaces() requires a convex cone");
    const Sector& a = sectors_[0];
    const Vec2 g1 = unit_from_angle(a.start);
    const Vec2 g2 = unit_from_angle(a.start + a.sweep);
    if (a.sweep >= kPi - kAngEps) return {rot90ccw(g1)};
    return {rot90ccw(g1), rot90cw(g2)};
}

Containment cone_contains(const PolyCone& c, const Vec2& v, double tol) {
    if (v.norm() < 1e-300) return Containment::Inside;
    if (c.is_full()) return Containment::InteriorInside;
    if (c.is_zero()) return Containment::Outside;
    const double phi = polar_angle(v);
    Containment best = Containment::Outside;
    for (const Sector& a : c.sectors()) {
        const double d = wrap_angle(phi - a.start);
        if (d <= a.sweep) {
            const double depth = std::min(d, a.sweep - d);
            if (depth > tol) return Containment::InteriorInside;
            best = Containment::Inside;
        } else {
            const double out = std::min(d - a.sweep, kTwoPi - d);
            if (out <= tol) best = std::max(best, Containment::Inside);
        }
    }
    return best;
}

PolyCone convex_hull_cone(const PolyCone& c) {
    if (c.is_zero() || c.is_full() || c.convex()) return c;
    const auto arc = min_covering_arc(c.sectors());
    if (!arc || arc->sweep > kPi + kAngEps) return PolyCone::full();
    return PolyCone::sector(arc->start, arc->sweep);
}

PolyCone polar_cone(const PolyCone& c) {
    if (c.is_zero()) return PolyCone::full();
    if (c.is_full()) return PolyCone::zero();
    const PolyCone h = convex_hull_cone(c);
    if (h.is_full()) return PolyCone::zero();
    const Sector& a = h.sectors()[0];
    return PolyCone::sector(a.start + a.sweep + kPi / 2.0, kPi - a.sweep);
}

PolyCone negate_cone(const PolyCone& c) {
    if (c.is_zero() || c.is_full()) return c;
    std::vector<Sector> s;
    for (const Sector& a : c.sectors()) s.push_back({a.start + kPi, a.sweep});
    return make_union(std::move(s));
}

PolyCone minkowski_sum(const PolyCone& c1, const PolyCone& c2) {
    if (c1.is_full() || c2.is_full()) return PolyCone::full();
    if (c1.is_zero()) return convex_hull_cone(c2);
    if (c2.is_zero()) return convex_hull_cone(c1);
    std::vector<Sector> arcs = c1.sectors();
    arcs.insert(arcs.end(), c2.sectors().begin(), c2.sectors().end());
    const auto arc = min_covering_arc(arcs);
    if (!arc || arc->sweep > kPi + kAngEps) return PolyCone::full();
    return PolyCone::sector(arc->start, arc->sweep);
}

PolyCone intersect_cones(const PolyCone& a, const PolyCone& b) {
    if (a.is_zero() || b.is_zero()) return PolyCone::zero();
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    std::vector<Sector> pieces;
    for (const Sector& sa : a.sectors()) {
        for (const Sector& sb : b.sectors()) {
            const double rel = wrap_angle(sb.start - sa.start);
            // Piece where sb overlaps sa without wrapping.
            if (rel <= sa.sweep + kAngEps) {
                const double lo = rel;
                const double hi = std::min(sa.sweep, rel + sb.sweep);
                if (hi >= lo - kAngEps) pieces.push_back({sa.start + lo, std::max(0.0, hi - lo)});
            }
            // Piece where sb wraps past 2*pi relative to sa.start.
            if (rel + sb.sweep > kTwoPi) {
                const double hi = std::min(sa.sweep, rel + sb.sweep - kTwoPi);
                if (hi >= -kAngEps) pieces.push_back({sa.start, std::max(0.0, hi)});
            }
        }
    }
    if (pieces.empty()) return PolyCone::zero();
    return make_union(std::move(pieces));
}

bool cone_subset(const PolyCone& a, const PolyCone& b, double tol) {
    if (a.is_zero() || b.is_full()) return true;
    if (a.is_full()) return b.is_full();
    if (b.is_zero()) return false;
    for (const Sector& sa : a.sectors()) {
        bool covered = false;
        for (const Sector& sb : b.sectors()) {
            const double d0 = wrap_angle(sa.start - sb.start);
            const double lead = d0 > kTwoPi - tol ? 0.0 : d0;  // within tol below sb.start
            if (lead <= sb.sweep + tol && lead + sa.sweep <= sb.sweep + tol) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

PolyCone push_forward_tangent(const PolyCone& c, const Mat2& grad) {
    if (grad.determinant() < 1e-12)
        throw SingularGradient("push-forward requires det F >= 1e-12, got " +
                               std::to_string(grad.determinant()));
    if (c.is_zero() || c.is_full()) return c;
    std::vector<Sector> out;
    for (const Sector& a : c.sectors()) {
        const Vec2 g1 = grad * unit_from_angle(a.start);
        if (a.sweep <= kAngEps) {
            out.push_back({polar_angle(g1), 0.0});
            continue;
        }
        const Vec2 g2 = grad * unit_from_angle(a.start + a.sweep);
        const double s = polar_angle(g1);
        double sweep = wrap_angle(polar_angle(g2) - s);
        if (a.sweep >= kPi - kAngEps && sweep < kPi / 2.0) sweep = kPi;  // half-plane image
        out.push_back({s, sweep});
    }
    return make_union(std::move(out));
}

PolyCone push_forward_normal(const PolyCone& c, const Mat2& grad) {
    if (grad.determinant() < 1e-12)
        throw SingularGradient("push-forward requires det F >= 1e-12, got " +
                               std::to_string(grad.determinant()));
    return push_forward_tangent(c, cofactor(grad));
}

PolyCone enlarged_polar_cone(const PolyCone& c, double beta) {
    if (c.is_full()) return PolyCone::zero();
    if (c.is_zero() || c.total_sweep() <= kAngEps)
        throw Error("EmptyInterior", "enlarged_polar_cone requires a cone with nonempty interior");
    const auto arc = min_covering_arc(c.sectors());
    const double s = arc ? arc->sweep : kTwoPi;
    const double beta0 = s / 2.0;
    if (beta >= beta0)
        throw BetaTooLarge("beta = " + std::to_string(beta) + " >= beta0 = " + std::to_string(beta0));
    const double ksweep = kPi - s + 2.0 * beta;
    if (ksweep <= 0.0) return PolyCone::zero();
    return PolyCone::sector(arc->start + s + kPi / 2.0 - beta, ksweep);
}

PolyCone corner_tangent_cone(const Vec2& e_next, const Vec2& e_prev) {
    return PolyCone::spanned_ccw(e_next, e_prev);
}

PolyCone corner_regular_tangent_cone(const Vec2& e_next, const Vec2& e_prev) {
    const PolyCone t = corner_tangent_cone(e_next, e_prev);
    if (t.convex()) return t;
    const PolyCone h1 = PolyCone::halfplane(rot90ccw(e_next.normalized()));
    const PolyCone h2 = PolyCone::halfplane(rot90cw(e_prev.normalized()));
    return intersect_cones(h1, h2);
}

namespace {

struct BoundaryLocation {
    int component;
    int vertex;  // -1 when on an edge interior
    int edge;    // polygon edge index (vertex i -> i+1), valid when vertex == -1
};

BoundaryLocation locate_on_boundary(const ReferenceBody& body, const Vec2& x, double tol = 1e-10) {
    for (int c = 0; c < static_cast<int>(body.components.size()); ++c) {
        const auto& pts = body.components[c].pts;
        const int n = static_cast<int>(pts.size());
        for (int i = 0; i < n; ++i)
            if ((x - pts[i]).norm() <= tol) return {c, i, -1};
        for (int i = 0; i < n; ++i)
            if (point_segment_distance(x, pts[i], pts[(i + 1) % n]).dist <= tol) return {c, -1, i};
    }
    throw PointNotOnBoundary("point (" + std::to_string(x.x()) + ", " + std::to_string(x.y()) +
                             ") is not on the reference boundary");
}

PolyCone corner_cone_at(const ReferenceBody& body, const BoundaryLocation& loc, bool regular) {
    const auto& pts = body.components[loc.component].pts;
    const int n = static_cast<int>(pts.size());
    if (loc.vertex >= 0) {
        const Vec2 e_next = (pts[(loc.vertex + 1) % n] - pts[loc.vertex]).normalized();
        const Vec2 e_prev = (pts[(loc.vertex + n - 1) % n] - pts[loc.vertex]).normalized();
        return regular ? corner_regular_tangent_cone(e_next, e_prev)
                       : corner_tangent_cone(e_next, e_prev);
    }
    const Vec2 d = (pts[(loc.edge + 1) % n] - pts[loc.edge]).normalized();
    return PolyCone::halfplane(rot90ccw(d));
}

}  // namespace

PolyCone tangent_cone(const ReferenceBody& body, const Vec2& x) {
    return corner_cone_at(body, locate_on_boundary(body, x), false);
}

PolyCone regular_tangent_cone(const ReferenceBody& body, const Vec2& x) {
    return corner_cone_at(body, locate_on_boundary(body, x), true);
}

PolyCone convexified_normal_cone(const ReferenceBody& body, const Vec2& x) {
    return polar_cone(regular_tangent_cone(body, x));
}

UniformConeCertificate lipschitz_uniform_cone_certificate(const ReferenceBody& body,
                                                          double angle_floor) {
    UniformConeCertificate cert;
    cert.theta = kPi;
    constexpr double kMargin = 1e-6;
    for (int c = 0; c < static_cast<int>(body.components.size()); ++c) {
        const auto& pts = body.components[c].pts;
        const int n = static_cast<int>(pts.size());
        for (int i = 0; i < n; ++i) {
            const Vec2 e_next = (pts[(i + 1) % n] - pts[i]).normalized();
            const Vec2 e_prev = (pts[(i + n - 1) % n] - pts[i]).normalized();
            const PolyCone rt = corner_regular_tangent_cone(e_next, e_prev);
            const double sweep = rt.total_sweep();
            if (sweep <= 2.0 * kMargin)
                throw DegenerateBoundary("regular tangent cone has empty interior at vertex " +
                                         std::to_string(i));
            ConeChart chart;
            chart.component = c;
            chart.vertex = i;
            chart.arc_begin = 0.5 * (pts[i] + pts[(i + n - 1) % n]);
            chart.arc_end = 0.5 * (pts[i] + pts[(i + 1) % n]);
            chart.direction = unit_from_angle(rt.sectors()[0].start + 0.5 * sweep);
            chart.theta = 0.5 * sweep - kMargin;
            cert.theta = std::min(cert.theta, chart.theta);
            cert.charts.push_back(chart);
        }
    }
    if (cert.theta < angle_floor)
        throw DegenerateBoundary("no uniform cone angle >= configured floor exists (theta = " +
                                 std::to_string(cert.theta) + ")");
    // Spot-check each chart arc: the inner cone must fit in the regular
    // tangent cone at sampled boundary points of the arc.
    for (const ConeChart& chart : cert.charts) {
        const auto& pts = body.components[chart.component].pts;
        const int n = static_cast<int>(pts.size());
        const Vec2 v = pts[chart.vertex];
        const PolyCone inner =
            PolyCone::sector(polar_angle(chart.direction) - chart.theta, 2.0 * chart.theta);
        for (int s = 0; s <= 24; ++s) {
            const double t = s / 24.0;
            const Vec2 x = t < 0.5 ? chart.arc_begin + 2.0 * t * (v - chart.arc_begin)
                                   : v + (2.0 * t - 1.0) * (chart.arc_end - v);
            const PolyCone rt = corner_cone_at(body, locate_on_boundary(body, x, 1e-9), true);
            if (!cone_subset(inner, rt, 1e-9))
                throw DegenerateBoundary("uniform cone certificate failed verification at chart vertex " +
                                         std::to_string(chart.vertex));
        }
    }
    return cert;
}

}  // namespace ccs
