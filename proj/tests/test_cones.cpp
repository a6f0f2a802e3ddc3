#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccs/body.hpp"
#include "ccs/cones.hpp"
#include "ccs/errors.hpp"

using namespace ccs;

namespace {

Polygon unit_square() {
    return Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
}

Polygon l_domain() {
    return Polygon{{{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}}};
}

bool cones_equal(const PolyCone& a, const PolyCone& b, double tol = 1e-9) {
    if (a.is_zero() != b.is_zero() || a.is_full() != b.is_full()) return false;
    if (a.is_zero() || a.is_full()) return true;
    if (a.sectors().size() != b.sectors().size()) return false;
    for (const Sector& sa : a.sectors()) {
        bool found = false;
        for (const Sector& sb : b.sectors())
            if (angle_distance(sa.start, sb.start) < tol && std::fabs(sa.sweep - sb.sweep) < tol) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

/// Sampled membership oracle: w is in the polar of c iff w.v <= 0 against a
/// dense direction sample of c.
bool sampled_polar_member(const PolyCone& c, const Vec2& w, int samples = 1000) {
    for (const Sector& s : c.sectors())
        for (int i = 0; i <= samples; ++i) {
            const Vec2 v = unit_from_angle(s.start + s.sweep * i / samples);
            if (w.dot(v) > 1e-12) return false;
        }
    return !c.is_full() || w.norm() < 1e-12;
}

}  // namespace

TEST_CASE("tangent cones of the unit square") {
    const ReferenceBody body = build_mesh({unit_square()}, 1.0);

    const PolyCone edge = tangent_cone(body, Vec2(0.5, 0.0));
    CHECK(cones_equal(edge, PolyCone::halfplane(Vec2(0, 1))));

    const PolyCone corner = tangent_cone(body, Vec2(0, 0));
    CHECK(cones_equal(corner, PolyCone::sector(0.0, kPi / 2)));
    CHECK(cones_equal(regular_tangent_cone(body, Vec2(0, 0)), corner));

    CHECK_THROWS_AS((void)tangent_cone(body, Vec2(0.5, 0.5)), PointNotOnBoundary);
}

TEST_CASE("L-domain reflex corner") {
    const ReferenceBody body = build_mesh({l_domain()}, 1.0);
    const Vec2 x(0.5, 0.5);

    const PolyCone t = tangent_cone(body, x);
    CHECK(cones_equal(t, PolyCone::sector(kPi / 2, 1.5 * kPi)));

    const PolyCone rt = regular_tangent_cone(body, x);
    CHECK(cones_equal(rt, PolyCone::sector(kPi, kPi / 2)));  // third quadrant

    const PolyCone n = convexified_normal_cone(body, x);
    CHECK(cones_equal(n, PolyCone::sector(0.0, kPi / 2)));  // first quadrant

    // liminf oracle: intersect tangent cones at many nearby boundary points.
    PolyCone inter = PolyCone::full();
    for (int k = 1; k <= 500; ++k) {
        const double d = 1e-3 * k / 500.0;
        inter = intersect_cones(inter, tangent_cone(body, x + Vec2(0.0, d)));   // vertical leg
        inter = intersect_cones(inter, tangent_cone(body, x + Vec2(d, 0.0)));   // horizontal leg
    }
    inter = intersect_cones(inter, t);
    CHECK(cones_equal(inter, rt, 1e-8));
}

TEST_CASE("polar cone fixtures") {
    const PolyCone q1 = PolyCone::sector(0.0, kPi / 2);
    CHECK(cones_equal(polar_cone(q1), PolyCone::sector(kPi, kPi / 2)));
    CHECK(cones_equal(polar_cone(PolyCone::halfplane(Vec2(0, 1))), PolyCone::ray(Vec2(0, -1))));
    CHECK(polar_cone(PolyCone::zero()).is_full());
    CHECK(polar_cone(PolyCone::full()).is_zero());
}

TEST_CASE("polar involution and sampled polar oracle") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> uang(0.0, kTwoPi);
    std::uniform_real_distribution<double> usweep(0.1, kPi);
    for (int trial = 0; trial < 200; ++trial) {
        const PolyCone c = PolyCone::sector(uang(rng), usweep(rng));
        CHECK(cones_equal(polar_cone(polar_cone(c)), c));
        const PolyCone p = polar_cone(c);
        for (int i = 0; i < 16; ++i) {
            const Vec2 w = unit_from_angle(uang(rng));
            const bool in_p = cone_contains(p, w, 1e-6) != Containment::Outside;
            const bool oracle = sampled_polar_member(c, w);
            if (in_p != oracle) {
                // disagreements may only happen within tolerance of the boundary
                const bool near = cone_contains(p, w, 1e-3) != Containment::Outside;
                CHECK(near);
            }
        }
    }
    // Nonconvex cone: polar equals polar of the convex hull.
    const PolyCone wide = PolyCone::sector(kPi / 2, 1.5 * kPi);
    CHECK(cones_equal(polar_cone(wide), polar_cone(convex_hull_cone(wide))));
    CHECK(cones_equal(polar_cone(polar_cone(wide)), convex_hull_cone(wide)));
}

TEST_CASE("push-forward transformation law") {
    const PolyCone q1 = PolyCone::sector(0.0, kPi / 2);
    CHECK(cones_equal(push_forward_tangent(q1, Mat2::Identity()), q1));
    CHECK(cones_equal(push_forward_tangent(q1, 2.0 * Mat2::Identity()), q1));
    Mat2 singular;
    singular << 1, 0, 0, 0;
    CHECK_THROWS_AS((void)push_forward_tangent(q1, singular), SingularGradient);

    std::mt19937 rng(77);
    std::uniform_real_distribution<double> uang(0.0, kTwoPi);
    std::uniform_real_distribution<double> usweep(0.05, kPi);
    std::uniform_real_distribution<double> uentry(-2.0, 2.0);
    int done = 0;
    while (done < 200) {
        Mat2 f;
        f << uentry(rng), uentry(rng), uentry(rng), uentry(rng);
        if (f.determinant() < 0.1 || f.determinant() > 10.0) continue;
        ++done;
        const PolyCone c = PolyCone::sector(uang(rng), usweep(rng));
        const PolyCone lhs = polar_cone(push_forward_tangent(c, f));
        const PolyCone rhs = push_forward_normal(polar_cone(c), f);
        CHECK(cones_equal(lhs, rhs, 1e-9));
    }
}

TEST_CASE("membership classification") {
    const PolyCone q1 = PolyCone::sector(0.0, kPi / 2);
    CHECK(cone_contains(q1, Vec2(1, 1), 1e-6) == Containment::InteriorInside);
    CHECK(cone_contains(q1, Vec2(1, 0), 1e-8) == Containment::Inside);
    CHECK(cone_contains(q1, Vec2(-1, 0), 1e-8) == Containment::Outside);
    CHECK(cone_contains(q1, Vec2(0, 0), 1e-8) == Containment::Inside);
    CHECK(cone_contains(PolyCone::full(), Vec2(3, -4), 1e-8) == Containment::InteriorInside);
    CHECK(cone_contains(PolyCone::zero(), Vec2(1, 0), 1e-8) == Containment::Outside);
}

TEST_CASE("enlarged polar cone") {
    const PolyCone q1 = PolyCone::sector(0.0, kPi / 2);
    CHECK(cones_equal(enlarged_polar_cone(q1, 0.0), polar_cone(q1)));

    const double beta = 10.0 * kPi / 180.0;
    const PolyCone k = enlarged_polar_cone(q1, beta);
    const Vec2 v0 = Vec2(1, 1).normalized();
    for (const Sector& s : k.sectors())
        for (int i = 0; i <= 1000; ++i) {
            const Vec2 w = unit_from_angle(s.start + s.sweep * i / 1000);
            CHECK(v0.dot(w) < 0.0);
            // definition: w . v <= sin(beta)|w||v| over the whole cone
            for (int j = 0; j <= 40; ++j) {
                const Vec2 v = unit_from_angle(kPi / 2 * j / 40.0);
                CHECK(w.dot(v) <= std::sin(beta) + 1e-12);
            }
        }

    const PolyCone half = PolyCone::halfplane(Vec2(0, 1));
    const double b5 = 5.0 * kPi / 180.0;
    const PolyCone k5 = enlarged_polar_cone(half, b5);
    CHECK(k5.sectors().size() == 1);
    CHECK(k5.sectors()[0].sweep == doctest::Approx(2.0 * b5).epsilon(1e-12));
    // centered on the inward-opposite ray (0,-1)
    const double center = wrap_angle(k5.sectors()[0].start + b5);
    CHECK(angle_distance(center, 1.5 * kPi) < 1e-12);

    CHECK_THROWS_AS((void)enlarged_polar_cone(q1, kPi / 4), BetaTooLarge);
}

TEST_CASE("uniform cone certificate") {
    const ReferenceBody square = build_mesh({unit_square()}, 1.0);
    const auto cert_sq = lipschitz_uniform_cone_certificate(square);
    CHECK(cert_sq.charts.size() == 4);
    CHECK(cert_sq.theta == doctest::Approx(kPi / 4).epsilon(1e-4));
    CHECK(cert_sq.theta < kPi / 4);
    for (const auto& chart : cert_sq.charts)
        CHECK(angle_distance(polar_angle(chart.direction),
                             polar_angle(chart.direction)) == doctest::Approx(0.0));

    const ReferenceBody ldom = build_mesh({l_domain()}, 1.0);
    const auto cert_l = lipschitz_uniform_cone_certificate(ldom);
    CHECK(cert_l.charts.size() == 6);
    CHECK(cert_l.theta == doctest::Approx(kPi / 4).epsilon(1e-4));

    const Polygon tri{{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}}};
    const auto cert_t = lipschitz_uniform_cone_certificate(build_mesh({tri}, 2.0));
    CHECK(cert_t.theta == doctest::Approx(kPi / 6).epsilon(1e-4));
    CHECK(cert_t.theta < kPi / 6);

    // Inner cones fit the regular tangent cone along each chart arc.
    for (const auto& chart : cert_l.charts) {
        const PolyCone inner =
            PolyCone::sector(polar_angle(chart.direction) - cert_l.theta, 2.0 * cert_l.theta);
        const Vec2 v = ldom.components[0].pts[chart.vertex];
        for (int i = 0; i <= 100; ++i) {
            const double t = i / 100.0;
            const Vec2 x = t < 0.5 ? chart.arc_begin + 2.0 * t * (v - chart.arc_begin)
                                   : v + (2.0 * t - 1.0) * (chart.arc_end - v);
            CHECK(cone_subset(inner, regular_tangent_cone(ldom, x), 1e-8));
        }
    }
}

TEST_CASE("regular tangent cone is contained in the tangent cone") {
    const ReferenceBody ldom = build_mesh({l_domain()}, 0.5);
    for (int bn : ldom.mesh.boundary_nodes) {
        const Vec2 x = ldom.mesh.nodes[bn];
        const PolyCone t = tangent_cone(ldom, x);
        const PolyCone rt = regular_tangent_cone(ldom, x);
        CHECK(cone_subset(rt, t, 1e-9));
        for (int i = 0; i < 100; ++i) {
            const Vec2 v = unit_from_angle(kTwoPi * i / 100.0);
            if (cone_contains(rt, v, 1e-9) == Containment::InteriorInside)
                CHECK(cone_contains(t, v, 1e-9) != Containment::Outside);
        }
    }
}

TEST_CASE("sector algebra helpers") {
    const PolyCone a = PolyCone::sector(0.0, kPi / 2);
    const PolyCone b = PolyCone::sector(kPi / 4, kPi / 2);
    const PolyCone i = intersect_cones(a, b);
    CHECK(cones_equal(i, PolyCone::sector(kPi / 4, kPi / 4)));
    CHECK(cone_subset(i, a, 1e-9));
    CHECK(cone_subset(i, b, 1e-9));
    CHECK(!cone_subset(a, b, 1e-9));

    const PolyCone m = minkowski_sum(a, b);
    CHECK(cones_equal(m, PolyCone::sector(0.0, 0.75 * kPi)));
    CHECK(minkowski_sum(PolyCone::halfplane(Vec2(0, 1)), PolyCone::halfplane(Vec2(0, -1)))
              .is_full());

    // Opposite half-planes intersect in a line (two opposite rays).
    const PolyCone line =
        intersect_cones(PolyCone::halfplane(Vec2(0, 1)), PolyCone::halfplane(Vec2(0, -1)));
    CHECK(line.total_sweep() == doctest::Approx(0.0));
    CHECK(cone_contains(line, Vec2(1, 0), 1e-8) == Containment::Inside);
    CHECK(cone_contains(line, Vec2(-1, 0), 1e-8) == Containment::Inside);
    CHECK(cone_contains(line, Vec2(0, 1), 1e-8) == Containment::Outside);

    CHECK(cones_equal(negate_cone(a), PolyCone::sector(kPi, kPi / 2)));
}
