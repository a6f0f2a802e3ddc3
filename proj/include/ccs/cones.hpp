#pragma once

#include <vector>

#include "ccs/geometry.hpp"

namespace ccs {

struct ReferenceBody;

/// Angular sector {v != 0 : angle(v) in [start, start + sweep]} plus the origin.
/// start is normalized to [0, 2*pi); sweep lies in [0, 2*pi).
struct Sector {
    double start = 0.0;
    double sweep = 0.0;
};

/// Polyhedral cone in the plane. Stored as the origin plus at most two
/// disjoint angular sectors; a single sector with sweep <= pi is convex.
/// The whole plane and the trivial cone {0} are flagged explicitly.
class PolyCone {
public:
    static PolyCone zero();
    static PolyCone full();
    static PolyCone sector(double start, double sweep);
    static PolyCone ray(const Vec2& dir);
    /// Half-plane {v : n . v >= 0} for an inward normal n.
    static PolyCone halfplane(const Vec2& inward_normal);
    /// Sector spanned CCW from direction a to direction b.
    static PolyCone spanned_ccw(const Vec2& a, const Vec2& b);

    bool is_zero() const { return zero_; }
    bool is_full() const { return full_; }
    bool convex() const;
    const std::vector<Sector>& sectors() const { return sectors_; }
    double total_sweep() const;

    /// Unit boundary-ray directions (two per sector, one for a ray).
    std::vector<Vec2> generators() const;
    /// Inward half-space normals a_i with cone = {v : a_i . v >= 0}. Convex cones only.
    std::vector<Vec2> halfspaces() const;

private:
    std::vector<Sector> sectors_;
    bool zero_ = false;
    bool full_ = false;

    friend PolyCone make_union(std::vector<Sector> s);
};

enum class Containment { Outside, Inside, InteriorInside };

/// Membership of v in c with angular tolerance tol (radians). The zero vector
/// is always Inside.
Containment cone_contains(const PolyCone& c, const Vec2& v, double tol = 1e-8);

PolyCone polar_cone(const PolyCone& c);
/// Closed convex hull (as a cone).
PolyCone convex_hull_cone(const PolyCone& c);
PolyCone negate_cone(const PolyCone& c);
/// Convex cone of all sums a + b, a in c1, b in c2 (the cone hull of the union).
PolyCone minkowski_sum(const PolyCone& c1, const PolyCone& c2);
/// Intersection; both inputs must be convex.
PolyCone intersect_cones(const PolyCone& a, const PolyCone& b);
/// True if every direction of a lies in b, up to angular tolerance.
bool cone_subset(const PolyCone& a, const PolyCone& b, double tol = 1e-9);

/// Tangent cones transform by v -> F v; throws SingularGradient for det F < 1e-12.
PolyCone push_forward_tangent(const PolyCone& c, const Mat2& grad);
/// Normal cones transform by n -> cof(F) n.
PolyCone push_forward_normal(const PolyCone& c, const Mat2& grad);

/// K_beta = {w : w . v <= sin(beta)|w||v| for all v in c}; beta = 0 gives the polar.
/// Throws BetaTooLarge when beta >= half the opening angle of c.
PolyCone enlarged_polar_cone(const PolyCone& c, double beta);

/// Tangent cone of a polygon corner: e_next points along the outgoing boundary
/// edge, e_prev along the incoming one reversed (both away from the corner);
/// the interior lies CCW from e_next to e_prev.
PolyCone corner_tangent_cone(const Vec2& e_next, const Vec2& e_prev);
/// Regular tangent cone of the same corner: equal to the tangent cone when it
/// is convex, otherwise the intersection of the two adjacent edge half-planes.
PolyCone corner_regular_tangent_cone(const Vec2& e_next, const Vec2& e_prev);

/// Boundary-point cones of a polygonal reference body (reference configuration).
PolyCone tangent_cone(const ReferenceBody& body, const Vec2& x);
PolyCone regular_tangent_cone(const ReferenceBody& body, const Vec2& x);
PolyCone convexified_normal_cone(const ReferenceBody& body, const Vec2& x);

/// One chart of the Lipschitz uniform-cone certificate: a boundary arc around
/// a polygon corner together with a direction v such that L_{theta,v} fits in
/// the regular tangent cone everywhere on the arc.
struct ConeChart {
    int component = 0;
    int vertex = 0;       // polygon vertex index
    Vec2 arc_begin;       // midpoint of the incoming edge
    Vec2 arc_end;         // midpoint of the outgoing edge
    Vec2 direction;       // unit axis of the inner cone
    double theta = 0.0;   // admissible half-opening for this chart
};

struct UniformConeCertificate {
    double theta = 0.0;   // uniform angle over all charts
    std::vector<ConeChart> charts;
};

/// Finite chart cover of the boundary with a uniform inner-cone angle.
/// Throws DegenerateBoundary if no angle >= angle_floor exists.
UniformConeCertificate lipschitz_uniform_cone_certificate(const ReferenceBody& body,
                                                          double angle_floor = 0.01);

}  // namespace ccs
