#pragma once

#include <array>
#include <vector>

#include "ccs/geometry.hpp"

namespace ccs {

/// Conforming triangle mesh over one or more polygonal components.
/// Triangles are CCW; boundary edges are oriented with the body on the left.
struct Mesh {
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 3>> tris;
    std::vector<std::array<int, 2>> boundary_edges;
    std::vector<int> node_component;          // owning polygon per node
    std::vector<double> tri_area;             // reference areas (positive)
    std::vector<Mat2> tri_pinv;               // inverse reference edge matrix per triangle
    std::vector<double> node_weight;          // lumped area weight: sum of area/3
    std::vector<int> boundary_nodes;          // ascending node ids
    std::vector<int> next_on_boundary;        // -1 for interior nodes
    std::vector<int> prev_on_boundary;
    std::vector<std::vector<int>> node_tris;  // triangles touching each node

    double total_area() const;
    double max_edge_length() const;
    bool is_boundary_node(int n) const { return next_on_boundary[n] >= 0; }
};

/// Polygonal reference configuration: component polygons, the mesh, and the
/// Dirichlet part of the boundary.
struct ReferenceBody {
    std::vector<Polygon> components;
    Mesh mesh;
    double resolution = 0.0;
    std::vector<char> gamma_edge;  // flag per mesh.boundary_edges entry
    std::vector<int> gamma_nodes;  // ascending node ids touched by a gamma edge

    double diameter() const;
    /// Marks as Dirichlet all boundary edges lying on the given edge of the
    /// original polygon (component c, edge from vertex e to e+1).
    void mark_gamma(int component, int polygon_edge);
    void rebuild_gamma_nodes();
};

struct HalfPlane {
    Vec2 n;      // unit inward normal
    double c;    // inside: n . x >= c
};

/// Confining set: a simple polygon or an intersection of half-planes.
struct Container {
    bool bounded = false;
    Polygon polygon;
    std::vector<HalfPlane> halfplanes;

    bool contains(const Vec2& p) const;
    /// Distance to the container boundary, positive inside, negative outside.
    double signed_gap(const Vec2& p) const;
    /// Unit inward normal of the nearest wall.
    Vec2 wall_inward_normal(const Vec2& p) const;
};

/// Nodal deformation with per-element gradients and a recovered nodal Hessian.
struct Deformation {
    std::vector<Vec2> x;
    std::vector<Mat2> grads;
    std::vector<double> dets;
    /// hessian[n][c](i,j) approximates the second derivative of component c.
    std::vector<std::array<Mat2, 2>> hessian;

    double min_det() const;
};

/// Deterministic triangulation: ear clipping followed by uniform red
/// refinement until the longest edge is at most resolution * sqrt(2).
ReferenceBody build_mesh(const std::vector<Polygon>& polygons, double resolution);

/// Reflects a meshed body about the vertical line x = axis_x, preserving the
/// mesh combinatorics so that reflected nodes correspond one-to-one.
ReferenceBody mirror_body_x(const ReferenceBody& body, double axis_x);

/// Merges several meshed bodies into one multi-component body.
ReferenceBody merge_bodies(const std::vector<ReferenceBody>& parts);

Deformation interpolate_gradient_and_hessian(const ReferenceBody& body,
                                             const std::vector<Vec2>& nodal_positions);

}  // namespace ccs
