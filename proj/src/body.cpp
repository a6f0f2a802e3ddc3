#include "ccs/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ccs/errors.hpp"

namespace ccs {

double Mesh::total_area() const {
    double a = 0.0;
    for (double t : tri_area) a += t;
    return a;
}

double Mesh::max_edge_length() const {
    double m = 0.0;
    for (const auto& t : tris)
        for (int e = 0; e < 3; ++e)
            m = std::max(m, (nodes[t[e]] - nodes[t[(e + 1) % 3]]).norm());
    return m;
}

double ReferenceBody::diameter() const {
    double d = 0.0;
    std::vector<Vec2> all;
    for (const Polygon& p : components)
        all.insert(all.end(), p.pts.begin(), p.pts.end());
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) d = std::max(d, (all[i] - all[j]).norm());
    return d;
}

void ReferenceBody::mark_gamma(int component, int polygon_edge) {
    const auto& pts = components.at(component).pts;
    const int n = static_cast<int>(pts.size());
    const Vec2 a = pts[polygon_edge % n];
    const Vec2 b = pts[(polygon_edge + 1) % n];
    for (size_t e = 0; e < mesh.boundary_edges.size(); ++e) {
        const Vec2& p = mesh.nodes[mesh.boundary_edges[e][0]];
        const Vec2& q = mesh.nodes[mesh.boundary_edges[e][1]];
        if (mesh.node_component[mesh.boundary_edges[e][0]] != component) continue;
        if (point_segment_distance(p, a, b).dist < 1e-10 &&
            point_segment_distance(q, a, b).dist < 1e-10)
            gamma_edge[e] = 1;
    }
    rebuild_gamma_nodes();
}

void ReferenceBody::rebuild_gamma_nodes() {
    std::vector<char> flag(mesh.nodes.size(), 0);
    for (size_t e = 0; e < mesh.boundary_edges.size(); ++e)
        if (gamma_edge[e]) {
            flag[mesh.boundary_edges[e][0]] = 1;
            flag[mesh.boundary_edges[e][1]] = 1;
        }
    gamma_nodes.clear();
    for (size_t n = 0; n < flag.size(); ++n)
        if (flag[n]) gamma_nodes.push_back(static_cast<int>(n));
}

bool Container::contains(const Vec2& p) const { return signed_gap(p) >= 0.0; }

double Container::signed_gap(const Vec2& p) const {
    if (!bounded) {
        double g = std::numeric_limits<double>::max();
        for (const HalfPlane& h : halfplanes) g = std::min(g, h.n.dot(p) - h.c);
        return g;
    }
    const auto& pts = polygon.pts;
    const size_t n = pts.size();
    double d = std::numeric_limits<double>::max();
    for (size_t i = 0; i < n; ++i)
        d = std::min(d, point_segment_distance(p, pts[i], pts[(i + 1) % n]).dist);
    return polygon.contains(p) ? d : -d;
}

Vec2 Container::wall_inward_normal(const Vec2& p) const {
    if (!bounded) {
        double g = std::numeric_limits<double>::max();
        Vec2 n(0, 1);
        for (const HalfPlane& h : halfplanes) {
            const double gi = h.n.dot(p) - h.c;
            if (gi < g) {
                g = gi;
                n = h.n;
            }
        }
        return n;
    }
    const auto& pts = polygon.pts;
    const size_t n = pts.size();
    double best = std::numeric_limits<double>::max();
    Vec2 normal(0, 1);
    for (size_t i = 0; i < n; ++i) {
        const auto ps = point_segment_distance(p, pts[i], pts[(i + 1) % n]);
        if (ps.dist < best) {
            best = ps.dist;
            const Vec2 e = (pts[(i + 1) % n] - pts[i]).normalized();
            normal = Vec2(-e.y(), e.x());  // interior of a CCW polygon is on the left
        }
    }
    return normal;
}

double Deformation::min_det() const {
    double m = std::numeric_limits<double>::max();
    for (double d : dets) m = std::min(m, d);
    return m;
}

namespace {

/// Deterministic ear clipping of a simple CCW polygon; returns triangles as
/// index triples into the polygon's vertex list.
std::vector<std::array<int, 3>> ear_clip(const std::vector<Vec2>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> ring(n);
    for (int i = 0; i < n; ++i) ring[i] = i;
    std::vector<std::array<int, 3>> tris;
    int guard = 0;
    while (ring.size() > 3) {
        if (++guard > 10 * n) throw InvalidPolygon("ear clipping failed to make progress");
        bool clipped = false;
        const int m = static_cast<int>(ring.size());
        for (int i = 0; i < m; ++i) {
            const int ia = ring[(i + m - 1) % m];
            const int ib = ring[i];
            const int ic = ring[(i + 1) % m];
            const Vec2& a = pts[ia];
            const Vec2& b = pts[ib];
            const Vec2& c = pts[ic];
            if (cross2(b - a, c - b) <= 1e-14) continue;  // reflex or degenerate corner
            bool ear = true;
            for (int j : ring) {
                if (j == ia || j == ib || j == ic) continue;
                const Vec2& p = pts[j];
                // strictly inside the candidate ear triangle
                if (cross2(b - a, p - a) > 1e-14 && cross2(c - b, p - b) > 1e-14 &&
                    cross2(a - c, p - c) > 1e-14) {
                    ear = false;
                    break;
                }
            }
            if (!ear) continue;
            tris.push_back({ia, ib, ic});
            ring.erase(ring.begin() + i);
            clipped = true;
            break;
        }
        if (!clipped) throw InvalidPolygon("no ear found; polygon may be degenerate");
    }
    tris.push_back({ring[0], ring[1], ring[2]});
    return tris;
}

struct RawMesh {
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 3>> tris;
};

/// One sweep of uniform red refinement: every triangle splits into four via
/// edge midpoints shared between neighbors.
RawMesh red_refine(const RawMesh& in) {
    RawMesh out;
    out.nodes = in.nodes;
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
        const auto key = std::minmax(a, b);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        const int id = static_cast<int>(out.nodes.size());
        out.nodes.push_back(0.5 * (in.nodes[a] + in.nodes[b]));
        midpoint.emplace(key, id);
        return id;
    };
    for (const auto& t : in.tris) {
        const int m01 = mid(t[0], t[1]);
        const int m12 = mid(t[1], t[2]);
        const int m20 = mid(t[2], t[0]);
        out.tris.push_back({t[0], m01, m20});
        out.tris.push_back({m01, t[1], m12});
        out.tris.push_back({m20, m12, t[2]});
        out.tris.push_back({m01, m12, m20});
    }
    return out;
}

double max_edge(const RawMesh& m) {
    double e = 0.0;
    for (const auto& t : m.tris)
        for (int i = 0; i < 3; ++i)
            e = std::max(e, (m.nodes[t[i]] - m.nodes[t[(i + 1) % 3]]).norm());
    return e;
}

void finalize_mesh(Mesh& mesh) {
    const int nn = static_cast<int>(mesh.nodes.size());
    mesh.tri_area.clear();
    mesh.tri_pinv.clear();
    mesh.node_weight.assign(nn, 0.0);
    mesh.node_tris.assign(nn, {});
    for (size_t t = 0; t < mesh.tris.size(); ++t) {
        const auto& tr = mesh.tris[t];
        const Vec2 e1 = mesh.nodes[tr[1]] - mesh.nodes[tr[0]];
        const Vec2 e2 = mesh.nodes[tr[2]] - mesh.nodes[tr[0]];
        const double area2 = cross2(e1, e2);
        if (area2 < 2e-12) throw DegenerateElement("triangle area below 1e-12");
        mesh.tri_area.push_back(0.5 * area2);
        Mat2 p;
        p << e1.x(), e2.x(), e1.y(), e2.y();
        mesh.tri_pinv.push_back(p.inverse());
        for (int k = 0; k < 3; ++k) {
            mesh.node_weight[tr[k]] += area2 / 6.0;
            mesh.node_tris[tr[k]].push_back(static_cast<int>(t));
        }
    }
    // Boundary edges: oriented edges that appear in exactly one triangle.
    std::map<std::pair<int, int>, int> count;
    for (const auto& tr : mesh.tris)
        for (int k = 0; k < 3; ++k) {
            const int a = tr[k];
            const int b = tr[(k + 1) % 3];
            ++count[std::minmax(a, b)];
        }
    mesh.boundary_edges.clear();
    for (const auto& tr : mesh.tris)
        for (int k = 0; k < 3; ++k) {
            const int a = tr[k];
            const int b = tr[(k + 1) % 3];
            if (count[std::minmax(a, b)] == 1) mesh.boundary_edges.push_back({a, b});
        }
    mesh.next_on_boundary.assign(nn, -1);
    mesh.prev_on_boundary.assign(nn, -1);
    for (const auto& e : mesh.boundary_edges) {
        mesh.next_on_boundary[e[0]] = e[1];
        mesh.prev_on_boundary[e[1]] = e[0];
    }
    mesh.boundary_nodes.clear();
    for (int n = 0; n < nn; ++n)
        if (mesh.next_on_boundary[n] >= 0) mesh.boundary_nodes.push_back(n);
}

}  // namespace

ReferenceBody build_mesh(const std::vector<Polygon>& polygons, double resolution) {
    if (resolution <= 0.0) throw InvalidPolygon("resolution must be positive");
    if (polygons.empty()) throw InvalidPolygon("no polygons given");
    for (size_t i = 0; i < polygons.size(); ++i) {
        if (!polygons[i].is_simple())
            throw InvalidPolygon("polygon " + std::to_string(i) + " is not simple");
        if (polygons[i].signed_area() <= 0.0)
            throw InvalidPolygon("polygon " + std::to_string(i) + " is not positively oriented");
        for (size_t j = i + 1; j < polygons.size(); ++j) {
            for (const Vec2& p : polygons[j].pts)
                if (polygons[i].contains(p))
                    throw InvalidPolygon("polygons " + std::to_string(i) + " and " +
                                         std::to_string(j) + " are not disjoint");
            for (const Vec2& p : polygons[i].pts)
                if (polygons[j].contains(p))
                    throw InvalidPolygon("polygons " + std::to_string(i) + " and " +
                                         std::to_string(j) + " are not disjoint");
            const auto& pi = polygons[i].pts;
            const auto& pj = polygons[j].pts;
            for (size_t a = 0; a < pi.size(); ++a)
                for (size_t b = 0; b < pj.size(); ++b)
                    if (segments_cross(pi[a], pi[(a + 1) % pi.size()], pj[b],
                                       pj[(b + 1) % pj.size()]))
                        throw InvalidPolygon("polygons " + std::to_string(i) + " and " +
                                             std::to_string(j) + " intersect");
        }
    }
    ReferenceBody body;
    body.components = polygons;
    body.resolution = resolution;
    for (size_t c = 0; c < polygons.size(); ++c) {
        RawMesh raw;
        raw.nodes = polygons[c].pts;
        raw.tris = ear_clip(raw.nodes);
        while (max_edge(raw) > resolution * std::sqrt(2.0) * (1.0 + 1e-12)) raw = red_refine(raw);
        const int off = static_cast<int>(body.mesh.nodes.size());
        body.mesh.nodes.insert(body.mesh.nodes.end(), raw.nodes.begin(), raw.nodes.end());
        for (const auto& t : raw.tris)
            body.mesh.tris.push_back({t[0] + off, t[1] + off, t[2] + off});
        body.mesh.node_component.insert(body.mesh.node_component.end(), raw.nodes.size(),
                                        static_cast<int>(c));
    }
    finalize_mesh(body.mesh);
    body.gamma_edge.assign(body.mesh.boundary_edges.size(), 0);
    return body;
}

ReferenceBody mirror_body_x(const ReferenceBody& body, double axis_x) {
    ReferenceBody out = body;
    auto flip = [axis_x](const Vec2& p) { return Vec2(2.0 * axis_x - p.x(), p.y()); };
    for (Polygon& poly : out.components) {
        for (Vec2& p : poly.pts) p = flip(p);
        std::reverse(poly.pts.begin(), poly.pts.end());
    }
    for (Vec2& p : out.mesh.nodes) p = flip(p);
    for (auto& t : out.mesh.tris) std::swap(t[1], t[2]);
    finalize_mesh(out.mesh);
    // Boundary edges were regenerated; re-derive gamma flags from the old ones.
    out.gamma_edge.assign(out.mesh.boundary_edges.size(), 0);
    for (size_t e = 0; e < body.mesh.boundary_edges.size(); ++e) {
        if (!body.gamma_edge[e]) continue;
        const int a = body.mesh.boundary_edges[e][0];
        const int b = body.mesh.boundary_edges[e][1];
        for (size_t f = 0; f < out.mesh.boundary_edges.size(); ++f)
            if (out.mesh.boundary_edges[f][0] == b && out.mesh.boundary_edges[f][1] == a)
                out.gamma_edge[f] = 1;
    }
    out.rebuild_gamma_nodes();
    return out;
}

ReferenceBody merge_bodies(const std::vector<ReferenceBody>& parts) {
    ReferenceBody out;
    out.resolution = parts.empty() ? 0.0 : parts[0].resolution;
    for (const ReferenceBody& part : parts) {
        const int noff = static_cast<int>(out.mesh.nodes.size());
        const int coff = static_cast<int>(out.components.size());
        out.components.insert(out.components.end(), part.components.begin(),
                              part.components.end());
        out.mesh.nodes.insert(out.mesh.nodes.end(), part.mesh.nodes.begin(),
                              part.mesh.nodes.end());
        for (const auto& t : part.mesh.tris)
            out.mesh.tris.push_back({t[0] + noff, t[1] + noff, t[2] + noff});
        for (int c : part.mesh.node_component) out.mesh.node_component.push_back(c + coff);
        out.resolution = std::min(out.resolution, part.resolution);
    }
    finalize_mesh(out.mesh);
    out.gamma_edge.assign(out.mesh.boundary_edges.size(), 0);
    // Gamma flags transfer by matching node pairs across the renumbering.
    int noff = 0;
    for (const ReferenceBody& part : parts) {
        for (size_t e = 0; e < part.mesh.boundary_edges.size(); ++e) {
            if (!part.gamma_edge[e]) continue;
            const int a = part.mesh.boundary_edges[e][0] + noff;
            const int b = part.mesh.boundary_edges[e][1] + noff;
            for (size_t f = 0; f < out.mesh.boundary_edges.size(); ++f)
                if (out.mesh.boundary_edges[f][0] == a && out.mesh.boundary_edges[f][1] == b)
                    out.gamma_edge[f] = 1;
        }
        noff += static_cast<int>(part.mesh.nodes.size());
    }
    out.rebuild_gamma_nodes();
    return out;
}

Deformation interpolate_gradient_and_hessian(const ReferenceBody& body,
                                             const std::vector<Vec2>& nodal_positions) {
    const Mesh& mesh = body.mesh;
    if (nodal_positions.size() != mesh.nodes.size())
        throw Error("ShapeMismatch", "one position per mesh node required");
    Deformation d;
    d.x = nodal_positions;
    const size_t nt = mesh.tris.size();
    const size_t nn = mesh.nodes.size();
    d.grads.resize(nt);
    d.dets.resize(nt);
    for (size_t t = 0; t < nt; ++t) {
        const auto& tr = mesh.tris[t];
        Mat2 xd;
        xd.col(0) = d.x[tr[1]] - d.x[tr[0]];
        xd.col(1) = d.x[tr[2]] - d.x[tr[0]];
        d.grads[t] = xd * mesh.tri_pinv[t];
        d.dets[t] = d.grads[t].determinant();
    }
    // Gradient recovery: area-weighted nodal average of the element gradients.
    std::vector<Mat2> g(nn, Mat2::Zero());
    std::vector<double> w(nn, 0.0);
    for (size_t t = 0; t < nt; ++t)
        for (int k = 0; k < 3; ++k) {
            const int n = mesh.tris[t][k];
            g[n] += mesh.tri_area[t] * d.grads[t];
            w[n] += mesh.tri_area[t];
        }
    for (size_t n = 0; n < nn; ++n) g[n] /= w[n];
    // Second pass: per-element gradients of the recovered field, averaged back.
    d.hessian.assign(nn, {Mat2::Zero(), Mat2::Zero()});
    for (size_t t = 0; t < nt; ++t) {
        const auto& tr = mesh.tris[t];
        const Mat2 pt = mesh.tri_pinv[t].transpose();
        for (int c = 0; c < 2; ++c)
            for (int i = 0; i < 2; ++i) {
                const Vec2 dg(g[tr[1]](c, i) - g[tr[0]](c, i), g[tr[2]](c, i) - g[tr[0]](c, i));
                const Vec2 grad = pt * dg;  // d/dx_j of recovered dη_c/dx_i
                for (int k = 0; k < 3; ++k) {
                    const int n = mesh.tris[t][k];
                    d.hessian[n][c].row(i) += (mesh.tri_area[t] / w[n]) * grad.transpose();
                }
            }
    }
    return d;
}

}  // namespace ccs
