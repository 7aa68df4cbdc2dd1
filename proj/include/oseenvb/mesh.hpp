#pragma once

#include "oseenvb/common.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oseenvb {

enum class BoundaryTag : std::uint8_t { Interior = 0, Gamma1 = 1, Gamma2 = 2 };

struct BoundaryEdge {
    int v0 = 0;
    int v1 = 0;
    BoundaryTag tag = BoundaryTag::Gamma1;
};

/// Fixed unit normal and tangent of an edge, with tangent = (-n2, n1).
struct EdgeFrame {
    Vec2 normal;
    Vec2 tangent;
};

/// Conforming, counter-clockwise triangulation with edge adjacency.
///
/// Local edge i of a triangle is the edge opposite its local vertex i.
/// Edges are stored with v0 < v1. For an interior edge the incident
/// triangles are stored in increasing index order and the canonical normal
/// points from the first into the second; for a boundary edge the normal
/// is outward. Immutable once constructed.
class TriMesh {
public:
    TriMesh() = default;

    /// Validates orientation, manifoldness, conformity and boundary tags.
    /// Every boundary edge must be tagged and no interior edge may be.
    TriMesh(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles,
            const std::vector<BoundaryEdge>& boundary);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_triangles() const { return static_cast<int>(triangles_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_boundary_edges() const { return num_boundary_edges_; }

    const Vec2& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
    const std::vector<Vec2>& vertices() const { return vertices_; }
    const std::array<int, 3>& triangle(int t) const { return triangles_[static_cast<std::size_t>(t)]; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

    const std::array<int, 2>& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::array<int, 3>& triangle_edges(int t) const { return tri_edges_[static_cast<std::size_t>(t)]; }
    /// Incident triangles; the second entry is -1 on the boundary.
    const std::array<int, 2>& edge_triangles(int e) const { return edge_tris_[static_cast<std::size_t>(e)]; }
    bool is_boundary(int e) const { return edge_tris_[static_cast<std::size_t>(e)][1] < 0; }
    BoundaryTag boundary_tag(int e) const { return tags_[static_cast<std::size_t>(e)]; }
    bool has_tag(BoundaryTag tag) const;
    std::vector<BoundaryEdge> boundary_edges() const;

    double diameter(int t) const { return h_tri_[static_cast<std::size_t>(t)]; }
    double edge_length(int e) const { return h_edge_[static_cast<std::size_t>(e)]; }
    double area(int t) const { return area_[static_cast<std::size_t>(t)]; }
    double inradius(int t) const;
    double shape_ratio(int t) const { return diameter(t) / inradius(t); }
    double max_diameter() const;
    double total_area() const;

    EdgeFrame frame(int e) const;
    /// Local index (0..2) of edge e within triangle t, or -1.
    int local_edge_index(int t, int e) const;
    Vec2 centroid(int t) const;

    /// Maps barycentric coordinates on t to the physical point.
    Vec2 map(int t, const Vec3& bary) const;

private:
    std::vector<Vec2> vertices_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<std::array<int, 3>> tri_edges_;
    std::vector<std::array<int, 2>> edge_tris_;
    std::vector<BoundaryTag> tags_;
    std::vector<double> h_tri_;
    std::vector<double> h_edge_;
    std::vector<double> area_;
    int num_boundary_edges_ = 0;
};

/// Assigns a tag to a boundary edge from its midpoint and outward normal.
using BoundaryTagger = std::function<BoundaryTag(const Vec2& midpoint, const Vec2& normal)>;

inline BoundaryTagger tag_all(BoundaryTag tag)
{
    return [tag](const Vec2&, const Vec2&) { return tag; };
}

/// Structured mesh of the rectangle [lo, hi], n cells per axis, two
/// triangles per cell split along the (i,j)-(i+1,j+1) diagonal.
TriMesh generate_rect(const Vec2& lo, const Vec2& hi, int n, const BoundaryTagger& tagger);

/// Same, with independent cell counts per axis.
TriMesh generate_rect(const Vec2& lo, const Vec2& hi, int nx, int ny, const BoundaryTagger& tagger);

/// Structured mesh over the cells (i, j) of a uniform grid for which
/// keep(i, j) is true. Cell (i, j) spans origin + [i, i+1]*hx x [j, j+1]*hy.
TriMesh generate_cells(const Vec2& origin, double hx, double hy, int nx, int ny,
                       const std::function<bool(int, int)>& keep, const BoundaryTagger& tagger);

/// L-shaped domain (-1,1)^2 \ (0,1)^2 with n cells per unit length.
TriMesh generate_lshape(int n, const BoundaryTagger& tagger = tag_all(BoundaryTag::Gamma1));

/// Reads the MSH-TXT format.
TriMesh load_mesh(const std::string& path);
TriMesh parse_mesh(const std::string& text);

/// Writes the MSH-TXT format with shortest round-trip decimals.
void save_mesh(const TriMesh& mesh, const std::string& path);
std::string format_mesh(const TriMesh& mesh);

} // namespace oseenvb
