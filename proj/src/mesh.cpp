#include "oseenvb/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

namespace oseenvb {

namespace {

std::uint64_t edge_key(int a, int b)
{
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c)
{
    return 0.5 * cross(b - a, c - a);
}

std::string entity(const char* kind, int index)
{
    return std::string(kind) + " " + std::to_string(index);
}

// Detects vertices lying strictly inside a boundary edge, which is how a
// hanging node shows up once adjacency has been built.
void check_hanging_vertices(const std::vector<Vec2>& vertices,
                            const std::vector<std::array<int, 2>>& edges,
                            const std::vector<std::array<int, 2>>& edge_tris)
{
    if (vertices.empty()) return;
    Vec2 lo = vertices.front();
    Vec2 hi = vertices.front();
    for (const auto& v : vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    const double extent = std::max((hi - lo).maxCoeff(), 1e-300);
    const int cells = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(vertices.size()))));
    const double cell = extent / cells;
    auto bucket_of = [&](double c, double origin) {
        return std::clamp(static_cast<int>((c - origin) / cell), 0, cells - 1);
    };
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(cells) * static_cast<std::size_t>(cells));
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
        const auto& p = vertices[static_cast<std::size_t>(v)];
        buckets[static_cast<std::size_t>(bucket_of(p.y(), lo.y()) * cells + bucket_of(p.x(), lo.x()))].push_back(v);
    }
    const double tol = 1e-10 * extent;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edge_tris[e][1] >= 0) continue;
        const auto& a = vertices[static_cast<std::size_t>(edges[e][0])];
        const auto& b = vertices[static_cast<std::size_t>(edges[e][1])];
        const Vec2 elo = a.cwiseMin(b);
        const Vec2 ehi = a.cwiseMax(b);
        const double len2 = (b - a).squaredNorm();
        for (int j = bucket_of(elo.y() - tol, lo.y()); j <= bucket_of(ehi.y() + tol, lo.y()); ++j) {
            for (int i = bucket_of(elo.x() - tol, lo.x()); i <= bucket_of(ehi.x() + tol, lo.x()); ++i) {
                for (int v : buckets[static_cast<std::size_t>(j * cells + i)]) {
                    if (v == edges[e][0] || v == edges[e][1]) continue;
                    const Vec2& p = vertices[static_cast<std::size_t>(v)];
                    const double s = (p - a).dot(b - a) / len2;
                    if (s <= 0.0 || s >= 1.0) continue;
                    if (std::abs(cross(b - a, p - a)) <= tol * std::sqrt(len2)) {
                        throw MeshError("non-conforming mesh: " + entity("vertex", v) +
                                        " hangs on edge (" + std::to_string(edges[e][0]) + ", " +
                                        std::to_string(edges[e][1]) + ")");
                    }
                }
            }
        }
    }
}

} // namespace

TriMesh::TriMesh(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles,
                 const std::vector<BoundaryEdge>& boundary)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles))
{
    const int nv = num_vertices();
    const int nt = num_triangles();
    if (nt == 0) throw MeshError("mesh has no triangles");
    for (int v = 0; v < nv; ++v) {
        if (!vertices_[static_cast<std::size_t>(v)].allFinite())
            throw MeshError("non-finite coordinates at " + entity("vertex", v));
    }

    area_.resize(static_cast<std::size_t>(nt));
    h_tri_.resize(static_cast<std::size_t>(nt));
    tri_edges_.resize(static_cast<std::size_t>(nt));
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(static_cast<std::size_t>(3 * nt));
    for (int t = 0; t < nt; ++t) {
        const auto& tri = triangles_[static_cast<std::size_t>(t)];
        for (int i = 0; i < 3; ++i) {
            if (tri[static_cast<std::size_t>(i)] < 0 || tri[static_cast<std::size_t>(i)] >= nv)
                throw MeshError(entity("triangle", t) + " references a missing vertex");
        }
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
            throw MeshError(entity("triangle", t) + " repeats a vertex");
        const double a = signed_area(vertex(tri[0]), vertex(tri[1]), vertex(tri[2]));
        if (!(a > 0.0))
            throw MeshError(entity("triangle", t) + " is inverted or degenerate (clockwise or zero area)");
        area_[static_cast<std::size_t>(t)] = a;

        double diam = 0.0;
        for (int i = 0; i < 3; ++i) {
            const int a0 = tri[static_cast<std::size_t>((i + 1) % 3)];
            const int a1 = tri[static_cast<std::size_t>((i + 2) % 3)];
            diam = std::max(diam, (vertex(a0) - vertex(a1)).norm());
            const auto key = edge_key(a0, a1);
            auto [it, inserted] = index.try_emplace(key, static_cast<int>(edges_.size()));
            if (inserted) {
                edges_.push_back({std::min(a0, a1), std::max(a0, a1)});
                edge_tris_.push_back({t, -1});
            } else {
                auto& inc = edge_tris_[static_cast<std::size_t>(it->second)];
                if (inc[1] >= 0)
                    throw MeshError("non-manifold mesh: edge (" + std::to_string(a0) + ", " +
                                    std::to_string(a1) + ") has more than two triangles");
                inc[1] = t;
            }
            tri_edges_[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] = it->second;
        }
        h_tri_[static_cast<std::size_t>(t)] = diam;
    }

    // Two triangles sharing an edge with the same orientation means one of
    // them is folded over the other.
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& inc = edge_tris_[e];
        if (inc[1] < 0) continue;
        auto direction = [&](int t) {
            const auto& tri = triangles_[static_cast<std::size_t>(t)];
            for (int i = 0; i < 3; ++i) {
                if (tri[static_cast<std::size_t>(i)] == edges_[e][0])
                    return tri[static_cast<std::size_t>((i + 1) % 3)] == edges_[e][1] ? 1 : -1;
            }
            return 0;
        };
        if (direction(inc[0]) == direction(inc[1]))
            throw MeshError("inconsistent orientation across edge (" + std::to_string(edges_[e][0]) + ", " +
                            std::to_string(edges_[e][1]) + ")");
    }

    h_edge_.resize(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e)
        h_edge_[e] = (vertex(edges_[e][0]) - vertex(edges_[e][1])).norm();

    tags_.assign(edges_.size(), BoundaryTag::Interior);
    std::vector<bool> tagged(edges_.size(), false);
    for (const auto& be : boundary) {
        auto it = index.find(edge_key(be.v0, be.v1));
        if (it == index.end())
            throw MeshError("tagged edge (" + std::to_string(be.v0) + ", " + std::to_string(be.v1) +
                            ") is not an edge of the mesh");
        const auto e = static_cast<std::size_t>(it->second);
        if (edge_tris_[e][1] >= 0)
            throw MeshError("tagged edge (" + std::to_string(be.v0) + ", " + std::to_string(be.v1) +
                            ") is an interior edge");
        if (be.tag == BoundaryTag::Interior)
            throw MeshError("boundary edge (" + std::to_string(be.v0) + ", " + std::to_string(be.v1) +
                            ") carries the interior tag");
        tags_[e] = be.tag;
        tagged[e] = true;
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edge_tris_[e][1] >= 0) continue;
        ++num_boundary_edges_;
        if (!tagged[e])
            throw MeshError("boundary edge (" + std::to_string(edges_[e][0]) + ", " +
                            std::to_string(edges_[e][1]) + ") has no tag (hanging node or missing tag)");
    }
    check_hanging_vertices(vertices_, edges_, edge_tris_);
}

bool TriMesh::has_tag(BoundaryTag tag) const
{
    return std::find(tags_.begin(), tags_.end(), tag) != tags_.end();
}

std::vector<BoundaryEdge> TriMesh::boundary_edges() const
{
    std::vector<BoundaryEdge> out;
    out.reserve(static_cast<std::size_t>(num_boundary_edges_));
    for (int e = 0; e < num_edges(); ++e) {
        if (!is_boundary(e)) continue;
        // Keep the triangle's orientation so that outward normals are recoverable.
        const int t = edge_triangles(e)[0];
        const int li = local_edge_index(t, e);
        const auto& tri = triangle(t);
        out.push_back({tri[static_cast<std::size_t>((li + 1) % 3)], tri[static_cast<std::size_t>((li + 2) % 3)],
                       boundary_tag(e)});
    }
    return out;
}

double TriMesh::inradius(int t) const
{
    const auto& te = triangle_edges(t);
    const double perimeter = edge_length(te[0]) + edge_length(te[1]) + edge_length(te[2]);
    return 2.0 * area(t) / perimeter;
}

double TriMesh::max_diameter() const
{
    return *std::max_element(h_tri_.begin(), h_tri_.end());
}

double TriMesh::total_area() const
{
    return std::accumulate(area_.begin(), area_.end(), 0.0);
}

int TriMesh::local_edge_index(int t, int e) const
{
    const auto& te = triangle_edges(t);
    for (int i = 0; i < 3; ++i)
        if (te[static_cast<std::size_t>(i)] == e) return i;
    return -1;
}

EdgeFrame TriMesh::frame(int e) const
{
    const int t = edge_triangles(e)[0];
    const int li = local_edge_index(t, e);
    const auto& tri = triangle(t);
    const Vec2& a = vertex(tri[static_cast<std::size_t>((li + 1) % 3)]);
    const Vec2& b = vertex(tri[static_cast<std::size_t>((li + 2) % 3)]);
    // Counter-clockwise traversal a -> b: outward normal of t is (dy, -dx).
    const Vec2 d = (b - a) / (b - a).norm();
    const Vec2 n(d.y(), -d.x());
    return {n, perp(n)};
}

Vec2 TriMesh::centroid(int t) const
{
    const auto& tri = triangle(t);
    return (vertex(tri[0]) + vertex(tri[1]) + vertex(tri[2])) / 3.0;
}

Vec2 TriMesh::map(int t, const Vec3& bary) const
{
    const auto& tri = triangle(t);
    return bary[0] * vertex(tri[0]) + bary[1] * vertex(tri[1]) + bary[2] * vertex(tri[2]);
}

} // namespace oseenvb
