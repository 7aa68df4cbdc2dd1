#include "oseenvb/mesh.hpp"

#include <cmath>
#include <map>

namespace oseenvb {

TriMesh generate_cells(const Vec2& origin, double hx, double hy, int nx, int ny,
                       const std::function<bool(int, int)>& keep, const BoundaryTagger& tagger)
{
    if (nx < 1 || ny < 1) throw MeshError("grid generator needs at least one cell per axis");
    if (!(hx > 0.0) || !(hy > 0.0)) throw MeshError("degenerate grid cell size");

    std::vector<int> id(static_cast<std::size_t>((nx + 1) * (ny + 1)), -1);
    std::vector<Vec2> vertices;
    auto node = [&](int i, int j) {
        int& slot = id[static_cast<std::size_t>(j * (nx + 1) + i)];
        if (slot < 0) {
            slot = static_cast<int>(vertices.size());
            vertices.emplace_back(origin.x() + i * hx, origin.y() + j * hy);
        }
        return slot;
    };

    std::vector<std::array<int, 3>> triangles;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            if (!keep(i, j)) continue;
            const int a = node(i, j);
            const int b = node(i + 1, j);
            const int c = node(i + 1, j + 1);
            const int d = node(i, j + 1);
            // Right angle first: the longest edge is opposite local vertex 0.
            triangles.push_back({b, c, a});
            triangles.push_back({d, a, c});
        }
    }
    if (triangles.empty()) throw MeshError("grid generator produced no cells");

    // Boundary edges are those used by exactly one triangle.
    std::map<std::pair<int, int>, int> count;
    for (const auto& t : triangles) {
        for (int k = 0; k < 3; ++k) {
            int a = t[static_cast<std::size_t>(k)];
            int b = t[static_cast<std::size_t>((k + 1) % 3)];
            ++count[{std::min(a, b), std::max(a, b)}];
        }
    }
    std::vector<BoundaryEdge> boundary;
    for (const auto& t : triangles) {
        for (int k = 0; k < 3; ++k) {
            const int a = t[static_cast<std::size_t>(k)];
            const int b = t[static_cast<std::size_t>((k + 1) % 3)];
            if (count[{std::min(a, b), std::max(a, b)}] != 1) continue;
            const Vec2& pa = vertices[static_cast<std::size_t>(a)];
            const Vec2& pb = vertices[static_cast<std::size_t>(b)];
            const Vec2 d = (pb - pa).normalized();
            boundary.push_back({a, b, tagger(0.5 * (pa + pb), Vec2(d.y(), -d.x()))});
        }
    }
    return TriMesh(std::move(vertices), std::move(triangles), boundary);
}

TriMesh generate_rect(const Vec2& lo, const Vec2& hi, int nx, int ny, const BoundaryTagger& tagger)
{
    if (nx < 1 || ny < 1) throw MeshError("rectangle generator needs n >= 1");
    if (!(hi.x() > lo.x()) || !(hi.y() > lo.y())) throw MeshError("degenerate rectangle");
    return generate_cells(lo, (hi.x() - lo.x()) / nx, (hi.y() - lo.y()) / ny, nx, ny,
                          [](int, int) { return true; }, tagger);
}

TriMesh generate_rect(const Vec2& lo, const Vec2& hi, int n, const BoundaryTagger& tagger)
{
    return generate_rect(lo, hi, n, n, tagger);
}

TriMesh generate_lshape(int n, const BoundaryTagger& tagger)
{
    if (n < 1) throw MeshError("L-shape generator needs n >= 1");
    const double h = 1.0 / n;
    // Cells with i >= n and j >= n cover the removed quadrant (0,1)^2.
    return generate_cells(Vec2(-1.0, -1.0), h, h, 2 * n, 2 * n,
                          [n](int i, int j) { return !(i >= n && j >= n); }, tagger);
}

} // namespace oseenvb
