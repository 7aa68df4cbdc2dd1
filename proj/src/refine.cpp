#include "oseenvb/refine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <unordered_map>

namespace oseenvb {

namespace {

std::uint64_t edge_key(int a, int b)
{
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

double tri_diameter(const Vec2& a, const Vec2& b, const Vec2& c)
{
    return std::max({(a - b).norm(), (b - c).norm(), (c - a).norm()});
}

double tri_area(const Vec2& a, const Vec2& b, const Vec2& c) { return 0.5 * cross(b - a, c - a); }

double tri_shape_ratio(const Vec2& a, const Vec2& b, const Vec2& c)
{
    const double la = (b - c).norm();
    const double lb = (c - a).norm();
    const double lc = (a - b).norm();
    const double r = 2.0 * tri_area(a, b, c) / (la + lb + lc);
    return std::max({la, lb, lc}) / r;
}

// Bisection workspace. Each triangle is stored as (peak, b, c): the
// refinement edge is (b, c), opposite the newest vertex.
class Bisector {
public:
    explicit Bisector(const TriMesh& mesh) : verts_(mesh.vertices())
    {
        for (const auto& be : mesh.boundary_edges()) tags_[edge_key(be.v0, be.v1)] = be.tag;
        for (int t = 0; t < mesh.num_triangles(); ++t) {
            const auto& tri = mesh.triangle(t);
            const auto& te = mesh.triangle_edges(t);
            // Longest edge first, ties broken by the edge key so the order is total.
            int best = 0;
            for (int i = 1; i < 3; ++i) {
                const double li = mesh.edge_length(te[static_cast<std::size_t>(i)]);
                const double lb = mesh.edge_length(te[static_cast<std::size_t>(best)]);
                const auto& ei = mesh.edge(te[static_cast<std::size_t>(i)]);
                const auto& eb = mesh.edge(te[static_cast<std::size_t>(best)]);
                if (li > lb || (li == lb && edge_key(ei[0], ei[1]) > edge_key(eb[0], eb[1]))) best = i;
            }
            add({tri[static_cast<std::size_t>(best)], tri[static_cast<std::size_t>((best + 1) % 3)],
                 tri[static_cast<std::size_t>((best + 2) % 3)]},
                t);
        }
    }

    std::size_t size() const { return tris_.size(); }
    bool alive(int t) const { return alive_[static_cast<std::size_t>(t)] != 0; }
    int origin(int t) const { return origin_[static_cast<std::size_t>(t)]; }
    int bisections() const { return bisections_; }

    double diameter(int t) const
    {
        const auto& tri = tris_[static_cast<std::size_t>(t)];
        return tri_diameter(v(tri[0]), v(tri[1]), v(tri[2]));
    }

    // Bisects t, first bisecting neighbors until the refinement edges match.
    void refine(int t)
    {
        std::vector<int> stack{t};
        while (!stack.empty()) {
            const int cur = stack.back();
            if (!alive(cur)) {
                stack.pop_back();
                continue;
            }
            const auto tri = tris_[static_cast<std::size_t>(cur)];
            const int n = neighbor(cur, tri[1], tri[2]);
            if (n < 0) {
                bisect(cur);
                stack.pop_back();
                continue;
            }
            const auto& ntri = tris_[static_cast<std::size_t>(n)];
            if (edge_key(ntri[1], ntri[2]) == edge_key(tri[1], tri[2])) {
                bisect(cur);
                bisect(n);
                stack.pop_back();
            } else {
                if (stack.size() > 100000) throw MeshError("bisection closure did not terminate");
                stack.push_back(n);
            }
        }
    }

    SizeRefineResult finish(const SizeRefineOptions& options, const std::vector<double>& allowed, bool smooth)
    {
        SizeRefineResult out;
        std::vector<std::array<int, 3>> tris;
        for (std::size_t t = 0; t < tris_.size(); ++t) {
            if (!alive_[t]) continue;
            tris.push_back(tris_[t]);
            out.origin.push_back(origin_[t]);
        }
        if (smooth) out.smoothed = smooth_pass(tris, out.origin, allowed, options.shape_bound);

        std::unordered_map<std::uint64_t, int> count;
        for (const auto& tri : tris)
            for (int i = 0; i < 3; ++i) ++count[edge_key(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>((i + 1) % 3)])];
        std::vector<BoundaryEdge> boundary;
        for (const auto& tri : tris) {
            for (int i = 0; i < 3; ++i) {
                const int a = tri[static_cast<std::size_t>(i)];
                const int b = tri[static_cast<std::size_t>((i + 1) % 3)];
                if (count[edge_key(a, b)] != 1) continue;
                auto it = tags_.find(edge_key(a, b));
                if (it == tags_.end()) throw MeshError("refinement lost a boundary tag");
                boundary.push_back({a, b, it->second});
            }
        }
        out.mesh = TriMesh(verts_, std::move(tris), boundary);
        return out;
    }

private:
    const Vec2& v(int i) const { return verts_[static_cast<std::size_t>(i)]; }

    void add(const std::array<int, 3>& tri, int origin)
    {
        const int t = static_cast<int>(tris_.size());
        tris_.push_back(tri);
        alive_.push_back(1);
        origin_.push_back(origin);
        for (int i = 0; i < 3; ++i) {
            auto& slot = adj_.try_emplace(edge_key(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>((i + 1) % 3)]),
                                          std::array<int, 2>{-1, -1})
                             .first->second;
            (slot[0] < 0 ? slot[0] : slot[1]) = t;
        }
    }

    void kill(int t)
    {
        alive_[static_cast<std::size_t>(t)] = 0;
        const auto& tri = tris_[static_cast<std::size_t>(t)];
        for (int i = 0; i < 3; ++i) {
            auto& slot = adj_[edge_key(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>((i + 1) % 3)])];
            if (slot[0] == t) slot[0] = -1;
            if (slot[1] == t) slot[1] = -1;
        }
    }

    int neighbor(int t, int a, int b) const
    {
        auto it = adj_.find(edge_key(a, b));
        if (it == adj_.end()) return -1;
        const auto& slot = it->second;
        return slot[0] == t ? slot[1] : slot[0];
    }

    int midpoint(int a, int b)
    {
        const auto key = edge_key(a, b);
        auto it = mid_.find(key);
        if (it != mid_.end()) return it->second;
        const int m = static_cast<int>(verts_.size());
        verts_.push_back(0.5 * (v(a) + v(b)));
        mid_.emplace(key, m);
        auto tag = tags_.find(key);
        if (tag != tags_.end()) {
            tags_[edge_key(a, m)] = tag->second;
            tags_[edge_key(m, b)] = tag->second;
        }
        return m;
    }

    void bisect(int t)
    {
        const auto tri = tris_[static_cast<std::size_t>(t)];
        const int m = midpoint(tri[1], tri[2]);
        const int org = origin(t);
        kill(t);
        add({m, tri[0], tri[1]}, org);
        add({m, tri[2], tri[0]}, org);
        ++bisections_;
    }

    int smooth_pass(const std::vector<std::array<int, 3>>& tris, const std::vector<int>& origin,
                    const std::vector<double>& allowed, double shape_bound)
    {
        const std::size_t nv = verts_.size();
        std::vector<std::vector<int>> incident(nv);
        std::vector<std::vector<int>> nbrs(nv);
        std::unordered_map<std::uint64_t, int> count;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            for (int i = 0; i < 3; ++i) {
                const int a = tris[t][static_cast<std::size_t>(i)];
                const int b = tris[t][static_cast<std::size_t>((i + 1) % 3)];
                incident[static_cast<std::size_t>(a)].push_back(static_cast<int>(t));
                ++count[edge_key(a, b)];
                nbrs[static_cast<std::size_t>(a)].push_back(b);
                nbrs[static_cast<std::size_t>(b)].push_back(a);
            }
        }
        std::vector<char> on_boundary(nv, 0);
        for (const auto& [key, c] : count) {
            if (c != 1) continue;
            on_boundary[static_cast<std::size_t>(key >> 32)] = 1;
            on_boundary[static_cast<std::size_t>(key & 0xffffffffu)] = 1;
        }

        int moved = 0;
        for (std::size_t vi = 0; vi < nv; ++vi) {
            if (on_boundary[vi] || incident[vi].empty()) continue;
            auto& ns = nbrs[vi];
            std::sort(ns.begin(), ns.end());
            ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
            Vec2 candidate = Vec2::Zero();
            for (int n : ns) candidate += v(n);
            candidate /= static_cast<double>(ns.size());
            const Vec2 old = verts_[vi];
            if ((candidate - old).norm() == 0.0) continue;

            bool ok = true;
            std::vector<std::array<double, 3>> before;
            for (int t : incident[vi]) {
                const auto& tri = tris[static_cast<std::size_t>(t)];
                before.push_back({tri_area(v(tri[0]), v(tri[1]), v(tri[2])), tri_diameter(v(tri[0]), v(tri[1]), v(tri[2])),
                                  tri_shape_ratio(v(tri[0]), v(tri[1]), v(tri[2]))});
            }
            verts_[vi] = candidate;
            for (std::size_t k = 0; k < incident[vi].size() && ok; ++k) {
                const auto& tri = tris[static_cast<std::size_t>(incident[vi][k])];
                const double a = tri_area(v(tri[0]), v(tri[1]), v(tri[2]));
                if (!(a > 0.0)) {
                    ok = false;
                    break;
                }
                const double d = tri_diameter(v(tri[0]), v(tri[1]), v(tri[2]));
                const double s = tri_shape_ratio(v(tri[0]), v(tri[1]), v(tri[2]));
                const double size_cap = std::max(before[k][1], allowed[static_cast<std::size_t>(origin[static_cast<std::size_t>(incident[vi][k])])]);
                if (d > size_cap || s > std::max(shape_bound, before[k][2])) ok = false;
            }
            if (ok) {
                ++moved;
            } else {
                verts_[vi] = old;
            }
        }
        return moved;
    }

    std::vector<Vec2> verts_;
    std::vector<std::array<int, 3>> tris_;
    std::vector<char> alive_;
    std::vector<int> origin_;
    std::unordered_map<std::uint64_t, std::array<int, 2>> adj_;
    std::unordered_map<std::uint64_t, BoundaryTag> tags_;
    std::unordered_map<std::uint64_t, int> mid_;
    int bisections_ = 0;
};

} // namespace

TriMesh refine_uniform(const TriMesh& mesh)
{
    const int nv = mesh.num_vertices();
    std::vector<Vec2> vertices = mesh.vertices();
    vertices.reserve(static_cast<std::size_t>(nv + mesh.num_edges()));
    for (int e = 0; e < mesh.num_edges(); ++e) {
        const auto& ed = mesh.edge(e);
        vertices.push_back(0.5 * (mesh.vertex(ed[0]) + mesh.vertex(ed[1])));
    }
    std::vector<std::array<int, 3>> tris;
    tris.reserve(static_cast<std::size_t>(4 * mesh.num_triangles()));
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& v = mesh.triangle(t);
        const auto& te = mesh.triangle_edges(t);
        const int m0 = nv + te[0];
        const int m1 = nv + te[1];
        const int m2 = nv + te[2];
        tris.push_back({v[0], m2, m1});
        tris.push_back({m2, v[1], m0});
        tris.push_back({m1, m0, v[2]});
        tris.push_back({m0, m1, m2});
    }
    std::vector<BoundaryEdge> boundary;
    for (int e = 0; e < mesh.num_edges(); ++e) {
        if (!mesh.is_boundary(e)) continue;
        const auto& ed = mesh.edge(e);
        boundary.push_back({ed[0], nv + e, mesh.boundary_tag(e)});
        boundary.push_back({nv + e, ed[1], mesh.boundary_tag(e)});
    }
    return TriMesh(std::move(vertices), std::move(tris), boundary);
}

SizeRefineResult refine_by_size_map_detailed(const TriMesh& mesh, const std::vector<double>& target,
                                             const SizeRefineOptions& options)
{
    const int nt = mesh.num_triangles();
    if (static_cast<int>(target.size()) != nt) throw ConfigError("size map length does not match the mesh");

    std::vector<double> allowed(static_cast<std::size_t>(nt));
    std::vector<char> marked(static_cast<std::size_t>(nt), 0);
    int clamped = 0;
    for (int t = 0; t < nt; ++t) {
        double tt = target[static_cast<std::size_t>(t)];
        if (!(tt > 0.0) || !std::isfinite(tt)) throw ConfigError("size map entries must be positive and finite");
        if (tt < options.size_floor) {
            tt = options.size_floor;
            ++clamped;
        }
        allowed[static_cast<std::size_t>(t)] = tt;
        marked[static_cast<std::size_t>(t)] = mesh.diameter(t) > tt ? 1 : 0;
    }
    if (clamped > 0)
        std::cerr << "warning: " << clamped << " size targets below " << options.size_floor
                  << " were raised to the floor\n";

    Bisector work(mesh);
    const double slack = 1.0 + 1e-12;
    for (bool changed = true; changed;) {
        changed = false;
        const std::size_t n = work.size();
        for (std::size_t t = 0; t < n; ++t) {
            const int ti = static_cast<int>(t);
            if (!work.alive(ti)) continue;
            if (work.diameter(ti) > allowed[static_cast<std::size_t>(work.origin(ti))] * slack) {
                work.refine(ti);
                changed = true;
            }
        }
    }

    if (options.extra_layer) {
        std::vector<char> layer(static_cast<std::size_t>(nt), 0);
        for (int e = 0; e < mesh.num_edges(); ++e) {
            if (mesh.is_boundary(e)) continue;
            const auto& inc = mesh.edge_triangles(e);
            const bool m0 = marked[static_cast<std::size_t>(inc[0])] != 0;
            const bool m1 = marked[static_cast<std::size_t>(inc[1])] != 0;
            if (m0 && !m1) layer[static_cast<std::size_t>(inc[1])] = 1;
            if (m1 && !m0) layer[static_cast<std::size_t>(inc[0])] = 1;
        }
        // Input triangle t keeps index t in the workspace until it is bisected.
        for (int t = 0; t < nt; ++t)
            if (layer[static_cast<std::size_t>(t)] && work.alive(t)) work.refine(t);
    }

    const bool refined = work.bisections() > 0;
    auto out = work.finish(options, allowed, options.smoothing && refined);
    out.clamped = clamped;
    return out;
}

TriMesh refine_by_size_map(const TriMesh& mesh, const std::vector<double>& target, const SizeRefineOptions& options)
{
    return refine_by_size_map_detailed(mesh, target, options).mesh;
}

} // namespace oseenvb
