#pragma once

#include "oseenvb/mesh.hpp"

#include <vector>

namespace oseenvb {

/// Red refinement: each triangle is split into four congruent children by
/// its edge midpoints. Boundary tags are inherited. Child c of triangle t is
/// triangle 4t + c of the result.
TriMesh refine_uniform(const TriMesh& mesh);

struct SizeRefineOptions {
    double size_floor = 1e-6;
    double shape_bound = 10.0;
    bool extra_layer = true;
    bool smoothing = true;
};

struct SizeRefineResult {
    TriMesh mesh;
    /// Triangle of the input mesh that each output triangle descends from.
    std::vector<int> origin;
    /// Number of targets raised to the size floor.
    int clamped = 0;
    /// Interior vertices moved by the smoothing pass.
    int smoothed = 0;
};

/// Newest-vertex bisection until every descendant of input triangle T has
/// diameter <= max(target[T], floor), with conformity closure, one extra
/// bisection of the edge neighbors of refined triangles, and one
/// Laplacian-smoothing pass that never inverts a triangle or breaks the
/// size and shape bounds. Refinement edges start as the longest edge of each
/// input triangle.
SizeRefineResult refine_by_size_map_detailed(const TriMesh& mesh, const std::vector<double>& target,
                                             const SizeRefineOptions& options = {});

TriMesh refine_by_size_map(const TriMesh& mesh, const std::vector<double>& target,
                           const SizeRefineOptions& options = {});

} // namespace oseenvb
