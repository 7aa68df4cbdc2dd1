#pragma once

#include "oseenvb/common.hpp"

#include <vector>

namespace oseenvb {

/// Rule on the reference triangle {(x, y): x, y >= 0, x + y <= 1}.
/// Points are barycentric (1 - x - y, x, y); weights sum to 1/2.
struct QuadRule {
    std::vector<Vec3> points;
    std::vector<double> weights;
    int exactness = 0;

    std::size_t size() const { return weights.size(); }
};

/// Collapsed (conical product) Gauss rule integrating every polynomial of
/// total degree <= exactness exactly. Valid range 1..8.
const QuadRule& quadrature_rule(int exactness);

/// Gauss-Legendre rule on [0, 1] with n points.
struct LineRule {
    std::vector<double> points;
    std::vector<double> weights;
};
const LineRule& gauss_line(int n);

/// Line rule exact for degree <= exactness on [0, 1].
const LineRule& line_rule(int exactness);

} // namespace oseenvb
