#pragma once

#include "oseenvb/mesh.hpp"
#include "oseenvb/oseen.hpp"
#include "oseenvb/quadrature.hpp"

#include <cmath>
#include <memory>
#include <random>

namespace testing_support {

using namespace oseenvb;

inline std::shared_ptr<const TriMesh> shared(TriMesh m) { return std::make_shared<const TriMesh>(std::move(m)); }

inline std::shared_ptr<const TriMesh> two_triangles(BoundaryTag tag = BoundaryTag::Gamma1)
{
    return shared(generate_rect(Vec2(0, 0), Vec2(1, 1), 1, tag_all(tag)));
}

inline std::shared_ptr<const TriMesh> eight_triangles(const BoundaryTagger& tagger = tag_all(BoundaryTag::Gamma1))
{
    return shared(generate_rect(Vec2(0, 0), Vec2(1, 1), 2, tagger));
}

inline BoundaryTagger left_gamma2()
{
    return [](const Vec2& mid, const Vec2& n) { return n.x() < -0.5 && mid.x() < 1e-12 ? BoundaryTag::Gamma2 : BoundaryTag::Gamma1; };
}

inline Eigen::VectorXd random_vector(Eigen::Index n, std::mt19937& rng)
{
    std::normal_distribution<double> nd;
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = nd(rng);
    return v;
}

/// Integral over the mesh with an exactness-8 rule.
template <class F>
double integrate(const TriMesh& mesh, F&& f)
{
    const QuadRule& q = quadrature_rule(8);
    double s = 0.0;
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        double local = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) local += q.weights[i] * f(t, q.points[i]);
        s += 2.0 * mesh.area(t) * local;
    }
    return s;
}

/// Smooth x-dependent convecting field with its Jacobian.
inline VectorCoefficient wavy_beta()
{
    return VectorCoefficient::of([](const Vec2& x) { return Vec2(1.0 + 0.5 * x.x() * x.x(), std::sin(x.x()) * x.y()); },
                                 [](const Vec2& x) {
                                     Mat2 J;
                                     J << x.x(), 0.0, std::cos(x.x()) * x.y(), std::sin(x.x());
                                     return J;
                                 });
}

/// x-dependent polynomial convecting field (quadratic), integrated exactly.
inline VectorCoefficient quadratic_beta()
{
    return VectorCoefficient::of([](const Vec2& x) { return Vec2(1.0 + 0.5 * x.x() * x.x(), x.x() * x.y()); },
                                 [](const Vec2& x) {
                                     Mat2 J;
                                     J << x.x(), 0.0, x.y(), x.x();
                                     return J;
                                 });
}

} // namespace testing_support
