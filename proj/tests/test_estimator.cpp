#include "oseenvb/estimator.hpp"
#include "oseenvb/refine.hpp"
#include "oseenvb/study.hpp"
#include "oseenvb/verify.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace oseenvb;
using namespace testing_support;

namespace {

// Two triangles sharing the vertical edge x = 0; triangle 0 lies on the left.
std::shared_ptr<const TriMesh> diamond()
{
    return shared(parse_mesh("meshtxt 1\n4 2 4\n-1 0\n0 -1\n0 1\n1 0\n0 1 2\n1 3 2\n0 1 1\n1 3 1\n3 2 1\n2 0 1\n"));
}

OseenSolution fields(const std::shared_ptr<const TriMesh>& m, int k, const std::function<double(const Vec2&)>& w,
                     const std::function<double(const Vec2&)>& p)
{
    OseenSolution s;
    s.omega_h = interpolate(w, std::make_shared<const FeSpace>(m, k));
    s.p_h = interpolate(p, std::make_shared<const FeSpace>(m, k));
    return s;
}

int shared_edge(const TriMesh& m)
{
    for (int e = 0; e < m.num_edges(); ++e)
        if (!m.is_boundary(e)) return e;
    return -1;
}

} // namespace

TEST(Residuals, AffineFieldsGiveOmega)
{
    auto m = eight_triangles();
    OseenProblem p;
    const OseenSolution s = fields(m, 1, [](const Vec2& x) { return 1.0 + 2.0 * x.x() - x.y(); },
                                   [](const Vec2& x) { return x.x() - 3.0 * x.y(); });
    for (int t = 0; t < m->num_triangles(); ++t)
        for (const Vec3& b : {Vec3(1, 0, 0), Vec3(0.2, 0.5, 0.3)}) {
            const ResidualSample r = element_residuals(p, s, t, b);
            EXPECT_NEAR(r.r1, s.omega_h.value(t, b), 1e-13);
            EXPECT_NEAR(r.r2, 0.0, 1e-13);
        }
}

TEST(Residuals, GradientForceHasNoRotation)
{
    auto m = eight_triangles();
    OseenProblem p;
    p.f = VectorCoefficient::of([](const Vec2& x) { return Vec2(2 * x.x() * x.y(), x.x() * x.x() + std::cos(x.y())); },
                                [](const Vec2& x) {
                                    Mat2 J;
                                    J << 2 * x.y(), 2 * x.x(), 2 * x.x(), -std::sin(x.y());
                                    return J;
                                });
    const OseenSolution s = fields(m, 2, [](const Vec2&) { return 0.0; }, [](const Vec2&) { return 0.0; });
    const ResidualSample r = element_residuals(p, s, 3, Vec3(0.3, 0.3, 0.4));
    EXPECT_NEAR(r.r1, 0.0, 1e-13);
    const Vec2 x = m->map(3, Vec3(0.3, 0.3, 0.4));
    EXPECT_NEAR(r.r2, 2 * x.y() - std::sin(x.y()), 1e-13);
}

TEST(Residuals, QuadraticFieldsMatchHandDerivatives)
{
    auto m = shared(parse_mesh("meshtxt 1\n3 1 3\n0.1 0.2\n1.3 0.4\n0.5 1.1\n0 1 2\n0 1 1\n1 2 1\n2 0 1\n"));
    OseenProblem p;
    p.nu = 0.25;
    p.sigma = 2.0;
    p.beta = VectorCoefficient::constant(Vec2(0.5, -1.0));
    p.f = VectorCoefficient::of([](const Vec2& x) { return Vec2(x.y() * x.y(), x.x()); },
                                [](const Vec2& x) {
                                    Mat2 J;
                                    J << 0.0, 2 * x.y(), 1.0, 0.0;
                                    return J;
                                });
    auto w = [](const Vec2& x) { return 1 + 2 * x.x() - x.y() + x.x() * x.x() - x.x() * x.y(); };
    const OseenSolution s = fields(m, 2, w, [](const Vec2& x) { return x.x() * x.x() + 3 * x.y() * x.y() - x.x() * x.y(); });
    const QuadRule& q = quadrature_rule(2);
    for (const Vec3& b : q.points) {
        const Vec2 x = m->map(0, b);
        const double wx = 2 + 2 * x.x() - x.y(), wy = -1 - x.x();
        // nu^{-1/2} = 2; laplacian of omega = 2, of p = 8; rot f = 1 - 2y; div f = 0.
        const double r1 = -0.5 * 2.0 + 2.0 * (0.5 * wx - wy) - (1 - 2 * x.y()) + 2.0 * 2.0 * w(x);
        const double r2 = -2.0 * (wx + 0.5 * wy) - 8.0;
        const ResidualSample r = element_residuals(p, s, 0, b);
        EXPECT_NEAR(r.r1, r1, 1e-12);
        EXPECT_NEAR(r.r2, r2, 1e-12);
    }
}

TEST(Jumps, Examples)
{
    auto m = diamond();
    const int e = shared_edge(*m);
    ASSERT_GE(e, 0);
    EXPECT_NEAR((m->frame(e).normal - Vec2(1, 0)).norm(), 0.0, 1e-15);
    OseenProblem p;
    const OseenSolution kink = fields(m, 1, [](const Vec2& x) { return std::min(x.x(), 0.0); }, [](const Vec2&) { return 0.0; });
    for (double s : {0.0, 0.3, 1.0}) {
        EXPECT_NEAR(edge_jumps(p, kink, e, s).j1, -1.0, 1e-14);
        EXPECT_NEAR(edge_jumps(p, kink, e, s).j2, 0.0, 1e-14);
    }
    const OseenSolution smooth = fields(m, 1, [](const Vec2& x) { return 2 * x.x() + 3 * x.y(); },
                                        [](const Vec2& x) { return x.x() - x.y(); });
    EXPECT_NEAR(edge_jumps(p, smooth, e, 0.4).j1, 0.0, 1e-13);
    EXPECT_NEAR(edge_jumps(p, smooth, e, 0.4).j2, 0.0, 1e-13);
    for (int b = 0; b < m->num_edges(); ++b)
        if (m->is_boundary(b)) EXPECT_THROW(edge_jumps(p, smooth, b, 0.5), Error);
}

TEST(Indicator, HandComputedTriangle)
{
    auto m = diamond();
    OseenProblem p;
    const OseenSolution kink = fields(m, 1, [](const Vec2& x) { return std::min(x.x(), 0.0); }, [](const Vec2&) { return 0.0; });
    const LocalEstimate l = eta_local(p, kink, 0);
    // h_T = h_e = |e| = 2; ||x||^2 over the left triangle is 1/6.
    EXPECT_NEAR(l.r1_sq, 16.0 / 6.0, 1e-13);
    EXPECT_NEAR(l.jump1_sq, 8.0 * 2.0, 1e-12);
    EXPECT_EQ(l.r2_sq, 0.0);
    EXPECT_EQ(l.jump2_sq, 0.0);
    EXPECT_NEAR(l.eta_sq, 16.0 / 6.0 + 16.0, 1e-12);
    const EstimatorField f = estimate(p, kink);
    EXPECT_NEAR(f.local[0].eta_sq, l.eta_sq, 1e-12);
    EXPECT_NEAR(f.local[1].jump1_sq, l.jump1_sq, 1e-12);

    p.delta = 0.5;
    const LocalEstimate h = eta_local(p, kink, 0);
    EXPECT_NEAR(h.r1_sq / l.r1_sq, 1.0 / 2.0, 1e-14);
    EXPECT_NEAR(h.jump1_sq / l.jump1_sq, 1.0 / 2.0, 1e-14);
}

TEST(Indicator, ZeroProblemAndAggregation)
{
    auto m = eight_triangles();
    OseenProblem p;
    const OseenSolution z = fields(m, 2, [](const Vec2&) { return 0.0; }, [](const Vec2&) { return 0.0; });
    const EstimatorField f = estimate(p, z);
    EXPECT_EQ(f.eta, 0.0);
    for (const auto& l : f.local) EXPECT_EQ(l.eta_sq, 0.0);

    std::vector<LocalEstimate> two(2);
    two[0].eta_sq = 9.0;
    two[1].eta_sq = 16.0;
    EXPECT_DOUBLE_EQ(eta_global(two, 1.0).eta, 5.0);
    EXPECT_EQ(eta_global(std::vector<LocalEstimate>(3), 1.0).eta, 0.0);

    const ManufacturedCase c = manufactured_case("ex2b");
    auto mesh = std::make_shared<const TriMesh>(c.initial_mesh());
    const LevelResult r = run_level(c.problem(c.delta), &c, mesh, 1);
    double sum = 0.0;
    for (const auto& l : r.estimator.local) {
        EXPECT_GE(l.eta_sq, 0.0);
        EXPECT_NEAR(l.eta_sq, l.r1_sq + l.r2_sq + l.jump1_sq + l.jump2_sq, 1e-14 * l.eta_sq);
        sum += l.eta_sq;
    }
    EXPECT_NEAR(r.estimator.eta * r.estimator.eta, sum, 1e-12 * sum);
    EXPECT_EQ(r.estimator.delta, c.delta);
}

TEST(Effectivity, Ratios)
{
    const Effectivity e = effectivity(2.0, 2.0, 2.0);
    EXPECT_EQ(e.eff1, 1.0);
    EXPECT_EQ(e.eff2, 1.0);
    EXPECT_FALSE(e.flagged);
    EXPECT_TRUE(effectivity(1.0, 1.0, 0.0).flagged);
    EXPECT_FALSE(effectivity(0.0, 0.0, 0.0).flagged);
}

TEST(Effectivity, Ex2aEstimatorDecreases)
{
    const StudyReport r = uniform_study(manufactured_case("ex2a"), 1, 4, 1.0, 2);
    for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_LT(r.rows[i].eta, r.rows[i - 1].eta);
}

TEST(Oscillation, Examples)
{
    auto m = eight_triangles();
    OseenProblem p;
    for (double v : oscillation(p, *m, 1)) EXPECT_EQ(v, 0.0);
    p.f = VectorCoefficient::of([](const Vec2& x) { return Vec2(x.y() * x.y() * x.x(), x.x() * x.x()); },
                                [](const Vec2& x) {
                                    Mat2 J;
                                    J << x.y() * x.y(), 2 * x.x() * x.y(), 2 * x.x(), 0.0;
                                    return J;
                                });
    for (double v : oscillation(p, *m, 2)) EXPECT_LE(v, 1e-13);
    EXPECT_THROW(oscillation(p, *m, 3), ConfigError);

    p.f = VectorCoefficient::of([](const Vec2& x) { return Vec2(std::exp(x.x() + x.y()), std::exp(x.x() - 2 * x.y())); },
                                [](const Vec2& x) {
                                    Mat2 J;
                                    const double a = std::exp(x.x() + x.y()), b = std::exp(x.x() - 2 * x.y());
                                    J << a, a, b, -2 * b;
                                    return J;
                                });
    auto total = [&](const TriMesh& mesh) {
        double s = 0.0;
        for (double v : oscillation(p, mesh, 1)) s += v;
        return std::sqrt(s);
    };
    const TriMesh m1 = refine_uniform(*m);
    const TriMesh m2 = refine_uniform(m1);
    const double rate = convergence_rate(total(m1), total(m2), m1.max_diameter(), m2.max_diameter());
    EXPECT_GE(rate, 2.0 + p.delta);
}
