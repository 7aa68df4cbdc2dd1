#include "oseenvb/transient.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace oseenvb;

namespace {

double gamma_length(const TriMesh& m, BoundaryTag tag)
{
    double s = 0.0;
    for (const auto& b : m.boundary_edges())
        if (b.tag == tag) s += (m.vertex(b.v1) - m.vertex(b.v0)).norm();
    return s;
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

} // namespace

TEST(TransientConfig, Validation)
{
    TransientConfig c;
    EXPECT_NO_THROW(c.validate());
    c.dt = 0.0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.n_steps = 0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.geometry = "cavity";
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.k = 3;
    EXPECT_THROW(c.validate(), ConfigError);
}

TEST(TransientGeometry, BackwardFacingStep)
{
    const TriMesh m = generate_bfs(2);
    EXPECT_NEAR(m.total_area(), 11.0, 1e-12);
    EXPECT_NEAR(gamma_length(m, BoundaryTag::Gamma2), 2.0, 1e-12);
    for (const auto& b : m.boundary_edges())
        if (b.tag == BoundaryTag::Gamma2) EXPECT_EQ(m.vertex(b.v0).x(), 6.0);
    TransientConfig c;
    EXPECT_EQ(transient_inlet_velocity(c, Vec2(0, 1.5)), Vec2(1, 0));
    EXPECT_EQ(transient_inlet_velocity(c, Vec2(0, 1.0)), Vec2(0, 0));
    EXPECT_EQ(transient_inlet_velocity(c, Vec2(3, 2.0)), Vec2(0, 0));
    EXPECT_EQ(transient_boundary_pressure(c, 5, Vec2(6, 1)), 0.0);
}

TEST(TransientGeometry, ObstacleChannel)
{
    const TriMesh m = generate_obstacles(4);
    EXPECT_NEAR(m.total_area(), 5.0 - 3 * 0.25, 1e-12);
    EXPECT_NEAR(gamma_length(m, BoundaryTag::Gamma2), 2.0, 1e-12);
    TransientConfig c;
    c.geometry = "obstacles";
    EXPECT_DOUBLE_EQ(transient_boundary_pressure(c, 5, Vec2(0.5, -2)), 1.5);
    EXPECT_DOUBLE_EQ(transient_boundary_pressure(c, 10, Vec2(0.5, -2)), 3.0);
    EXPECT_DOUBLE_EQ(transient_boundary_pressure(c, 25, Vec2(0.5, -2)), 3.0);
    EXPECT_EQ(transient_boundary_pressure(c, 25, Vec2(-2, 0.5)), 0.0);
    EXPECT_EQ(transient_inlet_velocity(c, Vec2(0.5, -2)), Vec2(0, 0));
}

TEST(Transient, ZeroInletStaysZero)
{
    TransientConfig c;
    c.inlet_peak = 0.0;
    c.n_steps = 3;
    c.k = 1;
    c.resolution = 2;
    c.snap_every = 1;
    int snaps = 0;
    TransientCallbacks cb;
    cb.on_snapshot = [&](const TransientSnapshot& s) {
        ++snaps;
        EXPECT_EQ(s.velocity.coeffs().norm(), 0.0);
        EXPECT_EQ(s.solution.omega_h.coeffs().norm(), 0.0);
        EXPECT_EQ(s.solution.p_h.coeffs().norm(), 0.0);
    };
    const TransientResult r = run_transient(c, nullptr, cb);
    EXPECT_EQ(snaps, 3);
    for (const auto& s : r.steps) {
        EXPECT_EQ(s.u_norm, 0.0);
        EXPECT_EQ(s.eta, 0.0);
    }
}

TEST(Transient, BetaIsPreviousVelocityAndFlowSettles)
{
    TransientConfig c;
    c.k = 1;
    c.resolution = 4;
    c.n_steps = 40;
    c.snap_every = 15;
    std::vector<Eigen::VectorXd> emitted;
    std::vector<int> snapped;
    TransientCallbacks cb;
    cb.on_step = [&](int step, const DiscreteField& beta, const DiscreteField& velocity) {
        if (step == 1)
            EXPECT_EQ(beta.coeffs().norm(), 0.0);
        else
            EXPECT_TRUE(beta.coeffs() == emitted.back());
        emitted.push_back(velocity.coeffs());
    };
    cb.on_snapshot = [&](const TransientSnapshot& s) { snapped.push_back(s.step); };
    const TransientResult r = run_transient(c, nullptr, cb);
    EXPECT_EQ(snapped, (std::vector<int>{15, 30, 40}));
    ASSERT_EQ(r.steps.size(), 40u);
    EXPECT_TRUE(r.final_velocity.coeffs() == emitted.back());
    std::vector<double> q3, q4;
    for (const auto& s : r.steps) {
        EXPECT_LE(s.u_max, 5.0);
        EXPECT_LE(s.residual, 1e-10);
        EXPECT_NEAR(s.time, s.step * c.dt, 1e-15);
        if (s.step > 20 && s.step <= 30) q3.push_back(s.u_change);
        if (s.step > 30) q4.push_back(s.u_change);
    }
    EXPECT_LT(median(q4), median(q3));
}

TEST(Transient, ObstacleChannelSmoke)
{
    TransientConfig c;
    c.geometry = "obstacles";
    c.dt = 0.1;
    c.nu = 0.02;
    c.n_steps = 12;
    c.k = 1;
    c.resolution = 4;
    const TransientResult r = run_transient(c, nullptr);
    ASSERT_EQ(r.steps.size(), 12u);
    EXPECT_GT(r.steps.back().u_norm, r.steps.front().u_norm);
    for (const auto& s : r.steps) EXPECT_TRUE(std::isfinite(s.u_norm) && std::isfinite(s.eta));
}

TEST(Transient, RecirculationIndicator)
{
    auto m = std::make_shared<const TriMesh>(generate_bfs(4));
    auto U = std::make_shared<const FeSpace>(m, 1, 2);
    const DiscreteField u = interpolate_vector([](const Vec2& x) { return Vec2(x.y() - 0.3, 0.0); }, U);
    EXPECT_LT(min_x_velocity(u, Vec2(1, 0), Vec2(2, 0.5)), 0.0);
    EXPECT_EQ(min_x_velocity(u, Vec2(1, 0.3), Vec2(2, 2)), 0.0);
}
