#include "oseenvb/study.hpp"
#include "oseenvb/verify.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

using namespace oseenvb;
using namespace testing_support;

namespace {

// omega = 1 + x y - y^2, p = x^2 - 2 y; u, beta and f are left at zero.
void polynomial_kernel(double x, double y, double, double, double, ExactPoint& e)
{
    e = ExactPoint{};
    e.omega = 1 + x * y - y * y;
    e.omega_x = y;
    e.omega_y = x - 2 * y;
    e.p = x * x - 2 * y;
    e.p_x = 2 * x;
    e.p_y = -2;
}

ManufacturedCase polynomial_case()
{
    ManufacturedCase c = manufactured_case("ex1");
    c.name = "poly";
    c.kernel = polynomial_kernel;
    return c;
}

OseenSolution interpolated(const ManufacturedCase& c, const std::shared_ptr<const TriMesh>& m, int k, bool zero)
{
    OseenSolution s;
    auto Z = std::make_shared<const FeSpace>(m, k);
    s.omega_h = zero ? DiscreteField(Z) : interpolate([&](const Vec2& x) { return c.omega(x); }, Z);
    s.p_h = zero ? DiscreteField(Z) : interpolate([&](const Vec2& x) { return c.p(x); }, Z);
    return s;
}

} // namespace

TEST(Cases, Consistency)
{
    for (const std::string& name : case_names()) {
        const ConsistencyReport r = case_consistency(manufactured_case(name));
        EXPECT_LE(r.momentum, 1e-10) << name;
        EXPECT_LE(r.vorticity, 1e-10) << name;
        EXPECT_LE(r.divergence, 1e-10) << name;
        EXPECT_LE(r.derivative_fd, 1e-6) << name;
    }
}

TEST(Cases, Registry)
{
    EXPECT_EQ(case_names(), (std::vector<std::string>{"ex1", "ex2a", "ex2b", "ex2c"}));
    try {
        manufactured_case("ex9");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("ex2c"), std::string::npos);
    }
    const ManufacturedCase ex1 = manufactured_case("ex1");
    EXPECT_EQ(ex1.nu, 0.1);
    EXPECT_EQ(ex1.sigma, 100.0);
    const ManufacturedCase ex2c = manufactured_case("ex2c");
    EXPECT_EQ(ex2c.nu, 1e-4);
    EXPECT_EQ(ex2c.sigma, 10.0);
    EXPECT_NEAR(manufactured_case("ex2b").delta, 2.0 / 3.0, 1e-15);
}

TEST(Cases, Ex2aIsSolenoidal)
{
    const ManufacturedCase c = manufactured_case("ex2a");
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const ExactPoint e = c.eval(Vec2(u(rng), u(rng)));
        EXPECT_NEAR(e.du[0][0] + e.du[1][1], 0.0, 1e-15);
    }
}

TEST(Cases, Ex2cPressureOffset)
{
    const ManufacturedCase c = manufactured_case("ex2c");
    const double oracle = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [](double x) { return std::exp(-(x - 0.5) * (x - 0.5)); }, 0.0, 1.0, 10, 1e-15);
    EXPECT_NEAR(c.p0, oracle, 1e-12);
    EXPECT_NEAR(c.p0, 0.92256, 1e-5);
    auto m = shared(c.build_mesh(8));
    EXPECT_NEAR(exact_pressure_mean(c, *m), 0.0, 1e-12);
}

TEST(ErrorNorms, ExactFieldsGiveZero)
{
    const ManufacturedCase c = polynomial_case();
    auto m = shared(c.build_mesh(3));
    const ErrorRecord e = error_norms(c, interpolated(c, m, 2, false), nullptr, nullptr, 1.0);
    EXPECT_LE(e.omega, 1e-12);
    EXPECT_LE(e.p, 1e-12);
    EXPECT_LE(e.V, 1e-11);
    EXPECT_LE(e.V_weighted, 1e-11);
    EXPECT_LE(e.L2_weighted, 1e-11);
}

TEST(ErrorNorms, ZeroSolutionGivesExactNorms)
{
    const ManufacturedCase c = manufactured_case("ex1");
    auto m = shared(c.build_mesh(4));
    const ErrorRecord e = error_norms(c, interpolated(c, m, 1, true), nullptr, nullptr, 1.0);
    const double w2 = integrate(*m, [&](int t, const Vec3& b) { return std::pow(c.omega(m->map(t, b)), 2); });
    const double p2 = integrate(*m, [&](int t, const Vec3& b) { return std::pow(c.p(m->map(t, b)), 2); });
    const double flux2 = integrate(*m, [&](int t, const Vec3& b) {
        const ExactPoint x = c.eval(m->map(t, b));
        const Vec2 v = std::sqrt(c.nu) * Vec2(x.omega_y, -x.omega_x) + Vec2(x.p_x, x.p_y);
        return v.squaredNorm();
    });
    EXPECT_NEAR(e.omega, std::sqrt(w2), 1e-12 * std::sqrt(w2));
    EXPECT_NEAR(e.p, std::sqrt(p2), 1e-12 * std::sqrt(p2));
    EXPECT_NEAR(e.L2_weighted, std::sqrt(c.sigma * w2 + p2), 1e-12 * e.L2_weighted);
    EXPECT_NEAR(e.V, std::sqrt(c.sigma * w2 + flux2 + p2), 1e-12 * e.V);
}

TEST(ErrorNorms, WeightedNormOnUniformMesh)
{
    const ManufacturedCase c = manufactured_case("ex1");
    auto m = shared(c.build_mesh(4));
    const ErrorRecord e = error_norms(c, interpolated(c, m, 1, false), nullptr, nullptr, 1.0);
    EXPECT_NEAR(e.V_weighted, m->max_diameter() * e.V, 1e-12 * e.V);
    const ErrorRecord h = error_norms(c, interpolated(c, m, 1, false), nullptr, nullptr, 0.5);
    EXPECT_NEAR(h.V_weighted, std::sqrt(m->max_diameter()) * e.V, 1e-12 * e.V);
}

TEST(Rates, Formula)
{
    EXPECT_EQ(convergence_rate(0.3, 0.3, 0.2, 0.1), 0.0);
    EXPECT_NEAR(convergence_rate(0.5602, 0.1222, 0.380, 0.190), 2.196, 1e-3);
    EXPECT_NEAR(convergence_rate(4 * 0.01, 0.01, 2 * 0.3, 0.3), 2.0, 1e-14);
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(0.01, 10.0);
    for (int i = 0; i < 20; ++i) {
        const double e1 = u(rng), e2 = u(rng), h1 = u(rng), h2 = u(rng);
        if (h1 == h2) continue;
        EXPECT_NEAR(convergence_rate(e1, e2, h1, h2), -convergence_rate(e2, e1, h1, h2), 1e-12 * (1 + std::abs(convergence_rate(e1, e2, h1, h2))));
        EXPECT_NEAR(convergence_rate(e1, e2, h1, h2), convergence_rate(e2, e1, h2, h1), 1e-12 * (1 + std::abs(convergence_rate(e1, e2, h1, h2))));
    }
    EXPECT_THROW(convergence_rate(0.0, 1.0, 0.2, 0.1), ConfigError);
    EXPECT_THROW(convergence_rate(1.0, 1.0, -0.2, 0.1), ConfigError);
}

TEST(Oracle, SymmetricAndZeroWithoutData)
{
    for (const std::string& name : case_names()) {
        const ManufacturedCase c = manufactured_case(name);
        auto m = shared(c.build_mesh(2));
        if (m->num_triangles() > 50) continue;
        OseenProblem p;
        p.nu = c.nu;
        p.sigma = c.sigma;
        const FeSpace Z(m, 2), Q(m, 2);
        const OracleSystem o = oracle_assemble(p, Z, Q);
        EXPECT_LE((o.matrix - o.matrix.transpose()).cwiseAbs().maxCoeff(), 1e-13 * o.matrix.cwiseAbs().maxCoeff()) << name;
        EXPECT_EQ(o.rhs.norm(), 0.0);
    }
}
