#include "oseenvb/postprocess.hpp"
#include "oseenvb/study.hpp"
#include "oseenvb/verify.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace oseenvb;
using namespace testing_support;

namespace {

OseenSolution make_solution(const std::shared_ptr<const FeSpace>& Z, const std::shared_ptr<const FeSpace>& Q,
                            const Eigen::VectorXd& w, const Eigen::VectorXd& p)
{
    OseenSolution s;
    s.omega_h = DiscreteField(Z, w);
    s.p_h = DiscreteField(Q, p);
    return s;
}

} // namespace

TEST(RecoverDirect, ZeroAndConstant)
{
    auto m = shared(generate_lshape(2));
    for (int k : {1, 2}) {
        auto Z = std::make_shared<const FeSpace>(m, k), Q = std::make_shared<const FeSpace>(m, k);
        OseenProblem p;
        p.sigma = 4.0;
        p.beta = VectorCoefficient::constant(Vec2(1.0, 2.0));
        const OseenSolution zero = make_solution(Z, Q, Eigen::VectorXd::Zero(Z->dof_count()), Eigen::VectorXd::Zero(Q->dof_count()));
        const BrokenField u0 = recover_direct(p, zero);
        EXPECT_EQ(u0.degree(), k - 1);
        for (int t = 0; t < m->num_triangles(); ++t) EXPECT_EQ(u0.average(t).norm(), 0.0);
        p.f = VectorCoefficient::constant(Vec2(3.0, -1.0));
        const BrokenField u1 = recover_direct(p, zero);
        for (int t = 0; t < m->num_triangles(); ++t)
            for (const Vec3& b : {Vec3(1, 0, 0), Vec3(0.2, 0.3, 0.5)})
                EXPECT_NEAR((u1.value(t, b) - Vec2(0.75, -0.25)).norm(), 0.0, 1e-14);
    }
}

TEST(RecoverDirect, Linearity)
{
    std::mt19937 rng(3);
    auto m = eight_triangles();
    for (int k : {1, 2}) {
        auto Z = std::make_shared<const FeSpace>(m, k), Q = std::make_shared<const FeSpace>(m, k);
        auto F = std::make_shared<const FeSpace>(m, k, 2);
        const DiscreteField f1(F, random_vector(F->dof_count(), rng)), f2(F, random_vector(F->dof_count(), rng));
        const DiscreteField f12(F, f1.coeffs() + f2.coeffs());
        const Eigen::VectorXd w1 = random_vector(Z->dof_count(), rng), w2 = random_vector(Z->dof_count(), rng);
        const Eigen::VectorXd p1 = random_vector(Q->dof_count(), rng), p2 = random_vector(Q->dof_count(), rng);
        OseenProblem prob;
        prob.nu = 0.3;
        prob.sigma = 2.0;
        prob.beta = wavy_beta();
        auto run = [&](const DiscreteField& f, const Eigen::VectorXd& w, const Eigen::VectorXd& p) {
            prob.f = VectorCoefficient::of(f);
            return recover_direct(prob, make_solution(Z, Q, w, p));
        };
        const BrokenField a = run(f1, w1, p1), b = run(f2, w2, p2), c = run(f12, w1 + w2, p1 + p2);
        for (int t = 0; t < m->num_triangles(); ++t)
            for (int i = 0; i < c.local_count(); ++i)
                EXPECT_NEAR((c.coeff(t, i) - a.coeff(t, i) - b.coeff(t, i)).norm(), 0.0, 1e-12);
    }
}

TEST(RecoverElliptic, ZeroAndStability)
{
    std::mt19937 rng(4);
    auto m = shared(generate_lshape(3));
    for (int k : {1, 2}) {
        auto Z = std::make_shared<const FeSpace>(m, k);
        auto U = std::make_shared<const FeSpace>(m, k, 2);
        const double nu = 0.05;
        const EllipticRecovery rec(U, nu);
        auto zero = [](const Vec2&) { return Vec2::Zero().eval(); };
        const DiscreteField u0 = rec.solve(DiscreteField(Z, Eigen::VectorXd::Zero(Z->dof_count())), zero, zero);
        EXPECT_EQ(u0.coeffs().norm(), 0.0);
        const DiscreteField w(Z, random_vector(Z->dof_count(), rng));
        double res = 1.0;
        const DiscreteField u = rec.solve(w, zero, zero, &res);
        EXPECT_LE(res, 1e-10);
        const double rot2 = integrate(*m, [&](int t, const Vec3& b) {
            const Mat2 J = u.jacobian(t, b);
            return std::pow(J(1, 0) - J(0, 1), 2);
        });
        const double div2 = integrate(*m, [&](int t, const Vec3& b) { return std::pow(u.jacobian(t, b).trace(), 2); });
        const double w2 = integrate(*m, [&](int t, const Vec3& b) { return std::pow(w.value(t, b), 2); });
        EXPECT_LE(nu * rot2 + nu * div2, std::sqrt(w2) * std::sqrt(nu * rot2) * (1 + 1e-10));
        // Boundary DOFs carry the (zero) Dirichlet data.
        for (int d : rec.constrained_dofs()) EXPECT_EQ(u.coeffs()[d], 0.0);
    }
}

TEST(RecoverElliptic, TangentialModeNeedsAxisAlignedGamma2)
{
    auto slanted = shared(parse_mesh("meshtxt 1\n3 1 3\n0 0\n1 0\n0 1\n0 1 2\n0 1 1\n1 2 2\n2 0 1\n"));
    auto U = std::make_shared<const FeSpace>(slanted, 2, 2);
    EXPECT_THROW(EllipticRecovery(U, 1.0, RecoveryBoundary::Tangential), ConfigError);
    EXPECT_THROW(EllipticRecovery(std::make_shared<const FeSpace>(slanted, 1, 1), 1.0), ConfigError);
}

TEST(RecoverElliptic, DivergenceVanishesUnderRefinement)
{
    const ManufacturedCase c = manufactured_case("ex1");
    for (int k : {1, 2}) {
        const StudyReport r = uniform_study(c, k, 4, 1.0, 4);
        const double rate = r.last_rate(&ErrorRecord::div_elliptic);
        EXPECT_GE(rate, k - 0.2) << "k=" << k;
        EXPECT_LT(r.rows.back().err.div_elliptic, r.rows.front().err.div_elliptic);
    }
}
