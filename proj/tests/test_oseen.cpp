#include "oseenvb/oseen.hpp"
#include "oseenvb/solver.hpp"
#include "oseenvb/verify.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace oseenvb;
using namespace testing_support;

namespace {

double max_abs(const SparseMatrix& A)
{
    double m = 0.0;
    for (int k = 0; k < A.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(A, k); it; ++it) m = std::max(m, std::abs(it.value()));
    return m;
}

OseenProblem polynomial_problem(const VectorCoefficient& beta)
{
    OseenProblem p;
    p.nu = 0.7;
    p.sigma = 3.0;
    p.beta = beta;
    p.f = VectorCoefficient::of([](const Vec2& x) { return Vec2(x.x() * x.y(), 1.0 - x.x()); },
                                [](const Vec2& x) {
                                    Mat2 J;
                                    J << x.y(), x.x(), -1.0, 0.0;
                                    return J;
                                });
    p.g = [](const Vec2& x) { return Vec2(x.y(), 2.0 * x.x() - x.y()); };
    p.a = [](const Vec2& x) { return Vec2(1.0 + x.y(), x.x()); };
    p.p0 = [](const Vec2& x) { return x.x() - x.y(); };
    return p;
}

} // namespace

TEST(Assemble, ZeroDataGivesZeroRhs)
{
    OseenProblem p;
    p.beta = VectorCoefficient::constant(Vec2(1, 0));
    auto m = eight_triangles(left_gamma2());
    for (int k : {1, 2}) {
        const FeSpace Z(m, k), Q(m, k);
        const LinearSystem s = assemble(p, Z, Q);
        EXPECT_EQ(s.rhs.norm(), 0.0);
    }
}

TEST(Assemble, SymmetricWithoutConvection)
{
    OseenProblem p = polynomial_problem(VectorCoefficient::zero());
    auto m = shared(generate_lshape(2));
    for (int k : {1, 2}) {
        const FeSpace Z(m, k), Q(m, k);
        const SparseMatrix A = assemble(p, Z, Q).matrix;
        const SparseMatrix At = A.transpose();
        EXPECT_LE(max_abs(A - At), 1e-13 * max_abs(A));
    }
}

TEST(Assemble, MatchesOracle)
{
    const std::vector<std::pair<std::string, VectorCoefficient>> betas = {
        {"zero", VectorCoefficient::zero()}, {"constant", VectorCoefficient::constant(Vec2(1, 0))}, {"quadratic", quadratic_beta()}};
    for (auto mesh : {two_triangles(), eight_triangles(left_gamma2())})
        for (int k : {1, 2})
            for (const auto& [name, beta] : betas) {
                OseenProblem p = polynomial_problem(beta);
                const FeSpace Z(mesh, k), Q(mesh, k);
                AssemblyOptions ao;
                ao.quadrature = 8;
                const LinearSystem s = assemble(p, Z, Q, ao);
                const OracleSystem o = oracle_assemble(p, Z, Q);
                const Eigen::MatrixXd A(s.matrix);
                const double scale = std::max(1.0, o.matrix.cwiseAbs().maxCoeff());
                EXPECT_LE((A - o.matrix).cwiseAbs().maxCoeff(), 1e-12 * scale)
                    << mesh->num_triangles() << " triangles, k=" << k << ", beta " << name;
                EXPECT_LE((s.rhs - o.rhs).cwiseAbs().maxCoeff(), 1e-12 * std::max(1.0, o.rhs.cwiseAbs().maxCoeff()))
                    << mesh->num_triangles() << " triangles, k=" << k << ", beta " << name;
            }
}

TEST(Assemble, OracleSmallExample)
{
    OseenProblem p;
    p.beta = VectorCoefficient::constant(Vec2(1, 0));
    auto m = two_triangles();
    const FeSpace Z(m, 1), Q(m, 1);
    const LinearSystem s = assemble(p, Z, Q);
    const OracleSystem o = oracle_assemble(p, Z, Q);
    ASSERT_EQ(o.matrix.rows(), 8);
    EXPECT_LE((Eigen::MatrixXd(s.matrix) - o.matrix).cwiseAbs().maxCoeff(), 1e-12);
    OseenProblem p0;
    const OracleSystem z = oracle_assemble(p0, Z, Q);
    EXPECT_LE((z.matrix - z.matrix.transpose()).cwiseAbs().maxCoeff(), 1e-13 * z.matrix.cwiseAbs().maxCoeff());
    EXPECT_EQ(z.rhs.norm(), 0.0);
    auto big = shared(generate_rect(Vec2(0, 0), Vec2(1, 1), 6, tag_all(BoundaryTag::Gamma1)));
    const FeSpace Zb(big, 1), Qb(big, 1);
    EXPECT_THROW(oracle_assemble(p0, Zb, Qb), ConfigError);
}

TEST(Assemble, MismatchedSpaces)
{
    OseenProblem p;
    auto m1 = two_triangles();
    auto m2 = eight_triangles();
    EXPECT_THROW(assemble(p, FeSpace(m1, 1), FeSpace(m2, 1)), ConfigError);
    EXPECT_THROW(assemble(p, FeSpace(m1, 1), FeSpace(m1, 2)), ConfigError);
    p.delta = 0.0;
    EXPECT_THROW(p.validate(), ConfigError);
}

TEST(Constraints, MultiplierBordersSystem)
{
    OseenProblem p = polynomial_problem(VectorCoefficient::zero());
    auto m = eight_triangles();
    const FeSpace Z(m, 2), Q(m, 2);
    const LinearSystem raw = assemble(p, Z, Q);
    const LinearSystem c = apply_constraints(raw, p, Q);
    EXPECT_EQ(c.matrix.rows(), raw.matrix.rows() + 1);
    ASSERT_TRUE(c.multiplier_row);
    EXPECT_EQ(c.rhs[*c.multiplier_row], 0.0);
    p.use_multiplier = false;
    EXPECT_THROW(apply_constraints(raw, p, Q), ConfigError);
}

TEST(Constraints, WholeBoundaryGamma2)
{
    OseenProblem p = polynomial_problem(wavy_beta());
    p.p0 = [](const Vec2&) { return 0.0; };
    auto m = shared(generate_rect(Vec2(0, 0), Vec2(1, 1), 3, tag_all(BoundaryTag::Gamma2)));
    const FeSpace Z(m, 2), Q(m, 2);
    const LinearSystem c = apply_constraints(assemble(p, Z, Q), p, Q);
    EXPECT_EQ(c.matrix.rows(), Z.dof_count() + Q.dof_count());
    EXPECT_FALSE(c.multiplier_row);
    const Eigen::MatrixXd A(c.matrix);
    for (int d : Q.boundary_dofs()) {
        const int row = Z.dof_count() + d;
        for (int j = 0; j < A.cols(); ++j) EXPECT_EQ(A(row, j), row == j ? 1.0 : 0.0);
        EXPECT_EQ(c.rhs[row], 0.0);
    }
}

TEST(Constraints, ReproducesBoundaryPressure)
{
    const ManufacturedCase ex1 = manufactured_case("ex1");
    const OseenProblem p = ex1.problem(1.0);
    auto m = shared(ex1.initial_mesh());
    auto Z = std::make_shared<const FeSpace>(m, 2), Q = std::make_shared<const FeSpace>(m, 2);
    const OseenSolution s = solve_oseen(p, Z, Q);
    for (int d : Q->boundary_dofs(BoundaryTag::Gamma2)) EXPECT_EQ(s.p_h.coeffs()[d], p.p0(Q->dof_point(d)));
    EXPECT_LE(s.relative_residual, 1e-10);
    EXPECT_TRUE(s.omega_h.coeffs().allFinite());
    EXPECT_FALSE(s.multiplier);
}

TEST(Solver, IdentityAndSingular)
{
    SparseMatrix I(3, 3);
    I.setIdentity();
    Eigen::VectorXd e1 = Eigen::VectorXd::Unit(3, 0);
    double res = 1.0;
    EXPECT_EQ(solve_sparse(I, e1, &res), e1);
    EXPECT_EQ(res, 0.0);
    SparseMatrix S(3, 3);
    S.insert(0, 0) = 1.0;
    S.insert(1, 1) = 2.0;
    S.insert(2, 0) = 1.0;
    S.makeCompressed();
    try {
        solve_sparse(S, e1);
        FAIL() << "expected a singular-matrix error";
    } catch (const SolverError& e) {
        EXPECT_EQ(e.pivot_index(), 2);
    }
    EXPECT_EQ(solve_sparse(I, Eigen::VectorXd::Zero(3)).norm(), 0.0);
    EXPECT_THROW(solve_sparse(SparseMatrix(2, 3), e1), SolverError);
}

TEST(Solver, ZeroDataGivesZeroSolution)
{
    OseenProblem p;
    p.beta = VectorCoefficient::constant(Vec2(0.3, -0.2));
    for (auto m : {eight_triangles(), eight_triangles(left_gamma2())}) {
        auto Z = std::make_shared<const FeSpace>(m, 2), Q = std::make_shared<const FeSpace>(m, 2);
        const OseenSolution s = solve_oseen(p, Z, Q);
        EXPECT_EQ(s.omega_h.coeffs().norm(), 0.0);
        EXPECT_EQ(s.p_h.coeffs().norm(), 0.0);
    }
}

TEST(Solution, ZeroMeanWithMultiplier)
{
    const ManufacturedCase c = manufactured_case("ex2a");
    const OseenProblem p = c.problem(1.0);
    auto m = shared(c.build_mesh(8));
    for (int k : {1, 2}) {
        auto Z = std::make_shared<const FeSpace>(m, k), Q = std::make_shared<const FeSpace>(m, k);
        const OseenSolution s = solve_oseen(p, Z, Q);
        ASSERT_TRUE(s.multiplier);
        const double mean = integrate(*m, [&](int t, const Vec3& b) { return s.p_h.value(t, b); });
        const double l2 = std::sqrt(integrate(*m, [&](int t, const Vec3& b) { return std::pow(s.p_h.value(t, b), 2); }));
        EXPECT_LE(std::abs(mean), 1e-10 * l2);
    }
}

TEST(Solution, GalerkinConsistency)
{
    for (const std::string& name : case_names()) {
        const ManufacturedCase c = manufactured_case(name);
        const OseenProblem p = c.problem(c.delta);
        auto m = shared(c.initial_mesh());
        for (int k : {1, 2}) {
            auto Z = std::make_shared<const FeSpace>(m, k), Q = std::make_shared<const FeSpace>(m, k);
            const OseenSolution s = solve_oseen(p, Z, Q);
            const LinearSystem fresh = assemble(p, *Z, *Q);
            Eigen::VectorXd x(Z->dof_count() + Q->dof_count());
            x << s.omega_h.coeffs(), s.p_h.coeffs();
            Eigen::VectorXd r = fresh.rhs - fresh.matrix * x;
            if (s.multiplier) r.tail(Q->dof_count()) -= *s.multiplier * pressure_mean_weights(*Q);
            for (int d : Q->boundary_dofs(BoundaryTag::Gamma2)) r[Z->dof_count() + d] = 0.0;
            EXPECT_LE(r.cwiseAbs().maxCoeff(), 1e-9 * fresh.rhs.norm()) << name << " k=" << k;
        }
    }
}

TEST(Solution, GreenIdentity)
{
    std::mt19937 rng(11);
    auto m = shared(parse_mesh("meshtxt 1\n3 1 3\n0.1 0.2\n1.3 0.4\n0.5 1.1\n0 1 2\n0 1 1\n1 2 1\n2 0 1\n"));
    for (int k : {1, 2}) {
        auto S = std::make_shared<const FeSpace>(m, k, 1);
        auto V = std::make_shared<const FeSpace>(m, k, 2);
        for (int trial = 0; trial < 5; ++trial) {
            const DiscreteField s(S, random_vector(S->dof_count(), rng));
            const DiscreteField v(V, random_vector(V->dof_count(), rng));
            const double volume = integrate(*m, [&](int t, const Vec3& b) {
                const Vec2 gs = s.gradient(t, b);
                const Mat2 J = v.jacobian(t, b);
                const Vec2 vv = v.vector_value(t, b);
                const double rot = J(1, 0) - J(0, 1);
                return vv.dot(Vec2(gs.y(), -gs.x())) - s.value(t, b) * rot;
            });
            double boundary = 0.0;
            const LineRule& line = line_rule(8);
            for (int i = 0; i < 3; ++i) {
                const int a = (i + 1) % 3, b = (i + 2) % 3;
                const Vec2 pa = m->vertex(a), pb = m->vertex(b);
                const Vec2 tangent = (pb - pa).normalized();
                for (std::size_t q = 0; q < line.points.size(); ++q) {
                    Vec3 bary = Vec3::Zero();
                    bary[a] = 1.0 - line.points[q];
                    bary[b] = line.points[q];
                    boundary += line.weights[q] * (pb - pa).norm() * s.value(0, bary) * v.vector_value(0, bary).dot(tangent);
                }
            }
            EXPECT_NEAR(volume + boundary, 0.0, 1e-13) << "k=" << k;
        }
    }
}

TEST(Coercivity, Probe)
{
    std::mt19937 rng(5);
    auto run = [&](const OseenProblem& p, const std::shared_ptr<const TriMesh>& m, int k) {
        const FeSpace Z(m, k), Q(m, k);
        std::vector<Eigen::VectorXd> pairs;
        for (int i = 0; i < 100; ++i) pairs.push_back(random_vector(Z.dof_count() + Q.dof_count(), rng));
        return coercivity_probe(p, Z, Q, pairs);
    };
    OseenProblem zero;
    const CoercivityReport r0 = run(zero, eight_triangles(), 2);
    EXPECT_TRUE(r0.all_pass);
    EXPECT_TRUE(r0.smallness_holds);
    for (const auto& e : r0.entries) EXPECT_GE(e.form, e.bound - e.tolerance);

    OseenProblem small;
    small.beta = VectorCoefficient::constant(Vec2(0.1, 0));
    const CoercivityReport r1 = run(small, two_triangles(), 1);
    EXPECT_TRUE(r1.all_pass);
    EXPECT_NEAR(r1.beta_sup, 0.1, 1e-15);

    const ManufacturedCase ex1 = manufactured_case("ex1");
    const CoercivityReport r2 = run(ex1.problem(1.0), shared(ex1.initial_mesh()), 1);
    EXPECT_TRUE(r2.smallness_holds);
    EXPECT_TRUE(r2.all_pass);
    EXPECT_EQ(r2.entries.size(), 100u);
}
