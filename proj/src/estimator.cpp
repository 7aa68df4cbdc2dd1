#include "oseenvb/estimator.hpp"

#include "oseenvb/parallel.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace oseenvb {

namespace {

struct LocalFields {
    double w = 0.0;
    Vec2 grad_w = Vec2::Zero();
    double lap_w = 0.0;
    Vec2 grad_p = Vec2::Zero();
    double lap_p = 0.0;
};

LocalFields local_fields(const OseenSolution& sol, int t, const Vec3& bary)
{
    const FeSpace& Zh = sol.omega_h.space();
    const FeSpace& Qh = sol.p_h.space();
    const auto geo = CellGeometry::of(Zh.mesh(), t);
    const auto b = eval_basis(Zh.degree(), bary);
    const auto hess = basis_hessians(Zh.degree());
    LocalFields out;
    for (int i = 0; i < b.count; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        const double cw = sol.omega_h.coeffs()[Zh.cell_dof(t, i)];
        const double cp = sol.p_h.coeffs()[Qh.cell_dof(t, i)];
        const Vec2 g = geo.physical_gradient(b.gradients[iu]);
        const double lap = geo.physical_hessian(hess[iu]).trace();
        out.w += cw * b.values[iu];
        out.grad_w += cw * g;
        out.lap_w += cw * lap;
        out.grad_p += cp * g;
        out.lap_p += cp * lap;
    }
    return out;
}

void check_finite(double v, int t)
{
    if (!std::isfinite(v)) throw Error("non-finite residual sample in triangle " + std::to_string(t));
}

int estimator_exactness(const OseenSolution& sol, const EstimatorOptions& options)
{
    return options.quadrature > 0 ? options.quadrature : std::min(8, 2 * sol.omega_h.space().degree() + 4);
}

// Integral over edge e of J1^2 and J2^2.
std::pair<double, double> edge_integrals(const OseenProblem& problem, const OseenSolution& sol, int e, const LineRule& line)
{
    const double len = sol.omega_h.space().mesh().edge_length(e);
    double a = 0.0, b = 0.0;
    for (std::size_t q = 0; q < line.points.size(); ++q) {
        const auto j = edge_jumps(problem, sol, e, line.points[q]);
        a += line.weights[q] * len * j.j1 * j.j1;
        b += line.weights[q] * len * j.j2 * j.j2;
    }
    return {a, b};
}

// Volume terms of one triangle, without the h weight.
std::pair<double, double> volume_integrals(const OseenProblem& problem, const OseenSolution& sol, int t, const QuadRule& rule)
{
    const double det = 2.0 * sol.omega_h.space().mesh().area(t);
    double a = 0.0, b = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const auto r = element_residuals(problem, sol, t, rule.points[q]);
        a += rule.weights[q] * det * r.r1 * r.r1;
        b += rule.weights[q] * det * r.r2 * r.r2;
    }
    return {a, b};
}

} // namespace

ResidualSample element_residuals(const OseenProblem& problem, const OseenSolution& sol, int t, const Vec3& bary)
{
    const TriMesh& mesh = sol.omega_h.space().mesh();
    const FieldPoint fp{t, bary, mesh.map(t, bary)};
    const LocalFields lf = local_fields(sol, t, bary);
    const Vec2 beta = problem.beta.value(fp);
    const Mat2 jb = problem.beta.jacobian(fp);
    const Mat2 jf = problem.f.jacobian(fp);
    const double snu = std::sqrt(problem.nu);
    const double inv_snu = 1.0 / snu;

    const double rot_f = jf(1, 0) - jf(0, 1);
    const double div_f = jf(0, 0) + jf(1, 1);
    // rot(w x beta) = div(w beta); div(w x beta) = d_y(w beta1) - d_x(w beta2).
    const double rot_wxb = lf.grad_w.dot(beta) + lf.w * (jb(0, 0) + jb(1, 1));
    const double div_wxb = lf.grad_w.y() * beta.x() - lf.grad_w.x() * beta.y() + lf.w * (jb(0, 1) - jb(1, 0));

    ResidualSample r;
    r.r1 = -snu * lf.lap_w + inv_snu * rot_wxb - rot_f + inv_snu * problem.sigma * lf.w;
    r.r2 = div_f - inv_snu * div_wxb - lf.lap_p;
    check_finite(r.r1, t);
    check_finite(r.r2, t);
    return r;
}

JumpSample edge_jumps(const OseenProblem& problem, const OseenSolution& sol, int e, double s)
{
    const TriMesh& mesh = sol.omega_h.space().mesh();
    if (mesh.is_boundary(e)) throw Error("edge jumps are defined on interior edges only (edge " + std::to_string(e) + ")");
    const auto frame = mesh.frame(e);
    const auto& ev = mesh.edge(e);
    const double snu = std::sqrt(problem.nu);
    const double inv_snu = 1.0 / snu;
    JumpSample out;
    const auto tris = mesh.edge_triangles(e);
    for (int side = 0; side < 2; ++side) {
        const int t = tris[static_cast<std::size_t>(side)];
        const auto& tri = mesh.triangle(t);
        Vec3 bary = Vec3::Zero();
        for (int i = 0; i < 3; ++i) {
            if (tri[static_cast<std::size_t>(i)] == ev[0]) bary[i] = 1.0 - s;
            if (tri[static_cast<std::size_t>(i)] == ev[1]) bary[i] = s;
        }
        const FieldPoint fp{t, bary, mesh.map(t, bary)};
        const LocalFields lf = local_fields(sol, t, bary);
        const Vec2 beta = problem.beta.value(fp);
        const Vec2 f = problem.f.value(fp);
        const Vec2 wxb = lf.w * perp(beta);
        const Vec2 j1 = snu * Vec2(lf.grad_w.y(), -lf.grad_w.x()) + inv_snu * wxb - f;
        const Vec2 j2 = f - inv_snu * wxb - lf.grad_p;
        const double sign = side == 0 ? 1.0 : -1.0;
        out.j1 += sign * j1.dot(frame.tangent);
        out.j2 += sign * j2.dot(frame.normal);
    }
    return out;
}

LocalEstimate eta_local(const OseenProblem& problem, const OseenSolution& sol, int t, const EstimatorOptions& options)
{
    const TriMesh& mesh = sol.omega_h.space().mesh();
    const int ex = estimator_exactness(sol, options);
    const double delta = problem.delta;
    LocalEstimate le;
    const auto [v1, v2] = volume_integrals(problem, sol, t, quadrature_rule(ex));
    const double hw = std::pow(mesh.diameter(t), 2.0 * (1.0 + delta));
    le.r1_sq = hw * v1;
    le.r2_sq = hw * v2;
    for (int e : mesh.triangle_edges(t)) {
        if (mesh.is_boundary(e)) continue;
        const auto [j1, j2] = edge_integrals(problem, sol, e, line_rule(ex));
        const double he = std::pow(mesh.edge_length(e), 1.0 + 2.0 * delta);
        le.jump1_sq += he * j1;
        le.jump2_sq += he * j2;
    }
    le.eta_sq = le.r1_sq + le.r2_sq + le.jump1_sq + le.jump2_sq;
    return le;
}

std::vector<double> EstimatorField::eta_T() const
{
    std::vector<double> out;
    out.reserve(local.size());
    for (const auto& l : local) out.push_back(std::sqrt(l.eta_sq));
    return out;
}

EstimatorField eta_global(std::vector<LocalEstimate> local, double delta)
{
    EstimatorField f;
    f.delta = delta;
    double sum = 0.0;
    for (const auto& l : local) sum += l.eta_sq;
    f.eta = std::sqrt(sum);
    f.local = std::move(local);
    return f;
}

EstimatorField estimate(const OseenProblem& problem, const OseenSolution& sol, const EstimatorOptions& options)
{
    problem.validate();
    const TriMesh& mesh = sol.omega_h.space().mesh();
    const int ex = estimator_exactness(sol, options);
    const QuadRule& rule = quadrature_rule(ex);
    const LineRule& line = line_rule(ex);
    const double delta = problem.delta;
    const int nt = mesh.num_triangles();
    const int ne = mesh.num_edges();

    std::vector<std::pair<double, double>> edge_terms(static_cast<std::size_t>(ne), {0.0, 0.0});
    parallel_chunks(ne, options.threads, [&](int begin, int end, int) {
        for (int e = begin; e < end; ++e) {
            if (mesh.is_boundary(e)) continue;
            const auto [j1, j2] = edge_integrals(problem, sol, e, line);
            const double he = std::pow(mesh.edge_length(e), 1.0 + 2.0 * delta);
            edge_terms[static_cast<std::size_t>(e)] = {he * j1, he * j2};
        }
    });

    std::vector<LocalEstimate> local(static_cast<std::size_t>(nt));
    parallel_chunks(nt, options.threads, [&](int begin, int end, int) {
        for (int t = begin; t < end; ++t) {
            auto& le = local[static_cast<std::size_t>(t)];
            const auto [v1, v2] = volume_integrals(problem, sol, t, rule);
            const double hw = std::pow(mesh.diameter(t), 2.0 * (1.0 + delta));
            le.r1_sq = hw * v1;
            le.r2_sq = hw * v2;
            for (int e : mesh.triangle_edges(t)) {
                le.jump1_sq += edge_terms[static_cast<std::size_t>(e)].first;
                le.jump2_sq += edge_terms[static_cast<std::size_t>(e)].second;
            }
            le.eta_sq = le.r1_sq + le.r2_sq + le.jump1_sq + le.jump2_sq;
        }
    });
    return eta_global(std::move(local), delta);
}

Effectivity effectivity(double err_L2_weighted, double err_V_weighted, double eta)
{
    Effectivity out;
    if (eta > 0.0) {
        out.eff1 = err_L2_weighted / eta;
        out.eff2 = err_V_weighted / eta;
    } else {
        out.flagged = err_L2_weighted > 0.0 || err_V_weighted > 0.0;
    }
    return out;
}

std::vector<double> oscillation(const OseenProblem& problem, const TriMesh& mesh, int ell, int quadrature)
{
    if (ell < 0 || ell > 2) throw ConfigError("oscillation projection degree must be 0, 1 or 2");
    const QuadRule& rule = quadrature_rule(quadrature);
    const int nb = ell == 0 ? 1 : local_dof_count(ell);
    std::vector<Eigen::VectorXd> phi;
    Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(nb, nb);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        Eigen::VectorXd v(nb);
        if (ell == 0) {
            v[0] = 1.0;
        } else {
            const auto b = eval_basis(ell, rule.points[q]);
            for (int i = 0; i < nb; ++i) v[i] = b.values[static_cast<std::size_t>(i)];
        }
        mass += rule.weights[q] * v * v.transpose();
        phi.push_back(v);
    }
    const Eigen::LDLT<Eigen::MatrixXd> mass_inv(mass);
    std::vector<double> out(static_cast<std::size_t>(mesh.num_triangles()), 0.0);
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        Eigen::VectorXd rot(rule.size()), div(rule.size());
        Eigen::VectorXd brot = Eigen::VectorXd::Zero(nb), bdiv = Eigen::VectorXd::Zero(nb);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const FieldPoint fp{t, rule.points[q], mesh.map(t, rule.points[q])};
            const Mat2 jf = problem.f.jacobian(fp);
            const auto qi = static_cast<Eigen::Index>(q);
            rot[qi] = jf(1, 0) - jf(0, 1);
            div[qi] = jf(0, 0) + jf(1, 1);
            brot += rule.weights[q] * rot[qi] * phi[q];
            bdiv += rule.weights[q] * div[qi] * phi[q];
        }
        const Eigen::VectorXd crot = mass_inv.solve(brot);
        const Eigen::VectorXd cdiv = mass_inv.solve(bdiv);
        double sum = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const auto qi = static_cast<Eigen::Index>(q);
            const double a = rot[qi] - crot.dot(phi[q]);
            const double b = div[qi] - cdiv.dot(phi[q]);
            sum += rule.weights[q] * (a * a + b * b);
        }
        out[static_cast<std::size_t>(t)] = std::pow(mesh.diameter(t), 2.0 * (1.0 + problem.delta)) * 2.0 * mesh.area(t) * sum;
    }
    return out;
}

} // namespace oseenvb
