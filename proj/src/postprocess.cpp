#include "oseenvb/postprocess.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>

namespace oseenvb {

namespace {

using Triplet = Eigen::Triplet<double>;

// P_m basis on the reference triangle for the broken space, m in {0, 1}.
void broken_basis(int m, const Vec3& bary, double* values)
{
    if (m == 0) {
        values[0] = 1.0;
        return;
    }
    for (int i = 0; i < 3; ++i) values[i] = bary[i];
}

} // namespace

BrokenField::BrokenField(std::shared_ptr<const TriMesh> mesh, int degree) : mesh_(std::move(mesh)), degree_(degree)
{
    if (degree != 0 && degree != 1) throw ConfigError("broken fields support degree 0 or 1");
    coeffs_.assign(static_cast<std::size_t>(mesh_->num_triangles() * local_count()), Vec2::Zero());
}

Vec2 BrokenField::value(int t, const Vec3& bary) const
{
    double phi[3];
    broken_basis(degree_, bary, phi);
    Vec2 v = Vec2::Zero();
    for (int i = 0; i < local_count(); ++i) v += phi[i] * coeff(t, i);
    return v;
}

Vec2 BrokenField::average(int t) const
{
    if (degree_ == 0) return coeff(t, 0);
    return (coeff(t, 0) + coeff(t, 1) + coeff(t, 2)) / 3.0;
}

BrokenField recover_direct(const OseenProblem& problem, const OseenSolution& sol, int quadrature)
{
    const FeSpace& Zh = sol.omega_h.space();
    const FeSpace& Qh = sol.p_h.space();
    const TriMesh& mesh = Zh.mesh();
    const int k = Zh.degree();
    const int m = k - 1;
    BrokenField out(Zh.mesh_ptr(), m);
    const int nm = out.local_count();
    const QuadRule& rule = quadrature_rule(quadrature > 0 ? quadrature : 2 * k + 3);
    const double snu = std::sqrt(problem.nu);
    const double inv_snu = 1.0 / snu;

    std::vector<BasisEval> basis;
    for (const auto& pt : rule.points) basis.push_back(eval_basis(k, pt));

    // The reference mass matrix of P_m, scaled by det per element.
    Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(nm, nm);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        double phi[3];
        broken_basis(m, rule.points[q], phi);
        for (int i = 0; i < nm; ++i)
            for (int j = 0; j < nm; ++j) mass(i, j) += rule.weights[q] * phi[i] * phi[j];
    }
    const Eigen::LDLT<Eigen::MatrixXd> mass_inv(mass);

    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto geo = CellGeometry::of(mesh, t);
        Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(nm, 2);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const FieldPoint fp{t, rule.points[q], mesh.map(t, rule.points[q])};
            const auto& b = basis[q];
            double w = 0.0;
            Vec2 gw = Vec2::Zero();
            Vec2 gp = Vec2::Zero();
            for (int i = 0; i < b.count; ++i) {
                const auto iu = static_cast<std::size_t>(i);
                const Vec2 g = geo.physical_gradient(b.gradients[iu]);
                const double cw = sol.omega_h.coeffs()[Zh.cell_dof(t, i)];
                w += cw * b.values[iu];
                gw += cw * g;
                gp += sol.p_h.coeffs()[Qh.cell_dof(t, i)] * g;
            }
            const Vec2 integrand = (problem.f.value(fp) - inv_snu * w * perp(problem.beta.value(fp)) -
                                    snu * Vec2(gw.y(), -gw.x()) - gp) /
                                   problem.sigma;
            double phi[3];
            broken_basis(m, rule.points[q], phi);
            for (int i = 0; i < nm; ++i) rhs.row(i) += rule.weights[q] * phi[i] * integrand.transpose();
        }
        const Eigen::MatrixXd c = mass_inv.solve(rhs);
        for (int i = 0; i < nm; ++i) out.coeff(t, i) = c.row(i).transpose();
    }
    return out;
}

struct EllipticRecovery::Impl {
    std::shared_ptr<const FeSpace> space;
    double nu = 1.0;
    RecoveryBoundary mode = RecoveryBoundary::Full;
    SparseMatrix stiffness;
    std::vector<int> constrained;
    // For each constrained DOF: which datum supplies its value (0 = g, 1 = a).
    std::vector<char> source;
    std::vector<char> is_fixed;
    std::optional<SparseFactorization> lu;
};

EllipticRecovery::EllipticRecovery(std::shared_ptr<const FeSpace> Uh, double nu, RecoveryBoundary mode)
    : impl_(std::make_unique<Impl>())
{
    if (Uh->components() != 2) throw ConfigError("elliptic recovery needs a 2-component space");
    if (!(nu > 0.0)) throw ConfigError("viscosity nu must be positive");
    impl_->space = Uh;
    impl_->nu = nu;
    impl_->mode = mode;
    const FeSpace& U = *Uh;
    const TriMesh& mesh = U.mesh();
    const int k = U.degree();
    const int nl = U.local_count();
    const int ns = U.scalar_dof_count();
    const int n = U.dof_count();

    const QuadRule& rule = quadrature_rule(std::max(1, 2 * (k - 1)));
    std::vector<BasisEval> basis;
    for (const auto& pt : rule.points) basis.push_back(eval_basis(k, pt));
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(mesh.num_triangles() * 4 * nl * nl));
    Eigen::MatrixXd local(2 * nl, 2 * nl);
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto geo = CellGeometry::of(mesh, t);
        local.setZero();
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double w = nu * rule.weights[q] * geo.det;
            std::array<double, 12> rot{}, div{};
            for (int i = 0; i < nl; ++i) {
                const Vec2 g = geo.physical_gradient(basis[q].gradients[static_cast<std::size_t>(i)]);
                rot[static_cast<std::size_t>(i)] = -g.y();
                div[static_cast<std::size_t>(i)] = g.x();
                rot[static_cast<std::size_t>(nl + i)] = g.x();
                div[static_cast<std::size_t>(nl + i)] = g.y();
            }
            for (int i = 0; i < 2 * nl; ++i)
                for (int j = 0; j < 2 * nl; ++j) {
                    const auto iu = static_cast<std::size_t>(i);
                    const auto ju = static_cast<std::size_t>(j);
                    local(i, j) += w * (rot[iu] * rot[ju] + div[iu] * div[ju]);
                }
        }
        for (int i = 0; i < 2 * nl; ++i)
            for (int j = 0; j < 2 * nl; ++j)
                trips.emplace_back(U.dof(t, i % nl, i / nl), U.dof(t, j % nl, j / nl), local(i, j));
    }
    impl_->stiffness.resize(n, n);
    impl_->stiffness.setFromTriplets(trips.begin(), trips.end());

    // Boundary classification of scalar DOFs.
    std::vector<char> on_g1(static_cast<std::size_t>(ns), 0), on_g2(static_cast<std::size_t>(ns), 0);
    std::map<int, std::vector<Vec2>> normals;
    for (int e = 0; e < mesh.num_edges(); ++e) {
        if (!mesh.is_boundary(e)) continue;
        const bool g1 = mesh.boundary_tag(e) == BoundaryTag::Gamma1;
        for (int d : U.edge_dofs(e)) {
            (g1 ? on_g1 : on_g2)[static_cast<std::size_t>(d)] = 1;
            if (!g1) normals[d].push_back(mesh.frame(e).normal);
        }
    }
    impl_->is_fixed.assign(static_cast<std::size_t>(n), 0);
    std::vector<char> src(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < ns; ++s) {
        const auto su = static_cast<std::size_t>(s);
        if (on_g1[su]) {
            for (int c = 0; c < 2; ++c) impl_->is_fixed[static_cast<std::size_t>(c * ns + s)] = 1;
            continue;
        }
        if (!on_g2[su]) continue;
        if (mode == RecoveryBoundary::Full) {
            for (int c = 0; c < 2; ++c) {
                impl_->is_fixed[static_cast<std::size_t>(c * ns + s)] = 1;
                src[static_cast<std::size_t>(c * ns + s)] = 1;
            }
            continue;
        }
        bool constrain[2] = {false, false};
        for (const Vec2& nrm : normals[s]) {
            if (std::abs(nrm.x()) > 1.0 - 1e-12)
                constrain[1] = true;
            else if (std::abs(nrm.y()) > 1.0 - 1e-12)
                constrain[0] = true;
            else
                throw ConfigError("tangential recovery condition needs axis-aligned Gamma2 edges");
        }
        for (int c = 0; c < 2; ++c) {
            if (!constrain[c]) continue;
            impl_->is_fixed[static_cast<std::size_t>(c * ns + s)] = 1;
            src[static_cast<std::size_t>(c * ns + s)] = 1;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!impl_->is_fixed[static_cast<std::size_t>(i)]) continue;
        impl_->constrained.push_back(i);
        impl_->source.push_back(src[static_cast<std::size_t>(i)]);
    }
    if (impl_->constrained.empty()) throw SolverError("elliptic recovery has no Dirichlet DOFs: the system is singular");

    std::vector<Triplet> kept;
    kept.reserve(static_cast<std::size_t>(impl_->stiffness.nonZeros()));
    for (int c = 0; c < impl_->stiffness.outerSize(); ++c)
        for (SparseMatrix::InnerIterator it(impl_->stiffness, c); it; ++it)
            if (!impl_->is_fixed[static_cast<std::size_t>(it.row())] && !impl_->is_fixed[static_cast<std::size_t>(c)])
                kept.emplace_back(it.row(), c, it.value());
    for (int i : impl_->constrained) kept.emplace_back(i, i, 1.0);
    SparseMatrix constrained_matrix(n, n);
    constrained_matrix.setFromTriplets(kept.begin(), kept.end());
    impl_->lu.emplace(constrained_matrix);
}

EllipticRecovery::~EllipticRecovery() = default;
EllipticRecovery::EllipticRecovery(EllipticRecovery&&) noexcept = default;
EllipticRecovery& EllipticRecovery::operator=(EllipticRecovery&&) noexcept = default;

const std::shared_ptr<const FeSpace>& EllipticRecovery::space() const { return impl_->space; }
const std::vector<int>& EllipticRecovery::constrained_dofs() const { return impl_->constrained; }

DiscreteField EllipticRecovery::solve(const DiscreteField& omega_h, const std::function<Vec2(const Vec2&)>& g,
                                      const std::function<Vec2(const Vec2&)>& a, double* relative_residual) const
{
    const FeSpace& U = *impl_->space;
    const FeSpace& Z = omega_h.space();
    if (&U.mesh() != &Z.mesh()) throw ConfigError("vorticity and recovery spaces live on different meshes");
    const TriMesh& mesh = U.mesh();
    const int k = U.degree();
    const int nl = U.local_count();
    const int nlz = Z.local_count();
    const int ns = U.scalar_dof_count();
    const int n = U.dof_count();
    const double snu = std::sqrt(impl_->nu);

    const QuadRule& rule = quadrature_rule(k + Z.degree());
    std::vector<BasisEval> bu, bz;
    for (const auto& pt : rule.points) {
        bu.push_back(eval_basis(k, pt));
        bz.push_back(eval_basis(Z.degree(), pt));
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto geo = CellGeometry::of(mesh, t);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            double w = 0.0;
            for (int j = 0; j < nlz; ++j) w += omega_h.coeffs()[Z.cell_dof(t, j)] * bz[q].values[static_cast<std::size_t>(j)];
            const double scale = snu * w * rule.weights[q] * geo.det;
            for (int i = 0; i < nl; ++i) {
                const Vec2 gr = geo.physical_gradient(bu[q].gradients[static_cast<std::size_t>(i)]);
                rhs[U.dof(t, i, 0)] += scale * -gr.y();
                rhs[U.dof(t, i, 1)] += scale * gr.x();
            }
        }
    }

    Eigen::VectorXd lift = Eigen::VectorXd::Zero(n);
    for (std::size_t c = 0; c < impl_->constrained.size(); ++c) {
        const int d = impl_->constrained[c];
        const Vec2& x = U.dof_point(d % ns);
        const Vec2 v = impl_->source[c] ? a(x) : g(x);
        if (!v.allFinite()) throw Error("non-finite boundary velocity at DOF " + std::to_string(d));
        lift[d] = v[d / ns];
    }
    rhs -= impl_->stiffness * lift;
    for (int d : impl_->constrained) rhs[d] = lift[d];
    DiscreteField out(impl_->space, impl_->lu->solve(rhs, relative_residual));
    return out;
}

DiscreteField recover_elliptic(const OseenProblem& problem, const OseenSolution& sol, std::shared_ptr<const FeSpace> Uh,
                               RecoveryBoundary mode)
{
    EllipticRecovery rec(std::move(Uh), problem.nu, mode);
    return rec.solve(sol.omega_h, problem.g, problem.a);
}

} // namespace oseenvb
