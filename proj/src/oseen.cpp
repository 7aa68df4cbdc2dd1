#include "oseenvb/oseen.hpp"

#include "oseenvb/parallel.hpp"

#include <cmath>

namespace oseenvb {

namespace {

using Triplet = Eigen::Triplet<double>;

int assembly_exactness(const FeSpace& space, const AssemblyOptions& options)
{
    return options.quadrature > 0 ? options.quadrature : 2 * space.degree() + 3;
}

// Barycentric coordinates of the point at parameter s along local edge li of a
// triangle, traversed counter-clockwise.
Vec3 edge_bary(int li, double s)
{
    Vec3 b = Vec3::Zero();
    b[(li + 1) % 3] = 1.0 - s;
    b[(li + 2) % 3] = s;
    return b;
}

void check_finite(const Vec2& v, const char* what, int cell)
{
    if (!v.allFinite())
        throw Error(std::string("non-finite ") + what + " sample in triangle " + std::to_string(cell));
}

} // namespace

VectorCoefficient VectorCoefficient::zero() { return constant(Vec2::Zero()); }

VectorCoefficient VectorCoefficient::constant(const Vec2& c)
{
    return {[c](const FieldPoint&) { return c; }, [](const FieldPoint&) { return Mat2::Zero().eval(); }};
}

VectorCoefficient VectorCoefficient::of(std::function<Vec2(const Vec2&)> value, std::function<Mat2(const Vec2&)> jacobian)
{
    return {[value = std::move(value)](const FieldPoint& p) { return value(p.x); },
            [jacobian = std::move(jacobian)](const FieldPoint& p) { return jacobian(p.x); }};
}

VectorCoefficient VectorCoefficient::of(const DiscreteField& field, double scale)
{
    if (field.space().components() != 2) throw ConfigError("vector coefficient needs a 2-component field");
    auto shared = std::make_shared<DiscreteField>(field);
    return {[shared, scale](const FieldPoint& p) -> Vec2 {
                if (p.cell < 0) throw Error("discrete coefficient evaluated without a cell");
                return scale * shared->vector_value(p.cell, p.bary);
            },
            [shared, scale](const FieldPoint& p) -> Mat2 {
                if (p.cell < 0) throw Error("discrete coefficient evaluated without a cell");
                return scale * shared->jacobian(p.cell, p.bary);
            }};
}

void OseenProblem::validate() const
{
    if (!(nu > 0.0)) throw ConfigError("viscosity nu must be positive");
    if (!(sigma > 0.0)) throw ConfigError("reaction coefficient sigma must be positive");
    if (!(delta > 0.0 && delta <= 1.0)) throw ConfigError("estimator exponent delta must lie in (0, 1]");
    if (!beta.value || !beta.jacobian || !f.value || !f.jacobian || !g || !a || !p0)
        throw ConfigError("problem data callables must all be set");
}

LinearSystem assemble(const OseenProblem& problem, const FeSpace& Zh, const FeSpace& Qh, const AssemblyOptions& options)
{
    problem.validate();
    if (&Zh.mesh() != &Qh.mesh()) throw ConfigError("vorticity and pressure spaces live on different meshes");
    if (Zh.degree() != Qh.degree() || Zh.components() != 1 || Qh.components() != 1)
        throw ConfigError("vorticity and pressure spaces must be scalar and of equal degree");

    const TriMesh& mesh = Zh.mesh();
    const int k = Zh.degree();
    const int nl = Zh.local_count();
    const int nz = Zh.dof_count();
    const int nq = Qh.dof_count();
    const double snu = std::sqrt(problem.nu);
    const double inv_snu = 1.0 / snu;
    const double sigma = problem.sigma;
    const QuadRule& rule = quadrature_rule(assembly_exactness(Zh, options));

    std::vector<BasisEval> basis;
    for (const auto& pt : rule.points) basis.push_back(eval_basis(k, pt));

    const int nt = mesh.num_triangles();
    const int threads = std::max(1, options.threads);
    std::vector<std::vector<Triplet>> chunk_triplets(static_cast<std::size_t>(threads));
    std::vector<Eigen::VectorXd> chunk_rhs(static_cast<std::size_t>(threads));

    parallel_chunks(nt, threads, [&](int begin, int end, int chunk) {
        auto& trips = chunk_triplets[static_cast<std::size_t>(chunk)];
        auto& rhs = chunk_rhs[static_cast<std::size_t>(chunk)];
        rhs = Eigen::VectorXd::Zero(nz + nq);
        trips.reserve(static_cast<std::size_t>((end - begin) * 4 * nl * nl));
        Eigen::MatrixXd kww(nl, nl), kwp(nl, nl), kpw(nl, nl), kpp(nl, nl);
        Eigen::VectorXd fw(nl), fp(nl);
        std::vector<Vec2> sw(static_cast<std::size_t>(nl)), grad(static_cast<std::size_t>(nl)),
            tw(static_cast<std::size_t>(nl));
        for (int t = begin; t < end; ++t) {
            const auto geo = CellGeometry::of(mesh, t);
            kww.setZero();
            kwp.setZero();
            kpw.setZero();
            kpp.setZero();
            fw.setZero();
            fp.setZero();
            for (std::size_t q = 0; q < rule.size(); ++q) {
                const FieldPoint fpnt{t, rule.points[q], mesh.map(t, rule.points[q])};
                const Vec2 beta = problem.beta.value(fpnt);
                const Vec2 f = problem.f.value(fpnt);
                check_finite(beta, "beta", t);
                check_finite(f, "forcing", t);
                const Vec2 beta_perp = perp(beta);
                const double w = rule.weights[q] * geo.det;
                const auto& b = basis[q];
                for (int i = 0; i < nl; ++i) {
                    const auto iu = static_cast<std::size_t>(i);
                    grad[iu] = geo.physical_gradient(b.gradients[iu]);
                    const Vec2 curl(grad[iu].y(), -grad[iu].x());
                    tw[iu] = snu * curl;
                    sw[iu] = tw[iu] + inv_snu * b.values[iu] * beta_perp;
                }
                for (int i = 0; i < nl; ++i) {
                    const auto iu = static_cast<std::size_t>(i);
                    fw[i] += w * f.dot(tw[iu]);
                    fp[i] += w * f.dot(grad[iu]);
                    for (int j = 0; j < nl; ++j) {
                        const auto ju = static_cast<std::size_t>(j);
                        kww(i, j) += w * (sigma * b.values[iu] * b.values[ju] + sw[ju].dot(tw[iu]));
                        kwp(i, j) += w * grad[ju].dot(tw[iu]);
                        kpw(i, j) += w * sw[ju].dot(grad[iu]);
                        kpp(i, j) += w * grad[ju].dot(grad[iu]);
                    }
                }
            }
            for (int i = 0; i < nl; ++i) {
                const int zi = Zh.cell_dof(t, i);
                const int qi = nz + Qh.cell_dof(t, i);
                rhs[zi] += fw[i];
                rhs[qi] += fp[i];
                for (int j = 0; j < nl; ++j) {
                    const int zj = Zh.cell_dof(t, j);
                    const int qj = nz + Qh.cell_dof(t, j);
                    trips.emplace_back(zi, zj, kww(i, j));
                    trips.emplace_back(zi, qj, kwp(i, j));
                    trips.emplace_back(qi, zj, kpw(i, j));
                    trips.emplace_back(qi, qj, kpp(i, j));
                }
            }
        }
    });

    LinearSystem sys;
    sys.n_omega = nz;
    sys.n_p = nq;
    sys.rhs = Eigen::VectorXd::Zero(nz + nq);
    std::vector<Triplet> all;
    std::size_t total = 0;
    for (const auto& c : chunk_triplets) total += c.size();
    all.reserve(total);
    for (std::size_t c = 0; c < chunk_triplets.size(); ++c) {
        all.insert(all.end(), chunk_triplets[c].begin(), chunk_triplets[c].end());
        if (chunk_rhs[c].size() > 0) sys.rhs += chunk_rhs[c];
    }

    // Boundary contributions. Integrating sigma (omega, theta) = sigma sqrt(nu) (rot u, theta)
    // by parts gives -sigma sqrt(nu) <u x n, theta>, and sigma (u, grad q) gives sigma <u.n, q>.
    const LineRule& line = line_rule(assembly_exactness(Zh, options));
    for (int e = 0; e < mesh.num_edges(); ++e) {
        if (!mesh.is_boundary(e)) continue;
        const BoundaryTag tag = mesh.boundary_tag(e);
        const int t = mesh.edge_triangles(e)[0];
        const int li = mesh.local_edge_index(t, e);
        const Vec2 n = mesh.frame(e).normal;
        const double len = mesh.edge_length(e);
        for (std::size_t q = 0; q < line.points.size(); ++q) {
            const Vec3 bary = edge_bary(li, line.points[q]);
            const Vec2 x = mesh.map(t, bary);
            const double w = line.weights[q] * len;
            const auto b = eval_basis(k, bary);
            const Vec2 data = tag == BoundaryTag::Gamma1 ? problem.g(x) : problem.a(x);
            check_finite(data, "boundary data", t);
            const double tangential = -sigma * snu * cross(data, n);
            const double normal = tag == BoundaryTag::Gamma1 ? -sigma * data.dot(n) : 0.0;
            for (int i = 0; i < nl; ++i) {
                const double phi = b.values[static_cast<std::size_t>(i)];
                sys.rhs[Zh.cell_dof(t, i)] += w * tangential * phi;
                sys.rhs[nz + Qh.cell_dof(t, i)] += w * normal * phi;
            }
        }
    }

    sys.matrix.resize(nz + nq, nz + nq);
    sys.matrix.setFromTriplets(all.begin(), all.end());
    sys.matrix.makeCompressed();
    return sys;
}

Eigen::VectorXd pressure_mean_weights(const FeSpace& Qh)
{
    const TriMesh& mesh = Qh.mesh();
    const QuadRule& rule = quadrature_rule(2 * Qh.degree());
    Eigen::VectorXd w = Eigen::VectorXd::Zero(Qh.dof_count());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const double det = 2.0 * mesh.area(t);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const auto b = eval_basis(Qh.degree(), rule.points[q]);
            for (int i = 0; i < b.count; ++i) w[Qh.cell_dof(t, i)] += rule.weights[q] * det * b.values[static_cast<std::size_t>(i)];
        }
    }
    return w;
}

LinearSystem apply_constraints(LinearSystem system, const OseenProblem& problem, const FeSpace& Qh)
{
    const TriMesh& mesh = Qh.mesh();
    const int nz = system.n_omega;
    const Eigen::Index n = system.matrix.rows();

    if (mesh.has_tag(BoundaryTag::Gamma2)) {
        std::vector<char> fixed(static_cast<std::size_t>(n), 0);
        Eigen::VectorXd value = Eigen::VectorXd::Zero(n);
        for (int d : Qh.boundary_dofs(BoundaryTag::Gamma2)) {
            const double v = problem.p0(Qh.dof_point(d));
            if (!std::isfinite(v)) throw Error("non-finite boundary pressure at DOF " + std::to_string(d));
            fixed[static_cast<std::size_t>(nz + d)] = 1;
            value[nz + d] = v;
            system.constrained_pressure.push_back(d);
            system.constrained_values.push_back(v);
        }
        std::vector<Triplet> kept;
        kept.reserve(static_cast<std::size_t>(system.matrix.nonZeros()));
        for (int c = 0; c < system.matrix.outerSize(); ++c) {
            for (SparseMatrix::InnerIterator it(system.matrix, c); it; ++it) {
                const auto r = static_cast<std::size_t>(it.row());
                if (fixed[static_cast<std::size_t>(c)]) {
                    if (!fixed[r]) system.rhs[it.row()] -= it.value() * value[c];
                } else if (!fixed[r]) {
                    kept.emplace_back(it.row(), c, it.value());
                }
            }
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!fixed[static_cast<std::size_t>(i)]) continue;
            kept.emplace_back(i, i, 1.0);
            system.rhs[i] = value[i];
        }
        system.matrix.setFromTriplets(kept.begin(), kept.end());
        system.matrix.makeCompressed();
        return system;
    }

    if (!problem.use_multiplier)
        throw ConfigError("Gamma2 is empty and the zero-mean multiplier is disabled: pressure is undetermined");

    const Eigen::VectorXd w = pressure_mean_weights(Qh);
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(system.matrix.nonZeros() + 2 * w.size()));
    for (int c = 0; c < system.matrix.outerSize(); ++c)
        for (SparseMatrix::InnerIterator it(system.matrix, c); it; ++it) trips.emplace_back(it.row(), c, it.value());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        trips.emplace_back(n, nz + i, w[i]);
        trips.emplace_back(nz + i, n, w[i]);
    }
    system.matrix.resize(n + 1, n + 1);
    system.matrix.setFromTriplets(trips.begin(), trips.end());
    system.matrix.makeCompressed();
    system.rhs.conservativeResize(n + 1);
    system.rhs[n] = 0.0;
    system.multiplier_row = n;
    return system;
}

OseenSolution solve(const LinearSystem& system, std::shared_ptr<const FeSpace> Zh, std::shared_ptr<const FeSpace> Qh)
{
    if (system.matrix.rows() != system.matrix.cols() || system.rhs.size() != system.matrix.rows())
        throw SolverError("system dimensions are inconsistent");
    if (system.n_omega != Zh->dof_count() || system.n_p != Qh->dof_count())
        throw SolverError("system does not match the given spaces");
    OseenSolution sol;
    const Eigen::VectorXd x = solve_sparse(system.matrix, system.rhs, &sol.relative_residual);
    sol.omega_h = DiscreteField(std::move(Zh), x.head(system.n_omega));
    sol.p_h = DiscreteField(std::move(Qh), x.segment(system.n_omega, system.n_p));
    if (system.multiplier_row) sol.multiplier = x[*system.multiplier_row];
    return sol;
}

OseenSolution solve_oseen(const OseenProblem& problem, std::shared_ptr<const FeSpace> Zh, std::shared_ptr<const FeSpace> Qh,
                          const AssemblyOptions& options)
{
    auto sys = apply_constraints(assemble(problem, *Zh, *Qh, options), problem, *Qh);
    return solve(sys, std::move(Zh), std::move(Qh));
}

double beta_sup(const OseenProblem& problem, const FeSpace& space, int quadrature)
{
    const TriMesh& mesh = space.mesh();
    const QuadRule& rule = quadrature_rule(quadrature > 0 ? quadrature : 2 * space.degree() + 3);
    double sup = 0.0;
    for (int t = 0; t < mesh.num_triangles(); ++t)
        for (const auto& pt : rule.points) sup = std::max(sup, problem.beta.value({t, pt, mesh.map(t, pt)}).norm());
    return sup;
}

CoercivityReport coercivity_probe(const OseenProblem& problem, const FeSpace& Zh, const FeSpace& Qh,
                                  const std::vector<Eigen::VectorXd>& pairs, const AssemblyOptions& options)
{
    const LinearSystem sys = assemble(problem, Zh, Qh, options);
    const int exactness = assembly_exactness(Zh, options);
    CoercivityReport report;
    report.beta_sup = beta_sup(problem, Zh, exactness);
    report.smallness_holds = 2.0 * report.beta_sup * report.beta_sup < problem.nu * problem.sigma;
    const double factor = problem.sigma * (1.0 - 2.0 * report.beta_sup * report.beta_sup / (problem.nu * problem.sigma));

    const TriMesh& mesh = Zh.mesh();
    const QuadRule& rule = quadrature_rule(exactness);
    const int nz = Zh.dof_count();
    const double snu = std::sqrt(problem.nu);
    for (const auto& v : pairs) {
        if (v.size() != nz + Qh.dof_count()) throw ConfigError("probe vector has the wrong length");
        double theta_sq = 0.0;
        double flux_sq = 0.0;
        for (int t = 0; t < mesh.num_triangles(); ++t) {
            const auto geo = CellGeometry::of(mesh, t);
            for (std::size_t q = 0; q < rule.size(); ++q) {
                const auto b = eval_basis(Zh.degree(), rule.points[q]);
                double th = 0.0;
                Vec2 flux = Vec2::Zero();
                for (int i = 0; i < b.count; ++i) {
                    const auto iu = static_cast<std::size_t>(i);
                    const Vec2 g = geo.physical_gradient(b.gradients[iu]);
                    const double ct = v[Zh.cell_dof(t, i)];
                    const double cq = v[nz + Qh.cell_dof(t, i)];
                    th += ct * b.values[iu];
                    flux += snu * ct * Vec2(g.y(), -g.x()) + cq * g;
                }
                const double w = rule.weights[q] * geo.det;
                theta_sq += w * th * th;
                flux_sq += w * flux.squaredNorm();
            }
        }
        CoercivityEntry entry;
        entry.form = v.dot(sys.matrix * v);
        entry.bound = factor * theta_sq + 0.5 * flux_sq;
        entry.tolerance = 1e-10 * (problem.sigma * theta_sq + flux_sq);
        entry.pass = entry.form >= entry.bound - entry.tolerance;
        report.all_pass = report.all_pass && entry.pass;
        report.entries.push_back(entry);
    }
    return report;
}

} // namespace oseenvb
