#include "oseenvb/verify.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <map>
#include <random>

namespace oseenvb {

namespace {

BoundaryTagger left_edge_gamma2()
{
    return [](const Vec2&, const Vec2& n) { return n.x() < -0.5 ? BoundaryTag::Gamma2 : BoundaryTag::Gamma1; };
}

// Barycentric coordinates of x in triangle t.
Vec3 barycentric(const TriMesh& mesh, int t, const Vec2& x)
{
    const auto& tri = mesh.triangle(t);
    const Vec2& a = mesh.vertex(tri[0]);
    Mat2 J;
    J.col(0) = mesh.vertex(tri[1]) - a;
    J.col(1) = mesh.vertex(tri[2]) - a;
    const Vec2 xi = J.inverse() * (x - a);
    return {1.0 - xi.x() - xi.y(), xi.x(), xi.y()};
}

int locate(const TriMesh& mesh, const Vec2& x, double tol = 1e-12)
{
    for (int t = 0; t < mesh.num_triangles(); ++t)
        if (barycentric(mesh, t, x).minCoeff() >= -tol) return t;
    return -1;
}

} // namespace

ExactPoint ManufacturedCase::eval(const Vec2& x) const
{
    ExactPoint o;
    kernel(x.x(), x.y(), nu, sigma, p0, o);
    return o;
}

Vec2 ManufacturedCase::u(const Vec2& x) const
{
    const auto e = eval(x);
    return {e.u[0], e.u[1]};
}

double ManufacturedCase::omega(const Vec2& x) const { return eval(x).omega; }
double ManufacturedCase::p(const Vec2& x) const { return eval(x).p; }

OseenProblem ManufacturedCase::problem(double d) const
{
    OseenProblem pr;
    pr.nu = nu;
    pr.sigma = sigma;
    pr.delta = d;
    const ManufacturedCase self = *this;
    pr.beta = VectorCoefficient::of(
        [self](const Vec2& x) {
            const auto e = self.eval(x);
            return Vec2(e.beta[0], e.beta[1]);
        },
        [self](const Vec2& x) {
            const auto e = self.eval(x);
            Mat2 m;
            m << e.dbeta[0][0], e.dbeta[0][1], e.dbeta[1][0], e.dbeta[1][1];
            return m;
        });
    pr.f = VectorCoefficient::of(
        [self](const Vec2& x) {
            const auto e = self.eval(x);
            return Vec2(e.f[0], e.f[1]);
        },
        [self](const Vec2& x) {
            const auto e = self.eval(x);
            Mat2 m;
            m << e.df[0][0], e.df[0][1], e.df[1][0], e.df[1][1];
            return m;
        });
    pr.g = [self](const Vec2& x) { return self.u(x); };
    pr.a = pr.g;
    pr.p0 = [self](const Vec2& x) { return self.p(x); };
    pr.use_multiplier = true;
    return pr;
}

std::vector<std::string> case_names() { return {"ex1", "ex2a", "ex2b", "ex2c"}; }

ManufacturedCase manufactured_case(const std::string& name)
{
    ManufacturedCase c;
    c.name = name;
    if (name == "ex1") {
        c.nu = 0.1;
        c.sigma = 100.0;
        c.delta = 1.0;
        c.initial_n = 4;
        c.kernel = detail::eval_ex1;
        c.tagger = left_edge_gamma2();
        c.build_mesh = [tagger = c.tagger](int n) { return generate_rect(Vec2(-1, -1), Vec2(1, 1), n, tagger); };
    } else if (name == "ex2a") {
        c.nu = 1e-3;
        c.sigma = 10.0;
        c.delta = 1.0;
        c.initial_n = 2;
        c.kernel = detail::eval_ex2a;
        c.tagger = tag_all(BoundaryTag::Gamma1);
        c.build_mesh = [tagger = c.tagger](int n) { return generate_rect(Vec2(0, 0), Vec2(1, 1), n, tagger); };
    } else if (name == "ex2b") {
        c.nu = 0.1;
        c.sigma = 100.0;
        c.delta = 2.0 / 3.0;
        c.initial_n = 2;
        c.kernel = detail::eval_ex2b;
        c.tagger = tag_all(BoundaryTag::Gamma1);
        c.build_mesh = [tagger = c.tagger](int n) { return generate_lshape(n, tagger); };
    } else if (name == "ex2c") {
        c.nu = 1e-4;
        c.sigma = 10.0;
        c.delta = 1.0;
        c.initial_n = 4;
        // Mean of exp(-(x - 1/2)^2) over the unit square.
        c.p0 = std::sqrt(M_PI) * std::erf(0.5);
        c.kernel = detail::eval_ex2c;
        c.tagger = tag_all(BoundaryTag::Gamma1);
        c.build_mesh = [tagger = c.tagger](int n) { return generate_rect(Vec2(0, 0), Vec2(1, 1), n, tagger); };
    } else {
        std::string valid;
        for (const auto& n : case_names()) valid += (valid.empty() ? "" : ", ") + n;
        throw ConfigError("unknown case '" + name + "' (valid: " + valid + ")");
    }
    return c;
}

ConsistencyReport case_consistency(const ManufacturedCase& c, int samples, unsigned seed)
{
    const TriMesh mesh = c.initial_mesh();
    Vec2 lo = mesh.vertex(0), hi = mesh.vertex(0);
    for (const auto& v : mesh.vertices()) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ux(lo.x(), hi.x()), uy(lo.y(), hi.y());
    ConsistencyReport r;
    const double snu = std::sqrt(c.nu);
    int found = 0;
    while (found < samples) {
        const Vec2 x(ux(rng), uy(rng));
        if (locate(mesh, x, -1e-9) < 0) continue;
        ++found;
        const auto e = c.eval(x);
        const Vec2 curl_w(e.omega_y, -e.omega_x);
        const Vec2 wxb = e.omega * Vec2(-e.beta[1], e.beta[0]);
        const Vec2 lhs = c.sigma * Vec2(e.u[0], e.u[1]) + snu * curl_w + wxb / snu + Vec2(e.p_x, e.p_y);
        r.momentum = std::max(r.momentum, (Vec2(e.f[0], e.f[1]) - lhs).cwiseAbs().maxCoeff());
        r.vorticity = std::max(r.vorticity, std::abs(e.omega - snu * (e.du[1][0] - e.du[0][1])));
        r.divergence = std::max(r.divergence, std::abs(e.du[0][0] + e.du[1][1]));

        // First derivatives against central differences, relative to the field scale.
        const double step = 1e-6;
        for (int dir = 0; dir < 2; ++dir) {
            Vec2 dx = Vec2::Zero();
            dx[dir] = step;
            const auto ep = c.eval(x + dx);
            const auto em = c.eval(x - dx);
            auto check = [&](double plus, double minus, double exact) {
                const double fd = (plus - minus) / (2.0 * step);
                r.derivative_fd = std::max(r.derivative_fd, std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
            };
            check(ep.omega, em.omega, dir == 0 ? e.omega_x : e.omega_y);
            check(ep.p, em.p, dir == 0 ? e.p_x : e.p_y);
            for (int i = 0; i < 2; ++i) {
                check(ep.u[i], em.u[i], e.du[i][dir]);
                check(ep.beta[i], em.beta[i], e.dbeta[i][dir]);
                check(ep.f[i], em.f[i], e.df[i][dir]);
            }
        }
    }
    return r;
}

double exact_pressure_mean(const ManufacturedCase& c, const TriMesh& mesh)
{
    const QuadRule& rule = quadrature_rule(8);
    double integral = 0.0;
    for (int t = 0; t < mesh.num_triangles(); ++t)
        for (std::size_t q = 0; q < rule.size(); ++q)
            integral += rule.weights[q] * 2.0 * mesh.area(t) * c.p(mesh.map(t, rule.points[q]));
    return integral / mesh.total_area();
}

ErrorRecord error_norms(const ManufacturedCase& c, const OseenSolution& sol, const BrokenField* u_direct,
                        const DiscreteField* u_elliptic, double delta)
{
    const FeSpace& Zh = sol.omega_h.space();
    const FeSpace& Qh = sol.p_h.space();
    const TriMesh& mesh = Zh.mesh();
    const int k = Zh.degree();
    const QuadRule& rule = quadrature_rule(8);
    const double snu = std::sqrt(c.nu);
    const double shift = sol.multiplier ? exact_pressure_mean(c, mesh) : 0.0;

    std::vector<BasisEval> basis;
    for (const auto& pt : rule.points) basis.push_back(eval_basis(k, pt));
    std::vector<BasisEval> basis_u;
    if (u_elliptic)
        for (const auto& pt : rule.points) basis_u.push_back(eval_basis(u_elliptic->space().degree(), pt));

    double sw = 0, sp = 0, sud = 0, sue = 0, sv = 0, svw = 0, sdiv = 0;
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto geo = CellGeometry::of(mesh, t);
        const double hw = std::pow(mesh.diameter(t), 2.0 * delta);
        double local_v = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const Vec3& bary = rule.points[q];
            const Vec2 x = mesh.map(t, bary);
            const auto ex = c.eval(x);
            const double w = rule.weights[q] * geo.det;
            const auto& b = basis[q];
            double wh = 0, ph = 0;
            Vec2 gw = Vec2::Zero(), gp = Vec2::Zero();
            for (int i = 0; i < b.count; ++i) {
                const auto iu = static_cast<std::size_t>(i);
                const Vec2 g = geo.physical_gradient(b.gradients[iu]);
                const double cw = sol.omega_h.coeffs()[Zh.cell_dof(t, i)];
                const double cp = sol.p_h.coeffs()[Qh.cell_dof(t, i)];
                wh += cw * b.values[iu];
                ph += cp * b.values[iu];
                gw += cw * g;
                gp += cp * g;
            }
            const double ew = ex.omega - wh;
            const double ep = ex.p - shift - ph;
            const Vec2 egw = Vec2(ex.omega_x, ex.omega_y) - gw;
            const Vec2 egp = Vec2(ex.p_x, ex.p_y) - gp;
            const Vec2 flux = snu * Vec2(egw.y(), -egw.x()) + egp;
            sw += w * ew * ew;
            sp += w * ep * ep;
            local_v += w * (c.sigma * ew * ew + flux.squaredNorm() + ep * ep);
            const Vec2 uex(ex.u[0], ex.u[1]);
            if (u_direct) sud += w * (uex - u_direct->value(t, bary)).squaredNorm();
            if (u_elliptic) {
                const FeSpace& U = u_elliptic->space();
                const auto& bu = basis_u[q];
                Vec2 uh = Vec2::Zero();
                double div = 0.0;
                for (int i = 0; i < bu.count; ++i) {
                    const auto iu = static_cast<std::size_t>(i);
                    const Vec2 g = geo.physical_gradient(bu.gradients[iu]);
                    const double c0 = u_elliptic->coeffs()[U.dof(t, i, 0)];
                    const double c1 = u_elliptic->coeffs()[U.dof(t, i, 1)];
                    uh += bu.values[iu] * Vec2(c0, c1);
                    div += c0 * g.x() + c1 * g.y();
                }
                sue += w * (uex - uh).squaredNorm();
                sdiv += w * div * div;
            }
        }
        sv += local_v;
        svw += hw * local_v;
    }
    ErrorRecord r;
    r.omega = std::sqrt(sw);
    r.p = std::sqrt(sp);
    r.u_direct = std::sqrt(sud);
    r.u_elliptic = std::sqrt(sue);
    r.V = std::sqrt(sv);
    r.V_weighted = std::sqrt(svw);
    r.L2_weighted = std::sqrt(c.sigma * sw + sp);
    r.div_elliptic = std::sqrt(sdiv);
    return r;
}

double convergence_rate(double e1, double e2, double h1, double h2)
{
    if (!(e1 > 0.0 && e2 > 0.0 && h1 > 0.0 && h2 > 0.0)) throw ConfigError("convergence rate needs positive errors and sizes");
    if (h1 == h2) throw ConfigError("convergence rate needs distinct mesh sizes");
    return std::log(e1 / e2) / std::log(h1 / h2);
}

namespace {

// Tensor Gauss rule on the reference triangle through the collapsed map
// (s, t) -> (s, (1 - s) t), built from Boost's Gauss-Legendre nodes.
struct OracleRule {
    std::vector<Vec2> xi;
    std::vector<double> w;
};

OracleRule oracle_triangle_rule()
{
    using G = boost::math::quadrature::gauss<double, 7>;
    std::vector<double> x, w;
    const auto& ab = G::abscissa();
    const auto& wt = G::weights();
    for (std::size_t i = 0; i < ab.size(); ++i) {
        if (ab[i] == 0.0) {
            x.push_back(0.5);
            w.push_back(0.5 * wt[i]);
            continue;
        }
        x.push_back(0.5 * (1.0 - ab[i]));
        w.push_back(0.5 * wt[i]);
        x.push_back(0.5 * (1.0 + ab[i]));
        w.push_back(0.5 * wt[i]);
    }
    OracleRule r;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
            r.xi.emplace_back(x[i], (1.0 - x[i]) * x[j]);
            r.w.push_back(w[i] * w[j] * (1.0 - x[i]));
        }
    return r;
}

std::vector<std::pair<double, double>> oracle_line_rule()
{
    using G = boost::math::quadrature::gauss<double, 7>;
    std::vector<std::pair<double, double>> r;
    const auto& ab = G::abscissa();
    const auto& wt = G::weights();
    for (std::size_t i = 0; i < ab.size(); ++i) {
        r.emplace_back(0.5 * (1.0 + ab[i]), 0.5 * wt[i]);
        if (ab[i] != 0.0) r.emplace_back(0.5 * (1.0 - ab[i]), 0.5 * wt[i]);
    }
    return r;
}

// Global Lagrange basis built per cell from monomials and nodal points.
class OracleBasis {
public:
    OracleBasis(const TriMesh& mesh, const FeSpace& space) : mesh_(mesh), k_(space.degree())
    {
        const int nm = k_ == 1 ? 3 : 6;
        for (int t = 0; t < mesh.num_triangles(); ++t) {
            const auto& tri = mesh.triangle(t);
            std::vector<Vec2> nodes;
            for (int v : tri) nodes.push_back(mesh.vertex(v));
            if (k_ == 2)
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) nodes.push_back(0.5 * (mesh.vertex(tri[i]) + mesh.vertex(tri[j])));
            Eigen::MatrixXd V(nm, nm);
            std::vector<int> global;
            for (int r = 0; r < nm; ++r) {
                V.row(r) = monomials(nodes[static_cast<std::size_t>(r)]).transpose();
                global.push_back(find_dof(space, nodes[static_cast<std::size_t>(r)]));
            }
            coeffs_.push_back(V.inverse());
            dofs_.push_back(global);
        }
    }

    struct Eval {
        std::vector<int> dofs;
        std::vector<double> values;
        std::vector<Vec2> grads;
    };

    Eval at(const Vec2& x) const
    {
        const int t = locate(mesh_, x);
        if (t < 0) throw Error("oracle point outside the mesh");
        const Eigen::MatrixXd& C = coeffs_[static_cast<std::size_t>(t)];
        const Eigen::VectorXd m = monomials(x);
        Eigen::VectorXd mx, my;
        monomial_gradients(x, mx, my);
        Eval e;
        e.dofs = dofs_[static_cast<std::size_t>(t)];
        for (Eigen::Index i = 0; i < C.cols(); ++i) {
            e.values.push_back(C.col(i).dot(m));
            e.grads.emplace_back(C.col(i).dot(mx), C.col(i).dot(my));
        }
        return e;
    }

private:
    Eigen::VectorXd monomials(const Vec2& p) const
    {
        const double x = p.x(), y = p.y();
        if (k_ == 1) return Eigen::Vector3d(1.0, x, y);
        Eigen::VectorXd m(6);
        m << 1.0, x, y, x * x, x * y, y * y;
        return m;
    }

    void monomial_gradients(const Vec2& p, Eigen::VectorXd& mx, Eigen::VectorXd& my) const
    {
        const double x = p.x(), y = p.y();
        if (k_ == 1) {
            mx = Eigen::Vector3d(0.0, 1.0, 0.0);
            my = Eigen::Vector3d(0.0, 0.0, 1.0);
            return;
        }
        mx.resize(6);
        my.resize(6);
        mx << 0.0, 1.0, 0.0, 2.0 * x, y, 0.0;
        my << 0.0, 0.0, 1.0, 0.0, x, 2.0 * y;
    }

    static int find_dof(const FeSpace& space, const Vec2& x)
    {
        for (int d = 0; d < space.scalar_dof_count(); ++d)
            if ((space.dof_point(d) - x).norm() < 1e-12) return d;
        throw Error("oracle node without a matching DOF");
    }

    const TriMesh& mesh_;
    int k_;
    std::vector<Eigen::MatrixXd> coeffs_;
    std::vector<std::vector<int>> dofs_;
};

} // namespace

OracleSystem oracle_assemble(const OseenProblem& problem, const FeSpace& Zh, const FeSpace& Qh)
{
    const TriMesh& mesh = Zh.mesh();
    if (mesh.num_triangles() > 50) throw ConfigError("oracle assembly is limited to 50 triangles");
    const int nz = Zh.scalar_dof_count();
    const int nq = Qh.scalar_dof_count();
    const OracleBasis bz(mesh, Zh);
    const OracleBasis bq(mesh, Qh);
    const double snu = std::sqrt(problem.nu);
    OracleSystem out;
    out.matrix = Eigen::MatrixXd::Zero(nz + nq, nz + nq);
    out.rhs = Eigen::VectorXd::Zero(nz + nq);

    const OracleRule rule = oracle_triangle_rule();
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangle(t);
        const Vec2 a = mesh.vertex(tri[0]);
        const Vec2 e1 = mesh.vertex(tri[1]) - a;
        const Vec2 e2 = mesh.vertex(tri[2]) - a;
        const double det = std::abs(e1.x() * e2.y() - e1.y() * e2.x());
        for (std::size_t q = 0; q < rule.w.size(); ++q) {
            const Vec2 x = a + rule.xi[q].x() * e1 + rule.xi[q].y() * e2;
            const double w = rule.w[q] * det;
            const FieldPoint fp{-1, Vec3::Zero(), x};
            const Vec2 beta = problem.beta.value(fp);
            const Vec2 f = problem.f.value(fp);
            const auto ez = bz.at(x);
            const auto eq = bq.at(x);
            // Test functions (rows): theta_i -> (value, sqrt(nu) curl), q_i -> grad.
            std::vector<std::pair<int, Vec2>> test;
            std::vector<double> test_value;
            std::vector<std::pair<int, Vec2>> trial;
            for (std::size_t i = 0; i < ez.dofs.size(); ++i) {
                const Vec2 curl(ez.grads[i].y(), -ez.grads[i].x());
                test.emplace_back(ez.dofs[i], snu * curl);
                test_value.push_back(ez.values[i]);
                trial.emplace_back(ez.dofs[i], snu * curl + ez.values[i] / snu * Vec2(-beta.y(), beta.x()));
            }
            for (std::size_t i = 0; i < eq.dofs.size(); ++i) {
                test.emplace_back(nz + eq.dofs[i], eq.grads[i]);
                test_value.push_back(0.0);
                trial.emplace_back(nz + eq.dofs[i], eq.grads[i]);
            }
            for (std::size_t i = 0; i < test.size(); ++i) {
                out.rhs[test[i].first] += w * f.dot(test[i].second);
                for (std::size_t j = 0; j < trial.size(); ++j) {
                    double v = trial[j].second.dot(test[i].second);
                    if (test[i].first < nz && trial[j].first < nz) {
                        const std::size_t jv = j;
                        v += problem.sigma * test_value[i] * ez.values[jv];
                    }
                    out.matrix(test[i].first, trial[j].first) += w * v;
                }
            }
        }
    }

    const auto line = oracle_line_rule();
    for (const auto& be : mesh.boundary_edges()) {
        const Vec2 p0 = mesh.vertex(be.v0);
        const Vec2 p1 = mesh.vertex(be.v1);
        const double len = (p1 - p0).norm();
        const Vec2 tangent = (p1 - p0) / len;
        // Boundary edges run counter-clockwise, so the outward normal is the tangent turned clockwise.
        const Vec2 n(tangent.y(), -tangent.x());
        for (const auto& [s, ws] : line) {
            const Vec2 x = p0 + s * (p1 - p0);
            const double w = ws * len;
            const Vec2 data = be.tag == BoundaryTag::Gamma1 ? problem.g(x) : problem.a(x);
            const double cr = data.x() * n.y() - data.y() * n.x();
            const auto ez = bz.at(x);
            const auto eq = bq.at(x);
            for (std::size_t i = 0; i < ez.dofs.size(); ++i)
                out.rhs[ez.dofs[i]] -= w * problem.sigma * snu * cr * ez.values[i];
            if (be.tag == BoundaryTag::Gamma1)
                for (std::size_t i = 0; i < eq.dofs.size(); ++i)
                    out.rhs[nz + eq.dofs[i]] -= w * problem.sigma * data.dot(n) * eq.values[i];
        }
    }
    return out;
}

} // namespace oseenvb
