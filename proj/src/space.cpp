#include "oseenvb/space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace oseenvb {

namespace {

const std::array<Vec2, 3> kLambdaGrad = {Vec2(-1.0, -1.0), Vec2(1.0, 0.0), Vec2(0.0, 1.0)};

void check_degree(int k)
{
    if (k != 1 && k != 2) throw ConfigError("unsupported polynomial degree " + std::to_string(k) + " (expected 1 or 2)");
}

} // namespace

BasisEval eval_basis(int k, const Vec3& bary)
{
    check_degree(k);
    BasisEval out;
    if (k == 1) {
        out.count = 3;
        for (int i = 0; i < 3; ++i) {
            out.values[static_cast<std::size_t>(i)] = bary[i];
            out.gradients[static_cast<std::size_t>(i)] = kLambdaGrad[static_cast<std::size_t>(i)];
        }
        return out;
    }
    out.count = 6;
    for (int i = 0; i < 3; ++i) {
        const double l = bary[i];
        out.values[static_cast<std::size_t>(i)] = l * (2.0 * l - 1.0);
        out.gradients[static_cast<std::size_t>(i)] = (4.0 * l - 1.0) * kLambdaGrad[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < 3; ++i) {
        const int a = (i + 1) % 3;
        const int b = (i + 2) % 3;
        out.values[static_cast<std::size_t>(3 + i)] = 4.0 * bary[a] * bary[b];
        out.gradients[static_cast<std::size_t>(3 + i)] =
            4.0 * (bary[a] * kLambdaGrad[static_cast<std::size_t>(b)] + bary[b] * kLambdaGrad[static_cast<std::size_t>(a)]);
    }
    return out;
}

std::array<Mat2, 6> basis_hessians(int k)
{
    check_degree(k);
    std::array<Mat2, 6> h;
    for (auto& m : h) m.setZero();
    if (k == 1) return h;
    for (int i = 0; i < 3; ++i) {
        const Vec2& g = kLambdaGrad[static_cast<std::size_t>(i)];
        h[static_cast<std::size_t>(i)] = 4.0 * g * g.transpose();
        const Vec2& ga = kLambdaGrad[static_cast<std::size_t>((i + 1) % 3)];
        const Vec2& gb = kLambdaGrad[static_cast<std::size_t>((i + 2) % 3)];
        h[static_cast<std::size_t>(3 + i)] = 4.0 * (ga * gb.transpose() + gb * ga.transpose());
    }
    return h;
}

CellGeometry CellGeometry::of(const TriMesh& mesh, int t)
{
    const auto& tri = mesh.triangle(t);
    const Vec2& v0 = mesh.vertex(tri[0]);
    CellGeometry g;
    g.jacobian.col(0) = mesh.vertex(tri[1]) - v0;
    g.jacobian.col(1) = mesh.vertex(tri[2]) - v0;
    g.det = g.jacobian.determinant();
    g.inverse_transpose = g.jacobian.inverse().transpose();
    return g;
}

FeSpace::FeSpace(std::shared_ptr<const TriMesh> mesh, int degree, int components)
    : mesh_(std::move(mesh)), degree_(degree), components_(components)
{
    check_degree(degree);
    if (components != 1 && components != 2) throw ConfigError("a space has 1 or 2 components");
    const TriMesh& m = *mesh_;
    const int nv = m.num_vertices();
    scalar_dofs_ = nv + (degree_ == 2 ? m.num_edges() : 0);
    points_ = m.vertices();
    if (degree_ == 2) {
        for (int e = 0; e < m.num_edges(); ++e) {
            const auto& ed = m.edge(e);
            points_.push_back(0.5 * (m.vertex(ed[0]) + m.vertex(ed[1])));
        }
    }
    const int nl = local_count();
    cell_dofs_.resize(static_cast<std::size_t>(m.num_triangles() * nl));
    for (int t = 0; t < m.num_triangles(); ++t) {
        const auto& tri = m.triangle(t);
        for (int i = 0; i < 3; ++i) cell_dofs_[static_cast<std::size_t>(t * nl + i)] = tri[static_cast<std::size_t>(i)];
        if (degree_ == 2) {
            const auto& te = m.triangle_edges(t);
            for (int i = 0; i < 3; ++i) cell_dofs_[static_cast<std::size_t>(t * nl + 3 + i)] = nv + te[static_cast<std::size_t>(i)];
        }
    }
}

std::vector<int> FeSpace::cell_dofs(int t) const
{
    const auto first = cell_dofs_.begin() + t * local_count();
    return {first, first + local_count()};
}

std::vector<int> FeSpace::edge_dofs(int e) const
{
    const auto& ed = mesh_->edge(e);
    std::vector<int> out{ed[0], ed[1]};
    if (degree_ == 2) out.push_back(mesh_->num_vertices() + e);
    return out;
}

std::vector<int> FeSpace::boundary_dofs(BoundaryTag tag) const
{
    std::set<int> dofs;
    for (int e = 0; e < mesh_->num_edges(); ++e) {
        if (!mesh_->is_boundary(e) || mesh_->boundary_tag(e) != tag) continue;
        for (int d : edge_dofs(e)) dofs.insert(d);
    }
    return {dofs.begin(), dofs.end()};
}

std::vector<int> FeSpace::boundary_dofs() const
{
    std::set<int> dofs;
    for (int e = 0; e < mesh_->num_edges(); ++e) {
        if (!mesh_->is_boundary(e)) continue;
        for (int d : edge_dofs(e)) dofs.insert(d);
    }
    return {dofs.begin(), dofs.end()};
}

DiscreteField::DiscreteField(std::shared_ptr<const FeSpace> space, Eigen::VectorXd coeffs)
    : space_(std::move(space)), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != space_->dof_count()) throw ConfigError("coefficient vector length does not match the space");
    if (!coeffs_.allFinite()) throw Error("discrete field has non-finite coefficients");
}

DiscreteField::DiscreteField(std::shared_ptr<const FeSpace> space)
    : space_(std::move(space)), coeffs_(Eigen::VectorXd::Zero(space_->dof_count()))
{
}

double DiscreteField::value(int t, const Vec3& bary, int component) const
{
    const auto b = eval_basis(space_->degree(), bary);
    double v = 0.0;
    for (int i = 0; i < b.count; ++i) v += coeffs_[space_->dof(t, i, component)] * b.values[static_cast<std::size_t>(i)];
    return v;
}

Vec2 DiscreteField::gradient(int t, const Vec3& bary, int component) const
{
    const auto b = eval_basis(space_->degree(), bary);
    Vec2 g = Vec2::Zero();
    for (int i = 0; i < b.count; ++i) g += coeffs_[space_->dof(t, i, component)] * b.gradients[static_cast<std::size_t>(i)];
    return CellGeometry::of(space_->mesh(), t).physical_gradient(g);
}

Vec2 DiscreteField::vector_value(int t, const Vec3& bary) const
{
    return {value(t, bary, 0), value(t, bary, 1)};
}

Mat2 DiscreteField::jacobian(int t, const Vec3& bary) const
{
    Mat2 j;
    j.row(0) = gradient(t, bary, 0).transpose();
    j.row(1) = gradient(t, bary, 1).transpose();
    return j;
}

DiscreteField interpolate(const std::function<double(const Vec2&)>& fun, std::shared_ptr<const FeSpace> space)
{
    Eigen::VectorXd c(space->dof_count());
    for (int comp = 0; comp < space->components(); ++comp) {
        for (int s = 0; s < space->scalar_dof_count(); ++s) {
            const double v = fun(space->dof_point(s));
            if (!std::isfinite(v)) throw Error("non-finite sample at DOF " + std::to_string(s));
            c[comp * space->scalar_dof_count() + s] = v;
        }
    }
    return DiscreteField(std::move(space), std::move(c));
}

DiscreteField interpolate_vector(const std::function<Vec2(const Vec2&)>& fun, std::shared_ptr<const FeSpace> space)
{
    if (space->components() != 2) throw ConfigError("vector interpolation needs a 2-component space");
    const int ns = space->scalar_dof_count();
    Eigen::VectorXd c(space->dof_count());
    for (int s = 0; s < ns; ++s) {
        const Vec2 v = fun(space->dof_point(s));
        if (!v.allFinite()) throw Error("non-finite sample at DOF " + std::to_string(s));
        c[s] = v.x();
        c[ns + s] = v.y();
    }
    return DiscreteField(std::move(space), std::move(c));
}

} // namespace oseenvb
