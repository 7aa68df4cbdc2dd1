#pragma once

#include "oseenvb/mesh.hpp"
#include "oseenvb/quadrature.hpp"

#include <Eigen/Core>

#include <functional>
#include <memory>
#include <vector>

namespace oseenvb {

/// Values and reference gradients of the P_k Lagrange basis at one point.
/// Local ordering: vertex functions 0..2, then (k = 2) the edge functions
/// for the edges opposite vertices 0, 1, 2. Reference gradients are taken
/// with respect to (x, y) in the reference triangle, lambda = (1-x-y, x, y).
struct BasisEval {
    int count = 0;
    std::array<double, 6> values{};
    std::array<Vec2, 6> gradients{};
};

BasisEval eval_basis(int k, const Vec3& bary);

/// Constant reference Hessians of the P_k basis (zero for k = 1).
std::array<Mat2, 6> basis_hessians(int k);

inline int local_dof_count(int k) { return (k + 1) * (k + 2) / 2; }

/// Affine map data of one triangle: x = x0 + J xi.
struct CellGeometry {
    Mat2 jacobian;
    Mat2 inverse_transpose;
    double det = 0.0;

    static CellGeometry of(const TriMesh& mesh, int t);

    Vec2 physical_gradient(const Vec2& ref_grad) const { return inverse_transpose * ref_grad; }
    Mat2 physical_hessian(const Mat2& ref_hess) const { return inverse_transpose * ref_hess * inverse_transpose.transpose(); }
};

/// Continuous Lagrange space of degree k with 1 or 2 components.
///
/// Scalar DOFs: vertex v -> v, then (k = 2) edge e -> nv + e. A vector
/// space stores component c of scalar DOF s at c * scalar_dof_count() + s.
class FeSpace {
public:
    FeSpace(std::shared_ptr<const TriMesh> mesh, int degree, int components = 1);

    const TriMesh& mesh() const { return *mesh_; }
    const std::shared_ptr<const TriMesh>& mesh_ptr() const { return mesh_; }
    int degree() const { return degree_; }
    int components() const { return components_; }
    int local_count() const { return local_dof_count(degree_); }
    int scalar_dof_count() const { return scalar_dofs_; }
    int dof_count() const { return components_ * scalar_dofs_; }

    /// Scalar DOF of local basis function i on triangle t.
    int cell_dof(int t, int i) const { return cell_dofs_[static_cast<std::size_t>(t * local_count() + i)]; }
    std::vector<int> cell_dofs(int t) const;
    int dof(int t, int i, int component) const { return component * scalar_dofs_ + cell_dof(t, i); }

    const Vec2& dof_point(int scalar_dof) const { return points_[static_cast<std::size_t>(scalar_dof)]; }
    const std::vector<Vec2>& dof_points() const { return points_; }

    /// Sorted scalar DOFs on the closure of edges with the given tag.
    std::vector<int> boundary_dofs(BoundaryTag tag) const;
    /// Sorted scalar DOFs on the whole boundary.
    std::vector<int> boundary_dofs() const;
    /// Scalar DOFs lying on edge e (endpoints first, then the midpoint for k = 2).
    std::vector<int> edge_dofs(int e) const;

private:
    std::shared_ptr<const TriMesh> mesh_;
    int degree_;
    int components_;
    int scalar_dofs_ = 0;
    std::vector<int> cell_dofs_;
    std::vector<Vec2> points_;
};

/// Point of evaluation handed to coefficient callables. cell may be -1
/// when the point is not associated with a triangle (boundary data).
struct FieldPoint {
    int cell = -1;
    Vec3 bary = Vec3::Zero();
    Vec2 x = Vec2::Zero();
};

/// Coefficient vector bound to an FeSpace.
class DiscreteField {
public:
    DiscreteField() = default;
    DiscreteField(std::shared_ptr<const FeSpace> space, Eigen::VectorXd coeffs);
    explicit DiscreteField(std::shared_ptr<const FeSpace> space);

    const FeSpace& space() const { return *space_; }
    const std::shared_ptr<const FeSpace>& space_ptr() const { return space_; }
    const Eigen::VectorXd& coeffs() const { return coeffs_; }
    Eigen::VectorXd& coeffs() { return coeffs_; }

    double value(int t, const Vec3& bary, int component = 0) const;
    Vec2 gradient(int t, const Vec3& bary, int component = 0) const;
    Vec2 vector_value(int t, const Vec3& bary) const;
    /// Row i holds the gradient of component i.
    Mat2 jacobian(int t, const Vec3& bary) const;

private:
    std::shared_ptr<const FeSpace> space_;
    Eigen::VectorXd coeffs_;
};

/// Nodal interpolant of a scalar function.
DiscreteField interpolate(const std::function<double(const Vec2&)>& fun, std::shared_ptr<const FeSpace> space);
/// Nodal interpolant of a vector function into a 2-component space.
DiscreteField interpolate_vector(const std::function<Vec2(const Vec2&)>& fun, std::shared_ptr<const FeSpace> space);

} // namespace oseenvb
