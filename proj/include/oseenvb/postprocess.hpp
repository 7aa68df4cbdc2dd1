#pragma once

#include "oseenvb/oseen.hpp"
#include "oseenvb/solver.hpp"
#include "oseenvb/space.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace oseenvb {

/// Element-wise polynomial 2-vector field of degree m in {0, 1} without
/// inter-element continuity. For m = 1 the local basis is the P1 Lagrange
/// basis (barycentric coordinates).
class BrokenField {
public:
    BrokenField() = default;
    BrokenField(std::shared_ptr<const TriMesh> mesh, int degree);

    const TriMesh& mesh() const { return *mesh_; }
    int degree() const { return degree_; }
    int local_count() const { return degree_ == 0 ? 1 : 3; }

    Vec2& coeff(int t, int i) { return coeffs_[static_cast<std::size_t>(t * local_count() + i)]; }
    const Vec2& coeff(int t, int i) const { return coeffs_[static_cast<std::size_t>(t * local_count() + i)]; }

    Vec2 value(int t, const Vec3& bary) const;
    /// Mean over triangle t.
    Vec2 average(int t) const;

private:
    std::shared_ptr<const TriMesh> mesh_;
    int degree_ = 0;
    std::vector<Vec2> coeffs_;
};

/// Direct recovery
///   u_h|_T = sigma^{-1} P_T (f - nu^{-1/2} omega_h x beta - sqrt(nu) curl omega_h - grad p_h)
/// with P_T the L2 projection onto P_{k-1}(T)^2.
BrokenField recover_direct(const OseenProblem& problem, const OseenSolution& sol, int quadrature = 0);

/// How boundary values enter the elliptic recovery.
enum class RecoveryBoundary {
    /// Every boundary DOF is Dirichlet: g on Gamma1, a on Gamma2.
    Full,
    /// g on Gamma1; only the tangential component a.t on Gamma2 (needs
    /// axis-aligned Gamma2 edges).
    Tangential,
};

/// Discrete curl-curl + div-div problem
///   nu (rot u, rot v) + nu (div u, div v) = sqrt(nu) (omega_h, rot v)
/// on a 2-component P_k space. The constrained matrix depends only on the
/// mesh, nu and the boundary mode, so one factorization serves many solves.
class EllipticRecovery {
public:
    EllipticRecovery(std::shared_ptr<const FeSpace> Uh, double nu, RecoveryBoundary mode = RecoveryBoundary::Full);
    ~EllipticRecovery();
    EllipticRecovery(EllipticRecovery&&) noexcept;
    EllipticRecovery& operator=(EllipticRecovery&&) noexcept;

    DiscreteField solve(const DiscreteField& omega_h, const std::function<Vec2(const Vec2&)>& g,
                        const std::function<Vec2(const Vec2&)>& a, double* relative_residual = nullptr) const;

    const std::shared_ptr<const FeSpace>& space() const;
    /// Constrained (vector) DOFs, sorted.
    const std::vector<int>& constrained_dofs() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

DiscreteField recover_elliptic(const OseenProblem& problem, const OseenSolution& sol, std::shared_ptr<const FeSpace> Uh,
                               RecoveryBoundary mode = RecoveryBoundary::Full);

} // namespace oseenvb
