#pragma once

#include "oseenvb/solver.hpp"
#include "oseenvb/space.hpp"

#include <Eigen/SparseCore>

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace oseenvb {

/// Vector coefficient with its Jacobian (row i = gradient of component i).
struct VectorCoefficient {
    std::function<Vec2(const FieldPoint&)> value;
    std::function<Mat2(const FieldPoint&)> jacobian;

    static VectorCoefficient zero();
    static VectorCoefficient constant(const Vec2& c);
    /// Closed-form field of position only.
    static VectorCoefficient of(std::function<Vec2(const Vec2&)> value, std::function<Mat2(const Vec2&)> jacobian);
    /// Field interpolated in a 2-component FeSpace; evaluated cell-wise.
    static VectorCoefficient of(const DiscreteField& field, double scale = 1.0);
};

/// Data of the 2D Oseen problem in scaled-vorticity / Bernoulli-pressure form.
///
///   sigma u + sqrt(nu) curl omega + nu^{-1/2} omega x beta + grad p = f,
///   omega = sqrt(nu) rot u,  div u = 0,
///   u = g on Gamma1,  u x n = a x n and p = p0 on Gamma2.
///
/// 2D conventions: curl s = (d_y s, -d_x s), rot v = d_x v2 - d_y v1,
/// omega x beta = omega (-beta2, beta1), g x n = g1 n2 - g2 n1.
struct OseenProblem {
    double nu = 1.0;
    double sigma = 1.0;
    double delta = 1.0;
    VectorCoefficient beta = VectorCoefficient::zero();
    VectorCoefficient f = VectorCoefficient::zero();
    std::function<Vec2(const Vec2&)> g = [](const Vec2&) { return Vec2::Zero().eval(); };
    std::function<Vec2(const Vec2&)> a = [](const Vec2&) { return Vec2::Zero().eval(); };
    std::function<double(const Vec2&)> p0 = [](const Vec2&) { return 0.0; };
    /// Zero-mean pressure multiplier, used only when Gamma2 is empty.
    bool use_multiplier = true;

    void validate() const;
};

struct AssemblyOptions {
    /// Quadrature exactness; 0 selects 2k + 3.
    int quadrature = 0;
    int threads = 1;
};

/// Unknown layout: [omega (n_omega) | p (n_p) | multiplier (optional)].
struct LinearSystem {
    SparseMatrix matrix;
    Eigen::VectorXd rhs;
    std::optional<Eigen::Index> multiplier_row;
    int n_omega = 0;
    int n_p = 0;
    /// Pressure DOFs fixed by the Gamma2 condition, with their values.
    std::vector<int> constrained_pressure;
    std::vector<double> constrained_values;
};

struct OseenSolution {
    DiscreteField omega_h;
    DiscreteField p_h;
    std::optional<double> multiplier;
    double relative_residual = 0.0;
};

/// Assembles the Galerkin system of the multilinear form
///   A((w,p),(t,q)) = sigma (w,t) + (sqrt(nu) curl w + grad p + nu^{-1/2} w x beta, sqrt(nu) curl t + grad q)
/// and the functional including the Gamma1/Gamma2 boundary terms.
LinearSystem assemble(const OseenProblem& problem, const FeSpace& Zh, const FeSpace& Qh,
                      const AssemblyOptions& options = {});

/// Imposes p = p0 on Gamma2 by symmetric row/column elimination, or borders
/// the system with the zero-mean multiplier when Gamma2 is empty.
LinearSystem apply_constraints(LinearSystem system, const OseenProblem& problem, const FeSpace& Qh);

OseenSolution solve(const LinearSystem& system, std::shared_ptr<const FeSpace> Zh, std::shared_ptr<const FeSpace> Qh);

/// assemble + apply_constraints + solve.
OseenSolution solve_oseen(const OseenProblem& problem, std::shared_ptr<const FeSpace> Zh,
                          std::shared_ptr<const FeSpace> Qh, const AssemblyOptions& options = {});

/// Integral of every pressure basis function (the multiplier row).
Eigen::VectorXd pressure_mean_weights(const FeSpace& Qh);

/// Max of |beta| over the assembly quadrature points.
double beta_sup(const OseenProblem& problem, const FeSpace& space, int quadrature = 0);

struct CoercivityEntry {
    double form = 0.0;   ///< A((t,q),(t,q))
    double bound = 0.0;  ///< sigma (1 - 2|beta|^2/(nu sigma)) |t|^2 + 1/2 |sqrt(nu) curl t + grad q|^2
    double tolerance = 0.0;
    bool pass = false;
};

struct CoercivityReport {
    double beta_sup = 0.0;
    /// 2 |beta|_inf^2 < nu sigma
    bool smallness_holds = false;
    std::vector<CoercivityEntry> entries;
    bool all_pass = true;
};

/// Evaluates the coercivity lower bound of the form for each coefficient
/// vector [theta | q] (length Zh.dof_count() + Qh.dof_count()).
CoercivityReport coercivity_probe(const OseenProblem& problem, const FeSpace& Zh, const FeSpace& Qh,
                                  const std::vector<Eigen::VectorXd>& pairs, const AssemblyOptions& options = {});

} // namespace oseenvb
