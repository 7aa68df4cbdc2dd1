#pragma once

#include "oseenvb/cases.hpp"
#include "oseenvb/mesh.hpp"
#include "oseenvb/oseen.hpp"
#include "oseenvb/postprocess.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace oseenvb {

/// Closed-form solution of the Oseen problem with its data.
struct ManufacturedCase {
    std::string name;
    double nu = 1.0;
    double sigma = 1.0;
    /// Pressure offset constant of the closed form (zero except ex2c).
    double p0 = 0.0;
    /// Regularity exponent suggested for the domain.
    double delta = 1.0;
    /// Cells per unit length of the starting mesh.
    int initial_n = 1;
    BoundaryTagger tagger;
    std::function<TriMesh(int n)> build_mesh;

    ExactPoint eval(const Vec2& x) const;
    Vec2 u(const Vec2& x) const;
    double omega(const Vec2& x) const;
    double p(const Vec2& x) const;

    /// Problem data with g = a = u and p0 = p on the boundary.
    OseenProblem problem(double delta) const;
    TriMesh initial_mesh() const { return build_mesh(initial_n); }

    void (*kernel)(double, double, double, double, double, ExactPoint&) = nullptr;
};

/// Known names: ex1, ex2a, ex2b, ex2c. Throws ConfigError otherwise.
ManufacturedCase manufactured_case(const std::string& name);
std::vector<std::string> case_names();

/// Largest consistency residual of the case at `samples` pseudo-random
/// points of its domain's bounding box that lie inside the initial mesh:
/// the strong momentum equation, omega - sqrt(nu) rot u and div u.
struct ConsistencyReport {
    double momentum = 0.0;
    double vorticity = 0.0;
    double divergence = 0.0;
    double derivative_fd = 0.0;
};
ConsistencyReport case_consistency(const ManufacturedCase& c, int samples = 50, unsigned seed = 7);

struct ErrorRecord {
    double omega = 0.0;       ///< ||e_omega||_0
    double p = 0.0;           ///< ||e_p||_0
    double u_direct = 0.0;    ///< ||u - u_h||_0
    double u_elliptic = 0.0;  ///< ||u - u~_h||_0
    double V = 0.0;           ///< ||(e_omega, e_p)||_V
    double V_weighted = 0.0;  ///< ||h^delta (e_omega, e_p)||_V
    double L2_weighted = 0.0; ///< ||(sigma^{1/2} e_omega, e_p)||_0
    double div_elliptic = 0.0;///< ||div u~_h||_0
};

/// Errors against the closed form with an exactness-8 rule. When the
/// solution carries a zero-mean multiplier, the exact pressure is compared
/// after removing its own mean.
ErrorRecord error_norms(const ManufacturedCase& c, const OseenSolution& sol, const BrokenField* u_direct,
                        const DiscreteField* u_elliptic, double delta);

/// Mean of the exact pressure over the mesh.
double exact_pressure_mean(const ManufacturedCase& c, const TriMesh& mesh);

/// log(e1/e2) / log(h1/h2).
double convergence_rate(double e1, double e2, double h1, double h2);

/// Dense matrix and right-hand side built without the DOF maps of the
/// production assembler: each global basis function is evaluated by
/// locating the point in the mesh and solving a local Vandermonde system.
/// Meshes up to 50 triangles.
struct OracleSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
};
OracleSystem oracle_assemble(const OseenProblem& problem, const FeSpace& Zh, const FeSpace& Qh);

} // namespace oseenvb
