#pragma once

#include "oseenvb/oseen.hpp"

#include <vector>

namespace oseenvb {

/// Volume residuals at one point of a triangle:
///   R1 = rot(sqrt(nu) curl omega_h + nu^{-1/2} omega_h x beta - f) + nu^{-1/2} sigma omega_h
///   R2 = div(f - nu^{-1/2} omega_h x beta - grad p_h)
struct ResidualSample {
    double r1 = 0.0;
    double r2 = 0.0;
};
ResidualSample element_residuals(const OseenProblem& problem, const OseenSolution& sol, int t, const Vec3& bary);

/// Jumps across an interior edge at parameter s in [0, 1] from v0 to v1 of
/// the edge: trace from the lower-index triangle minus trace from the other,
/// projected on the edge's fixed tangent / normal.
///   J1 = [(sqrt(nu) curl omega_h + nu^{-1/2} omega_h x beta - f) . t]
///   J2 = [(f - nu^{-1/2} omega_h x beta - grad p_h) . n]
struct JumpSample {
    double j1 = 0.0;
    double j2 = 0.0;
};
JumpSample edge_jumps(const OseenProblem& problem, const OseenSolution& sol, int e, double s);

/// Squared contributions of one triangle.
struct LocalEstimate {
    double r1_sq = 0.0;    ///< h_T^{2(1+delta)} ||R1||^2
    double r2_sq = 0.0;    ///< h_T^{2(1+delta)} ||R2||^2
    double jump1_sq = 0.0; ///< sum over interior edges of h_e^{1+2 delta} ||J1||^2
    double jump2_sq = 0.0; ///< sum over interior edges of h_e^{1+2 delta} ||J2||^2
    double eta_sq = 0.0;
};

struct EstimatorField {
    std::vector<LocalEstimate> local;
    double eta = 0.0;
    double delta = 1.0;

    std::vector<double> eta_T() const;
};

struct EstimatorOptions {
    /// Quadrature exactness; 0 selects 2k + 4.
    int quadrature = 0;
    int threads = 1;
};

LocalEstimate eta_local(const OseenProblem& problem, const OseenSolution& sol, int t, const EstimatorOptions& options = {});

/// eta = (sum_T eta_T^2)^{1/2}.
EstimatorField eta_global(std::vector<LocalEstimate> local, double delta);

EstimatorField estimate(const OseenProblem& problem, const OseenSolution& sol, const EstimatorOptions& options = {});

struct Effectivity {
    double eff1 = 0.0;
    double eff2 = 0.0;
    /// True when eta = 0 while an error is nonzero.
    bool flagged = false;
};
Effectivity effectivity(double err_L2_weighted, double err_V_weighted, double eta);

/// h_T^{2(1+delta)} (||rot f - P_l rot f||^2 + ||div f - P_l div f||^2) per
/// triangle, with P_l the L2 projection onto P_l(T), l in {0, 1, 2}.
std::vector<double> oscillation(const OseenProblem& problem, const TriMesh& mesh, int ell, int quadrature = 8);

} // namespace oseenvb
