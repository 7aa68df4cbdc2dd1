#pragma once

#include "oseenvb/estimator.hpp"
#include "oseenvb/postprocess.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace oseenvb {

/// Backward-Euler / Picard run: at every step f = sigma beta with
/// sigma = 1/dt and beta the previous recovered velocity (initially zero).
struct TransientConfig {
    std::string geometry = "bfs";
    double dt = 0.01;
    int n_steps = 100;
    double nu = 0.05;
    int k = 2;
    /// Cells per unit length of the generated geometry.
    int resolution = 8;
    /// Peak of the parabolic inlet profile (bfs).
    double inlet_peak = 1.0;
    /// Final inlet pressure and the number of steps to reach it (obstacles).
    double inlet_pressure = 3.0;
    int ramp_steps = 10;
    int snap_every = 10;
    int threads = 1;
    bool estimate = true;

    void validate() const;
};

/// Backward-facing step (0,6)x(0,2) \ (0,1)^2; outlet x = 6 is Gamma2.
TriMesh generate_bfs(int n);
/// L-bend channel from the inlet (0,1)x{-2} to the outlet {-2}x(0,1) with
/// three square obstacles; inlet and outlet are Gamma2.
TriMesh generate_obstacles(int n);
TriMesh transient_geometry(const TransientConfig& cfg);

/// Inlet velocity (bfs) or zero, as Dirichlet data on Gamma1.
Vec2 transient_inlet_velocity(const TransientConfig& cfg, const Vec2& x);
/// Bernoulli pressure on Gamma2 at step n (1-based).
double transient_boundary_pressure(const TransientConfig& cfg, int step, const Vec2& x);

struct TransientStep {
    int step = 0;
    double time = 0.0;
    double u_norm = 0.0;   ///< ||u~_h||_0
    double u_max = 0.0;    ///< max |u~_h| at the DOF points
    double u_change = 0.0; ///< ||u~_h^n - u~_h^{n-1}||_0
    double eta = 0.0;
    double residual = 0.0; ///< relative residual of the Oseen solve
};

struct TransientSnapshot {
    int step = 0;
    OseenSolution solution;
    DiscreteField velocity;
    BrokenField velocity_direct;
    std::vector<double> eta_T;
};

struct TransientResult {
    std::vector<TransientStep> steps;
    DiscreteField final_velocity;
};

struct TransientCallbacks {
    /// Called every snap_every steps and at the last step.
    std::function<void(const TransientSnapshot&)> on_snapshot;
    /// Called every step with the convecting field used and the velocity produced.
    std::function<void(int step, const DiscreteField& beta, const DiscreteField& velocity)> on_step;
};

/// Runs the time loop on the given mesh. Solver failures are rethrown as
/// SolverError naming the step.
TransientResult run_transient(const TransientConfig& cfg, std::shared_ptr<const TriMesh> mesh,
                              const TransientCallbacks& callbacks = {});

/// Largest negative x-velocity at DOF points inside the box; 0 if none.
double min_x_velocity(const DiscreteField& u, const Vec2& lo, const Vec2& hi);

} // namespace oseenvb
