#include "oseenvb/transient.hpp"

#include "oseenvb/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace oseenvb {

void TransientConfig::validate() const
{
    if (geometry != "bfs" && geometry != "obstacles")
        throw ConfigError("unknown geometry '" + geometry + "' (valid: bfs, obstacles)");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
    if (n_steps < 1) throw ConfigError("the number of steps must be at least 1");
    if (!(nu > 0.0) || !std::isfinite(nu)) throw ConfigError("nu must be positive");
    if (k != 1 && k != 2) throw ConfigError("k must be 1 or 2");
    if (resolution < 1) throw ConfigError("resolution must be at least 1");
    if (snap_every < 1) throw ConfigError("snap_every must be at least 1");
    if (ramp_steps < 0) throw ConfigError("ramp_steps must be non-negative");
    if (threads < 1) throw ConfigError("threads must be at least 1");
}

TriMesh generate_bfs(int n)
{
    if (n < 1) throw ConfigError("bfs resolution must be at least 1");
    const double h = 1.0 / n;
    auto keep = [n](int i, int j) { return i >= n || j >= n; };
    auto tagger = [](const Vec2& mid, const Vec2& normal) {
        return normal.x() > 0.5 && std::abs(mid.x() - 6.0) < 1e-9 ? BoundaryTag::Gamma2 : BoundaryTag::Gamma1;
    };
    return generate_cells(Vec2(0.0, 0.0), h, h, 6 * n, 2 * n, keep, tagger);
}

namespace {

bool inside_obstacle(const Vec2& c)
{
    const double boxes[3][4] = {
        {0.25, 0.75, -1.5, -1.0},
        {0.25, 0.75, 0.25, 0.75},
        {-1.5, -1.0, 0.25, 0.75},
    };
    for (const auto& b : boxes)
        if (c.x() > b[0] && c.x() < b[1] && c.y() > b[2] && c.y() < b[3]) return true;
    return false;
}

bool on_inlet(const Vec2& x) { return std::abs(x.y() + 2.0) < 1e-9; }
bool on_outlet(const Vec2& x) { return std::abs(x.x() + 2.0) < 1e-9; }

} // namespace

TriMesh generate_obstacles(int n)
{
    if (n < 1) throw ConfigError("obstacle resolution must be at least 1");
    const int m = 4 * std::max(1, (n + 3) / 4);
    const double h = 1.0 / m;
    auto keep = [h](int i, int j) {
        const Vec2 c(-2.0 + (i + 0.5) * h, -2.0 + (j + 0.5) * h);
        const bool channel = (c.x() > 0.0 && c.x() < 1.0) || (c.y() > 0.0 && c.y() < 1.0);
        return channel && c.x() < 1.0 && c.y() < 1.0 && !inside_obstacle(c);
    };
    auto tagger = [](const Vec2& mid, const Vec2& normal) {
        if ((normal.y() < -0.5 && on_inlet(mid)) || (normal.x() < -0.5 && on_outlet(mid))) return BoundaryTag::Gamma2;
        return BoundaryTag::Gamma1;
    };
    return generate_cells(Vec2(-2.0, -2.0), h, h, 3 * m, 3 * m, keep, tagger);
}

TriMesh transient_geometry(const TransientConfig& cfg)
{
    if (cfg.geometry == "bfs") return generate_bfs(cfg.resolution);
    if (cfg.geometry == "obstacles") return generate_obstacles(cfg.resolution);
    throw ConfigError("unknown geometry '" + cfg.geometry + "' (valid: bfs, obstacles)");
}

Vec2 transient_inlet_velocity(const TransientConfig& cfg, const Vec2& x)
{
    if (cfg.geometry == "bfs" && std::abs(x.x()) < 1e-9 && x.y() >= 1.0 && x.y() <= 2.0)
        return Vec2(cfg.inlet_peak * 4.0 * (x.y() - 1.0) * (2.0 - x.y()), 0.0);
    return Vec2::Zero();
}

double transient_boundary_pressure(const TransientConfig& cfg, int step, const Vec2& x)
{
    if (cfg.geometry != "obstacles" || !on_inlet(x)) return 0.0;
    if (cfg.ramp_steps == 0) return cfg.inlet_pressure;
    return cfg.inlet_pressure * std::min(1.0, static_cast<double>(step) / cfg.ramp_steps);
}

namespace {

double l2_norm(const DiscreteField& u)
{
    const TriMesh& mesh = u.space().mesh();
    const QuadRule& rule = quadrature_rule(std::min(8, 2 * u.space().degree()));
    double sum = 0.0;
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        double local = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) local += rule.weights[q] * u.vector_value(t, rule.points[q]).squaredNorm();
        sum += 2.0 * mesh.area(t) * local;
    }
    return std::sqrt(sum);
}

double max_nodal(const DiscreteField& u)
{
    const int n = u.space().scalar_dof_count();
    double m = 0.0;
    for (int i = 0; i < n; ++i) m = std::max(m, std::hypot(u.coeffs()[i], u.coeffs()[n + i]));
    return m;
}

} // namespace

TransientResult run_transient(const TransientConfig& cfg, std::shared_ptr<const TriMesh> mesh,
                              const TransientCallbacks& callbacks)
{
    cfg.validate();
    if (!mesh) mesh = std::make_shared<const TriMesh>(transient_geometry(cfg));
    auto Zh = std::make_shared<const FeSpace>(mesh, cfg.k, 1);
    auto Qh = std::make_shared<const FeSpace>(mesh, cfg.k, 1);
    auto Uh = std::make_shared<const FeSpace>(mesh, cfg.k, 2);
    const EllipticRecovery recovery(Uh, cfg.nu, RecoveryBoundary::Tangential);

    const double sigma = 1.0 / cfg.dt;
    auto g = [&cfg](const Vec2& x) { return transient_inlet_velocity(cfg, x); };
    auto a = [](const Vec2&) { return Vec2::Zero().eval(); };

    AssemblyOptions ao;
    ao.threads = cfg.threads;
    EstimatorOptions eo;
    eo.threads = cfg.threads;

    TransientResult result;
    DiscreteField beta(Uh);
    for (int n = 1; n <= cfg.n_steps; ++n) {
        OseenProblem problem;
        problem.nu = cfg.nu;
        problem.sigma = sigma;
        problem.beta = VectorCoefficient::of(beta);
        problem.f = VectorCoefficient::of(beta, sigma);
        problem.g = g;
        problem.a = a;
        problem.p0 = [&cfg, n](const Vec2& x) { return transient_boundary_pressure(cfg, n, x); };
        problem.use_multiplier = !mesh->has_tag(BoundaryTag::Gamma2);

        OseenSolution sol;
        DiscreteField velocity;
        try {
            sol = solve_oseen(problem, Zh, Qh, ao);
            velocity = recovery.solve(sol.omega_h, g, a);
        } catch (const SolverError& e) {
            throw SolverError("step " + std::to_string(n) + ": " + e.what(), e.pivot_index());
        }

        TransientStep row;
        row.step = n;
        row.time = n * cfg.dt;
        row.u_norm = l2_norm(velocity);
        row.u_max = max_nodal(velocity);
        {
            DiscreteField diff(Uh, velocity.coeffs() - beta.coeffs());
            row.u_change = l2_norm(diff);
        }
        row.residual = sol.relative_residual;

        const bool snap = n % cfg.snap_every == 0 || n == cfg.n_steps;
        EstimatorField est;
        if (cfg.estimate) {
            est = estimate(problem, sol, eo);
            row.eta = est.eta;
        } else {
            row.eta = std::nan("");
        }
        if (callbacks.on_step) callbacks.on_step(n, beta, velocity);
        if (snap && callbacks.on_snapshot) {
            TransientSnapshot s;
            s.step = n;
            s.velocity_direct = recover_direct(problem, sol);
            s.solution = sol;
            s.velocity = velocity;
            if (cfg.estimate) s.eta_T = est.eta_T();
            callbacks.on_snapshot(s);
        }
        result.steps.push_back(row);
        beta = std::move(velocity);
    }
    result.final_velocity = beta;
    return result;
}

double min_x_velocity(const DiscreteField& u, const Vec2& lo, const Vec2& hi)
{
    const FeSpace& space = u.space();
    const int n = space.scalar_dof_count();
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vec2& x = space.dof_point(i);
        if (x.x() > lo.x() && x.x() < hi.x() && x.y() > lo.y() && x.y() < hi.y()) m = std::min(m, u.coeffs()[i]);
    }
    return m;
}

} // namespace oseenvb
