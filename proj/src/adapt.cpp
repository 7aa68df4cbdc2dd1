#include "oseenvb/adapt.hpp"

#include <algorithm>
#include <cmath>

namespace oseenvb {

void AdaptConfig::validate() const
{
    if (max_steps < 1) throw ConfigError("max_steps must be at least 1");
    if (!(theta > 0.0)) throw ConfigError("theta must be positive");
    if (!(size_floor > 0.0)) throw ConfigError("size floor must be positive");
}

double mean_indicator(const EstimatorField& est)
{
    if (est.local.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& l : est.local) sum += std::sqrt(l.eta_sq);
    return sum / static_cast<double>(est.local.size());
}

std::vector<double> size_map(const TriMesh& mesh, const EstimatorField& est, const AdaptConfig& cfg,
                             std::optional<double> mean)
{
    if (static_cast<int>(est.local.size()) != mesh.num_triangles())
        throw ConfigError("estimator does not match the mesh");
    const double bar = mean ? *mean : mean_indicator(est);
    std::vector<double> target(static_cast<std::size_t>(mesh.num_triangles()));
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const double h = mesh.diameter(t);
        const double eta = std::sqrt(est.local[static_cast<std::size_t>(t)].eta_sq);
        const double ratio = eta > bar * (1.0 + 1e-12) ? bar / eta : 1.0;
        target[static_cast<std::size_t>(t)] = std::clamp(cfg.theta * h * ratio, std::min(cfg.size_floor, h), h);
    }
    return target;
}

AdaptResult adapt_loop(const OseenProblem& problem, std::shared_ptr<const TriMesh> mesh, int k, const AdaptConfig& cfg,
                       const ManufacturedCase* exact,
                       const std::function<void(const LevelResult&, const StudyRow&)>& on_step)
{
    cfg.validate();
    problem.validate();
    AdaptResult out;
    out.report.adaptive = true;
    StudyOptions so;
    so.threads = cfg.threads;
    so.recovery = cfg.recovery;
    std::optional<double> frozen;
    for (int step = 0; step < cfg.max_steps; ++step) {
        out.final_mesh = mesh;
        LevelResult level;
        try {
            level = run_level(problem, exact, mesh, k, so);
        } catch (const SolverError& e) {
            out.failure = "step " + std::to_string(step) + ": " + e.what();
            return out;
        }
        out.report.add(make_row(level, step, true));
        if (on_step) on_step(level, out.report.rows.back());
        if (cfg.stop_eta && level.estimator.eta <= *cfg.stop_eta) break;
        if (step + 1 == cfg.max_steps) break;
        if (cfg.freeze_mean && !frozen) frozen = mean_indicator(level.estimator);
        const auto target = size_map(*mesh, level.estimator, cfg, frozen);
        SizeRefineOptions ro;
        ro.size_floor = cfg.size_floor;
        mesh = std::make_shared<const TriMesh>(refine_by_size_map(*mesh, target, ro));
    }
    return out;
}

} // namespace oseenvb
