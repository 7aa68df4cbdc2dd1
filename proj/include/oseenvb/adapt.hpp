#pragma once

#include "oseenvb/refine.hpp"
#include "oseenvb/study.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace oseenvb {

struct AdaptConfig {
    int max_steps = 1;
    /// Proportionality constant of the size rule.
    double theta = 1.0;
    double size_floor = 1e-6;
    std::optional<double> stop_eta;
    /// Keep the mean indicator of the first mesh instead of recomputing it per step.
    bool freeze_mean = false;
    int threads = 1;
    RecoveryBoundary recovery = RecoveryBoundary::Full;

    void validate() const;
};

/// target_T = clamp(theta h_T min(1, mean / eta_T), size_floor, h_T), where
/// mean is the average of eta_T (or `mean` when given).
std::vector<double> size_map(const TriMesh& mesh, const EstimatorField& est, const AdaptConfig& cfg,
                             std::optional<double> mean = std::nullopt);

/// Average of eta_T over the triangles.
double mean_indicator(const EstimatorField& est);

struct AdaptResult {
    StudyReport report;
    std::shared_ptr<const TriMesh> final_mesh;
    /// Set when a step failed; the report holds the completed steps.
    std::optional<std::string> failure;
};

/// solve -> estimate -> (measure) -> size map -> refine, max_steps times or
/// until eta <= stop_eta. on_step runs after each step is measured.
AdaptResult adapt_loop(const OseenProblem& problem, std::shared_ptr<const TriMesh> mesh, int k, const AdaptConfig& cfg,
                       const ManufacturedCase* exact = nullptr,
                       const std::function<void(const LevelResult&, const StudyRow&)>& on_step = {});

} // namespace oseenvb
