#pragma once

#include "oseenvb/estimator.hpp"
#include "oseenvb/postprocess.hpp"
#include "oseenvb/verify.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace oseenvb {

struct StudyOptions {
    int threads = 1;
    RecoveryBoundary recovery = RecoveryBoundary::Full;
};

/// Everything computed on one mesh of a study.
struct LevelResult {
    std::shared_ptr<const TriMesh> mesh;
    std::shared_ptr<const FeSpace> Zh, Qh, Uh;
    OseenSolution solution;
    BrokenField u_direct;
    DiscreteField u_elliptic;
    EstimatorField estimator;
    std::optional<ErrorRecord> errors;
    Effectivity eff;
    /// omega + p unknowns; the multiplier is not counted.
    int dofs = 0;
};

/// Solve, recover, estimate and (with a case) measure on one mesh.
LevelResult run_level(const OseenProblem& problem, const ManufacturedCase* exact, std::shared_ptr<const TriMesh> mesh,
                      int k, const StudyOptions& options = {});

struct StudyRow {
    int level = 0;
    double h = 0.0;
    int dofs = 0;
    ErrorRecord err;
    double eta = 0.0;
    double eff1 = 0.0;
    double eff2 = 0.0;
    /// Rates against the previous row; empty on the first row.
    std::optional<ErrorRecord> rate;
};

struct StudyReport {
    /// Adaptive studies use h = dofs^{-1/2}.
    bool adaptive = false;
    std::vector<StudyRow> rows;

    void add(StudyRow row);
    /// Average rate of a column over the last n intervals.
    double tail_rate(double ErrorRecord::*column, int n = 3) const;
    double last_rate(double ErrorRecord::*column) const { return tail_rate(column, 1); }
};

StudyRow make_row(const LevelResult& level, int index, bool adaptive);

/// Uniform-refinement study starting from the case's mesh with initial_n
/// subdivisions. on_level is called after each level.
StudyReport uniform_study(const ManufacturedCase& c, int k, int levels, double delta, int initial_n,
                          const StudyOptions& options = {},
                          const std::function<void(const LevelResult&, const StudyRow&)>& on_level = {});

/// CSV with the convergence.csv / adapt.csv columns.
std::string csv_header(bool adaptive);
void write_csv(std::ostream& os, const StudyReport& report);
/// Shortest round-trip decimal.
std::string format_number(double v);

} // namespace oseenvb
