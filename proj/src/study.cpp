#include "oseenvb/study.hpp"

#include "oseenvb/refine.hpp"

#include <charconv>
#include <cmath>

namespace oseenvb {

LevelResult run_level(const OseenProblem& problem, const ManufacturedCase* exact, std::shared_ptr<const TriMesh> mesh,
                      int k, const StudyOptions& options)
{
    LevelResult r;
    r.mesh = std::move(mesh);
    r.Zh = std::make_shared<const FeSpace>(r.mesh, k, 1);
    r.Qh = std::make_shared<const FeSpace>(r.mesh, k, 1);
    r.Uh = std::make_shared<const FeSpace>(r.mesh, k, 2);
    AssemblyOptions ao;
    ao.threads = options.threads;
    r.solution = solve_oseen(problem, r.Zh, r.Qh, ao);
    r.u_direct = recover_direct(problem, r.solution);
    r.u_elliptic = recover_elliptic(problem, r.solution, r.Uh, options.recovery);
    EstimatorOptions eo;
    eo.threads = options.threads;
    r.estimator = estimate(problem, r.solution, eo);
    r.dofs = r.Zh->dof_count() + r.Qh->dof_count();
    if (exact) {
        r.errors = error_norms(*exact, r.solution, &r.u_direct, &r.u_elliptic, problem.delta);
        r.eff = effectivity(r.errors->L2_weighted, r.errors->V_weighted, r.estimator.eta);
    }
    return r;
}

namespace {

constexpr double ErrorRecord::*kRateColumns[] = {
    &ErrorRecord::omega, &ErrorRecord::p,          &ErrorRecord::u_direct,    &ErrorRecord::u_elliptic,
    &ErrorRecord::V,     &ErrorRecord::V_weighted, &ErrorRecord::L2_weighted, &ErrorRecord::div_elliptic,
};

double safe_rate(double e1, double e2, double h1, double h2)
{
    if (!(e1 > 0.0 && e2 > 0.0) || h1 == h2) return std::nan("");
    return convergence_rate(e1, e2, h1, h2);
}

} // namespace

void StudyReport::add(StudyRow row)
{
    if (!rows.empty()) {
        const StudyRow& prev = rows.back();
        ErrorRecord rate;
        for (auto col : kRateColumns) rate.*col = safe_rate(prev.err.*col, row.err.*col, prev.h, row.h);
        row.rate = rate;
    }
    rows.push_back(std::move(row));
}

double StudyReport::tail_rate(double ErrorRecord::*column, int n) const
{
    if (static_cast<int>(rows.size()) < n + 1) return std::nan("");
    double sum = 0.0;
    for (std::size_t i = rows.size() - static_cast<std::size_t>(n); i < rows.size(); ++i) sum += (*rows[i].rate).*column;
    return sum / n;
}

StudyRow make_row(const LevelResult& level, int index, bool adaptive)
{
    StudyRow row;
    row.level = index;
    row.dofs = level.dofs;
    row.h = adaptive ? 1.0 / std::sqrt(static_cast<double>(level.dofs)) : level.mesh->max_diameter();
    if (level.errors) row.err = *level.errors;
    row.eta = level.estimator.eta;
    row.eff1 = level.eff.eff1;
    row.eff2 = level.eff.eff2;
    return row;
}

StudyReport uniform_study(const ManufacturedCase& c, int k, int levels, double delta, int initial_n,
                          const StudyOptions& options,
                          const std::function<void(const LevelResult&, const StudyRow&)>& on_level)
{
    if (levels < 1) throw ConfigError("a study needs at least one level");
    const OseenProblem problem = c.problem(delta);
    StudyReport report;
    auto mesh = std::make_shared<const TriMesh>(c.build_mesh(initial_n));
    for (int l = 0; l < levels; ++l) {
        if (l > 0) mesh = std::make_shared<const TriMesh>(refine_uniform(*mesh));
        const LevelResult level = run_level(problem, &c, mesh, k, options);
        report.add(make_row(level, l, false));
        if (on_level) on_level(level, report.rows.back());
    }
    return report;
}

std::string format_number(double v)
{
    if (!std::isfinite(v)) return "";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_header(bool adaptive)
{
    return std::string(adaptive ? "step,heff" : "level,h") +
           ",dofs,err_omega,rate_omega,err_p,rate_p,err_u_direct,rate_u_direct,err_u_elliptic,rate_u_elliptic,"
           "err_V,rate_V,err_Vw,rate_Vw,eta,eff1,eff2";
}

void write_csv(std::ostream& os, const StudyReport& report)
{
    os << csv_header(report.adaptive) << '\n';
    for (const auto& r : report.rows) {
        os << r.level << ',' << format_number(r.h) << ',' << r.dofs;
        for (auto col : {&ErrorRecord::omega, &ErrorRecord::p, &ErrorRecord::u_direct, &ErrorRecord::u_elliptic,
                         &ErrorRecord::V, &ErrorRecord::V_weighted}) {
            os << ',' << format_number(r.err.*col) << ',';
            if (r.rate) os << format_number((*r.rate).*col);
        }
        os << ',' << format_number(r.eta) << ',' << format_number(r.eff1) << ',' << format_number(r.eff2) << '\n';
    }
}

} // namespace oseenvb
