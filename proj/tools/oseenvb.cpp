#include "oseenvb/adapt.hpp"
#include "oseenvb/study.hpp"
#include "oseenvb/transient.hpp"
#include "oseenvb/vtk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace oseenvb;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

std::string default_out()
{
    const char* env = std::getenv("OSEENVB_OUT");
    return env && *env ? std::string(env) : std::string("oseenvb_out");
}

std::string zero_pad(int v, int width)
{
    std::string s = std::to_string(v);
    return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

class Manifest {
public:
    Manifest(std::string command, std::vector<std::string> argv) : start_(Clock::now())
    {
        doc_["command"] = std::move(command);
        doc_["argv"] = std::move(argv);
        doc_["config"] = json::object();
        doc_["versions"] = {
            {"oseenvb", OSEENVB_VERSION},
            {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                          std::to_string(EIGEN_MINOR_VERSION)},
            {"solver", solver_version()},
            {"compiler", __VERSION__},
        };
        doc_["stages"] = json::array();
        doc_["outputs"] = json::array();
    }

    json& config() { return doc_["config"]; }

    void begin(const std::string& stage)
    {
        stage_ = stage;
        stage_start_ = Clock::now();
    }
    void end()
    {
        const double s = std::chrono::duration<double>(Clock::now() - stage_start_).count();
        doc_["stages"].push_back({{"name", stage_}, {"seconds", s}});
    }

    void output(const fs::path& path) { doc_["outputs"].push_back(path.filename().string()); }

    void write(const fs::path& dir, const std::string& status, const std::string& message = {})
    {
        doc_["status"] = status;
        if (!message.empty()) doc_["message"] = message;
        doc_["wall_seconds"] = std::chrono::duration<double>(Clock::now() - start_).count();
        const fs::path target = dir / "manifest.json";
        const fs::path tmp = dir / "manifest.json.tmp";
        {
            std::ofstream os(tmp);
            os << doc_.dump(2) << '\n';
            if (!os) throw std::runtime_error("cannot write " + tmp.string());
        }
        fs::rename(tmp, target);
    }

private:
    using Clock = std::chrono::steady_clock;
    json doc_;
    Clock::time_point start_;
    Clock::time_point stage_start_;
    std::string stage_;
};

void write_level_vtk(const fs::path& path, const LevelResult& level, Manifest& manifest)
{
    const std::vector<double> eta = level.estimator.eta_T();
    VtkFields fields;
    fields.omega = &level.solution.omega_h;
    fields.pressure = &level.solution.p_h;
    fields.velocity = &level.u_elliptic;
    fields.velocity_direct = &level.u_direct;
    fields.eta = &eta;
    write_vtk(path.string(), *level.mesh, fields);
    manifest.output(path);
}

void check_delta(double delta)
{
    if (!(delta > 0.0 && delta <= 1.0)) throw ConfigError("delta must lie in (0, 1]");
}

struct ConvergenceArgs {
    std::string case_name;
    int k = 1;
    int levels = 5;
    std::optional<double> delta;
    std::optional<int> initial_n;
    std::string out = default_out();
    int threads = 1;
    bool vtk = false;
};

int cmd_convergence(const ConvergenceArgs& a, Manifest& m)
{
    const ManufacturedCase c = manufactured_case(a.case_name);
    const double delta = a.delta.value_or(c.delta);
    check_delta(delta);
    if (a.levels < 1) throw ConfigError("levels must be at least 1");
    const int n0 = a.initial_n.value_or(c.initial_n);
    if (n0 < 1) throw ConfigError("initial-n must be at least 1");
    if (a.threads < 1) throw ConfigError("threads must be at least 1");

    const fs::path dir(a.out);
    fs::create_directories(dir);
    m.config() = {{"case", a.case_name}, {"k", a.k},           {"levels", a.levels}, {"delta", delta},
                  {"initial_n", n0},     {"threads", a.threads}, {"vtk", a.vtk},       {"out", a.out}};
    StudyOptions so;
    so.threads = a.threads;
    StudyReport report;
    std::string failure;
    m.begin("study");
    try {
        report = uniform_study(c, a.k, a.levels, delta, n0, so, [&](const LevelResult& level, const StudyRow& row) {
            std::cerr << "level " << row.level << ": dofs " << row.dofs << ", err_omega " << row.err.omega << ", eta "
                      << row.eta << '\n';
            if (a.vtk) write_level_vtk(dir / ("level_" + zero_pad(row.level, 2) + ".vtk"), level, m);
        });
    } catch (const SolverError& e) {
        failure = e.what();
    }
    m.end();
    if (!failure.empty()) {
        m.write(dir, "solver_failure", failure);
        std::cerr << "error: " << failure << '\n';
        return kExitSolver;
    }
    const fs::path csv = dir / "convergence.csv";
    {
        std::ofstream os(csv);
        write_csv(os, report);
    }
    m.output(csv);
    m.write(dir, "ok");
    return 0;
}

struct AdaptArgs {
    std::string case_name;
    int k = 1;
    std::optional<double> delta;
    int steps = 8;
    std::optional<int> initial_n;
    double theta = 1.0;
    double floor = 1e-6;
    bool freeze_mean = false;
    std::string out = default_out();
    int threads = 1;
    bool vtk = true;
};

int cmd_adapt(const AdaptArgs& a, Manifest& m)
{
    const ManufacturedCase c = manufactured_case(a.case_name);
    const double delta = a.delta.value_or(c.delta);
    check_delta(delta);
    const int n0 = a.initial_n.value_or(c.initial_n);
    if (n0 < 1) throw ConfigError("initial-n must be at least 1");
    if (a.threads < 1) throw ConfigError("threads must be at least 1");
    AdaptConfig cfg;
    cfg.max_steps = a.steps;
    cfg.theta = a.theta;
    cfg.size_floor = a.floor;
    cfg.freeze_mean = a.freeze_mean;
    cfg.threads = a.threads;
    cfg.validate();

    const fs::path dir(a.out);
    fs::create_directories(dir);
    m.config() = {{"case", a.case_name},   {"k", a.k},
                  {"delta", delta},        {"steps", a.steps},
                  {"initial_n", n0},       {"theta", a.theta},
                  {"size_floor", a.floor}, {"freeze_mean", a.freeze_mean},
                  {"threads", a.threads},  {"vtk", a.vtk},
                  {"out", a.out}};
    m.begin("adapt");
    auto mesh = std::make_shared<const TriMesh>(c.build_mesh(n0));
    const AdaptResult result =
        adapt_loop(c.problem(delta), mesh, a.k, cfg, &c, [&](const LevelResult& level, const StudyRow& row) {
            std::cerr << "step " << row.level << ": dofs " << row.dofs << ", err_V " << row.err.V << ", eta " << row.eta
                      << '\n';
            const fs::path msh = dir / ("mesh_step_" + zero_pad(row.level, 2) + ".msh");
            save_mesh(*level.mesh, msh.string());
            m.output(msh);
            if (a.vtk) write_level_vtk(dir / ("step_" + zero_pad(row.level, 2) + ".vtk"), level, m);
        });
    m.end();
    const fs::path csv = dir / "adapt.csv";
    {
        std::ofstream os(csv);
        write_csv(os, result.report);
    }
    m.output(csv);
    if (result.failure) {
        m.write(dir, "solver_failure", *result.failure);
        std::cerr << "error: " << *result.failure << '\n';
        return kExitSolver;
    }
    m.write(dir, "ok");
    return 0;
}

struct TransientArgs {
    std::string geom = "bfs";
    std::optional<double> dt;
    std::optional<int> steps;
    std::optional<double> nu;
    int k = 2;
    int resolution = 16;
    int snap_every = 10;
    std::optional<std::string> mesh;
    double inlet_pressure = 3.0;
    int ramp_steps = 10;
    bool estimate = true;
    std::string out = default_out();
    int threads = 1;
};

void write_transient_csv(std::ostream& os, const TransientResult& r)
{
    os << "step,t,u_norm,u_max,u_change,eta,residual\n";
    for (const auto& s : r.steps)
        os << s.step << ',' << format_number(s.time) << ',' << format_number(s.u_norm) << ',' << format_number(s.u_max)
           << ',' << format_number(s.u_change) << ',' << format_number(s.eta) << ',' << format_number(s.residual) << '\n';
}

int cmd_transient(const TransientArgs& a, Manifest& m)
{
    TransientConfig cfg;
    cfg.geometry = a.geom;
    const bool bfs = a.geom == "bfs";
    cfg.dt = a.dt.value_or(bfs ? 0.01 : 0.1);
    cfg.n_steps = a.steps.value_or(bfs ? 100 : 30);
    cfg.nu = a.nu.value_or(bfs ? 0.05 : 0.02);
    cfg.k = a.k;
    cfg.resolution = a.resolution;
    cfg.snap_every = a.snap_every;
    cfg.inlet_pressure = a.inlet_pressure;
    cfg.ramp_steps = a.ramp_steps;
    cfg.estimate = a.estimate;
    cfg.threads = a.threads;
    cfg.validate();

    const fs::path dir(a.out);
    fs::create_directories(dir);
    m.config() = {{"geometry", cfg.geometry},
                  {"dt", cfg.dt},
                  {"sigma", 1.0 / cfg.dt},
                  {"steps", cfg.n_steps},
                  {"nu", cfg.nu},
                  {"k", cfg.k},
                  {"resolution", cfg.resolution},
                  {"mesh", a.mesh ? json(*a.mesh) : json(nullptr)},
                  {"snap_every", cfg.snap_every},
                  {"inlet_pressure", cfg.inlet_pressure},
                  {"ramp_steps", cfg.ramp_steps},
                  {"estimate", cfg.estimate},
                  {"threads", cfg.threads},
                  {"out", a.out}};

    m.begin("mesh");
    auto mesh = std::make_shared<const TriMesh>(a.mesh ? load_mesh(*a.mesh) : transient_geometry(cfg));
    m.end();
    std::cerr << "mesh: " << mesh->num_triangles() << " triangles\n";

    TransientCallbacks cb;
    cb.on_snapshot = [&](const TransientSnapshot& s) {
        std::cerr << "step " << s.step << '\n';
        VtkFields fields;
        fields.omega = &s.solution.omega_h;
        fields.pressure = &s.solution.p_h;
        fields.velocity = &s.velocity;
        fields.velocity_direct = &s.velocity_direct;
        if (!s.eta_T.empty()) fields.eta = &s.eta_T;
        const fs::path path = dir / ("snapshot_" + zero_pad(s.step, 4) + ".vtk");
        write_vtk(path.string(), *mesh, fields);
        m.output(path);
    };
    TransientResult result;
    m.begin("time_loop");
    try {
        result = run_transient(cfg, mesh, cb);
    } catch (const SolverError& e) {
        m.end();
        m.write(dir, "solver_failure", e.what());
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
    m.end();
    const fs::path csv = dir / "transient.csv";
    {
        std::ofstream os(csv);
        write_transient_csv(os, result);
    }
    m.output(csv);
    m.write(dir, "ok");
    return 0;
}

struct MeshArgs {
    std::string geom;
    int resolution = 16;
    std::string file;
};

int cmd_mesh(const MeshArgs& a)
{
    TriMesh mesh = [&] {
        if (a.geom == "bfs") return generate_bfs(a.resolution);
        if (a.geom == "obstacles") return generate_obstacles(a.resolution);
        return manufactured_case(a.geom).build_mesh(a.resolution);
    }();
    save_mesh(mesh, a.file);
    std::cerr << a.file << ": " << mesh.num_vertices() << " vertices, " << mesh.num_triangles() << " triangles\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Vorticity/Bernoulli-pressure Oseen solver with a posteriori error estimation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", OSEENVB_VERSION);

    const std::vector<std::string> valid_cases = case_names();
    std::string case_list;
    for (const auto& n : valid_cases) case_list += (case_list.empty() ? "" : ", ") + n;
    auto case_validator = CLI::Validator(
        [&](std::string& v) -> std::string {
            for (const auto& n : valid_cases)
                if (n == v) return {};
            return "unknown case '" + v + "' (valid: " + case_list + ")";
        },
        "CASE");

    ConvergenceArgs conv;
    auto* c = app.add_subcommand("convergence", "Uniform-refinement study of a manufactured case");
    c->add_option("--case", conv.case_name, "Manufactured case (" + case_list + ")")->required()->check(case_validator);
    c->add_option("--k", conv.k, "Polynomial degree")->check(CLI::IsMember({1, 2}));
    c->add_option("--levels", conv.levels, "Number of levels")->check(CLI::PositiveNumber);
    c->add_option("--delta", conv.delta, "Estimator weight exponent in (0, 1]");
    c->add_option("--initial-n", conv.initial_n, "Subdivisions of the starting mesh");
    c->add_option("--out", conv.out, "Output directory (default $OSEENVB_OUT)");
    c->add_option("--threads", conv.threads, "Threads for assembly and estimation")->check(CLI::PositiveNumber);
    c->add_flag("--vtk", conv.vtk, "Write a VTK file per level");

    AdaptArgs ad;
    auto* d = app.add_subcommand("adapt", "Adaptive refinement guided by the estimator");
    d->add_option("--case", ad.case_name, "Manufactured case (" + case_list + ")")->required()->check(case_validator);
    d->add_option("--k", ad.k, "Polynomial degree")->check(CLI::IsMember({1, 2}));
    d->add_option("--delta", ad.delta, "Estimator weight exponent in (0, 1]");
    d->add_option("--steps", ad.steps, "Adaptive steps")->check(CLI::PositiveNumber);
    d->add_option("--initial-n", ad.initial_n, "Subdivisions of the starting mesh");
    d->add_option("--theta", ad.theta, "Size-rule constant")->check(CLI::PositiveNumber);
    d->add_option("--floor", ad.floor, "Smallest target element size")->check(CLI::PositiveNumber);
    d->add_flag("--freeze-mean", ad.freeze_mean, "Keep the mean indicator of the first mesh");
    d->add_option("--out", ad.out, "Output directory (default $OSEENVB_OUT)");
    d->add_option("--threads", ad.threads, "Threads for assembly and estimation")->check(CLI::PositiveNumber);
    d->add_flag("--vtk,!--no-vtk", ad.vtk, "Write a VTK file per step (default on)");

    TransientArgs tr;
    auto* t = app.add_subcommand("transient", "Backward-Euler/Picard time loop (bfs or obstacles)");
    t->add_option("--geom", tr.geom, "Geometry")->check(CLI::IsMember({"bfs", "obstacles"}));
    t->add_option("--dt", tr.dt, "Time step; sigma = 1/dt (default 0.01 bfs, 0.1 obstacles)")
        ->check(CLI::PositiveNumber);
    t->add_option("--steps", tr.steps, "Time steps (default 100 bfs, 30 obstacles)")->check(CLI::PositiveNumber);
    t->add_option("--nu", tr.nu, "Viscosity (default 0.05 bfs, 0.02 obstacles)")->check(CLI::PositiveNumber);
    t->add_option("--k", tr.k, "Polynomial degree")->check(CLI::IsMember({1, 2}));
    t->add_option("--resolution", tr.resolution, "Cells per unit length of the generated geometry")
        ->check(CLI::PositiveNumber);
    t->add_option("--mesh", tr.mesh, "Read the geometry from an MSH-TXT file instead")->check(CLI::ExistingFile);
    t->add_option("--snap-every", tr.snap_every, "Snapshot stride")->check(CLI::PositiveNumber);
    t->add_option("--inlet-pressure", tr.inlet_pressure, "Final inlet Bernoulli pressure (obstacles)");
    t->add_option("--ramp-steps", tr.ramp_steps, "Steps to reach the inlet pressure (obstacles)")
        ->check(CLI::NonNegativeNumber);
    t->add_flag("!--no-estimate", tr.estimate, "Skip the estimator");
    t->add_option("--out", tr.out, "Output directory (default $OSEENVB_OUT)");
    t->add_option("--threads", tr.threads, "Threads for assembly and estimation")->check(CLI::PositiveNumber);

    MeshArgs me;
    auto* g = app.add_subcommand("mesh", "Write a generated geometry as MSH-TXT");
    std::vector<std::string> geoms{"bfs", "obstacles"};
    geoms.insert(geoms.end(), valid_cases.begin(), valid_cases.end());
    g->add_option("--geom", me.geom, "Geometry")->required()->check(CLI::IsMember(geoms));
    g->add_option("--resolution", me.resolution, "Cells per unit length")->check(CLI::PositiveNumber);
    g->add_option("--file", me.file, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::vector<std::string> args(argv, argv + argc);
    try {
        if (g->parsed()) return cmd_mesh(me);
        CLI::App* sub = app.get_subcommands().front();
        Manifest manifest(sub->get_name(), args);
        if (c->parsed()) return cmd_convergence(conv, manifest);
        if (d->parsed()) return cmd_adapt(ad, manifest);
        return cmd_transient(tr, manifest);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SolverError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
