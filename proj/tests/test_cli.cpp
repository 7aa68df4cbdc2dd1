#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args, const std::string& env = {})
{
    const std::string cmd = env + " " + OSEENVB_CLI + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p)
{
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("oseenvb_cli_" + name);
    fs::remove_all(p);
    return p;
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST(Cli, UsageErrors)
{
    const fs::path out = scratch("usage");
    EXPECT_EQ(run("convergence --case ex7 --out " + out.string()), 2);
    EXPECT_EQ(run("convergence --case ex1 --k 3 --out " + out.string()), 2);
    EXPECT_EQ(run("adapt --case ex2b --delta 0 --out " + out.string()), 2);
    EXPECT_EQ(run("adapt --case ex2b --delta 1.5 --out " + out.string()), 2);
    EXPECT_EQ(run("transient --steps 0 --out " + out.string()), 2);
    EXPECT_EQ(run("transient --geom cavity --out " + out.string()), 2);
    EXPECT_EQ(run("frobnicate"), 2);
    EXPECT_EQ(run(""), 2);
    EXPECT_EQ(run("--help"), 0);
}

TEST(Cli, ConvergenceOutputsAndDeterminism)
{
    const fs::path a = scratch("conv_a"), b = scratch("conv_b");
    ASSERT_EQ(run("convergence --case ex1 --k 1 --levels 3 --vtk --out " + a.string()), 0);
    ASSERT_EQ(run("convergence --case ex1 --k 1 --levels 3 --threads 1 --out " + b.string()), 0);
    const std::string csv = slurp(a / "convergence.csv");
    EXPECT_EQ(csv, slurp(b / "convergence.csv"));
    EXPECT_EQ(lines(csv), 4);
    const auto manifest = nlohmann::json::parse(slurp(a / "manifest.json"));
    EXPECT_EQ(manifest["command"], "convergence");
    EXPECT_EQ(manifest["status"], "ok");
    EXPECT_EQ(manifest["config"]["levels"], 3);
    EXPECT_FALSE(manifest["versions"]["solver"].get<std::string>().empty());
    EXPECT_FALSE(manifest["stages"].empty());
    ASSERT_EQ(manifest["outputs"].size(), 4u);
    for (const auto& f : manifest["outputs"]) EXPECT_TRUE(fs::exists(a / f.get<std::string>())) << f;
    EXPECT_FALSE(fs::exists(a / "manifest.json.tmp"));
    const std::string vtk = slurp(a / "level_00.vtk");
    EXPECT_EQ(vtk.rfind("# vtk DataFile Version 2.0\n", 0), 0u);
    for (const char* field : {"omega_h", "p_h", "u_elliptic", "u_direct", "eta_T"}) EXPECT_NE(vtk.find(field), std::string::npos);
}

TEST(Cli, AdaptRows)
{
    const fs::path out = scratch("adapt");
    ASSERT_EQ(run("adapt --case ex2b --delta 0.6666666666666666 --steps 3 --no-vtk --out " + out.string()), 0);
    const std::string csv = slurp(out / "adapt.csv");
    EXPECT_EQ(csv.rfind("step,heff,dofs,", 0), 0u);
    EXPECT_EQ(lines(csv), 4);
    EXPECT_TRUE(fs::exists(out / "mesh_step_02.msh"));
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    int prev = 0;
    while (std::getline(is, line)) {
        const int dofs = std::stoi(line.substr(line.find(',', line.find(',') + 1) + 1));
        EXPECT_GT(dofs, prev);
        prev = dofs;
    }
}

TEST(Cli, TransientAndEnvironmentDefault)
{
    const fs::path out = scratch("transient");
    ASSERT_EQ(run("transient --geom bfs --k 1 --resolution 2 --steps 4 --snap-every 2", "OSEENVB_OUT=" + out.string()), 0);
    const std::string csv = slurp(out / "transient.csv");
    EXPECT_EQ(csv.rfind("step,t,u_norm,u_max,u_change,eta,residual\n", 0), 0u);
    EXPECT_EQ(lines(csv), 5);
    EXPECT_TRUE(fs::exists(out / "snapshot_0002.vtk"));
    EXPECT_TRUE(fs::exists(out / "snapshot_0004.vtk"));
    const auto manifest = nlohmann::json::parse(slurp(out / "manifest.json"));
    for (const auto& f : manifest["outputs"]) EXPECT_TRUE(fs::exists(out / f.get<std::string>()));
}

TEST(Cli, MeshAssetLoads)
{
    const fs::path out = scratch("mesh");
    fs::create_directories(out);
    ASSERT_EQ(run("mesh --geom obstacles --resolution 4 --file " + (out / "o.msh").string()), 0);
    ASSERT_EQ(run("transient --geom obstacles --k 1 --steps 2 --mesh " + (out / "o.msh").string() + " --out " + out.string()), 0);
    EXPECT_EQ(lines(slurp(out / "transient.csv")), 3);
    EXPECT_EQ(run("transient --mesh " + (out / "missing.msh").string() + " --out " + out.string()), 2);
}
