#include "oseenvb/vtk.hpp"

#include "oseenvb/study.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace oseenvb {

namespace {

// Barycentric coordinates of local vertex i.
Vec3 corner(int i)
{
    Vec3 b = Vec3::Zero();
    b[i] = 1.0;
    return b;
}

// Vertex values of a field, taken from any triangle touching each vertex.
template <typename Sample>
std::vector<Sample> vertex_samples(const TriMesh& mesh, const std::function<Sample(int, const Vec3&)>& at)
{
    std::vector<Sample> out(static_cast<std::size_t>(mesh.num_vertices()));
    std::vector<char> seen(out.size(), 0);
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangle(t);
        for (int i = 0; i < 3; ++i) {
            const auto v = static_cast<std::size_t>(tri[static_cast<std::size_t>(i)]);
            if (seen[v]) continue;
            seen[v] = 1;
            out[v] = at(t, corner(i));
        }
    }
    return out;
}

std::string num(double v) { return format_number(std::isfinite(v) ? v : 0.0); }

} // namespace

std::string format_vtk(const TriMesh& mesh, const VtkFields& fields, const std::string& title)
{
    std::ostringstream os;
    os << "# vtk DataFile Version 2.0\n" << title << "\nASCII\nDATASET UNSTRUCTURED_GRID\n";
    os << "POINTS " << mesh.num_vertices() << " double\n";
    for (const auto& v : mesh.vertices()) os << num(v.x()) << ' ' << num(v.y()) << " 0\n";
    os << "CELLS " << mesh.num_triangles() << ' ' << 4 * mesh.num_triangles() << '\n';
    for (const auto& t : mesh.triangles()) os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    os << "CELL_TYPES " << mesh.num_triangles() << '\n';
    for (int t = 0; t < mesh.num_triangles(); ++t) os << "5\n";

    const bool any_point = fields.omega || fields.pressure || fields.velocity;
    if (any_point) os << "POINT_DATA " << mesh.num_vertices() << '\n';
    auto scalar = [&](const char* name, const DiscreteField& f) {
        const auto s = vertex_samples<double>(mesh, [&](int t, const Vec3& b) { return f.value(t, b); });
        os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (double v : s) os << num(v) << '\n';
    };
    if (fields.omega) scalar("omega_h", *fields.omega);
    if (fields.pressure) scalar("p_h", *fields.pressure);
    if (fields.velocity) {
        const auto s = vertex_samples<Vec2>(mesh, [&](int t, const Vec3& b) { return fields.velocity->vector_value(t, b); });
        os << "VECTORS u_elliptic double\n";
        for (const auto& v : s) os << num(v.x()) << ' ' << num(v.y()) << " 0\n";
    }

    if (fields.velocity_direct || fields.eta) os << "CELL_DATA " << mesh.num_triangles() << '\n';
    if (fields.velocity_direct) {
        os << "VECTORS u_direct double\n";
        for (int t = 0; t < mesh.num_triangles(); ++t) {
            const Vec2 v = fields.velocity_direct->average(t);
            os << num(v.x()) << ' ' << num(v.y()) << " 0\n";
        }
    }
    if (fields.eta) {
        os << "SCALARS eta_T double 1\nLOOKUP_TABLE default\n";
        for (double v : *fields.eta) os << num(v) << '\n';
    }
    return os.str();
}

void write_vtk(const std::string& path, const TriMesh& mesh, const VtkFields& fields, const std::string& title)
{
    std::ofstream f(path);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << format_vtk(mesh, fields, title);
    if (!f) throw Error("failed writing " + path);
}

} // namespace oseenvb
