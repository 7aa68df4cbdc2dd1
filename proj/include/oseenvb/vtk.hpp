#pragma once

#include "oseenvb/postprocess.hpp"
#include "oseenvb/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oseenvb {

/// Fields of one legacy-VTK snapshot. Point data is sampled at mesh
/// vertices; cell data is one value per triangle.
struct VtkFields {
    const DiscreteField* omega = nullptr;
    const DiscreteField* pressure = nullptr;
    const DiscreteField* velocity = nullptr;
    const BrokenField* velocity_direct = nullptr;
    const std::vector<double>* eta = nullptr;
};

/// Legacy ASCII VTK 2.0 unstructured grid.
std::string format_vtk(const TriMesh& mesh, const VtkFields& fields, const std::string& title = "oseenvb");
void write_vtk(const std::string& path, const TriMesh& mesh, const VtkFields& fields, const std::string& title = "oseenvb");

} // namespace oseenvb
