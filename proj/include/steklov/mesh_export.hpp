#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "steklov/surface_factory.hpp"

namespace steklov {

enum class MeshFormat { obj, ply, csv };
MeshFormat mesh_format_from_string(const std::string& name);

struct MeshVertex {
    double t = 0.0;
    double theta = 0.0;
    Vec4 x{};
};

/// Triangulated parameter grid. On the Möbius band the cylinder [-T*,T*] x S^1
/// is cut to the strip θ in [0, π] and the column θ = π is welded to θ = 0
/// with t reversed, i.e. node (i, n_θ/2) is node (n_t - i, 0).
struct Mesh {
    std::vector<MeshVertex> vertices;
    std::vector<std::array<int, 3>> faces;  ///< 0-based
    int ambient_dim = 3;
};

/// Throws std::invalid_argument for grids smaller than 3x3 (and odd n_θ on the Möbius band).
Mesh build_mesh(const ImmersionFamily& fam, Grid grid);

struct MeshTopology {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int euler_characteristic = 0;
    int boundary_edges = 0;
    int boundary_loops = 0;
    bool manifold = true;  ///< every edge has one or two incident faces
};

MeshTopology mesh_topology(const Mesh& mesh);

/// Coordinates written to OBJ/PLY; 4D surfaces are projected orthogonally.
using Projection = std::array<int, 3>;

void write_obj(const Mesh& mesh, std::ostream& out, Projection proj = {0, 1, 2});
void write_ply(const Mesh& mesh, std::ostream& out, Projection proj = {0, 1, 2});
/// Header `t,theta,x1,x2,x3[,x4]`, one row per vertex, 17 significant digits.
void write_csv(const Mesh& mesh, std::ostream& out);

/// Builds the mesh and writes it to `path`. Throws std::runtime_error on I/O failure.
void export_mesh(const ImmersionFamily& fam, Grid grid, MeshFormat format, const std::string& path,
                 Projection proj = {0, 1, 2});

}  // namespace steklov
