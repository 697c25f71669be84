#include "steklov/mesh_export.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace steklov {

namespace {

void check_projection(const Mesh& mesh, Projection proj) {
    for (int c : proj)
        if (c < 0 || c >= mesh.ambient_dim)
            throw std::invalid_argument("projection coordinate out of range for a " +
                                        std::to_string(mesh.ambient_dim) + "D surface");
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

MeshFormat mesh_format_from_string(const std::string& name) {
    if (name == "obj") return MeshFormat::obj;
    if (name == "ply") return MeshFormat::ply;
    if (name == "csv") return MeshFormat::csv;
    throw std::invalid_argument("unknown mesh format '" + name + "' (expected obj, ply or csv)");
}

Mesh build_mesh(const ImmersionFamily& fam, Grid grid) {
    if (grid.n_t < 3 || grid.n_theta < 3) throw std::invalid_argument("mesh grid must be at least 3x3");
    const bool mobius = fam.topology() == SurfaceKind::mobius_band;
    if (mobius && grid.n_theta % 2 != 0) throw std::invalid_argument("Möbius mesh needs an even θ resolution");

    const int nt = grid.n_t, nth = grid.n_theta;
    const int cols = mobius ? nth / 2 : nth;  // distinct θ columns
    const double T = fam.t_star;

    Mesh mesh;
    mesh.ambient_dim = fam.ambient_dim;
    for (int i = 0; i <= nt; ++i) {
        for (int j = 0; j < cols; ++j) {
            MeshVertex v;
            v.t = -T + 2.0 * T * i / nt;
            v.theta = 2.0 * std::numbers::pi * j / nth;
            v.x = position(fam, v.t, v.theta);
            mesh.vertices.push_back(v);
        }
    }
    const auto index = [&](int i, int j) {
        if (j == cols) return mobius ? (nt - i) * cols : i * cols;  // seam weld
        return i * cols + j;
    };
    for (int i = 0; i < nt; ++i) {
        for (int j = 0; j < cols; ++j) {
            const int a = index(i, j), b = index(i, j + 1), c = index(i + 1, j + 1), d = index(i + 1, j);
            mesh.faces.push_back({a, b, c});
            mesh.faces.push_back({a, c, d});
        }
    }
    return mesh;
}

MeshTopology mesh_topology(const Mesh& mesh) {
    std::map<std::pair<int, int>, int> edge_use;
    for (const auto& f : mesh.faces) {
        for (int e = 0; e < 3; ++e) {
            int u = f[e], v = f[(e + 1) % 3];
            if (u > v) std::swap(u, v);
            ++edge_use[{u, v}];
        }
    }
    MeshTopology topo;
    topo.vertices = static_cast<int>(mesh.vertices.size());
    topo.faces = static_cast<int>(mesh.faces.size());
    topo.edges = static_cast<int>(edge_use.size());
    topo.euler_characteristic = topo.vertices - topo.edges + topo.faces;

    std::map<int, std::vector<int>> boundary_adj;
    for (const auto& [e, uses] : edge_use) {
        if (uses > 2) topo.manifold = false;
        if (uses == 1) {
            ++topo.boundary_edges;
            boundary_adj[e.first].push_back(e.second);
            boundary_adj[e.second].push_back(e.first);
        }
    }
    // Count connected components of the boundary graph.
    std::map<int, bool> seen;
    for (const auto& [start, _] : boundary_adj) {
        if (seen[start]) continue;
        ++topo.boundary_loops;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : boundary_adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return topo;
}

void write_obj(const Mesh& mesh, std::ostream& out, Projection proj) {
    check_projection(mesh, proj);
    for (const auto& v : mesh.vertices)
        out << "v " << fmt17(v.x[proj[0]]) << ' ' << fmt17(v.x[proj[1]]) << ' ' << fmt17(v.x[proj[2]]) << '\n';
    for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void write_ply(const Mesh& mesh, std::ostream& out, Projection proj) {
    check_projection(mesh, proj);
    out << "ply\nformat ascii 1.0\n"
        << "element vertex " << mesh.vertices.size() << '\n'
        << "property double x\nproperty double y\nproperty double z\n"
        << "element face " << mesh.faces.size() << '\n'
        << "property list uchar int vertex_indices\nend_header\n";
    for (const auto& v : mesh.vertices)
        out << fmt17(v.x[proj[0]]) << ' ' << fmt17(v.x[proj[1]]) << ' ' << fmt17(v.x[proj[2]]) << '\n';
    for (const auto& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

void write_csv(const Mesh& mesh, std::ostream& out) {
    out << "t,theta";
    for (int i = 0; i < mesh.ambient_dim; ++i) out << ",x" << i + 1;
    out << '\n';
    for (const auto& v : mesh.vertices) {
        out << fmt17(v.t) << ',' << fmt17(v.theta);
        for (int i = 0; i < mesh.ambient_dim; ++i) out << ',' << fmt17(v.x[i]);
        out << '\n';
    }
}

void export_mesh(const ImmersionFamily& fam, Grid grid, MeshFormat format, const std::string& path,
                 Projection proj) {
    const Mesh mesh = build_mesh(fam, grid);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    switch (format) {
        case MeshFormat::obj: write_obj(mesh, out, proj); break;
        case MeshFormat::ply: write_ply(mesh, out, proj); break;
        case MeshFormat::csv: write_csv(mesh, out); break;
    }
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace steklov
