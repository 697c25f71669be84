#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace steklov {

/// Dense symmetric matrix in row-major storage.
struct SymmetricMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    explicit SymmetricMatrix(std::size_t size = 0) : n(size), a(size * size, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

struct JacobiResult {
    std::vector<double> eigenvalues;  ///< ascending
    int sweeps = 0;
    double off_norm = 0.0;  ///< Frobenius norm of the remaining off-diagonal part
};

/// Cyclic Jacobi rotations until the off-diagonal mass falls below
/// `tolerance` times the Frobenius norm of the input. Only the upper
/// triangle of `m` is read.
JacobiResult jacobi_eigenvalues(SymmetricMatrix m, double tolerance = 1e-14, int max_sweeps = 60);

}  // namespace steklov
