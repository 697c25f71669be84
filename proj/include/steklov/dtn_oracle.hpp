#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "steklov/grid.hpp"
#include "steklov/spectral_core.hpp"

namespace steklov {

/// Discretized Steklov problem on the flat cylinder [-T,T] x S^1, or its
/// Möbius quotient (t,θ) ~ (-t,θ+π). n_t counts intervals in t, n_theta
/// nodes around the circle.
struct OracleProblem {
    SurfaceKind kind = SurfaceKind::annulus;
    double T = 1.0;
    double boundary_weight = 1.0;  // f(T)
    Grid grid{40, 40};
};

struct BoundaryNode {
    double t = 0.0;
    double theta = 0.0;
};

/// Thrown when the harmonic extension solve fails or leaves a large residual.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Discrete Dirichlet-to-Neumann map. entries is row-major size x size.
/// Applying it to boundary data gives the outward normal derivative of the
/// discrete harmonic extension, divided by f(T).
struct DtnMatrix {
    std::size_t size = 0;
    std::vector<double> entries;
    std::vector<double> weights;
    std::vector<BoundaryNode> nodes;
    double solve_residual = 0.0;

    double operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
    std::vector<double> apply(std::span<const double> data) const;
    double boundary_length() const;
};

DtnMatrix assemble_dtn(const OracleProblem& p);

/// max |w_i D_ij - w_j D_ji| / max |w_i D_ij|.
double weighted_asymmetry(const DtnMatrix& d);
double max_row_sum(const DtnMatrix& d);

/// <u, D u>_w / <u, u>_w.
double rayleigh_quotient(const DtnMatrix& d, std::span<const double> data);

/// Smallest `count` eigenvalues of D in the weighted inner product, ascending.
std::vector<double> oracle_spectrum(const DtnMatrix& d, int count);
std::vector<double> oracle_spectrum(const OracleProblem& p, int count);

/// Closed-form normalized values matching the oracle ordering: 0 followed by
/// the `count` smallest nonzero eigenvalues with multiplicity.
std::vector<double> closed_form_normalized(SurfaceKind kind, double T, int count);

struct ConvergenceLevel {
    Grid grid;
    double h = 0.0;                    // 2T / n_t
    std::vector<double> normalized;    // nonzero oracle eigenvalues times boundary length
    std::vector<double> errors;        // |oracle - closed form|
    double max_error = 0.0;
};

struct ConvergenceReport {
    std::vector<double> exact;
    std::vector<ConvergenceLevel> levels;
    std::vector<double> pair_orders;   // from max errors of consecutive levels
    double observed_order = 0.0;       // last pair
    double self_order = 0.0;           // from differences between levels, no closed form used
    // per eigenvalue, per consecutive pair; NaN where both errors sit at roundoff
    std::vector<std::vector<double>> eigen_orders;
};

/// Needs at least 3 levels, each refining the previous by the same factor.
ConvergenceReport convergence_study(const OracleProblem& p, std::span<const Grid> levels, int count = 5);

}  // namespace steklov
