#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>

#include "steklov/grid.hpp"
#include "steklov/spectral_core.hpp"

namespace steklov {

enum class FamilyKind { catenoid_b3, annulus_b4, mobius_b4 };

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

/// Parameters of a family member. CatenoidB3 uses only `n`.
struct FamilySpec {
    FamilyKind kind = FamilyKind::mobius_b4;
    int m = 2;
    int n = 1;
};

/// One explicit free boundary minimal immersion of [-T*,T*] x S^1 into the unit ball.
///
///   catenoid_b3(n): u = (cosh(nt)cos(nθ), cosh(nt)sin(nθ), nt) / r,
///                   T* = t_{1,0}/n, r^2 = cosh^2(t_{1,0}) + t_{1,0}^2
///   annulus_b4(m,n), mobius_b4(m,n):
///                   u = (m sinh(nt)cos(nθ), m sinh(nt)sin(nθ),
///                        n cosh(mt)cos(mθ), n cosh(mt)sin(mθ)) / r,
///                   T* solves m tanh(mT) = n coth(nT),
///                   r^2 = m^2 sinh^2(nT*) + n^2 cosh^2(mT*)
struct ImmersionFamily {
    FamilySpec spec;
    double t_star = 0.0;
    double radius = 0.0;
    int ambient_dim = 4;

    SurfaceKind topology() const noexcept {
        return spec.kind == FamilyKind::mobius_b4 ? SurfaceKind::mobius_band : SurfaceKind::annulus;
    }
    std::string label() const;
};

/// Throws std::invalid_argument on m <= n, or on parity violations for the Möbius family.
ImmersionFamily make_family(const FamilySpec& spec);

using Vec4 = std::array<double, 4>;

/// Position and first derivatives; unused trailing coordinates are zero.
struct SurfacePoint {
    Vec4 x{};
    Vec4 dt{};
    Vec4 dtheta{};
};

/// Throws std::domain_error if |t| exceeds T* (beyond rounding).
SurfacePoint evaluate(const ImmersionFamily& fam, double t, double theta);

/// Position only, with no domain check (used by finite-difference stencils).
Vec4 position(const ImmersionFamily& fam, double t, double theta);

struct IdentityReport {
    double conformal_residual = 0.0;      ///< max |u_t.u_θ| + ||u_t|^2 - |u_θ|^2|
    double stress_energy_residual = 0.0;  ///< max Frobenius norm of sum_i τ(u_i)
    double boundary_norm_residual = 0.0;  ///< max ||u| - 1| on t = ±T*
    double free_boundary_angle = 0.0;     ///< max angle (rad) between u and the outward conormal
    double harmonic_residual = 0.0;       ///< max 5-point flat Laplacian at step h
    double harmonic_residual_half = 0.0;  ///< same at step h/2
    double harmonic_order = 0.0;          ///< log2 of the ratio of the two
    double steklov_ratio = 0.0;           ///< c in u_t = c u on the boundary
    double steklov_ratio_spread = 0.0;    ///< max deviation of componentwise ratios from c
    double normalized_eigenvalue = 0.0;   ///< c times the boundary length factor (2π or 4π)
};

/// Pointwise checks on an n_t x n_theta parameter grid. The harmonicity check
/// uses step h = T*/512 and h/2 at the same sample points.
IdentityReport verify_identities(const ImmersionFamily& fam, Grid grid);

/// Symmetric 2-tensor in flat coordinates (t, θ): components (h_tt, h_tθ, h_θθ).
using TensorField = std::function<std::array<double, 3>(double t, double theta)>;

class ConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An admissible variation h: ∫_{∂M} h(T,T) ds = 0 for the induced metric.
struct QFormSample {
    TensorField h;
    double boundary_constraint_residual = 0.0;
};

/// Boundary integral ∫ h(T,T) ds over both boundary circles of [-T*,T*] x S^1.
/// On the Möbius band this is the double cover and equals twice the quotient integral.
double boundary_constraint(const ImmersionFamily& fam, const TensorField& h, Grid grid);

/// Returns h - κ g with κ chosen so the boundary constraint vanishes; g is the induced metric.
QFormSample make_admissible(const ImmersionFamily& fam, TensorField h, Grid grid);

/// sum_i Q_h(u_i) by Simpson (t) x trapezoid (θ) quadrature on the double cover.
/// Throws ConstraintError if |boundary constraint| exceeds 1e-8 times the boundary length.
double q_form_sum(const ImmersionFamily& fam, const QFormSample& h, Grid grid);

struct InjectivityReport {
    bool injective = false;
    int covering_degree = 1;
    /// Preimages of a point of the core circle t = 0 in the quotient. The first
    /// two coordinates of the B4 families vanish there, so this is m/2 on the
    /// Möbius band and m on the annulus.
    int core_multiplicity = 1;
    double min_separation = 0.0;  ///< min image distance over non-identified node pairs off the core circle
    double min_edge = 0.0;        ///< min image edge length of the parameter grid
    bool radius_monotone = false; ///< |u(t,·)|^2 strictly increasing for t > 0
};

/// Covering degree and core multiplicity from exact θ-periods of the map, then a
/// brute-force pairwise separation test on the remaining nodes. Injective iff
/// both are 1 and min_separation > separation_tol * min_edge.
InjectivityReport injectivity_scan(const ImmersionFamily& fam, Grid grid, double separation_tol = 0.1);

}  // namespace steklov
