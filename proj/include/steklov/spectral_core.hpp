#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace steklov {

/// Annulus A_T = [-T,T] x S^1, or Möbius band M_T = A_T / (t,θ) ~ (-t,θ+π).
enum class SurfaceKind { annulus, mobius_band };

std::string to_string(SurfaceKind kind);
SurfaceKind surface_kind_from_string(const std::string& name);

/// Half-length T of the flat cylinder [-T,T] x S^1. Positive, or +inf for limits.
class Modulus {
public:
    /// Throws std::domain_error unless value > 0 (NaN rejected, +inf accepted).
    explicit Modulus(double value);
    static Modulus infinity() { return Modulus(std::numeric_limits<double>::infinity()); }

    double value() const noexcept { return value_; }
    bool is_infinite() const noexcept { return value_ == std::numeric_limits<double>::infinity(); }

private:
    double value_;
};

enum class BranchKind { even_hyperbolic, odd_hyperbolic, linear };

/// One separated-variables eigenvalue family. `mode` is the Fourier
/// frequency in θ (0 for the linear profile t).
struct Branch {
    BranchKind kind = BranchKind::even_hyperbolic;
    int mode = 1;

    int multiplicity() const noexcept { return kind == BranchKind::linear ? 1 : 2; }
    friend bool operator==(const Branch&, const Branch&) = default;
};

std::string to_string(const Branch& branch);
std::string to_string(BranchKind kind);

/// One distinct value of the spectrum. Coincident branches are merged, so
/// `branches` has more than one element exactly at a crossing.
struct EigenvalueEntry {
    double value = 0.0;
    std::vector<Branch> branches;
    int first_index = 1;  ///< 1-based, nonzero eigenvalues only
    int last_index = 1;

    int multiplicity() const noexcept { return last_index - first_index + 1; }
};

/// Relative tolerance under which a tanh branch and a coth (or linear) branch of
/// lower frequency are treated as one eigenvalue. Pairs that never cross are
/// kept apart however close they get.
inline constexpr double kMergeTolerance = 1e-9;

/// Even (tanh) branch with Möbius index k (Fourier mode 2k) or annulus mode k:
/// 4πk·tanh(2kT) on M_T, 4πk·tanh(kT) on A_T.
double lambda_bar(SurfaceKind kind, int mode_index, Modulus T);
/// Odd (coth) branch with Möbius index l (Fourier mode 2l-1) or annulus mode n:
/// 2π(2l-1)·coth((2l-1)T) on M_T, 4πn·coth(nT) on A_T.
double mu_bar(SurfaceKind kind, int mode_index, Modulus T);
/// Linear branch 4π/T (annulus only).
double nu_bar(Modulus T);
/// Kind-aware variant that rejects the Möbius band.
double nu_bar(SurfaceKind kind, Modulus T);

/// Normalized value of an arbitrary branch, addressed by Fourier mode.
double branch_value(SurfaceKind kind, const Branch& branch, Modulus T);

/// Branch helpers translating the lemma-style indices into Fourier modes.
Branch lambda_branch(SurfaceKind kind, int mode_index);
Branch mu_branch(SurfaceKind kind, int mode_index);
inline Branch linear_branch() { return Branch{BranchKind::linear, 0}; }

/// Whether the branch exists on the given topology.
bool admissible(SurfaceKind kind, const Branch& branch);

/// First `count` nonzero normalized eigenvalues (with multiplicity), sorted.
/// The last entry may extend past `count` when it is a merged crossing.
std::vector<EigenvalueEntry> spectrum(SurfaceKind kind, Modulus T, int count);

/// j-th nonzero normalized eigenvalue (1-based, with multiplicity).
double sigma_bar(SurfaceKind kind, int j, Modulus T);
/// The entry that holds position j.
EigenvalueEntry sigma_entry(SurfaceKind kind, int j, Modulus T);

struct BranchValue {
    double value = 0.0;
    Branch branch;
};

/// One piece of the decomposition of (0, inf) on which σ̄_{2k-1} = σ̄_{2k}
/// follows a single branch.
struct BranchInterval {
    double lo = 0.0;
    double hi = 0.0;
    Branch branch;
};

/// The pieces [T_{k-j,j}, T_{k-j,j+1}) -> λ̄_{k-j} and
/// [T_{k-j,j+1}, T_{k-j-1,j+1}) -> μ̄_{j+1}, j = 0..floor(k/2), with empty
/// pieces dropped. Consecutive pieces share endpoints.
std::vector<BranchInterval> mobius_interval_decomposition(int k);

/// σ̄_j on the Möbius band from the explicit interval case analysis.
BranchValue sigma_bar_piecewise_mobius(int j, Modulus T);

}  // namespace steklov
