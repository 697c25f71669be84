#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steklov/spectral_core.hpp"

namespace steklov {

struct SupremumResult {
    SurfaceKind kind = SurfaceKind::mobius_band;
    int j = 1;
    double value = 0.0;
    bool attained = false;
    std::optional<double> modulus;
    /// Annulus even indices only: 4πk·tanh(k·t_{k,1}/2), the value obtained
    /// when the crossing is read on the half cylinder [0,T]. Kept for comparison.
    std::optional<double> half_cylinder_value;
};

/// sup_T σ̄_j(T) on the Möbius band: 4πk·tanh(2k·T_{k,1}), k = ceil(j/2), attained at T_{k,1}.
SupremumResult sup_sigma_mobius(int j);

/// sup_T σ̄_j(T) on the annulus with equal boundary lengths.
///   j = 2k-1: 4πk/t_{1,0} at T = t_{1,0}/k
///   j = 2:    4π, not attained (T -> inf)
///   j = 2k:   4πk·tanh(k·t_{k,1}) at T = t_{k,1}, k > 1
SupremumResult sup_sigma_annulus(int j);

SupremumResult sup_sigma(SurfaceKind kind, int j);

enum class Character { local_max, local_min };
std::string to_string(Character c);

struct IndexRole {
    int j = 1;
    Character character = Character::local_max;
    friend bool operator==(const IndexRole&, const IndexRole&) = default;
};

/// A crossing modulus together with the eigenvalue indices for which it is
/// a local maximum or minimum of σ̄_j(T).
struct CriticalMetric {
    SurfaceKind kind = SurfaceKind::mobius_band;
    double modulus = 0.0;
    Branch increasing;  ///< tanh branch
    Branch decreasing;  ///< coth or linear branch
    double value = 0.0;
    int eigen_multiplicity = 4;
    std::vector<IndexRole> roles;       ///< from one-sided differences of σ̄_j
    bool table_agrees = false;          ///< roles equal the symbolic case table
    std::vector<std::string> eigenspace;  ///< spanning eigenfunctions
};

/// Möbius: T_{k,l}, l <= k <= max_mode. Annulus: t_{m,n}, n < m <= max_mode,
/// plus the linear crossings t_{1,0}/m, m <= max_mode. Sorted by modulus.
std::vector<CriticalMetric> critical_set(SurfaceKind kind, int max_mode);

struct FirstIntersectionMargin {
    int k = 0, l = 0, c = 0;
    double lower = 0.0;   ///< λ̄_k(T_{k,l})
    double upper = 0.0;   ///< λ̄_{k+c}(T_{k+c,l-c})
    double margin = 0.0;  ///< upper - lower
};

/// λ̄_k(T_{k,l}) < λ̄_{k+c}(T_{k+c,l-c}) for all k >= l > c > 0 with k + c <= max_mode.
std::vector<FirstIntersectionMargin> verify_first_intersection_max(int max_mode);

struct NoAsymptoteMargin {
    int k = 0;
    double asymptote = 0.0;      ///< λ̄_{k/2}(inf) = 2πk
    double crossing_value = 0.0; ///< λ̄_k(T_{k,1})
    double margin = 0.0;
    double t_k = 0.0;            ///< root of 2k·tanh(2k·T) = 1/T
    double t_k1 = 0.0;           ///< T_{k,1}
    double scaled_t_k = 0.0;     ///< 2k·T_k, equal to t_{1,0}
    bool chain_holds = false;    ///< 2πk < 4πk/t_{1,0} = 2π/T_k = 4πk·tanh(2kT_k) < λ̄_k(T_{k,1})
};

/// For even k <= max_even: λ̄_{k/2}(inf) < λ̄_k(T_{k,1}), replaying the bound via T_k.
std::vector<NoAsymptoteMargin> verify_no_asymptote(int max_even);

}  // namespace steklov
