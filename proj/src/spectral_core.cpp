#include "steklov/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "steklov/crossing_solver.hpp"
#include "steklov/hyperbolic.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

// Normalizing boundary length per unit conformal factor: one circle on M_T, two on A_T.
double length_factor(SurfaceKind kind) { return kind == SurfaceKind::mobius_band ? 2.0 * kPi : 4.0 * kPi; }

void require_mode(int mode_index, const char* what) {
    if (mode_index < 1) throw std::invalid_argument(std::string(what) + ": mode index must be >= 1");
}

int kind_rank(BranchKind k) { return static_cast<int>(k); }

}  // namespace

std::string to_string(SurfaceKind kind) { return kind == SurfaceKind::annulus ? "annulus" : "mobius"; }

SurfaceKind surface_kind_from_string(const std::string& name) {
    if (name == "annulus") return SurfaceKind::annulus;
    if (name == "mobius" || name == "mobius_band" || name == "mobius-band") return SurfaceKind::mobius_band;
    throw std::invalid_argument("unknown surface kind '" + name + "' (expected annulus or mobius)");
}

Modulus::Modulus(double value) : value_(value) {
    if (!(value > 0.0)) throw std::domain_error("conformal modulus must be positive, got " + std::to_string(value));
}

std::string to_string(BranchKind kind) {
    switch (kind) {
        case BranchKind::even_hyperbolic: return "even";
        case BranchKind::odd_hyperbolic: return "odd";
        case BranchKind::linear: return "linear";
    }
    return "?";
}

std::string to_string(const Branch& branch) { return to_string(branch.kind) + ":" + std::to_string(branch.mode); }

bool admissible(SurfaceKind kind, const Branch& branch) {
    if (branch.kind == BranchKind::linear) return kind == SurfaceKind::annulus && branch.mode == 0;
    if (branch.mode < 1) return false;
    if (kind == SurfaceKind::annulus) return true;
    // (t,θ) ~ (-t,θ+π): cosh profiles need even modes, sinh profiles odd ones.
    return branch.kind == BranchKind::even_hyperbolic ? branch.mode % 2 == 0 : branch.mode % 2 == 1;
}

double branch_value(SurfaceKind kind, const Branch& branch, Modulus T) {
    if (!admissible(kind, branch))
        throw std::invalid_argument("branch " + to_string(branch) + " does not exist on the " + to_string(kind));
    const double t = T.value();
    const double m = branch.mode;
    switch (branch.kind) {
        case BranchKind::even_hyperbolic: return length_factor(kind) * m * hyp::tanh(m * t);
        case BranchKind::odd_hyperbolic: return length_factor(kind) * m * hyp::coth(m * t);
        case BranchKind::linear: return 4.0 * kPi / t;
    }
    return 0.0;
}

Branch lambda_branch(SurfaceKind kind, int mode_index) {
    require_mode(mode_index, "lambda_bar");
    return Branch{BranchKind::even_hyperbolic, kind == SurfaceKind::mobius_band ? 2 * mode_index : mode_index};
}

Branch mu_branch(SurfaceKind kind, int mode_index) {
    require_mode(mode_index, "mu_bar");
    return Branch{BranchKind::odd_hyperbolic, kind == SurfaceKind::mobius_band ? 2 * mode_index - 1 : mode_index};
}

double lambda_bar(SurfaceKind kind, int mode_index, Modulus T) {
    return branch_value(kind, lambda_branch(kind, mode_index), T);
}

double mu_bar(SurfaceKind kind, int mode_index, Modulus T) { return branch_value(kind, mu_branch(kind, mode_index), T); }

double nu_bar(Modulus T) { return 4.0 * kPi / T.value(); }

double nu_bar(SurfaceKind kind, Modulus T) {
    if (kind != SurfaceKind::annulus)
        throw std::invalid_argument("the Möbius band has no linear branch (profile t is not invariant)");
    return nu_bar(T);
}

namespace {

// Only an increasing tanh branch against a decreasing coth or linear branch of
// lower frequency ever meets. Other pairs can come within the merge tolerance
// (tanh/coth of one mode as T grows, coth branches as T -> 0) without being equal.
bool can_cross(const Branch& x, const Branch& y) {
    const auto one_way = [](const Branch& even, const Branch& other) {
        if (even.kind != BranchKind::even_hyperbolic) return false;
        if (other.kind == BranchKind::linear) return true;
        return other.kind == BranchKind::odd_hyperbolic && even.mode > other.mode;
    };
    return one_way(x, y) || one_way(y, x);
}

}  // namespace

std::vector<EigenvalueEntry> spectrum(SurfaceKind kind, Modulus T, int count) {
    if (T.is_infinite()) throw std::domain_error("spectrum: T must be finite");
    if (count < 1) throw std::invalid_argument("spectrum: count must be >= 1");

    struct Item {
        double value;
        Branch branch;
    };
    std::vector<Item> items;
    if (kind == SurfaceKind::annulus) items.push_back({nu_bar(T), linear_branch()});

    const auto by_value = [](const Item& x, const Item& y) {
        return std::tuple(x.value, kind_rank(x.branch.kind), x.branch.mode) <
               std::tuple(y.value, kind_rank(y.branch.kind), y.branch.mode);
    };

    const double t = T.value();
    const double factor = length_factor(kind);
    for (int m = 1;; ++m) {
        if (m > 50'000'000) throw std::runtime_error("spectrum: mode cutoff not reached");
        if (kind == SurfaceKind::annulus || m % 2 == 0)
            items.push_back({branch_value(kind, {BranchKind::even_hyperbolic, m}, T), {BranchKind::even_hyperbolic, m}});
        if (kind == SurfaceKind::annulus || m % 2 == 1)
            items.push_back({branch_value(kind, {BranchKind::odd_hyperbolic, m}, T), {BranchKind::odd_hyperbolic, m}});

        int total = 0;
        for (const Item& it : items) total += it.branch.multiplicity();
        if (total < count) continue;

        std::sort(items.begin(), items.end(), by_value);
        int seen = 0;
        double at_count = 0.0;
        for (const Item& it : items) {
            seen += it.branch.multiplicity();
            if (seen >= count) {
                at_count = it.value;
                break;
            }
        }
        // Every unscanned branch value is at least factor*(m+1)*tanh((m+1)T).
        const double next_min = factor * (m + 1) * hyp::tanh((m + 1) * t);
        if (next_min > at_count * (1.0 + kMergeTolerance)) break;
    }

    std::vector<EigenvalueEntry> out;
    int position = 0;
    for (const Item& it : items) {
        if (!out.empty()) {
            EigenvalueEntry& last = out.back();
            const double scale = std::max(std::abs(last.value), std::abs(it.value));
            const bool crosses = std::any_of(last.branches.begin(), last.branches.end(),
                                             [&](const Branch& b) { return can_cross(b, it.branch); });
            if (crosses && std::abs(it.value - last.value) <= kMergeTolerance * scale) {
                // A crossing straddling `count` is kept whole.
                last.branches.push_back(it.branch);
                last.last_index += it.branch.multiplicity();
                position = last.last_index;
                continue;
            }
        }
        if (position >= count) break;
        EigenvalueEntry e;
        e.value = it.value;
        e.branches.push_back(it.branch);
        e.first_index = position + 1;
        e.last_index = position + it.branch.multiplicity();
        position = e.last_index;
        out.push_back(std::move(e));
    }
    return out;
}

EigenvalueEntry sigma_entry(SurfaceKind kind, int j, Modulus T) {
    if (j < 1) throw std::invalid_argument("sigma_bar: index must be >= 1");
    const auto entries = spectrum(kind, T, j);
    for (const auto& e : entries)
        if (e.first_index <= j && j <= e.last_index) return e;
    throw std::logic_error("sigma_bar: index not covered by spectrum");
}

double sigma_bar(SurfaceKind kind, int j, Modulus T) { return sigma_entry(kind, j, T).value; }

std::vector<BranchInterval> mobius_interval_decomposition(int k) {
    if (k < 1) throw std::invalid_argument("interval decomposition: k must be >= 1");
    std::vector<BranchInterval> pieces;
    const int s = k / 2;
    for (int j = 0; j <= s; ++j) {
        const double lo = mobius_crossing(k - j, j);
        const double mid = mobius_crossing(k - j, j + 1);
        const double hi = mobius_crossing(k - j - 1, j + 1);
        if (lo < mid) pieces.push_back({lo, mid, lambda_branch(SurfaceKind::mobius_band, k - j)});
        if (mid < hi) pieces.push_back({mid, hi, mu_branch(SurfaceKind::mobius_band, j + 1)});
    }
    return pieces;
}

BranchValue sigma_bar_piecewise_mobius(int j, Modulus T) {
    if (j < 1) throw std::invalid_argument("sigma_bar_piecewise_mobius: index must be >= 1");
    if (T.is_infinite()) throw std::domain_error("sigma_bar_piecewise_mobius: T must be finite");
    const int k = (j + 1) / 2;
    const double t = T.value();
    for (const BranchInterval& piece : mobius_interval_decomposition(k)) {
        if (piece.lo <= t && t < piece.hi)
            return {branch_value(SurfaceKind::mobius_band, piece.branch, T), piece.branch};
    }
    throw std::logic_error("sigma_bar_piecewise_mobius: T not covered by the decomposition");
}

}  // namespace steklov
