#include "steklov/extremal_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "steklov/crossing_solver.hpp"
#include "steklov/hyperbolic.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fourier_term(const char* profile, int freq, const char* trig) {
    const std::string f = std::to_string(freq);
    return std::string(profile) + "(" + f + "t)" + trig + "(" + f + "θ)";
}

std::vector<std::string> eigenspace_of(const Branch& inc, const Branch& dec) {
    std::vector<std::string> span;
    if (dec.kind == BranchKind::linear) {
        span = {fourier_term("cosh", inc.mode, "cos"), fourier_term("cosh", inc.mode, "sin"), "t"};
    } else {
        span = {fourier_term("sinh", dec.mode, "cos"), fourier_term("sinh", dec.mode, "sin"),
                fourier_term("cosh", inc.mode, "cos"), fourier_term("cosh", inc.mode, "sin")};
    }
    return span;
}

// Entry of the spectrum at T whose value matches `value`.
EigenvalueEntry locate_entry(SurfaceKind kind, double T, double value) {
    for (int count = 8;; count *= 2) {
        const auto entries = spectrum(kind, Modulus(T), count);
        for (const auto& e : entries) {
            if (std::abs(e.value - value) <= kMergeTolerance * std::max(1.0, value)) return e;
        }
        if (entries.back().value > value * (1.0 + 1e-6)) break;
        if (count > (1 << 20)) break;
    }
    throw std::logic_error("critical_set: crossing value not found in spectrum");
}

std::vector<IndexRole> table_roles(const EigenvalueEntry& e, int multiplicity) {
    std::vector<IndexRole> roles;
    if (multiplicity == 3) {
        roles.push_back({e.first_index, Character::local_max});
        roles.push_back({e.first_index + 2, Character::local_min});
    } else {
        roles.push_back({e.first_index, Character::local_max});
        roles.push_back({e.first_index + 1, Character::local_max});
        roles.push_back({e.first_index + 2, Character::local_min});
        roles.push_back({e.first_index + 3, Character::local_min});
    }
    return roles;
}

CriticalMetric classify(SurfaceKind kind, double T, const Branch& inc, const Branch& dec, int multiplicity) {
    CriticalMetric cm;
    cm.kind = kind;
    cm.modulus = T;
    cm.increasing = inc;
    cm.decreasing = dec;
    cm.value = branch_value(kind, inc, Modulus(T));
    cm.eigen_multiplicity = multiplicity;
    cm.eigenspace = eigenspace_of(inc, dec);

    const EigenvalueEntry entry = locate_entry(kind, T, cm.value);
    const double delta = std::min(1e-4, T / 100.0);
    for (int j = entry.first_index; j <= entry.last_index; ++j) {
        const double left = sigma_bar(kind, j, Modulus(T - delta));
        const double right = sigma_bar(kind, j, Modulus(T + delta));
        const double into = cm.value - left;
        const double out = right - cm.value;
        if (into > 0.0 && out < 0.0) cm.roles.push_back({j, Character::local_max});
        if (into < 0.0 && out > 0.0) cm.roles.push_back({j, Character::local_min});
    }
    cm.table_agrees = entry.multiplicity() == multiplicity && cm.roles == table_roles(entry, multiplicity);
    return cm;
}

}  // namespace

SupremumResult sup_sigma_mobius(int j) {
    if (j < 1) throw std::invalid_argument("sup_sigma_mobius: j must be >= 1");
    const int k = (j + 1) / 2;
    const double t = mobius_crossing(k, 1);
    SupremumResult r;
    r.kind = SurfaceKind::mobius_band;
    r.j = j;
    r.value = 4.0 * kPi * k * hyp::tanh(2.0 * k * t);
    r.attained = true;
    r.modulus = t;
    return r;
}

SupremumResult sup_sigma_annulus(int j) {
    if (j < 1) throw std::invalid_argument("sup_sigma_annulus: j must be >= 1");
    SupremumResult r;
    r.kind = SurfaceKind::annulus;
    r.j = j;
    if (j % 2 == 1) {
        const int k = (j + 1) / 2;
        const double t10 = solve_t10();
        r.value = 4.0 * kPi * k / t10;
        r.attained = true;
        r.modulus = t10 / k;
    } else if (j == 2) {
        r.value = 4.0 * kPi;
        r.attained = false;
    } else {
        const int k = j / 2;
        const double t = annulus_crossing(k, 1);
        r.value = 4.0 * kPi * k * hyp::tanh(k * t);
        r.attained = true;
        r.modulus = t;
        r.half_cylinder_value = 4.0 * kPi * k * hyp::tanh(k * t / 2.0);
    }
    return r;
}

SupremumResult sup_sigma(SurfaceKind kind, int j) {
    return kind == SurfaceKind::mobius_band ? sup_sigma_mobius(j) : sup_sigma_annulus(j);
}

std::string to_string(Character c) { return c == Character::local_max ? "local_max" : "local_min"; }

std::vector<CriticalMetric> critical_set(SurfaceKind kind, int max_mode) {
    if (max_mode < 1) throw std::invalid_argument("critical_set: max_mode must be >= 1");
    std::vector<CriticalMetric> out;
    if (kind == SurfaceKind::mobius_band) {
        for (int k = 1; k <= max_mode; ++k)
            for (int l = 1; l <= k; ++l)
                out.push_back(classify(kind, mobius_crossing(k, l), lambda_branch(kind, k), mu_branch(kind, l), 4));
    } else {
        const double t10 = solve_t10();
        for (int m = 1; m <= max_mode; ++m) {
            out.push_back(classify(kind, t10 / m, lambda_branch(kind, m), linear_branch(), 3));
            for (int n = 1; n < m; ++n)
                out.push_back(classify(kind, annulus_crossing(m, n), lambda_branch(kind, m), mu_branch(kind, n), 4));
        }
    }
    std::sort(out.begin(), out.end(), [](const CriticalMetric& x, const CriticalMetric& y) { return x.modulus < y.modulus; });
    return out;
}

std::vector<FirstIntersectionMargin> verify_first_intersection_max(int max_mode) {
    std::vector<FirstIntersectionMargin> out;
    const auto M = SurfaceKind::mobius_band;
    for (int k = 1; k <= max_mode; ++k) {
        for (int l = 1; l <= k; ++l) {
            for (int c = 1; c < l && k + c <= max_mode; ++c) {
                FirstIntersectionMargin m;
                m.k = k;
                m.l = l;
                m.c = c;
                m.lower = lambda_bar(M, k, Modulus(mobius_crossing(k, l)));
                m.upper = lambda_bar(M, k + c, Modulus(mobius_crossing(k + c, l - c)));
                m.margin = m.upper - m.lower;
                out.push_back(m);
            }
        }
    }
    return out;
}

std::vector<NoAsymptoteMargin> verify_no_asymptote(int max_even) {
    std::vector<NoAsymptoteMargin> out;
    const double t10 = solve_t10();
    const auto M = SurfaceKind::mobius_band;
    for (int k = 2; k <= max_even; k += 2) {
        NoAsymptoteMargin r;
        r.k = k;
        r.asymptote = lambda_bar(M, k / 2, Modulus::infinity());
        r.t_k1 = mobius_crossing(k, 1);
        r.crossing_value = lambda_bar(M, k, Modulus(r.t_k1));
        r.margin = r.crossing_value - r.asymptote;

        const double a = 2.0 * k;
        r.t_k = detail::root_increasing([a](double T) { return a * hyp::tanh(a * T) - 1.0 / T; },
                                        [a](double T) { return a * a * hyp::sech2(a * T) + 1.0 / (T * T); },
                                        1.0 / (2.0 * a), 1.0);
        r.scaled_t_k = a * r.t_k;

        const double via_t10 = 4.0 * kPi * k / t10;
        const double via_tk = 2.0 * kPi / r.t_k;
        const double via_tanh = 4.0 * kPi * k * hyp::tanh(a * r.t_k);
        r.chain_holds = r.asymptote < via_t10 && std::abs(via_t10 - via_tk) <= 1e-12 * via_t10 &&
                        std::abs(via_tk - via_tanh) <= 1e-12 * via_tk && via_tanh < r.crossing_value &&
                        r.t_k < r.t_k1;
        out.push_back(r);
    }
    return out;
}

}  // namespace steklov
