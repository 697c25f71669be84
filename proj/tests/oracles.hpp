#pragma once

// Reference computations used only by the tests. Nothing here calls the
// library's root finder or spectrum routine.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// Frozen reference values (30-digit mpmath evaluations).
inline constexpr double t10 = 1.19967864025773383;         // tanh t = 1/t
inline constexpr double T11 = 0.658478948462408354;        // artanh(1/sqrt 3)
inline constexpr double T21 = 0.306400937366040646;        // 4 tanh 4T = coth T
inline constexpr double sup1 = 10.8827961854053071;        // 2π√3
inline constexpr double sup3 = 21.1441605205764161;        // 8π tanh(4 T21)
inline constexpr double four_pi_over_t10 = 10.4747806559758933;
inline constexpr double f_at_1 = 0.813430203923509384;     // sinh 1 cosh 1 - 1
inline constexpr double four_pi_tanh_06 = 6.74876389717842829;
inline constexpr double eight_pi_tanh_2 = 24.2286557073930596;

// Plain bisection on a sign change, no derivative information.
inline double bisect(const std::function<long double(long double)>& f, long double lo, long double hi, int iters = 200) {
    long double flo = f(lo);
    for (int i = 0; i < iters; ++i) {
        const long double mid = 0.5L * (lo + hi);
        const long double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return static_cast<double>(0.5L * (lo + hi));
}

// x(a,b) from a tanh(ax) = b coth(bx) by bisection in long double.
inline double crossing(double a, double b) {
    const auto f = [a, b](long double x) {
        return static_cast<long double>(a) * std::tanh(a * x) - static_cast<long double>(b) / std::tanh(b * x);
    };
    return bisect(f, 1e-9L, 60.0L);
}

// Sorted nonzero normalized eigenvalues with multiplicity, listed branch by branch.
inline std::vector<double> brute_spectrum(bool mobius, double T, int count) {
    std::vector<double> v;
    for (int m = 1; m <= 600; ++m) {
        if (mobius) {
            if (m % 2 == 0) v.insert(v.end(), 2, 2.0 * pi * m * std::tanh(m * T));
            else v.insert(v.end(), 2, 2.0 * pi * m / std::tanh(m * T));
        } else {
            v.insert(v.end(), 2, 4.0 * pi * m * std::tanh(m * T));
            v.insert(v.end(), 2, 4.0 * pi * m / std::tanh(m * T));
        }
    }
    if (!mobius) v.push_back(4.0 * pi / T);
    std::sort(v.begin(), v.end());
    v.resize(static_cast<std::size_t>(count));
    return v;
}

inline double brute_sigma(bool mobius, int j, double T) { return brute_spectrum(mobius, T, j).back(); }

struct Peak {
    double value;
    double T;
};

// Max of f over a log grid, then golden-section refinement between the
// neighbours of the best node (the maxima sit at kinks, so the grid alone
// resolves them only to the grid spacing).
inline Peak grid_max(const std::function<double(double)>& f, double lo, double hi, int n = 10000) {
    std::vector<double> ts(static_cast<std::size_t>(n));
    int best = 0;
    double best_v = -INFINITY;
    for (int i = 0; i < n; ++i) {
        ts[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
        const double v = f(ts[static_cast<std::size_t>(i)]);
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    double a = ts[static_cast<std::size_t>(std::max(best - 1, 0))];
    double b = ts[static_cast<std::size_t>(std::min(best + 1, n - 1))];
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && b - a > 1e-16 * b; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    const double t = 0.5 * (a + b);
    const double v = std::max({f(t), fc, fd, best_v});
    return {v, t};
}

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace oracle
