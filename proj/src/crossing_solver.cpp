#include "steklov/crossing_solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "steklov/hyperbolic.hpp"

namespace steklov {

namespace {

std::string no_crossing_message(double a, double b) {
    std::ostringstream os;
    os << "no crossing: a*tanh(a*x) = b*coth(b*x) has no positive root for a=" << a
       << ", b=" << b << " (requires a > b > 0)";
    return os.str();
}

}  // namespace

NoCrossing::NoCrossing(double a, double b)
    : std::domain_error(no_crossing_message(a, b)), a_(a), b_(b) {}

double crossing_function(double a, double b, double x) {
    return a * hyp::tanh(a * x) - b * hyp::coth(b * x);
}

double crossing_function_derivative(double a, double b, double x) {
    return a * a * hyp::sech2(a * x) + b * b * hyp::csch2(b * x);
}

namespace detail {

double root_increasing(const std::function<double(double)>& f,
                       const std::function<double(double)>& df, double lo, double hi,
                       RootOptions opts) {
    int guard = 0;
    while (!(f(lo) < 0.0)) {
        lo *= 0.5;
        if (++guard > 2000 || lo == 0.0) throw std::runtime_error("root_increasing: lower bracket failed");
    }
    if (hi <= lo) hi = 2.0 * lo;
    guard = 0;
    while (!(f(hi) > 0.0)) {
        hi *= 2.0;
        if (++guard > 2000 || !std::isfinite(hi))
            throw std::runtime_error("root_increasing: upper bracket failed");
    }

    for (int i = 0; i < opts.max_bisections; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        (fm < 0.0 ? lo : hi) = mid;
    }

    double x = 0.5 * (lo + hi);
    double fx = f(x);
    for (int i = 0; i < opts.max_polish && fx != 0.0; ++i) {
        const double d = df(x);
        if (!(d > 0.0) || !std::isfinite(d)) break;
        const double next = x - fx / d;
        if (!(next > 0.0)) break;
        const double fn = f(next);
        if (!(std::abs(fn) < std::abs(fx))) break;
        x = next;
        fx = fn;
    }
    return x;
}

}  // namespace detail

CrossingPoint solve_crossing(double a, double b) {
    if (!(b > 0.0) || !(a > b) || !std::isfinite(a)) throw NoCrossing(a, b);

    const auto f = [a, b](double x) { return crossing_function(a, b, x); };
    const auto df = [a, b](double x) { return crossing_function_derivative(a, b, x); };

    CrossingPoint cp;
    cp.a = a;
    cp.b = b;
    cp.x = detail::root_increasing(f, df, 1.0 / (2.0 * (a + b)), 1.0);
    cp.height = a * hyp::tanh(a * cp.x);
    cp.residual = std::abs(f(cp.x));
    return cp;
}

double solve_t10() {
    // t*tanh(t) - 1 is increasing and avoids the pole of 1/t.
    const auto f = [](double t) { return t * hyp::tanh(t) - 1.0; };
    const auto df = [](double t) { return hyp::tanh(t) + t * hyp::sech2(t); };
    return detail::root_increasing(f, df, 1.0, 1.5);
}

CrossingPartials crossing_partials(double a, double b) {
    const CrossingPoint cp = solve_crossing(a, b);
    const double x = cp.x;
    const double ax = a * x;
    const double bx = b * x;
    const double s2a = hyp::sech2(ax);
    const double c2b = hyp::csch2(bx);
    const double denom = a * a * s2a + b * b * c2b;

    CrossingPartials p;
    p.dx_da = (-hyp::tanh(ax) - ax * s2a) / denom;
    // coth(bx) - bx*csch^2(bx) = (sinh cosh - bx) / sinh^2, written without cancellation.
    p.dx_db = hyp::sinh_cosh_minus_t(bx) * c2b / denom;
    p.du_da = -b * b * c2b * p.dx_da;
    p.du_db = a * a * s2a * p.dx_db;
    return p;
}

AuxValues aux_inequalities(double t) {
    if (!(t > 0.0)) throw std::domain_error("aux_inequalities: t must be positive");
    AuxValues v;
    v.f_val = hyp::sinh_cosh_minus_t(t);
    // g'(t) = 2 cosh(t) (t cosh(t) - sinh(t)) / t^3
    if (t < 0.1) {
        const double t2 = t * t;
        v.g_prime = 2.0 * std::cosh(t) *
                    (1.0 / 3.0 + t2 * (1.0 / 30.0 + t2 * (1.0 / 840.0 + t2 / 45360.0)));
    } else {
        v.g_prime = 2.0 * std::cosh(t) * hyp::t_cosh_minus_sinh(t) / (t * t * t);
    }
    v.tanh_gap = hyp::t_minus_tanh(t);
    return v;
}

double mobius_crossing(int k, int l) {
    if (l == 0) return 0.0;
    if (k < l) return std::numeric_limits<double>::infinity();
    if (k < 1 || l < 0) throw std::invalid_argument("mobius_crossing: indices must be nonnegative with k >= 1");
    return solve_crossing(2.0 * k, 2.0 * l - 1.0).x;
}

double annulus_crossing(int m, int n) {
    if (n < 1 || m <= n) throw NoCrossing(m, n);
    return solve_crossing(static_cast<double>(m), static_cast<double>(n)).x;
}

}  // namespace steklov
