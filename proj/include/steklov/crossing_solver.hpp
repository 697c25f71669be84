#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace steklov {

/// Raised when a tanh branch of frequency a never meets a coth branch of
/// frequency b, i.e. when a <= b.
class NoCrossing : public std::domain_error {
public:
    NoCrossing(double a, double b);
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

private:
    double a_;
    double b_;
};

/// Solution of a*tanh(a*x) = b*coth(b*x) for a > b > 0.
///
/// Möbius crossings T_{k,l} use (a, b) = (2k, 2l-1); annulus crossings
/// t_{m,n} use (a, b) = (m, n).
struct CrossingPoint {
    double a = 0.0;
    double b = 0.0;
    double x = 0.0;       ///< crossing modulus
    double height = 0.0;  ///< a*tanh(a*x), the common branch height
    double residual = 0.0;  ///< |a*tanh(a*x) - b*coth(b*x)|
};

struct CrossingPartials {
    double dx_da = 0.0;
    double dx_db = 0.0;
    double du_da = 0.0;
    double du_db = 0.0;
};

struct AuxValues {
    double f_val = 0.0;     ///< sinh(t)cosh(t) - t
    double g_prime = 0.0;   ///< d/dt [(sinh(t)cosh(t) - t) / t^2]
    double tanh_gap = 0.0;  ///< t - tanh(t)
};

/// F(x) = a*tanh(a*x) - b*coth(b*x); strictly increasing on (0, inf).
double crossing_function(double a, double b, double x);
double crossing_function_derivative(double a, double b, double x);

CrossingPoint solve_crossing(double a, double b);

/// Unique positive root of tanh(t) = 1/t (approximately 1.1996786).
double solve_t10();

/// Closed-form partial derivatives of the crossing modulus x(a,b) and of the
/// height u(a,b) = a*tanh(a*x(a,b)).
CrossingPartials crossing_partials(double a, double b);

AuxValues aux_inequalities(double t);

/// Möbius crossing T_{k,l}: 2k*tanh(2kT) = (2l-1)*coth((2l-1)T).
/// Uses the conventions T_{k,0} = 0 and T_{k,l} = inf when k < l.
double mobius_crossing(int k, int l);

/// Annulus crossing t_{m,n} for m > n >= 1.
double annulus_crossing(int m, int n);

namespace detail {

struct RootOptions {
    int max_bisections = 80;
    int max_polish = 5;
};

/// Root of a strictly increasing function on (0, inf). The bracket is grown
/// from [lo, hi] by halving lo and doubling hi until the signs separate, then
/// bisected and finished with Newton steps that are kept only when they
/// shrink the residual.
double root_increasing(const std::function<double(double)>& f,
                       const std::function<double(double)>& df, double lo, double hi,
                       RootOptions opts = {});

}  // namespace detail

}  // namespace steklov
