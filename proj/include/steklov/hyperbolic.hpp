#pragma once

#include <cmath>
#include <limits>

namespace steklov::hyp {

// Beyond this argument tanh and coth are 1 to double precision.
inline constexpr double kSaturation = 350.0;

inline double tanh(double x) {
    if (x > kSaturation) return 1.0;
    if (x < -kSaturation) return -1.0;
    return std::tanh(x);
}

// coth via expm1 so that small arguments keep full relative accuracy.
// Returns +inf at 0 and for arguments whose result is not representable.
inline double coth(double x) {
    if (x > kSaturation) return 1.0;
    if (x < -kSaturation) return -1.0;
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    const double e = std::expm1(2.0 * x);
    if (e == 0.0) return std::copysign(std::numeric_limits<double>::infinity(), x);
    const double r = (e + 2.0) / e;
    return std::isfinite(r) ? r : std::copysign(std::numeric_limits<double>::infinity(), x);
}

// sech^2 and csch^2 underflow to 0 for large arguments instead of producing inf/inf.
inline double sech2(double x) {
    const double ax = std::abs(x);
    if (ax > kSaturation) return 4.0 * std::exp(-2.0 * ax);
    const double c = std::cosh(ax);
    return 1.0 / (c * c);
}

inline double csch2(double x) {
    const double ax = std::abs(x);
    if (ax == 0.0) return std::numeric_limits<double>::infinity();
    if (ax > kSaturation) return 4.0 * std::exp(-2.0 * ax);
    const double s = std::sinh(ax);
    return 1.0 / (s * s);
}

// sinh(t)cosh(t) - t, accurate near 0.
inline double sinh_cosh_minus_t(double t) {
    if (std::abs(t) < 0.1) {
        const double t2 = t * t;
        // sum_{n>=1} 2^{2n} t^{2n+1} / (2n+1)!
        return t * t2 * (2.0 / 3.0 + t2 * (2.0 / 15.0 + t2 * (4.0 / 315.0 + t2 * (2.0 / 2835.0))));
    }
    return 0.5 * std::sinh(2.0 * t) - t;
}

// t cosh(t) - sinh(t), accurate near 0.
inline double t_cosh_minus_sinh(double t) {
    if (std::abs(t) < 0.1) {
        const double t2 = t * t;
        return t * t2 * (1.0 / 3.0 + t2 * (1.0 / 30.0 + t2 * (1.0 / 840.0 + t2 * (1.0 / 45360.0))));
    }
    return t * std::cosh(t) - std::sinh(t);
}

// t - tanh(t), accurate near 0.
inline double t_minus_tanh(double t) {
    if (std::abs(t) < 0.02) {
        const double t2 = t * t;
        return t * t2 * (1.0 / 3.0 + t2 * (-2.0 / 15.0 + t2 * (17.0 / 315.0 + t2 * (-62.0 / 2835.0))));
    }
    return t - hyp::tanh(t);
}

}  // namespace steklov::hyp
