#include "steklov/surface_factory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "steklov/crossing_solver.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

double dot(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }
double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

Vec4 diff(const Vec4& a, const Vec4& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }

// Angle between two nonzero vectors, accurate for nearly parallel inputs.
double angle_between(const Vec4& a, const Vec4& b) {
    const double na = norm(a), nb = norm(b);
    Vec4 ua{}, ub{}, s{}, d{};
    for (int i = 0; i < 4; ++i) {
        ua[i] = a[i] / na;
        ub[i] = b[i] / nb;
        s[i] = ua[i] + ub[i];
        d[i] = ua[i] - ub[i];
    }
    return 2.0 * std::atan2(norm(d), norm(s));
}

double boundary_length_factor(const ImmersionFamily& fam) {
    return fam.topology() == SurfaceKind::mobius_band ? 2.0 * kPi : 4.0 * kPi;
}

// Composite Simpson weights on n (even) intervals of width h.
std::vector<double> simpson_weights(int n, double h) {
    std::vector<double> w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    for (double& x : w) x *= h / 3.0;
    return w;
}

void require_grid(Grid grid, int min_size) {
    if (grid.n_t < min_size || grid.n_theta < min_size)
        throw std::invalid_argument("grid must be at least " + std::to_string(min_size) + "x" +
                                    std::to_string(min_size));
}

// Squared conformal factor λ^2 of the induced metric λ^2 (dt^2 + dθ^2).
double conformal_factor_sq(const SurfacePoint& p) { return 0.5 * (dot(p.dt, p.dt) + dot(p.dtheta, p.dtheta)); }

}  // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::catenoid_b3: return "catenoid";
        case FamilyKind::annulus_b4: return "annulus";
        case FamilyKind::mobius_b4: return "mobius";
    }
    return "?";
}

FamilyKind family_kind_from_string(const std::string& name) {
    if (name == "catenoid" || name == "catenoid_b3") return FamilyKind::catenoid_b3;
    if (name == "annulus" || name == "annulus_b4") return FamilyKind::annulus_b4;
    if (name == "mobius" || name == "mobius_b4") return FamilyKind::mobius_b4;
    throw std::invalid_argument("unknown family '" + name + "' (expected catenoid, annulus or mobius)");
}

std::string ImmersionFamily::label() const {
    std::ostringstream os;
    if (spec.kind == FamilyKind::catenoid_b3)
        os << "CatenoidB3(" << spec.n << ")";
    else
        os << (spec.kind == FamilyKind::annulus_b4 ? "AnnulusB4(" : "MobiusB4(") << spec.m << "," << spec.n << ")";
    return os.str();
}

ImmersionFamily make_family(const FamilySpec& spec) {
    ImmersionFamily fam;
    fam.spec = spec;
    if (spec.kind == FamilyKind::catenoid_b3) {
        if (spec.n < 1) throw std::invalid_argument("catenoid: n must be >= 1");
        fam.spec.m = 0;
        const double t10 = solve_t10();
        fam.t_star = t10 / spec.n;
        fam.radius = std::hypot(std::cosh(t10), t10);
        fam.ambient_dim = 3;
        return fam;
    }
    if (spec.n < 1 || spec.m <= spec.n)
        throw std::invalid_argument(fam.label() + ": requires m > n >= 1");
    if (spec.kind == FamilyKind::mobius_b4 && (spec.m % 2 != 0 || spec.n % 2 != 1))
        throw std::invalid_argument(fam.label() + ": the Möbius family requires m even and n odd");
    const double m = spec.m, n = spec.n;
    fam.t_star = solve_crossing(m, n).x;
    fam.radius = std::hypot(m * std::sinh(n * fam.t_star), n * std::cosh(m * fam.t_star));
    fam.ambient_dim = 4;
    return fam;
}

Vec4 position(const ImmersionFamily& fam, double t, double theta) {
    const double r = fam.radius;
    const double n = fam.spec.n;
    if (fam.spec.kind == FamilyKind::catenoid_b3) {
        const double c = std::cosh(n * t);
        return {c * std::cos(n * theta) / r, c * std::sin(n * theta) / r, n * t / r, 0.0};
    }
    const double m = fam.spec.m;
    const double a = m * std::sinh(n * t) / r;
    const double b = n * std::cosh(m * t) / r;
    return {a * std::cos(n * theta), a * std::sin(n * theta), b * std::cos(m * theta), b * std::sin(m * theta)};
}

SurfacePoint evaluate(const ImmersionFamily& fam, double t, double theta) {
    if (!(std::abs(t) <= fam.t_star * (1.0 + 1e-12)))
        throw std::domain_error(fam.label() + ": t outside [-T*, T*]");
    SurfacePoint p;
    p.x = position(fam, t, theta);
    const double r = fam.radius;
    const double n = fam.spec.n;
    const double cn = std::cos(n * theta), sn = std::sin(n * theta);
    if (fam.spec.kind == FamilyKind::catenoid_b3) {
        const double ch = std::cosh(n * t), sh = std::sinh(n * t);
        p.dt = {n * sh * cn / r, n * sh * sn / r, n / r, 0.0};
        p.dtheta = {-n * ch * sn / r, n * ch * cn / r, 0.0, 0.0};
        return p;
    }
    const double m = fam.spec.m;
    const double cm = std::cos(m * theta), sm = std::sin(m * theta);
    const double shn = std::sinh(n * t), chn = std::cosh(n * t);
    const double shm = std::sinh(m * t), chm = std::cosh(m * t);
    const double mn = m * n / r;
    p.dt = {mn * chn * cn, mn * chn * sn, mn * shm * cm, mn * shm * sm};
    p.dtheta = {-mn * shn * sn, mn * shn * cn, -mn * chm * sm, mn * chm * cm};
    return p;
}

IdentityReport verify_identities(const ImmersionFamily& fam, Grid grid) {
    require_grid(grid, 2);
    IdentityReport rep;
    const double T = fam.t_star;
    const double h = T / 512.0;

    const auto laplacian = [&fam](double t, double th, double step) {
        const Vec4 c = position(fam, t, th);
        const Vec4 tp = position(fam, t + step, th), tm = position(fam, t - step, th);
        const Vec4 pp = position(fam, t, th + step), pm = position(fam, t, th - step);
        double worst = 0.0;
        for (int i = 0; i < 4; ++i)
            worst = std::max(worst, std::abs((tp[i] + tm[i] + pp[i] + pm[i] - 4.0 * c[i]) / (step * step)));
        return worst;
    };

    for (int i = 0; i <= grid.n_t; ++i) {
        const double t = -T + 2.0 * T * i / grid.n_t;
        for (int j = 0; j < grid.n_theta; ++j) {
            const double th = 2.0 * kPi * j / grid.n_theta;
            const SurfacePoint p = evaluate(fam, t, th);
            const double d = dot(p.dt, p.dtheta);
            const double gap = dot(p.dt, p.dt) - dot(p.dtheta, p.dtheta);
            rep.conformal_residual = std::max(rep.conformal_residual, std::abs(d) + std::abs(gap));
            // sum_i τ(u_i) = [[gap/2, d], [d, -gap/2]] for the conformal metric λ^2(dt^2 + dθ^2).
            rep.stress_energy_residual =
                std::max(rep.stress_energy_residual, std::sqrt(0.5 * gap * gap + 2.0 * d * d));

            if (i == 0 || i == grid.n_t) {
                rep.boundary_norm_residual = std::max(rep.boundary_norm_residual, std::abs(norm(p.x) - 1.0));
                Vec4 conormal = p.dt;
                if (i == 0)
                    for (double& v : conormal) v = -v;
                rep.free_boundary_angle = std::max(rep.free_boundary_angle, angle_between(p.x, conormal));
            } else if (std::abs(t) + h <= T) {
                rep.harmonic_residual = std::max(rep.harmonic_residual, laplacian(t, th, h));
                rep.harmonic_residual_half = std::max(rep.harmonic_residual_half, laplacian(t, th, 0.5 * h));
            }
        }
    }
    rep.harmonic_order = std::log2(rep.harmonic_residual / rep.harmonic_residual_half);

    // u_t = c u on t = T*, with c read off at θ = 0.
    const SurfacePoint p0 = evaluate(fam, T, 0.0);
    rep.steklov_ratio = dot(p0.dt, p0.x) / dot(p0.x, p0.x);
    for (int j = 0; j < grid.n_theta; ++j) {
        const SurfacePoint p = evaluate(fam, T, 2.0 * kPi * j / grid.n_theta);
        for (int i = 0; i < 4; ++i)
            rep.steklov_ratio_spread = std::max(rep.steklov_ratio_spread, std::abs(p.dt[i] - rep.steklov_ratio * p.x[i]));
    }
    rep.normalized_eigenvalue = rep.steklov_ratio * boundary_length_factor(fam);
    return rep;
}

double boundary_constraint(const ImmersionFamily& fam, const TensorField& h, Grid grid) {
    require_grid(grid, 3);
    const double dth = 2.0 * kPi / grid.n_theta;
    double sum = 0.0;
    for (double t : {-fam.t_star, fam.t_star}) {
        for (int j = 0; j < grid.n_theta; ++j) {
            const double th = j * dth;
            const double lambda = std::sqrt(conformal_factor_sq(evaluate(fam, t, th)));
            // h(T,T) ds with T = λ^{-1} ∂_θ and ds = λ dθ
            sum += h(t, th)[2] / lambda * dth;
        }
    }
    return sum;
}

QFormSample make_admissible(const ImmersionFamily& fam, TensorField h, Grid grid) {
    const ImmersionFamily f = fam;
    const TensorField metric = [f](double t, double th) {
        const double l2 = conformal_factor_sq(evaluate(f, t, th));
        return std::array<double, 3>{l2, 0.0, l2};
    };
    const double kappa = boundary_constraint(fam, h, grid) / boundary_constraint(fam, metric, grid);
    QFormSample sample;
    sample.h = [h = std::move(h), metric, kappa](double t, double th) {
        auto v = h(t, th);
        const auto g = metric(t, th);
        for (int i = 0; i < 3; ++i) v[i] -= kappa * g[i];
        return v;
    };
    sample.boundary_constraint_residual = boundary_constraint(fam, sample.h, grid);
    return sample;
}

double q_form_sum(const ImmersionFamily& fam, const QFormSample& sample, Grid grid) {
    require_grid(grid, 3);
    if (grid.n_t % 2 != 0) ++grid.n_t;  // Simpson needs an even interval count

    const double L = boundary_length_factor(fam) * std::sqrt(conformal_factor_sq(evaluate(fam, fam.t_star, 0.0)));
    const double constraint = boundary_constraint(fam, sample.h, grid);
    if (std::abs(constraint) > 1e-8 * L)
        throw ConstraintError("variation violates the boundary length constraint: integral = " +
                              std::to_string(constraint));

    const double T = fam.t_star;
    const double dt = 2.0 * T / grid.n_t;
    const double dth = 2.0 * kPi / grid.n_theta;
    const auto wt = simpson_weights(grid.n_t, dt);

    double area_term = 0.0;
    for (int i = 0; i <= grid.n_t; ++i) {
        const double t = -T + i * dt;
        for (int j = 0; j < grid.n_theta; ++j) {
            const double th = j * dth;
            const SurfacePoint p = evaluate(fam, t, th);
            const double gap = dot(p.dt, p.dt) - dot(p.dtheta, p.dtheta);
            const double d = dot(p.dt, p.dtheta);
            const auto h = sample.h(t, th);
            // <Σ τ, h>_g da = λ^{-2} Σ_ab τ_ab h_ab dt dθ
            const double contraction = 0.5 * gap * h[0] + 2.0 * d * h[1] - 0.5 * gap * h[2];
            area_term += wt[i] * dth * contraction / conformal_factor_sq(p);
        }
    }

    // σ of the induced metric: u_η = λ^{-1} u_t = σ u on the boundary.
    const SurfacePoint pb = evaluate(fam, T, 0.0);
    const double sigma = dot(pb.dt, pb.x) / dot(pb.x, pb.x) / std::sqrt(conformal_factor_sq(pb));

    double boundary_term = 0.0;
    for (double t : {-T, T}) {
        for (int j = 0; j < grid.n_theta; ++j) {
            const double th = j * dth;
            const SurfacePoint p = evaluate(fam, t, th);
            boundary_term += dot(p.x, p.x) * sample.h(t, th)[2] / std::sqrt(conformal_factor_sq(p)) * dth;
        }
    }
    return -area_term - 0.5 * sigma * boundary_term;
}

InjectivityReport injectivity_scan(const ImmersionFamily& fam, Grid grid, double separation_tol) {
    require_grid(grid, 3);
    const bool mobius = fam.topology() == SurfaceKind::mobius_band;
    if (mobius && grid.n_theta % 2 != 0) ++grid.n_theta;

    InjectivityReport rep;
    const double T = fam.t_star;

    // Largest d with u(t, θ + 2π/d) = u(t, θ).
    const int max_d = std::max(fam.spec.m, fam.spec.n);
    for (int d = max_d; d >= 2; --d) {
        bool periodic = true;
        for (int s = 0; s < 37 && periodic; ++s) {
            const double t = -T + 2.0 * T * (s + 0.5) / 37.0;
            const double th = 0.17 + 2.0 * kPi * s / 37.0;
            periodic = norm(diff(position(fam, t, th + 2.0 * kPi / d), position(fam, t, th))) <= 1e-12;
        }
        if (periodic) {
            rep.covering_degree = d;
            break;
        }
    }

    // Largest d with u(0, θ + P/d) = u(0, θ), P the period of the core circle.
    const double core_period = mobius ? kPi : 2.0 * kPi;
    for (int d = 2 * max_d; d >= 2; --d) {
        bool periodic = true;
        for (int s = 0; s < 37 && periodic; ++s) {
            const double th = 0.17 + 2.0 * kPi * s / 37.0;
            periodic = norm(diff(position(fam, 0.0, th + core_period / d), position(fam, 0.0, th))) <= 1e-12;
        }
        if (periodic) {
            rep.core_multiplicity = d;
            break;
        }
    }

    rep.radius_monotone = true;
    double prev = dot(position(fam, 0.0, 0.0), position(fam, 0.0, 0.0));
    for (int i = 1; i <= 512; ++i) {
        const Vec4 x = position(fam, T * i / 512.0, 0.3);
        const double r2 = dot(x, x);
        if (!(r2 > prev)) rep.radius_monotone = false;
        prev = r2;
    }

    // Image nodes, one per point of the quotient.
    const int nt = grid.n_t, nth = grid.n_theta;
    const auto node_t = [&](int i) { return -T + 2.0 * T * i / nt; };
    const auto node_th = [&](int j) { return 2.0 * kPi * j / nth; };
    std::vector<Vec4> nodes;
    std::vector<bool> on_core;
    for (int i = 0; i <= nt; ++i) {
        for (int j = 0; j < nth; ++j) {
            if (mobius) {
                const int mi = nt - i;
                if (mi > i || (mi == i && j >= nth / 2)) continue;
            }
            nodes.push_back(position(fam, node_t(i), node_th(j)));
            on_core.push_back(2 * i == nt);
        }
    }

    rep.min_edge = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= nt; ++i) {
        for (int j = 0; j < nth; ++j) {
            const Vec4 x = position(fam, node_t(i), node_th(j));
            rep.min_edge = std::min(rep.min_edge, norm(diff(x, position(fam, node_t(i), node_th(j + 1)))));
            if (i < nt) rep.min_edge = std::min(rep.min_edge, norm(diff(x, position(fam, node_t(i + 1), node_th(j)))));
        }
    }

    if (rep.covering_degree > 1) {
        rep.injective = false;
        rep.min_separation = 0.0;
        return rep;
    }

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            if (on_core[a] && on_core[b]) continue;
            double s = 0.0;
            for (int i = 0; i < 4; ++i) {
                const double d = nodes[a][i] - nodes[b][i];
                s += d * d;
            }
            best = std::min(best, s);
        }
    }
    rep.min_separation = std::sqrt(best);
    rep.injective = rep.core_multiplicity == 1 && rep.min_separation > separation_tol * rep.min_edge;
    return rep;
}

}  // namespace steklov
