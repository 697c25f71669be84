#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "steklov/surface_factory.hpp"

using namespace steklov;

namespace {

double norm(const Vec4& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]); }

const FamilySpec kFamilies[] = {
    {FamilyKind::catenoid_b3, 0, 1}, {FamilyKind::catenoid_b3, 0, 2}, {FamilyKind::annulus_b4, 2, 1},
    {FamilyKind::annulus_b4, 3, 2},  {FamilyKind::mobius_b4, 2, 1},   {FamilyKind::mobius_b4, 4, 3},
};

}  // namespace

TEST_CASE("family validation") {
    CHECK_THROWS_AS(make_family({FamilyKind::catenoid_b3, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_family({FamilyKind::annulus_b4, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_family({FamilyKind::annulus_b4, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_family({FamilyKind::annulus_b4, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_family({FamilyKind::mobius_b4, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_family({FamilyKind::mobius_b4, 4, 2}), std::invalid_argument);
    CHECK_NOTHROW(make_family({FamilyKind::mobius_b4, 6, 5}));
    CHECK(family_kind_from_string("mobius") == FamilyKind::mobius_b4);
    CHECK_THROWS_AS(family_kind_from_string("helicoid"), std::invalid_argument);
}

TEST_CASE("moduli and radii") {
    const auto cat = make_family({FamilyKind::catenoid_b3, 0, 3});
    CHECK(oracle::rel(cat.t_star, oracle::t10 / 3) < 1e-15);
    CHECK(cat.ambient_dim == 3);
    CHECK(cat.topology() == SurfaceKind::annulus);

    const auto mb = make_family({FamilyKind::mobius_b4, 2, 1});
    CHECK(oracle::rel(mb.t_star, oracle::T11) < 1e-15);
    CHECK(mb.topology() == SurfaceKind::mobius_band);
    const double r2 = 4 * std::pow(std::sinh(oracle::T11), 2) + std::pow(std::cosh(2 * oracle::T11), 2);
    CHECK(oracle::rel(mb.radius, std::sqrt(r2)) < 1e-14);
    CHECK(oracle::rel(make_family({FamilyKind::mobius_b4, 4, 1}).t_star, oracle::T21) < 1e-14);
}

TEST_CASE("derivatives match finite differences and the boundary lies on the sphere") {
    for (const auto& spec : kFamilies) {
        const auto fam = make_family(spec);
        CAPTURE(fam.label());
        const double h = 1e-6;
        for (double s : {-0.9, -0.2, 0.0, 0.4, 0.8}) {
            for (double th : {0.0, 0.7, 2.5, 5.9}) {
                const double t = s * fam.t_star;
                const auto p = evaluate(fam, t, th);
                const auto xp = position(fam, t + h, th), xm = position(fam, t - h, th);
                const auto yp = position(fam, t, th + h), ym = position(fam, t, th - h);
                for (int c = 0; c < 4; ++c) {
                    CHECK(std::abs((xp[c] - xm[c]) / (2 * h) - p.dt[c]) < 1e-8);
                    CHECK(std::abs((yp[c] - ym[c]) / (2 * h) - p.dtheta[c]) < 1e-8);
                }
                if (fam.ambient_dim == 3) CHECK(p.x[3] == 0.0);
            }
        }
        for (double th = 0.0; th < 6.3; th += 0.37) {
            CHECK(std::abs(norm(evaluate(fam, fam.t_star, th).x) - 1.0) < 1e-14);
            CHECK(std::abs(norm(evaluate(fam, -fam.t_star, th).x) - 1.0) < 1e-14);
        }
        CHECK_THROWS_AS(evaluate(fam, 1.01 * fam.t_star, 0.0), std::domain_error);
    }
}

TEST_CASE("Möbius family respects the deck involution") {
    for (auto spec : {FamilySpec{FamilyKind::mobius_b4, 2, 1}, FamilySpec{FamilyKind::mobius_b4, 4, 3}}) {
        const auto fam = make_family(spec);
        for (double t : {-0.3, 0.1, 0.5}) {
            for (double th : {0.2, 1.9}) {
                const auto a = position(fam, t * fam.t_star, th);
                const auto b = position(fam, -t * fam.t_star, th + oracle::pi);
                for (int c = 0; c < 4; ++c) CHECK(std::abs(a[c] - b[c]) < 1e-14);
            }
        }
    }
}

TEST_CASE("pointwise identities") {
    for (const auto& spec : kFamilies) {
        const auto fam = make_family(spec);
        CAPTURE(fam.label());
        const auto r = verify_identities(fam, Grid{24, 48});
        CHECK(r.conformal_residual < 1e-12);
        CHECK(r.stress_energy_residual < 1e-12);
        CHECK(r.boundary_norm_residual < 1e-14);
        CHECK(r.free_boundary_angle < 1e-10);
        CHECK(r.harmonic_order > 1.8);
        CHECK(r.steklov_ratio_spread < 1e-10);
        double expected;
        if (spec.kind == FamilyKind::catenoid_b3) {
            expected = 4 * oracle::pi * spec.n / oracle::t10;
        } else {
            const double x = oracle::crossing(spec.m, spec.n);
            const double height = spec.m * std::tanh(spec.m * x);
            expected = (spec.kind == FamilyKind::mobius_b4 ? 2 : 4) * oracle::pi * height;
        }
        CHECK(oracle::rel(r.normalized_eigenvalue, expected) < 1e-12);
    }
    const auto r = verify_identities(make_family({FamilyKind::mobius_b4, 2, 1}), Grid{24, 48});
    CHECK(oracle::rel(r.normalized_eigenvalue, oracle::sup1) < 1e-13);
}

TEST_CASE("second variation sum vanishes on admissible variations") {
    const Grid grid{48, 96};
    const TensorField raw = [](double t, double th) {
        return std::array<double, 3>{1.0 + t * std::cos(th), std::sin(3 * th), 2.0 + t * t + std::cos(2 * th)};
    };
    for (const auto& spec : kFamilies) {
        const auto fam = make_family(spec);
        CAPTURE(fam.label());
        CHECK(std::abs(boundary_constraint(fam, raw, grid)) > 1e-3);
        CHECK_THROWS_AS(q_form_sum(fam, QFormSample{raw, 0.0}, grid), ConstraintError);
        const auto h = make_admissible(fam, raw, grid);
        CHECK(std::abs(h.boundary_constraint_residual) < 1e-12);
        CHECK(std::abs(q_form_sum(fam, h, grid)) < 1e-9);
    }
}

TEST_CASE("injectivity and core multiplicity") {
    const Grid grid{16, 48};
    const auto mb21 = injectivity_scan(make_family({FamilyKind::mobius_b4, 2, 1}), grid);
    CHECK(mb21.injective);
    CHECK(mb21.covering_degree == 1);
    CHECK(mb21.core_multiplicity == 1);
    CHECK(mb21.radius_monotone);

    // the core circle t = 0 maps to (0, 0, n cos mθ, n sin mθ)/r and is wrapped m/2 times
    const auto mb41 = injectivity_scan(make_family({FamilyKind::mobius_b4, 4, 1}), grid);
    CHECK_FALSE(mb41.injective);
    CHECK(mb41.covering_degree == 1);
    CHECK(mb41.core_multiplicity == 2);
    CHECK(mb41.min_separation > 0.1 * mb41.min_edge);
    const double r = make_family({FamilyKind::mobius_b4, 4, 1}).radius;
    const auto a = position(make_family({FamilyKind::mobius_b4, 4, 1}), 0.0, 0.3);
    const auto b = position(make_family({FamilyKind::mobius_b4, 4, 1}), 0.0, 0.3 + oracle::pi / 2);
    CHECK(norm({a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}) < 1e-15 * r + 1e-15);

    const auto mb63 = injectivity_scan(make_family({FamilyKind::mobius_b4, 6, 3}), grid);
    CHECK(mb63.covering_degree == 3);
    CHECK_FALSE(mb63.injective);

    CHECK(injectivity_scan(make_family({FamilyKind::catenoid_b3, 0, 1}), grid).injective);
    const auto cat2 = injectivity_scan(make_family({FamilyKind::catenoid_b3, 0, 2}), grid);
    CHECK_FALSE(cat2.injective);
    CHECK(cat2.covering_degree == 2);
}

TEST_CASE("grid parsing") {
    const auto g = parse_grid("32x64");
    CHECK(g.n_t == 32);
    CHECK(g.n_theta == 64);
    for (const char* bad : {"", "32", "x64", "32x", "3.5x4", "32x64x2", "-4x8", "ax b"})
        CHECK_THROWS_AS(parse_grid(bad), std::invalid_argument);
}
