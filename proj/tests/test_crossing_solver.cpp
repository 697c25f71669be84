#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "steklov/crossing_solver.hpp"
#include "steklov/hyperbolic.hpp"

using namespace steklov;

TEST_CASE("crossing (2,1) is artanh(1/sqrt 3) with height sqrt 3") {
    const auto c = solve_crossing(2, 1);
    CHECK(oracle::rel(c.x, oracle::T11) < 1e-15);
    CHECK(oracle::rel(c.height, std::sqrt(3.0)) < 1e-15);
    CHECK(c.residual <= 1e-14 * 3);
    // 4π times half the height is the first Möbius supremum
    CHECK(oracle::rel(4.0 * oracle::pi * c.height / 2.0, oracle::sup1) < 1e-15);
}

TEST_CASE("no crossing when the tanh frequency does not exceed the coth one") {
    CHECK_THROWS_AS(solve_crossing(1, 2), NoCrossing);
    CHECK_THROWS_AS(solve_crossing(3, 3), NoCrossing);
    CHECK_THROWS_AS(solve_crossing(2, 0), NoCrossing);
    CHECK_THROWS_AS(solve_crossing(-1, -2), NoCrossing);
    try {
        solve_crossing(1, 2);
    } catch (const NoCrossing& e) {
        CHECK(e.a() == 1.0);
        CHECK(e.b() == 2.0);
    }
}

TEST_CASE("crossing (4,1) gives T_{2,1}") {
    const auto c = solve_crossing(4, 1);
    CHECK(oracle::rel(c.x, oracle::T21) < 1e-14);
    CHECK(c.residual <= 1e-14 * 5);
    CHECK(oracle::rel(2.0 * oracle::pi * c.height, oracle::sup3) < 1e-14);
}

TEST_CASE("crossings agree with a long double bisection") {
    for (double a : {1.5, 2.0, 3.0, 4.0, 7.0, 10.0, 19.0, 40.0}) {
        for (double b : {0.5, 1.0, 1.4, 3.0, 9.0, 39.0}) {
            if (!(b < a)) continue;
            CAPTURE(a);
            CAPTURE(b);
            const auto c = solve_crossing(a, b);
            CHECK(oracle::rel(c.x, oracle::crossing(a, b)) < 1e-13);
            CHECK(c.residual <= 1e-12 * c.height);
            CHECK(std::abs(c.height - b / std::tanh(b * c.x)) <= 1e-12 * c.height);
            // a sign change brackets the root
            CHECK(crossing_function(a, b, c.x * (1 - 1e-10)) < 0.0);
            CHECK(crossing_function(a, b, c.x * (1 + 1e-10)) > 0.0);
            CHECK(crossing_function_derivative(a, b, c.x) > 0.0);
        }
    }
}

TEST_CASE("root finder is insensitive to the initial bracket") {
    const auto f = [](double x) { return crossing_function(6, 5, x); };
    const auto df = [](double x) { return crossing_function_derivative(6, 5, x); };
    const double ref = solve_crossing(6, 5).x;
    for (auto [lo, hi] : {std::pair{1e-6, 1e-5}, std::pair{0.01, 100.0}, std::pair{3.0, 4.0}, std::pair{1e-3, 1e-3}}) {
        CHECK(std::abs(detail::root_increasing(f, df, lo, hi) - ref) < 1e-13);
    }
}

TEST_CASE("large frequencies stay finite") {
    const auto c = solve_crossing(400, 399);
    CHECK(std::isfinite(c.x));
    CHECK(c.x > 0.0);
    CHECK(c.residual <= 1e-12 * c.height);
    const auto d = solve_crossing(1000, 1);
    CHECK(oracle::rel(d.x, oracle::crossing(1000, 1)) < 1e-12);
}

TEST_CASE("t_{1,0}") {
    const double t = solve_t10();
    CHECK(oracle::rel(t, oracle::t10) < 1e-15);
    CHECK(std::abs(std::tanh(t) * t - 1.0) < 1e-14);
    CHECK(std::abs(std::tanh(t) - 1.0 / t) <= 1e-15);
    CHECK(t < 2.0);
}

TEST_CASE("partials: signs, finite differences and the u_a > u_b ratio") {
    const double h = 1e-5;
    for (auto [a, b] : {std::pair{2.0, 1.0}, std::pair{3.0, 1.0}, std::pair{8.0, 3.0}, std::pair{2.2, 2.0}}) {
        CAPTURE(a);
        CAPTURE(b);
        const auto p = crossing_partials(a, b);
        CHECK(p.dx_da < 0.0);
        CHECK(p.dx_db > 0.0);
        CHECK(p.du_da > 0.0);
        CHECK(p.du_db > 0.0);
        const auto x = [](double aa, double bb) { return oracle::crossing(aa, bb); };
        const auto u = [&](double aa, double bb) { return aa * std::tanh(aa * x(aa, bb)); };
        CHECK(oracle::rel(oracle::central_diff([&](double s) { return x(s, b); }, a, h), p.dx_da) < 1e-6);
        CHECK(oracle::rel(oracle::central_diff([&](double s) { return x(a, s); }, b, h), p.dx_db) < 1e-6);
        CHECK(oracle::rel(oracle::central_diff([&](double s) { return u(s, b); }, a, h), p.du_da) < 1e-6);
        CHECK(oracle::rel(oracle::central_diff([&](double s) { return u(a, s); }, b, h), p.du_db) < 1e-6);
    }
    const auto p31 = crossing_partials(3, 1);
    CHECK(p31.du_da / p31.du_db > 1.0);
    CHECK_THROWS_AS(crossing_partials(1, 3), NoCrossing);
}

TEST_CASE("auxiliary functions") {
    const auto v1 = aux_inequalities(1.0);
    CHECK(oracle::rel(v1.f_val, oracle::f_at_1) < 1e-15);
    CHECK(v1.tanh_gap == doctest::Approx(1.0 - std::tanh(1.0)).epsilon(1e-15));
    CHECK(aux_inequalities(2.0).g_prime > 0.0);

    // g'(t) against a finite difference of g(t) = (sinh t cosh t - t)/t^2
    const auto g = [](double t) { return (std::sinh(t) * std::cosh(t) - t) / (t * t); };
    for (double t : {0.3, 1.0, 2.0, 5.0})
        CHECK(oracle::rel(aux_inequalities(t).g_prime, oracle::central_diff(g, t, 1e-5)) < 1e-7);

    // t -> 0+: f and t - tanh t vanish, g' tends to 2/3
    const auto v0 = aux_inequalities(1e-6);
    CHECK(v0.f_val > 0.0);
    CHECK(v0.f_val < 1e-17);
    CHECK(v0.tanh_gap > 0.0);
    CHECK(v0.tanh_gap < 1e-17);
    CHECK(v0.g_prime == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

    for (double t = 1e-5; t < 40.0; t *= 1.3) {
        const auto v = aux_inequalities(t);
        CHECK(v.f_val > 0.0);
        CHECK(v.g_prime > 0.0);
        CHECK(v.tanh_gap > 0.0);
    }
    CHECK_THROWS_AS(aux_inequalities(0.0), std::domain_error);
    CHECK_THROWS_AS(aux_inequalities(-1.0), std::domain_error);
}

TEST_CASE("Möbius crossing lattice") {
    CHECK(mobius_crossing(3, 0) == 0.0);
    CHECK(mobius_crossing(1, 2) == std::numeric_limits<double>::infinity());
    CHECK(oracle::rel(mobius_crossing(1, 1), oracle::T11) < 1e-15);
    CHECK(oracle::rel(annulus_crossing(2, 1), oracle::T11) < 1e-15);  // same equation
    for (int k = 1; k <= 10; ++k) {
        for (int l = 1; l <= k; ++l) {
            CAPTURE(k);
            CAPTURE(l);
            CHECK(mobius_crossing(k + 1, l) < mobius_crossing(k, l));
            if (l < k) CHECK(mobius_crossing(k, l) < mobius_crossing(k, l + 1));
        }
    }
}

TEST_CASE("heights increase along antidiagonals") {
    for (double a = 1.5; a <= 9.0; a += 1.5)
        for (double b = 0.75; b < a; b += 0.75)
            for (double c : {0.25, 0.5})
                if (c < b) CHECK(solve_crossing(a + c, b - c).height > solve_crossing(a, b).height);
}

TEST_CASE("overflow-safe hyperbolic helpers") {
    CHECK(hyp::coth(0.0) == std::numeric_limits<double>::infinity());
    CHECK(std::isfinite(hyp::coth(1e-300)));
    CHECK(hyp::coth(1e-8) == doctest::Approx(1e8).epsilon(1e-12));
    CHECK(hyp::coth(1000.0) == 1.0);
    CHECK(hyp::sech2(2000.0) >= 0.0);
    CHECK(hyp::csch2(2000.0) >= 0.0);
    CHECK(std::isfinite(hyp::sech2(2000.0)));
    // Taylor series below 0.05, long double differences above
    for (double t : {1e-4, 1e-3, 0.019, 0.021, 0.09, 0.11, 0.5}) {
        CAPTURE(t);
        const long double lt = t;
        double gap, sc, cs;
        if (t < 0.05) {
            const double t2 = t * t, t3 = t2 * t;
            gap = t3 * (1.0 / 3 - t2 * (2.0 / 15 - t2 * (17.0 / 315 - t2 * 62.0 / 2835)));
            sc = t3 * (2.0 / 3 + t2 * (2.0 / 15 + t2 * (4.0 / 315 + t2 * 2.0 / 2835)));
            cs = t3 * (1.0 / 3 + t2 * (1.0 / 30 + t2 * (1.0 / 840 + t2 / 45360)));
        } else {
            gap = static_cast<double>(lt - std::tanh(lt));
            sc = static_cast<double>(std::sinh(lt) * std::cosh(lt) - lt);
            cs = static_cast<double>(lt * std::cosh(lt) - std::sinh(lt));
        }
        CHECK(oracle::rel(hyp::t_minus_tanh(t), gap) < 1e-12);
        CHECK(oracle::rel(hyp::sinh_cosh_minus_t(t), sc) < 1e-12);
        CHECK(oracle::rel(hyp::t_cosh_minus_sinh(t), cs) < 1e-12);
    }
}
