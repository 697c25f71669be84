#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "steklov/crossing_solver.hpp"
#include "steklov/spectral_core.hpp"

using namespace steklov;

namespace {

const auto A = SurfaceKind::annulus;
const auto MB = SurfaceKind::mobius_band;

std::vector<double> flatten(const std::vector<EigenvalueEntry>& es) {
    std::vector<double> v;
    for (const auto& e : es) v.insert(v.end(), static_cast<std::size_t>(e.multiplicity()), e.value);
    return v;
}

}  // namespace

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Modulus(0.0), std::domain_error);
    CHECK_THROWS_AS(Modulus(-1.0), std::domain_error);
    CHECK_THROWS_AS(Modulus(std::nan("")), std::domain_error);
    CHECK(Modulus::infinity().is_infinite());
    CHECK_FALSE(Modulus(2.0).is_infinite());
    CHECK_THROWS(spectrum(MB, Modulus::infinity(), 3));
}

TEST_CASE("kind names") {
    CHECK(surface_kind_from_string("annulus") == A);
    CHECK(surface_kind_from_string("mobius") == MB);
    CHECK(surface_kind_from_string("mobius_band") == MB);
    CHECK_THROWS_AS(surface_kind_from_string("torus"), std::invalid_argument);
    CHECK(to_string(MB) == "mobius");
}

TEST_CASE("branch values") {
    CHECK(oracle::rel(lambda_bar(A, 1, Modulus(0.6)), oracle::four_pi_tanh_06) < 1e-15);
    CHECK(oracle::rel(lambda_bar(A, 2, Modulus(1.0)), oracle::eight_pi_tanh_2) < 1e-15);
    CHECK(oracle::rel(nu_bar(Modulus(1.0)), 4.0 * oracle::pi) < 1e-15);
    CHECK(oracle::rel(nu_bar(A, Modulus(2.0)), 2.0 * oracle::pi) < 1e-15);
    CHECK_THROWS_AS(nu_bar(MB, Modulus(1.0)), std::invalid_argument);
    // Möbius: λ̄_k uses Fourier mode 2k, μ̄_l uses 2l-1
    CHECK(oracle::rel(lambda_bar(MB, 1, Modulus(0.4)), 4.0 * oracle::pi * std::tanh(0.8)) < 1e-15);
    CHECK(oracle::rel(mu_bar(MB, 2, Modulus(0.4)), 6.0 * oracle::pi / std::tanh(1.2)) < 1e-15);
    CHECK(mu_bar(MB, 1, Modulus(1e-320)) > 1e300);
    CHECK(lambda_branch(MB, 3) == Branch{BranchKind::even_hyperbolic, 6});
    CHECK(mu_branch(MB, 3) == Branch{BranchKind::odd_hyperbolic, 5});
    CHECK_FALSE(admissible(MB, Branch{BranchKind::even_hyperbolic, 3}));
    CHECK_FALSE(admissible(MB, linear_branch()));
    CHECK(admissible(A, Branch{BranchKind::odd_hyperbolic, 4}));
}

TEST_CASE("monotonicity and limits") {
    for (SurfaceKind kind : {A, MB}) {
        for (int k = 1; k <= 6; ++k) {
            // tanh and coth saturate in double once the argument passes ~18
            const int mode = kind == MB ? 2 * k : k;
            for (double T = 1e-3; mode * T < 15.0; T *= 1.1) {
                CHECK(lambda_bar(kind, k, Modulus(1.1 * T)) > lambda_bar(kind, k, Modulus(T)));
                CHECK(mu_bar(kind, k, Modulus(1.1 * T)) < mu_bar(kind, k, Modulus(T)));
            }
        }
    }
    for (int k = 1; k <= 8; ++k) {
        CHECK(std::abs(lambda_bar(MB, k, Modulus(50.0)) - 4.0 * oracle::pi * k) < 1e-10);
        CHECK(std::abs(mu_bar(MB, k, Modulus(50.0)) - 2.0 * oracle::pi * (2 * k - 1)) < 1e-10);
    }
}

TEST_CASE("spectrum equals the brute-force sorted branch list") {
    for (SurfaceKind kind : {A, MB}) {
        for (double T = 0.004; T < 40.0; T *= 1.37) {
            CAPTURE(T);
            const auto got = flatten(spectrum(kind, Modulus(T), 30));
            const auto ref = oracle::brute_spectrum(kind == MB, T, 30);
            REQUIRE(got.size() >= ref.size());
            for (std::size_t i = 0; i < ref.size(); ++i) CHECK(oracle::rel(got[i], ref[i]) < 1e-13);
            CHECK(std::is_sorted(got.begin(), got.end()));
        }
    }
}

TEST_CASE("entries carry indices and branches") {
    const auto es = spectrum(MB, Modulus(0.3), 6);
    REQUIRE(es.size() == 3);
    CHECK(es[0].first_index == 1);
    CHECK(es[0].last_index == 2);
    CHECK(es[0].branches == std::vector<Branch>{{BranchKind::even_hyperbolic, 2}});
    CHECK(es[1].branches == std::vector<Branch>{{BranchKind::even_hyperbolic, 4}});
    CHECK(es[2].branches == std::vector<Branch>{{BranchKind::odd_hyperbolic, 1}});
    CHECK(es[2].last_index == 6);
}

TEST_CASE("crossings merge, near misses do not") {
    const auto at = spectrum(MB, Modulus(mobius_crossing(1, 1)), 4);
    REQUIRE(at.size() == 1);
    CHECK(at[0].multiplicity() == 4);
    CHECK(oracle::rel(at[0].value, oracle::sup1) < 1e-14);

    const auto lin = spectrum(A, Modulus(solve_t10()), 3);
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].multiplicity() == 3);

    const auto hyp = spectrum(A, Modulus(annulus_crossing(3, 1)), 6);
    CHECK(std::any_of(hyp.begin(), hyp.end(), [](const EigenvalueEntry& e) { return e.multiplicity() == 4; }));

    // tanh and coth of one mode become indistinguishable at 1e-9 but never meet
    for (double T : {12.0, 15.0, 30.0}) {
        for (const auto& e : spectrum(A, Modulus(T), 20)) CHECK(e.multiplicity() <= 2);
    }
    // likewise all coth branches approach 4π/T as T -> 0
    for (const auto& e : spectrum(A, Modulus(1e-6), 9)) CHECK(e.multiplicity() <= 2);
    // a crossing that straddles `count` is kept whole
    const auto whole = spectrum(MB, Modulus(mobius_crossing(1, 1)), 2);
    CHECK(whole.back().last_index == 4);
}

TEST_CASE("sigma_bar") {
    for (double T : {0.05, 0.3, oracle::T11, 1.0, 4.0}) {
        for (int k = 1; k <= 8; ++k)
            CHECK(sigma_bar(MB, 2 * k - 1, Modulus(T)) == sigma_bar(MB, 2 * k, Modulus(T)));
    }
    CHECK(std::abs(sigma_bar(A, 2, Modulus(50.0)) - 4.0 * oracle::pi) < 1e-10);
    CHECK(sigma_bar(A, 2, Modulus(5.0)) < 4.0 * oracle::pi);
    CHECK_THROWS(sigma_bar(MB, 0, Modulus(1.0)));
    const auto e = sigma_entry(MB, 3, Modulus(0.3));
    CHECK(e.first_index == 3);
}

TEST_CASE("interval decomposition tiles (0, inf)") {
    for (int k = 1; k <= 12; ++k) {
        CAPTURE(k);
        const auto ivs = mobius_interval_decomposition(k);
        REQUIRE_FALSE(ivs.empty());
        CHECK(ivs.front().lo == 0.0);
        CHECK(ivs.back().hi == std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
            CHECK(ivs[i].hi == ivs[i + 1].lo);
            CHECK(ivs[i].lo < ivs[i].hi);
        }
    }
    const auto one = mobius_interval_decomposition(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].branch == Branch{BranchKind::even_hyperbolic, 2});
    CHECK(oracle::rel(one[0].hi, oracle::T11) < 1e-15);
    CHECK(one[1].branch == Branch{BranchKind::odd_hyperbolic, 1});
}

TEST_CASE("piecewise formula examples") {
    for (double T : {0.01, 0.3, 0.65}) {
        for (int j : {1, 2}) {
            const auto p = sigma_bar_piecewise_mobius(j, Modulus(T));
            CHECK(p.branch == Branch{BranchKind::even_hyperbolic, 2});
            CHECK(p.value == doctest::Approx(lambda_bar(MB, 1, Modulus(T))).epsilon(1e-15));
        }
    }
    const double t21 = mobius_crossing(2, 1), t11 = mobius_crossing(1, 1);
    for (double s : {0.0, 0.3, 0.9}) {
        const double T = t21 + s * (t11 - t21);
        CHECK(sigma_bar_piecewise_mobius(3, Modulus(T)).branch == Branch{BranchKind::odd_hyperbolic, 1});
    }
    for (double T : {t11, 1.0, 10.0})
        CHECK(sigma_bar_piecewise_mobius(2, Modulus(T)).branch == Branch{BranchKind::odd_hyperbolic, 1});
}

TEST_CASE("piecewise formula equals the brute-force spectrum") {
    std::vector<double> ts;
    for (int i = 0; i < 200; ++i) ts.push_back(1e-3 * std::pow(1e4, i / 199.0));
    for (int k = 1; k <= 10; ++k)
        for (const auto& iv : mobius_interval_decomposition(k))
            if (iv.lo > 0.0 && std::isfinite(iv.hi)) ts.push_back(0.5 * (iv.lo + iv.hi));
    for (double T : ts) {
        const auto ref = oracle::brute_spectrum(true, T, 20);
        for (int j = 1; j <= 20; ++j)
            CHECK(oracle::rel(sigma_bar_piecewise_mobius(j, Modulus(T)).value, ref[static_cast<std::size_t>(j - 1)]) < 1e-12);
    }
}
