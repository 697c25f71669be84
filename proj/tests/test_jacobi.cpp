#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "steklov/jacobi_eigen.hpp"

using namespace steklov;

TEST_CASE("diagonal and 2x2 cases") {
    SymmetricMatrix d(3);
    d(0, 0) = 3.0;
    d(1, 1) = -1.0;
    d(2, 2) = 2.0;
    const auto r = jacobi_eigenvalues(d);
    CHECK(r.eigenvalues == std::vector<double>{-1.0, 2.0, 3.0});

    SymmetricMatrix m(2);
    m(0, 0) = 2.0;
    m(0, 1) = m(1, 0) = 1.0;
    m(1, 1) = 2.0;
    const auto e = jacobi_eigenvalues(m).eigenvalues;
    CHECK(e[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e[1] == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(jacobi_eigenvalues(SymmetricMatrix(0)).eigenvalues.empty());
}

TEST_CASE("random symmetric matrices agree with Eigen") {
    std::mt19937 rng(7);
    std::normal_distribution<double> g;
    for (int n : {1, 5, 17, 60}) {
        CAPTURE(n);
        SymmetricMatrix m(static_cast<std::size_t>(n));
        Eigen::MatrixXd ref(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = g(rng);
                m(i, j) = m(j, i) = v;
                ref(i, j) = ref(j, i) = v;
            }
        const auto r = jacobi_eigenvalues(m);
        const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(ref).eigenvalues();
        const double scale = ref.norm();
        for (int i = 0; i < n; ++i) CHECK(std::abs(r.eigenvalues[i] - ev(i)) < 1e-12 * scale);
        CHECK(r.off_norm <= 1e-14 * scale);
    }
}

TEST_CASE("clustered eigenvalues are resolved") {
    // Q diag(1, 1, 1, 1 + 1e-9, 5) Q^T with a Householder Q
    const int n = 5;
    Eigen::VectorXd v(n);
    v << 1, 2, -1, 0.5, 3;
    v.normalize();
    const Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n) - 2 * v * v.transpose();
    Eigen::VectorXd lam(n);
    lam << 1, 1, 1, 1 + 1e-9, 5;
    const Eigen::MatrixXd a = q * lam.asDiagonal() * q.transpose();
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    const auto e = jacobi_eigenvalues(m).eigenvalues;
    for (int i = 0; i < 3; ++i) CHECK(std::abs(e[i] - 1.0) < 1e-14);
    CHECK(std::abs(e[3] - (1 + 1e-9)) < 1e-14);
    CHECK(std::abs(e[4] - 5.0) < 1e-14);
}

TEST_CASE("only the upper triangle is read") {
    SymmetricMatrix m(2);
    m(0, 0) = 1.0;
    m(0, 1) = 2.0;
    m(1, 0) = 1e6;  // ignored
    m(1, 1) = 1.0;
    const auto e = jacobi_eigenvalues(m).eigenvalues;
    CHECK(e[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(e[1] == doctest::Approx(3.0).epsilon(1e-15));
}
