#include "steklov/dtn_oracle.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "steklov/jacobi_eigen.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kChunk = 64;

// Node classes of the (n_t+1) x n_theta cylinder grid. On the Möbius band
// (i,j) ~ (n_t-i, j+n_theta/2); the representative is the copy with larger
// i, ties going to the smaller j, so boundary classes sit on t = +T and the
// interior classes form the fundamental domain t >= 0 with its seam row.
class NodeClasses {
public:
    NodeClasses(SurfaceKind kind, int n_t, int n_theta) : kind_(kind), n_t_(n_t), n_theta_(n_theta) {
        const std::size_t total = static_cast<std::size_t>(n_t + 1) * n_theta;
        slot_.assign(total, -1);
        boundary_.assign(total, false);
        for (int i = 0; i <= n_t; ++i) {
            for (int j = 0; j < n_theta; ++j) {
                const auto [ci, cj] = canon(i, j);
                if (ci != i || cj != j) continue;
                const bool on_boundary = i == 0 || i == n_t;
                auto& list = on_boundary ? boundary_reps_ : interior_reps_;
                slot_[flat(i, j)] = static_cast<int>(list.size());
                boundary_[flat(i, j)] = on_boundary;
                list.emplace_back(i, j);
            }
        }
    }

    std::pair<int, int> canon(int i, int j) const {
        j = ((j % n_theta_) + n_theta_) % n_theta_;
        if (kind_ == SurfaceKind::mobius_band) {
            const int i2 = n_t_ - i;
            const int j2 = (j + n_theta_ / 2) % n_theta_;
            if (i2 > i || (i2 == i && j2 < j)) return {i2, j2};
        }
        return {i, j};
    }

    // (is_boundary, slot) of the class holding node (i,j).
    std::pair<bool, int> lookup(int i, int j) const {
        const auto [ci, cj] = canon(i, j);
        return {boundary_[flat(ci, cj)], slot_[flat(ci, cj)]};
    }

    const std::vector<std::pair<int, int>>& interior() const { return interior_reps_; }
    const std::vector<std::pair<int, int>>& boundary() const { return boundary_reps_; }

private:
    std::size_t flat(int i, int j) const { return static_cast<std::size_t>(i) * n_theta_ + j; }

    SurfaceKind kind_;
    int n_t_, n_theta_;
    std::vector<int> slot_;
    std::vector<bool> boundary_;
    std::vector<std::pair<int, int>> interior_reps_, boundary_reps_;
};

void check_problem(const OracleProblem& p) {
    if (!(p.T > 0.0) || !std::isfinite(p.T)) throw std::invalid_argument("oracle needs finite T > 0");
    if (!(p.boundary_weight > 0.0) || !std::isfinite(p.boundary_weight))
        throw std::invalid_argument("boundary weight must be positive");
    if (p.grid.n_t < 2) throw std::invalid_argument("oracle needs n_t >= 2");
    if (p.grid.n_theta < 4 || p.grid.n_theta % 2 != 0)
        throw std::invalid_argument("oracle needs an even n_theta >= 4");
    const double nodes = static_cast<double>(p.grid.n_t + 1) * p.grid.n_theta;
    if (nodes > 4e6) throw std::invalid_argument("oracle grid too large");
}

double length_factor(SurfaceKind kind) { return kind == SurfaceKind::annulus ? 4.0 * kPi : 2.0 * kPi; }

}  // namespace

std::vector<double> DtnMatrix::apply(std::span<const double> data) const {
    if (data.size() != size) throw std::invalid_argument("boundary data size mismatch");
    std::vector<double> out(size, 0.0);
    for (std::size_t i = 0; i < size; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < size; ++j) s += entries[i * size + j] * data[j];
        out[i] = s;
    }
    return out;
}

double DtnMatrix::boundary_length() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

DtnMatrix assemble_dtn(const OracleProblem& p) {
    check_problem(p);
    const int n_t = p.grid.n_t;
    const int n_theta = p.grid.n_theta;
    const double ht = 2.0 * p.T / n_t;
    const double hth = 2.0 * kPi / n_theta;
    const double wt = 1.0 / (ht * ht);
    const double wth = 1.0 / (hth * hth);

    const NodeClasses classes(p.kind, n_t, n_theta);
    const auto& interior = classes.interior();
    const auto& boundary = classes.boundary();
    const int ni = static_cast<int>(interior.size());
    const int nb = static_cast<int>(boundary.size());

    DtnMatrix out;
    out.size = static_cast<std::size_t>(nb);
    out.entries.assign(out.size * out.size, 0.0);
    out.weights.assign(out.size, hth * p.boundary_weight);
    out.nodes.reserve(out.size);
    for (const auto& [i, j] : boundary) out.nodes.push_back({-p.T + i * ht, j * hth});

    // Interior 5-point system A u = B g for boundary data g.
    std::vector<Eigen::Triplet<double>> a_trip, b_trip;
    a_trip.reserve(static_cast<std::size_t>(ni) * 5);
    const int steps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (int r = 0; r < ni; ++r) {
        const auto [i, j] = interior[r];
        a_trip.emplace_back(r, r, 2.0 * wt + 2.0 * wth);
        for (const auto& s : steps) {
            const double w = s[0] != 0 ? wt : wth;
            const auto [on_b, slot] = classes.lookup(i + s[0], j + s[1]);
            if (on_b) b_trip.emplace_back(r, slot, w);
            else a_trip.emplace_back(r, slot, -w);
        }
    }
    Eigen::SparseMatrix<double> a(ni, ni), b(ni, nb);
    a.setFromTriplets(a_trip.begin(), a_trip.end());
    b.setFromTriplets(b_trip.begin(), b_trip.end());

    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
    if (ni > 0) {
        solver.compute(a);
        if (solver.info() != Eigen::Success) throw NumericalError("harmonic extension factorization failed", INFINITY);
    }

    // Outward normal derivative (3u_b - 4u_{b-1} + u_{b-2}) / (2 h_t f).
    const double scale = 1.0 / (2.0 * ht * p.boundary_weight);
    double worst = 0.0;
    for (int c0 = 0; c0 < nb; c0 += kChunk) {
        const int cols = std::min(kChunk, nb - c0);
        Eigen::MatrixXd rhs = Eigen::MatrixXd(b.middleCols(c0, cols));
        Eigen::MatrixXd u;
        if (ni > 0) {
            u = solver.solve(rhs);
            if (solver.info() != Eigen::Success) throw NumericalError("harmonic extension solve failed", INFINITY);
            const double rn = rhs.norm();
            const double res = rn > 0.0 ? (a * u - rhs).norm() / rn : 0.0;
            worst = std::max(worst, res);
            if (!(res <= 1e-10))
                throw NumericalError("harmonic extension residual " + std::to_string(res) + " exceeds 1e-10", res);
        }
        for (int r = 0; r < nb; ++r) {
            const auto [i, j] = boundary[r];
            const int dir = i == n_t ? 1 : -1;
            double* row = &out.entries[static_cast<std::size_t>(r) * out.size];
            if (r >= c0 && r < c0 + cols) row[r] += 3.0 * scale;
            const double coef[2] = {-4.0, 1.0};
            for (int d = 1; d <= 2; ++d) {
                const auto [on_b, slot] = classes.lookup(i - dir * d, j);
                const double w = coef[d - 1] * scale;
                if (on_b) {
                    if (slot >= c0 && slot < c0 + cols) row[slot] += w;
                } else {
                    for (int c = 0; c < cols; ++c) row[c0 + c] += w * u(slot, c);
                }
            }
        }
    }
    out.solve_residual = worst;
    return out;
}

double weighted_asymmetry(const DtnMatrix& d) {
    double diff = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < d.size; ++i) {
        for (std::size_t j = 0; j < d.size; ++j) {
            const double wij = d.weights[i] * d(i, j);
            diff = std::max(diff, std::abs(wij - d.weights[j] * d(j, i)));
            scale = std::max(scale, std::abs(wij));
        }
    }
    return scale > 0.0 ? diff / scale : 0.0;
}

double max_row_sum(const DtnMatrix& d) {
    double worst = 0.0;
    for (std::size_t i = 0; i < d.size; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < d.size; ++j) s += d(i, j);
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

double rayleigh_quotient(const DtnMatrix& d, std::span<const double> data) {
    const auto du = d.apply(data);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < d.size; ++i) {
        num += d.weights[i] * data[i] * du[i];
        den += d.weights[i] * data[i] * data[i];
    }
    if (!(den > 0.0)) throw std::invalid_argument("Rayleigh quotient of zero data");
    return num / den;
}

std::vector<double> oracle_spectrum(const DtnMatrix& d, int count) {
    if (count < 1) throw std::invalid_argument("count must be positive");
    // W^{1/2} D W^{-1/2}, symmetrized.
    SymmetricMatrix s(d.size);
    for (std::size_t i = 0; i < d.size; ++i) {
        for (std::size_t j = i; j < d.size; ++j) {
            const double sij = std::sqrt(d.weights[i] / d.weights[j]) * d(i, j);
            const double sji = std::sqrt(d.weights[j] / d.weights[i]) * d(j, i);
            s(i, j) = s(j, i) = 0.5 * (sij + sji);
        }
    }
    auto ev = jacobi_eigenvalues(std::move(s)).eigenvalues;
    if (ev.size() > static_cast<std::size_t>(count)) ev.resize(static_cast<std::size_t>(count));
    return ev;
}

std::vector<double> oracle_spectrum(const OracleProblem& p, int count) {
    return oracle_spectrum(assemble_dtn(p), count);
}

std::vector<double> closed_form_normalized(SurfaceKind kind, double T, int count) {
    std::vector<double> out{0.0};
    for (const auto& e : spectrum(kind, Modulus(T), count)) {
        for (int m = 0; m < e.multiplicity() && static_cast<int>(out.size()) <= count; ++m) out.push_back(e.value);
    }
    return out;
}

ConvergenceReport convergence_study(const OracleProblem& p, std::span<const Grid> levels, int count) {
    if (levels.size() < 3) throw std::invalid_argument("convergence study needs at least 3 levels");
    if (count < 1) throw std::invalid_argument("count must be positive");
    ConvergenceReport rep;
    const auto exact = closed_form_normalized(p.kind, p.T, count);
    rep.exact.assign(exact.begin() + 1, exact.end());
    const double length = length_factor(p.kind) * p.boundary_weight;

    for (const Grid& g : levels) {
        OracleProblem q = p;
        q.grid = g;
        const auto ev = oracle_spectrum(q, count + 1);
        if (static_cast<int>(ev.size()) < count + 1) throw std::invalid_argument("grid too coarse for requested count");
        ConvergenceLevel lv;
        lv.grid = g;
        lv.h = 2.0 * p.T / g.n_t;
        for (int k = 0; k < count; ++k) {
            lv.normalized.push_back(ev[static_cast<std::size_t>(k) + 1] * length);
            lv.errors.push_back(std::abs(lv.normalized.back() - rep.exact[static_cast<std::size_t>(k)]));
            lv.max_error = std::max(lv.max_error, lv.errors.back());
        }
        rep.levels.push_back(std::move(lv));
    }

    // Eigenvalues the stencil reproduces exactly (the linear profile) carry
    // only roundoff; their ratios are noise.
    const double floor = 1e-10 * std::max(1.0, rep.exact.back());
    rep.eigen_orders.assign(static_cast<std::size_t>(count), {});
    for (std::size_t l = 0; l + 1 < rep.levels.size(); ++l) {
        const auto& a = rep.levels[l];
        const auto& b = rep.levels[l + 1];
        const double ratio = std::log(a.h / b.h);
        rep.pair_orders.push_back(std::log(a.max_error / b.max_error) / ratio);
        for (int k = 0; k < count; ++k) {
            const double ea = a.errors[static_cast<std::size_t>(k)];
            const double eb = b.errors[static_cast<std::size_t>(k)];
            rep.eigen_orders[static_cast<std::size_t>(k)].push_back(
                ea > floor && eb > floor ? std::log(ea / eb) / ratio : std::numeric_limits<double>::quiet_NaN());
        }
    }
    rep.observed_order = rep.pair_orders.back();

    const std::size_t n = rep.levels.size();
    const auto& c0 = rep.levels[n - 3];
    const auto& c1 = rep.levels[n - 2];
    const auto& c2 = rep.levels[n - 1];
    double d01 = 0.0, d12 = 0.0;
    for (int k = 0; k < count; ++k) {
        d01 = std::max(d01, std::abs(c0.normalized[static_cast<std::size_t>(k)] - c1.normalized[static_cast<std::size_t>(k)]));
        d12 = std::max(d12, std::abs(c1.normalized[static_cast<std::size_t>(k)] - c2.normalized[static_cast<std::size_t>(k)]));
    }
    rep.self_order = std::log(d01 / d12) / std::log(c1.h / c2.h);
    return rep;
}

}  // namespace steklov
