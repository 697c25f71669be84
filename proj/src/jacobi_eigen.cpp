#include "steklov/jacobi_eigen.hpp"

#include <algorithm>
#include <cmath>

namespace steklov {

namespace {

double off_diagonal_norm(const SymmetricMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = i + 1; j < m.n; ++j) s += 2.0 * m(i, j) * m(i, j);
    return std::sqrt(s);
}

}  // namespace

JacobiResult jacobi_eigenvalues(SymmetricMatrix m, double tolerance, int max_sweeps) {
    const std::size_t n = m.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);

    double total = 0.0;
    for (double v : m.a) total += v * v;
    const double target = tolerance * std::sqrt(total);

    JacobiResult res;
    for (res.sweeps = 0; res.sweeps < max_sweeps; ++res.sweeps) {
        res.off_norm = off_diagonal_norm(m);
        if (res.off_norm <= target) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (apq == 0.0) continue;
                const double app = m(p, p), aqq = m(q, q);
                if (std::abs(apq) <= 1e-18 * (std::abs(app) + std::abs(aqq))) {
                    m(p, q) = m(q, p) = 0.0;
                    continue;
                }
                // Rutishauser's rotation: t = tan(phi) chosen as the smaller root.
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                m(p, p) = app - t * apq;
                m(q, q) = aqq + t * apq;
                m(p, q) = m(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = m(r, p), arq = m(r, q);
                    const double np = arp - s * (arq + tau * arp);
                    const double nq = arq + s * (arp - tau * arq);
                    m(r, p) = m(p, r) = np;
                    m(r, q) = m(q, r) = nq;
                }
            }
        }
    }
    res.off_norm = off_diagonal_norm(m);
    res.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.eigenvalues[i] = m(i, i);
    std::sort(res.eigenvalues.begin(), res.eigenvalues.end());
    return res;
}

}  // namespace steklov
