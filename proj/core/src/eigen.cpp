#include "iep/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace iep {

namespace {

double off_diag_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

EigenPair sym_eigen(const Matrix& a, double tol, int max_sweeps) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw NonSymmetric("sym_eigen: matrix not square");
    const double anorm = fro_norm(a);
    if (!is_symmetric(a, 1e-12 * (1.0 + anorm)))
        throw NonSymmetric("sym_eigen: matrix not symmetric within tolerance");

    Matrix d = a;
    // Symmetrize exactly so the sweep sees identical off-diagonal pairs.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const double avg = 0.5 * (d(i, j) + d(j, i));
            d(i, j) = avg;
            d(j, i) = avg;
        }
    Matrix v = Matrix::identity(n);

    const double threshold = tol * (anorm > 0.0 ? anorm : 1.0);
    int sweep = 0;
    while (off_diag_norm(d) > threshold) {
        if (++sweep > max_sweeps)
            throw NoConvergence("sym_eigen: Jacobi sweep cap exceeded");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = d(p, q);
                if (apq == 0.0) continue;
                // Golub & Van Loan symmetric Schur 2x2.
                const double theta = (d(q, q) - d(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                     : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double dkp = d(k, p), dkq = d(k, q);
                    d(k, p) = c * dkp - s * dkq;
                    d(k, q) = s * dkp + c * dkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double dpk = d(p, k), dqk = d(q, k);
                    d(p, k) = c * dpk - s * dqk;
                    d(q, k) = s * dpk + c * dqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return d(i, i) < d(j, j); });

    EigenPair out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.values[j] = d(src, src);
        // Sign convention: largest-|entry| component nonnegative, ties by
        // lowest index.
        std::size_t imax = 0;
        double amax = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ab = std::abs(v(i, src));
            if (ab > amax) {
                amax = ab;
                imax = i;
            }
        }
        const double sign = (v(imax, src) < 0.0) ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = sign * v(i, src);
    }
    return out;
}

}  // namespace iep
