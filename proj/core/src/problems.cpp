#include "iep/problems.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "iep/eigen.hpp"

namespace iep {

namespace {

Matrix from_rows(std::size_t n, const std::vector<std::vector<double>>& rows) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return m;
}

// Symmetric Toeplitz basis: ones on the k-th super/subdiagonal.
Matrix toeplitz_band(std::size_t n, std::size_t k) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i + k < n; ++i) {
        m(i, i + k) = 1.0;
        m(i + k, i) = 1.0;
    }
    if (k == 0)
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

}  // namespace

IepProblem example1() {
    IepProblem pb;
    pb.n = 5;
    pb.a0 = Matrix(5, 5, 0.0);
    for (std::size_t k = 0; k < 5; ++k) pb.basis.push_back(toeplitz_band(5, k));
    pb.lambda_star = {-5.2361, -1.5876, -0.7639, -0.5555, 18.1431};
    return pb;
}

Vector example1_solution() { return {2, 3, 4, 5, 6}; }

IepProblem example2() {
    IepProblem pb;
    pb.n = 7;
    pb.a0 = Matrix(7, 7, 0.0);
    pb.basis.push_back(from_rows(7, {{-1, 0, 0, 0, 0, 0, 0},
                                     {0, 1, 0, 0, 0, 0, 0},
                                     {0, 0, 1, 0, 0, 0, 0},
                                     {0, 0, 0, 1, 0, 0, 0},
                                     {0, 0, 0, 0, 1, 0, 0},
                                     {0, 0, 0, 0, 0, 1, 0},
                                     {0, 0, 0, 0, 0, 0, 1}}));
    pb.basis.push_back(from_rows(7, {{0, -1, 0, 0, 0, 0, 0},
                                     {-1, 0, 1, 0, 0, 0, 0},
                                     {0, 1, 0, 1, 0, 0, 0},
                                     {0, 0, 1, 0, 1, 0, 0},
                                     {0, 0, 0, 1, 0, 1, 0},
                                     {0, 0, 0, 0, 1, 0, 1},
                                     {0, 0, 0, 0, 0, 1, 0}}));
    pb.basis.push_back(from_rows(7, {{0, 0, -1, 0, 0, 0, 0},
                                     {0, -2, 0, 1, 0, 0, 0},
                                     {-1, 0, 0, 0, 1, 0, 0},
                                     {0, 1, 0, 0, 0, 1, 0},
                                     {0, 0, 1, 0, 0, 0, 1},
                                     {0, 0, 0, 1, 0, 0, 0},
                                     {0, 0, 0, 0, 1, 0, 0}}));
    pb.basis.push_back(from_rows(7, {{0, 0, 0, -1, 0, 0, 0},
                                     {0, 0, -2, 0, 1, 0, 0},
                                     {0, -2, 0, 0, 0, 1, 0},
                                     {-1, 0, 0, 0, 0, 0, 1},
                                     {0, 1, 0, 0, 0, 0, 0},
                                     {0, 0, 1, 0, 0, 0, 0},
                                     {0, 0, 0, 1, 0, 0, 0}}));
    pb.basis.push_back(from_rows(7, {{0, 0, 0, 0, -1, 0, 0},
                                     {0, 0, 0, -2, 0, 1, 0},
                                     {0, 0, -2, 0, 0, 0, 1},
                                     {0, -2, 0, 0, 0, 0, 0},
                                     {-1, 0, 0, 0, 0, 0, 0},
                                     {0, 1, 0, 0, 0, 0, 0},
                                     {0, 0, 1, 0, 0, 0, 0}}));
    pb.basis.push_back(from_rows(7, {{0, 0, 0, 0, 0, -1, 0},
                                     {0, 0, 0, 0, -2, 0, 1},
                                     {0, 0, 0, -2, 0, 0, 0},
                                     {0, 0, -2, 0, 0, 0, 0},
                                     {0, -2, 0, 0, 0, 0, 0},
                                     {-1, 0, 0, 0, 0, 0, 0},
                                     {0, 1, 0, 0, 0, 0, 0}}));
    pb.basis.push_back(from_rows(7, {{0, 0, 0, 0, 0, 0, -1},
                                     {0, 0, 0, 0, 0, -2, 0},
                                     {0, 0, 0, 0, -2, 0, 0},
                                     {0, 0, 0, -2, 0, 0, 0},
                                     {0, 0, -2, 0, 0, 0, 0},
                                     {0, -2, 0, 0, 0, 0, 0},
                                     {-1, 0, 0, 0, 0, 0, 0}}));
    pb.lambda_star = {-35.4513, -13.6805, -9.5675, -8.5489, 8.7666, 11.8220, 20.6596};
    return pb;
}

Vector example2_solution() { return {2, 3, 4, 5, 6, 7, 8}; }

std::pair<IepProblem, Vector> random_problem(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_problem: n must be >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    std::uniform_real_distribution<double> coeff(1.0, 3.0);

    const auto random_sym = [&] {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const double v = entry(rng);
                m(i, j) = v;
                m(j, i) = v;
            }
        return m;
    };

    for (int attempt = 0; attempt < 100; ++attempt) {
        IepProblem pb;
        pb.n = n;
        pb.a0 = random_sym();
        pb.basis.clear();
        for (std::size_t i = 0; i < n; ++i) pb.basis.push_back(random_sym());
        Vector c_star(n);
        for (double& ci : c_star) ci = coeff(rng);

        const EigenPair ep = sym_eigen(assemble(pb, c_star));
        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < n; ++i)
            gap = std::min(gap, ep.values[i + 1] - ep.values[i]);
        if (gap < 1e-3) continue;

        pb.lambda_star = ep.values;
        return {std::move(pb), std::move(c_star)};
    }
    throw GapFailure("random_problem: no instance with spectral gap >= 1e-3 in 100 tries");
}

Matrix fd_jacobian_oracle(const IepProblem& problem, const Vector& c, double h) {
    const std::size_t n = problem.n;
    {
        const EigenPair ep = sym_eigen(assemble(problem, c));
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (ep.values[i + 1] - ep.values[i] <= 10.0 * h)
                throw GapTooSmall("fd_jacobian_oracle: eigenvalue gap <= 10h");
    }
    Matrix j(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        Vector cp = c, cm = c;
        cp[col] += h;
        cm[col] -= h;
        const Vector lp = sym_eigen(assemble(problem, cp)).values;
        const Vector lm = sym_eigen(assemble(problem, cm)).values;
        for (std::size_t row = 0; row < n; ++row)
            j(row, col) = (lp[row] - lm[row]) / (2.0 * h);
    }
    return j;
}

}  // namespace iep
