#include "iep/iep.hpp"

#include <algorithm>
#include <cmath>

#include "iep/dense.hpp"

namespace iep {

void IepProblem::validate() const {
    if (n == 0) throw std::invalid_argument("IepProblem: n must be positive");
    if (a0.rows() != n || a0.cols() != n)
        throw DimensionMismatch("IepProblem: a0 must be n x n");
    if (basis.size() != n)
        throw DimensionMismatch("IepProblem: expected n basis matrices");
    const auto sym_tol = [](const Matrix& m) { return 1e-12 * (1.0 + fro_norm(m)); };
    if (!is_symmetric(a0, sym_tol(a0)))
        throw std::invalid_argument("IepProblem: a0 not symmetric");
    for (const Matrix& ai : basis) {
        if (ai.rows() != n || ai.cols() != n)
            throw DimensionMismatch("IepProblem: basis matrix must be n x n");
        if (!is_symmetric(ai, sym_tol(ai)))
            throw std::invalid_argument("IepProblem: basis matrix not symmetric");
    }
    if (lambda_star.size() != n)
        throw DimensionMismatch("IepProblem: lambda_star must have length n");
    if (!std::is_sorted(lambda_star.begin(), lambda_star.end()))
        throw std::invalid_argument("IepProblem: lambda_star must be ascending");
}

double IepProblem::spectral_gap() const {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < lambda_star.size(); ++i)
        gap = std::min(gap, lambda_star[i + 1] - lambda_star[i]);
    return gap;
}

Matrix assemble(const IepProblem& problem, const Vector& c) {
    if (c.size() != problem.n) throw DimensionMismatch("assemble: c length mismatch");
    Matrix a = problem.a0;
    for (std::size_t i = 0; i < problem.n; ++i) {
        const double ci = c[i];
        const auto& src = problem.basis[i].data();
        auto& dst = a.data();
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += ci * src[k];
    }
    return a;
}

Matrix jacobian(const IepProblem& problem, const Matrix& p) {
    const std::size_t n = problem.n;
    if (p.rows() != n || p.cols() != n) throw DimensionMismatch("jacobian: p shape mismatch");
    Matrix j(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = 0; row < n; ++row) {
            const Vector pi = p.col(row);
            j(row, col) = dot(pi, matvec(problem.basis[col], pi));
        }
    }
    return j;
}

Vector rayleigh(const IepProblem& problem, const Vector& c, const Matrix& p) {
    const std::size_t n = problem.n;
    if (p.rows() != n || p.cols() != n) throw DimensionMismatch("rayleigh: p shape mismatch");
    const Matrix a = assemble(problem, c);
    Vector rho(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector pi = p.col(i);
        rho[i] = dot(pi, matvec(a, pi));
    }
    return rho;
}

Matrix form_y(const IepProblem& problem, const Vector& c_new, const Matrix& p) {
    const std::size_t n = problem.n;
    double lmax = 0.0;
    for (double l : problem.lambda_star) lmax = std::max(lmax, std::abs(l));
    if (problem.spectral_gap() < 1e-12 * (lmax > 0.0 ? lmax : 1.0))
        throw DegenerateSpectrum("form_y: target eigenvalues not distinct enough");

    const Matrix a = assemble(problem, c_new);
    // One matvec per column, then inner products.
    Matrix ap(n, n);
    for (std::size_t j = 0; j < n; ++j) ap.set_col(j, matvec(a, p.col(j)));

    Matrix y(n, n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector apj = ap.col(j);
        for (std::size_t i = 0; i < j; ++i) {
            const double val = dot(p.col(i), apj) / (problem.lambda_star[j] - problem.lambda_star[i]);
            y(i, j) = val;
            y(j, i) = -val;
        }
    }
    return y;
}

CayleyResult cayley_update(const Matrix& p, const Matrix& y) {
    const std::size_t n = p.rows();
    if (y.rows() != n || y.cols() != n || p.cols() != n)
        throw DimensionMismatch("cayley_update: shape mismatch");

    if (fro_norm(y) == 0.0) return {p, 0};  // U = I

    Matrix plus = Matrix::identity(n);   // I + Y/2
    Matrix minus = Matrix::identity(n);  // I - Y/2
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            plus(i, j) += 0.5 * y(i, j);
            minus(i, j) -= 0.5 * y(i, j);
        }

    const Matrix h = matmul(minus, transpose(p));

    CayleyResult out;
    out.p_new = Matrix(n, n);
    LinearSolveSpec spec;
    spec.rel_tol = 1e-14;  // near machine precision, orthogonality depends on it
    for (std::size_t i = 0; i < n; ++i) {
        const Vector hi = h.col(i);
        Vector wi;
        bool need_polish = true;
        try {
            const LinearSolveResult res = qmr_solve(plus, hi, spec);
            out.linear_iters += res.iters_used;
            wi = res.x;
            need_polish = !res.converged;
        } catch (const QmrBreakdown&) {
            need_polish = true;
        }
        if (need_polish) wi = dense_solve(plus, hi);
        // P_new = [w_1 ... w_n]^T, so w_i fills row i.
        for (std::size_t k = 0; k < n; ++k) out.p_new(i, k) = wi[k];
    }

    if (orth_defect(out.p_new) > 1e-10) {
        // Dense re-solve of every column before giving up.
        for (std::size_t i = 0; i < n; ++i) {
            const Vector wi = dense_solve(plus, h.col(i));
            for (std::size_t k = 0; k < n; ++k) out.p_new(i, k) = wi[k];
        }
        if (orth_defect(out.p_new) > 1e-10)
            throw OrthogonalityLoss("cayley_update: orthogonality defect above 1e-10");
    }
    return out;
}

double merit(const Vector& rho, const Vector& lambda_star) {
    return norm2(rho - lambda_star);
}

double lipschitz_constant(const IepProblem& problem) {
    double s = 0.0;
    for (const Matrix& ai : problem.basis) {
        const double nrm = op_norm2(ai);
        s += nrm * nrm;
    }
    return std::sqrt(s);
}

double outer_error(const IepProblem& problem, const Vector& c, const Matrix& p) {
    const Matrix a = assemble(problem, c);
    Matrix e = matmul(transpose(p), matmul(a, p));
    for (std::size_t i = 0; i < problem.n; ++i) e(i, i) -= problem.lambda_star[i];
    return fro_norm(e);
}

}  // namespace iep
