#include "iep/linsolve.hpp"

#include <algorithm>
#include <cmath>

namespace iep {

namespace {

constexpr double kBreakdownTiny = 1e-30;

double rel_residual(const Matrix& m, const Vector& b, const Vector& x, double bnorm) {
    return norm2(b - matvec(m, x)) / bnorm;
}

}  // namespace

LinearSolveResult qmr_solve(const Matrix& m, const Vector& b, const LinearSolveSpec& spec) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionMismatch("qmr_solve: square matrix required");
    if (b.size() != n) throw DimensionMismatch("qmr_solve: rhs length mismatch");

    LinearSolveResult out;
    const double bnorm = norm2(b);
    if (bnorm == 0.0) {
        out.x.assign(n, 0.0);
        out.converged = true;
        return out;
    }

    Vector x = spec.initial_guess.empty() ? Vector(n, 0.0) : spec.initial_guess;
    const int max_iters = spec.max_iters > 0 ? spec.max_iters : static_cast<int>(10 * n);

    Vector r = b - matvec(m, x);
    Vector v_tld = r;
    double rho = norm2(v_tld);
    Vector w_tld = r;
    double xi = norm2(w_tld);

    double gamma_old = 1.0;
    double eta = -1.0;
    double theta_old = 0.0;
    double eps = 1.0;

    Vector p(n, 0.0), q(n, 0.0), d(n, 0.0), s(n, 0.0);
    Vector best_x = x;
    double best_res = rel_residual(m, b, x, bnorm);

    for (int it = 1; it <= max_iters; ++it) {
        if (std::abs(rho) < kBreakdownTiny || std::abs(xi) < kBreakdownTiny)
            throw QmrBreakdown("qmr: Lanczos vector norm underflow");
        const Vector v = (1.0 / rho) * v_tld;
        const Vector w = (1.0 / xi) * w_tld;

        const double delta = dot(w, v);
        if (std::abs(delta) < kBreakdownTiny)
            throw QmrBreakdown("qmr: biorthogonality scalar underflow");

        if (it == 1) {
            p = v;
            q = w;
        } else {
            p = v - (xi * delta / eps) * p;
            q = w - (rho * delta / eps) * q;
        }

        const Vector p_tld = matvec(m, p);
        eps = dot(q, p_tld);
        if (std::abs(eps) < kBreakdownTiny)
            throw QmrBreakdown("qmr: quasi-minimization scalar underflow");
        const double beta = eps / delta;
        if (std::abs(beta) < kBreakdownTiny) throw QmrBreakdown("qmr: beta underflow");

        v_tld = p_tld - beta * v;
        const double rho_next = norm2(v_tld);
        w_tld = matvec_t(m, q) - beta * w;
        const double xi_next = norm2(w_tld);

        const double theta = rho_next / (gamma_old * std::abs(beta));
        const double gamma = 1.0 / std::sqrt(1.0 + theta * theta);
        if (gamma < kBreakdownTiny) throw QmrBreakdown("qmr: gamma underflow");
        eta = -eta * rho * gamma * gamma / (beta * gamma_old * gamma_old);

        if (it == 1) {
            d = eta * p;
            s = eta * p_tld;
        } else {
            const double w2 = (theta_old * gamma) * (theta_old * gamma);
            d = eta * p + w2 * d;
            s = eta * p_tld + w2 * s;
        }
        x = x + d;
        r = r - s;

        rho = rho_next;
        xi = xi_next;
        gamma_old = gamma;
        theta_old = theta;

        const double res = rel_residual(m, b, x, bnorm);
        out.iters_used = it;
        if (res < best_res) {
            best_res = res;
            best_x = x;
        }
        if (res <= spec.rel_tol) {
            out.x = x;
            out.final_rel_residual = res;
            out.converged = true;
            return out;
        }
    }

    out.x = best_x;
    out.final_rel_residual = best_res;
    out.converged = false;
    return out;
}

Vector dense_solve(const Matrix& m, const Vector& b) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionMismatch("dense_solve: square matrix required");
    if (b.size() != n) throw DimensionMismatch("dense_solve: rhs length mismatch");

    Matrix lu = m;
    Vector x = b;
    std::vector<std::size_t> perm(n);

    double scale = 0.0;
    for (double e : lu.data()) scale = std::max(scale, std::abs(e));
    const double pivot_tol = 1e-14 * (scale > 0.0 ? scale : 1.0);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
        if (std::abs(lu(piv, k)) <= pivot_tol)
            throw SingularMatrix("dense_solve: pivot below relative threshold");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            std::swap(x[k], x[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu(i, k) / lu(k, k);
            lu(i, k) = f;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
            x[i] -= f * x[k];
        }
    }
    for (std::size_t ri = n; ri-- > 0;) {
        double sum = x[ri];
        for (std::size_t j = ri + 1; j < n; ++j) sum -= lu(ri, j) * x[j];
        x[ri] = sum / lu(ri, ri);
    }
    return x;
}

}  // namespace iep
