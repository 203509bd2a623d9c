#ifndef IEP_IEP_HPP
#define IEP_IEP_HPP

#include <stdexcept>
#include <vector>

#include "iep/dense.hpp"
#include "iep/linsolve.hpp"

namespace iep {

class DegenerateSpectrum : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OrthogonalityLoss : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable statement of an inverse eigenvalue problem: find c such that
/// A(c) = A0 + sum_i c_i A_i has the prescribed spectrum lambda_star.
struct IepProblem {
    std::size_t n = 0;
    Matrix a0;
    std::vector<Matrix> basis;  // n matrices, each n x n symmetric
    Vector lambda_star;         // length n, ascending

    /// Checks symmetry of a0 and every basis matrix (1e-12 relative),
    /// dimensions, and ascending lambda_star. Throws on violation.
    void validate() const;

    /// Smallest gap between distinct target eigenvalues.
    double spectral_gap() const;
};

/// A0 + sum_i c_i A_i
Matrix assemble(const IepProblem& problem, const Vector& c);

/// [J]_ij = p_i^T A_j p_i where p_i are the columns of p.
Matrix jacobian(const IepProblem& problem, const Matrix& p);

/// rho_i = p_i^T A(c) p_i
Vector rayleigh(const IepProblem& problem, const Vector& c, const Matrix& p);

/// Skew-symmetric Y with Y_ij = p_i^T A(c_new) p_j / (lambda*_j - lambda*_i)
/// for i != j. Only the upper triangle is computed; the lower is its exact
/// negation, so Y = -Y^T bit-exactly. Throws DegenerateSpectrum when the
/// target gap falls below 1e-12 * max|lambda*|.
Matrix form_y(const IepProblem& problem, const Vector& c_new, const Matrix& p);

struct CayleyResult {
    Matrix p_new;
    int linear_iters = 0;  // total QMR iterations over the n column solves
};

/// Orthogonal update P_new = P (I + Y/2)(I - Y/2)^{-1}, obtained by forming
/// H = (I - Y/2) P^T and solving (I + Y/2) w_i = h_i per column, then
/// P_new = [w_1 ... w_n]^T. The column systems are solved to near machine
/// precision (QMR, dense polish if needed) so orth_defect(P_new) <= 1e-10.
/// Throws OrthogonalityLoss if the defect check fails after the fallback.
CayleyResult cayley_update(const Matrix& p, const Matrix& y);

/// ||rho - lambda_star||_2
double merit(const Vector& rho, const Vector& lambda_star);

/// L = sqrt(sum_i ||A_i||^2), the Lipschitz constant of c -> A(c) in the
/// 2-norm.
double lipschitz_constant(const IepProblem& problem);

/// ||P^T A(c) P - diag(lambda_star)||_F, the outer stopping quantity.
double outer_error(const IepProblem& problem, const Vector& c, const Matrix& p);

}  // namespace iep

#endif
