#ifndef IEP_LINSOLVE_HPP
#define IEP_LINSOLVE_HPP

#include <stdexcept>

#include "iep/dense.hpp"

namespace iep {

struct LinearSolveSpec {
    double rel_tol = 1e-12;   // relative residual target, (0, 1]
    int max_iters = 0;        // 0 means 10 * n
    Vector initial_guess;     // empty means zero
};

struct LinearSolveResult {
    Vector x;
    double final_rel_residual = 0.0;  // ||b - Mx|| / ||b||, recomputed explicitly
    int iters_used = 0;
    bool converged = false;
};

class QmrBreakdown : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// QMR with coupled two-term recurrences, no look-ahead. M is dense and
/// explicit so transpose products are direct. A zero right-hand side returns
/// x = 0 with converged = true. Throws QmrBreakdown when a recurrence scalar
/// underflows; callers fall back to dense_solve.
LinearSolveResult qmr_solve(const Matrix& m, const Vector& b, const LinearSolveSpec& spec);

/// LU with partial pivoting. Throws SingularMatrix when a pivot falls below
/// 1e-14 relative to the largest entry of M.
Vector dense_solve(const Matrix& m, const Vector& b);

}  // namespace iep

#endif
