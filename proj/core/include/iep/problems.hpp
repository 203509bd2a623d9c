#ifndef IEP_PROBLEMS_HPP
#define IEP_PROBLEMS_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "iep/iep.hpp"

namespace iep {

class GapFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GapTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 5x5 inverse Toeplitz eigenvalue problem. A0 = 0, A1 = I, A_k has ones on
/// |i - j| = k - 1. Known solution c* = (2,3,4,5,6).
IepProblem example1();
Vector example1_solution();

/// 7x7 Toeplitz-plus-Hankel inverse eigenvalue problem. A0 = 0. Known
/// solution c* = (2,3,4,5,6,7,8).
IepProblem example2();
Vector example2_solution();

/// Random symmetric problem with a constructed solution: entries uniform in
/// [-1, 1] (symmetrized), c* uniform in [1, 3], lambda* the spectrum of
/// A(c*). Regenerates until the spectral gap exceeds 1e-3; throws GapFailure
/// after 100 attempts. Deterministic in the seed.
std::pair<IepProblem, Vector> random_problem(std::size_t n, std::uint64_t seed);

/// Central-difference eigenvalue derivatives (lambda_i(c + h e_j) -
/// lambda_i(c - h e_j)) / (2h); the independent oracle for the Jacobian
/// formula. Throws GapTooSmall when the spectrum of A(c) has a gap <= 10h.
Matrix fd_jacobian_oracle(const IepProblem& problem, const Vector& c, double h);

}  // namespace iep

#endif
