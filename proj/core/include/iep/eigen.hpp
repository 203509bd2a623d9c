#ifndef IEP_EIGEN_HPP
#define IEP_EIGEN_HPP

#include <stdexcept>

#include "iep/dense.hpp"

namespace iep {

/// Eigendecomposition of a symmetric matrix: values ascending, column i of
/// vectors is the unit eigenvector paired with values[i].
struct EigenPair {
    Vector values;
    Matrix vectors;
};

class NonSymmetric : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NoConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cyclic Jacobi eigensolver (row-cyclic sweeps, fixed order, so the result
/// is bit-reproducible). Stops when the off-diagonal Frobenius mass drops
/// below tol * ||A||_F. Sign convention: the largest-magnitude entry of each
/// eigenvector is nonnegative, ties broken by lowest index.
EigenPair sym_eigen(const Matrix& a, double tol = 1e-14, int max_sweeps = 100);

}  // namespace iep

#endif
