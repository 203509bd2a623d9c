#include "iep/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "iep/eigen.hpp"

namespace iep {

namespace {

void check_same_len(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
}

void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix shape mismatch");
}

}  // namespace

Vector operator+(const Vector& a, const Vector& b) {
    check_same_len(a, b);
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    check_same_len(a, b);
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator*(double s, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] += b.data()[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] -= b.data()[i];
    return r;
}

Matrix operator*(double s, const Matrix& m) {
    Matrix r = m;
    for (double& x : r.data()) x *= s;
    return r;
}

Vector matvec(const Matrix& m, const Vector& v) {
    if (m.cols() != v.size()) throw DimensionMismatch("matvec shape mismatch");
    Vector r(m.rows(), 0.0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const double vj = v[j];
        for (std::size_t i = 0; i < m.rows(); ++i) r[i] += m(i, j) * vj;
    }
    return r;
}

Vector matvec_t(const Matrix& m, const Vector& v) {
    if (m.rows() != v.size()) throw DimensionMismatch("matvec_t shape mismatch");
    Vector r(m.cols(), 0.0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, j) * v[i];
        r[j] = s;
    }
    return r;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double bkj = b(k, j);
            if (bkj == 0.0) continue;
            for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) += a(i, k) * bkj;
        }
    return r;
}

Matrix transpose(const Matrix& m) {
    Matrix r(m.cols(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) r(j, i) = m(i, j);
    return r;
}

double dot(const Vector& a, const Vector& b) {
    check_same_len(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vector& v) { return std::sqrt(dot(v, v)); }

double fro_norm(const Matrix& m) {
    double s = 0.0;
    for (double x : m.data()) s += x * x;
    return std::sqrt(s);
}

double op_norm2(const Matrix& m) {
    const Matrix g = matmul(transpose(m), m);
    const EigenPair ep = sym_eigen(g);
    const double lmax = std::max(0.0, ep.values.back());
    return std::sqrt(lmax);
}

double mat_inv_norm(const Matrix& m, double singular_tol) {
    if (m.rows() != m.cols()) throw DimensionMismatch("mat_inv_norm: square matrix required");
    const Matrix g = matmul(transpose(m), m);
    const EigenPair ep = sym_eigen(g);
    const double smax = std::sqrt(std::max(0.0, ep.values.back()));
    const double smin = std::sqrt(std::max(0.0, ep.values.front()));
    if (smin <= singular_tol * smax)
        return std::numeric_limits<double>::infinity();
    return 1.0 / smin;
}

bool is_symmetric(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (std::abs(m(i, j) - m(j, i)) > tol) return false;
    return true;
}

bool is_skew(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i <= j; ++i)
            if (std::abs(m(i, j) + m(j, i)) > tol) return false;
    return true;
}

double orth_defect(const Matrix& m) {
    Matrix g = matmul(transpose(m), m);
    for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
    return fro_norm(g);
}

bool all_finite(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

bool all_finite(const Matrix& m) {
    return std::all_of(m.data().begin(), m.data().end(),
                       [](double x) { return std::isfinite(x); });
}

}  // namespace iep
