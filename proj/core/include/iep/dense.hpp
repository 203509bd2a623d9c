#ifndef IEP_DENSE_HPP
#define IEP_DENSE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace iep {

using Vector = std::vector<double>;

/// Dense real matrix, column-major storage. File I/O elsewhere is always
/// row-major; only the in-memory layout is column-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    Vector col(std::size_t j) const {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(j * rows_),
                      data_.begin() + static_cast<std::ptrdiff_t>((j + 1) * rows_));
    }
    void set_col(std::size_t j, const Vector& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& v);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& m);

Vector matvec(const Matrix& m, const Vector& v);
Vector matvec_t(const Matrix& m, const Vector& v);  // m^T v
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
double dot(const Vector& a, const Vector& b);

double norm2(const Vector& v);
double fro_norm(const Matrix& m);
/// Largest singular value, via the symmetric eigenproblem of M^T M.
double op_norm2(const Matrix& m);

/// 2-norm of M^{-1}, i.e. 1/sigma_min(M). Returns +inf when
/// sigma_min <= singular_tol * sigma_max (relative singularity test).
double mat_inv_norm(const Matrix& m, double singular_tol = 1e-12);

bool is_symmetric(const Matrix& m, double tol);
bool is_skew(const Matrix& m, double tol);
/// ||M^T M - I||_F
double orth_defect(const Matrix& m);

bool all_finite(const Vector& v);
bool all_finite(const Matrix& m);

}  // namespace iep

#endif
