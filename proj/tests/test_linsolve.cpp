#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iep/linsolve.hpp"

using namespace iep;

namespace {

Matrix random_diag_dominant(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(n, n);
    for (double& x : m.data()) x = dist(rng);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += static_cast<double>(n) + 1.0;
    return m;
}

}  // namespace

TEST_CASE("qmr on the identity converges immediately") {
    const Matrix eye = Matrix::identity(5);
    const Vector b = {1, -2, 3, 0.5, 4};
    const LinearSolveResult r = qmr_solve(eye, b, {});
    CHECK(r.converged);
    CHECK(r.iters_used <= 1);
    for (std::size_t i = 0; i < 5; ++i) CHECK(r.x[i] == doctest::Approx(b[i]));
}

TEST_CASE("qmr matches the closed-form 2x2 inverse") {
    Matrix m(2, 2);
    m(0, 0) = 4;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 3;
    const Vector b = {1, 2};
    // det = 11, x = inv(M) b = (1/11, 7/11)
    LinearSolveSpec spec;
    spec.rel_tol = 1e-12;
    const LinearSolveResult r = qmr_solve(m, b, spec);
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(1.0 / 11.0).epsilon(1e-10));
    CHECK(r.x[1] == doctest::Approx(7.0 / 11.0).epsilon(1e-10));
}

TEST_CASE("qmr converged results satisfy the recomputed residual bound") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        const Matrix m = random_diag_dominant(5, rng);
        Vector b(5);
        for (double& x : b) x = dist(rng);
        LinearSolveSpec spec;
        spec.rel_tol = 0.5;
        const LinearSolveResult r = qmr_solve(m, b, spec);
        REQUIRE(r.converged);
        CHECK(norm2(b - matvec(m, r.x)) <= 0.5 * norm2(b) * (1.0 + 1e-12));
        CHECK(r.final_rel_residual == doctest::Approx(norm2(b - matvec(m, r.x)) / norm2(b)));
    }
}

TEST_CASE("qmr zero right-hand side returns zero") {
    const Matrix m = Matrix::identity(3);
    const LinearSolveResult r = qmr_solve(m, Vector(3, 0.0), {});
    CHECK(r.converged);
    CHECK(r.x == Vector(3, 0.0));
}

TEST_CASE("dense_solve identity and constructed right-hand side") {
    const Matrix eye = Matrix::identity(4);
    const Vector b = {1, 2, 3, 4};
    CHECK(dense_solve(eye, b) == b);

    // Hilbert 4x4 with b = row sums has exact solution (1,1,1,1).
    Matrix h(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) h(i, j) = 1.0 / static_cast<double>(i + j + 1);
    Vector rs(4, 0.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) rs[i] += h(i, j);
    const Vector x = dense_solve(h, rs);
    for (double xi : x) CHECK(xi == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("dense_solve rejects a singular matrix") {
    Matrix s(2, 2, 1.0);
    CHECK_THROWS_AS(dense_solve(s, Vector{1, 2}), SingularMatrix);
}

TEST_CASE("qmr and dense_solve agree on random well-conditioned systems") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t n : {5u, 12u, 20u}) {
        for (int t = 0; t < 5; ++t) {
            const Matrix m = random_diag_dominant(n, rng);
            Vector b(n);
            for (double& x : b) x = dist(rng);
            LinearSolveSpec spec;
            spec.rel_tol = 1e-12;
            const LinearSolveResult r = qmr_solve(m, b, spec);
            REQUIRE(r.converged);
            const Vector xd = dense_solve(m, b);
            CHECK(norm2(r.x - xd) <= 1e-8 * (1.0 + norm2(xd)));
        }
    }
}
