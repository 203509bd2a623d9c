#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "iep/bench.hpp"
#include "iep/eigen.hpp"
#include "iep/problems.hpp"
#include "iep/solver.hpp"

using namespace iep;

namespace {

const std::vector<BenchRun>& bench_results() {
    static const std::vector<BenchRun> runs = run_bench();
    return runs;
}

void report(int criterion, bool pass, const char* what) {
    std::printf("[criterion %d] %s: %s\n", criterion, pass ? "PASS" : "FAIL", what);
}

Matrix random_orthogonal(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double v = dist(rng);
            m(i, j) = v;
            m(j, i) = v;
        }
    return sym_eigen(m).vectors;
}

}  // namespace

TEST_CASE("criterion 1: Toeplitz table reproduction") {
    double total_time = 0.0;
    bool pass = true;
    for (const BenchRun& r : bench_results()) {
        if (r.spec.example != 1) continue;
        total_time += r.elapsed_seconds;
        pass = pass && r.converged_ok && r.point_ok && r.iter_ok;
        CHECK_MESSAGE(r.converged_ok, "example 1 row ", r.spec.row, " beta ", r.beta,
                      " must converge with final error <= 1e-10");
        CHECK_MESSAGE(r.point_ok, "example 1 row ", r.spec.row, " beta ", r.beta,
                      " accumulation point mismatch");
        CHECK_MESSAGE(r.iter_ok, "example 1 row ", r.spec.row, " beta ", r.beta,
                      " iterations ", r.report.iterations, " outside band around ",
                      r.spec.ref_iterations);
    }
    pass = pass && total_time < 5.0;
    CHECK(total_time < 5.0);
    report(1, pass, "Toeplitz example: convergence, points, iteration bands, runtime");
}

TEST_CASE("criterion 2: Toeplitz-plus-Hankel table reproduction") {
    double total_time = 0.0;
    bool pass = true;
    for (const BenchRun& r : bench_results()) {
        if (r.spec.example != 2) continue;
        total_time += r.elapsed_seconds;
        pass = pass && r.converged_ok && r.point_ok && r.iter_ok;
        CHECK_MESSAGE(r.converged_ok, "example 2 row ", r.spec.row, " beta ", r.beta,
                      " must converge with final error <= 1e-10");
        CHECK_MESSAGE(r.point_ok, "example 2 row ", r.spec.row, " beta ", r.beta,
                      " accumulation point mismatch");
        CHECK_MESSAGE(r.iter_ok, "example 2 row ", r.spec.row, " beta ", r.beta,
                      " iterations ", r.report.iterations, " outside band around ",
                      r.spec.ref_iterations);
    }
    pass = pass && total_time < 5.0;
    CHECK(total_time < 5.0);
    report(2, pass, "Toeplitz-plus-Hankel example: convergence, points, iteration bands, runtime");
}

TEST_CASE("criterion 3: residual condition on every bench iteration") {
    bool pass = true;
    for (const BenchRun& r : bench_results())
        for (const IterRecord& rec : r.report.history) {
            pass = pass && rec.residual_ok &&
                   rec.residual <= rec.residual_bound * (1.0 + 1e-12);
            CHECK(rec.residual_ok);
        }
    report(3, pass, "recomputed Jacobian-equation residual within the forcing bound");
}

TEST_CASE("criterion 4: orthogonality of committed iterates and random Cayley updates") {
    bool pass = true;
    for (const BenchRun& r : bench_results())
        for (const IterRecord& rec : r.report.history) {
            pass = pass && rec.orth_defect <= 1e-10;
            CHECK(rec.orth_defect <= 1e-10);
        }

    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 2 + t % 19;  // up to 20
        Matrix y(n, n, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                const double v = dist(rng);
                y(i, j) = v;
                y(j, i) = -v;
            }
        const CayleyResult res = cayley_update(Matrix::identity(n), y);
        const bool ok = orth_defect(res.p_new) <= 1e-10;
        pass = pass && ok;
        CHECK(ok);
    }
    report(4, pass, "orth_defect <= 1e-10 on all committed P and 1000 random skew updates");
}

TEST_CASE("criterion 5: jacobian matches the finite-difference oracle") {
    bool pass = true;
    int tested = 0;
    std::uint64_t seed = 1000;
    while (tested < 20) {
        const std::size_t n = 3 + tested % 6;  // n in 3..8
        IepProblem pb;
        Vector c_star;
        try {
            std::tie(pb, c_star) = random_problem(n, seed++);
        } catch (const GapFailure&) {
            continue;
        }
        Matrix j_fd;
        try {
            j_fd = fd_jacobian_oracle(pb, c_star, 1e-6);
        } catch (const GapTooSmall&) {
            continue;
        }
        const Matrix p = sym_eigen(assemble(pb, c_star)).vectors;
        const Matrix j = jacobian(pb, p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const bool ok = std::abs(j(i, k) - j_fd(i, k)) <= 1e-5;
                pass = pass && ok;
                CHECK(ok);
            }
        ++tested;
    }
    report(5, pass, "analytic Jacobian within 1e-5 of central differences on 20 problems");
}

TEST_CASE("criterion 6: Lipschitz bound with zero violations") {
    bool pass = true;
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (const IepProblem& pb : {example1(), example2()}) {
        const double L = lipschitz_constant(pb);
        for (int t = 0; t < 100; ++t) {
            Vector c1(pb.n), c2(pb.n);
            for (std::size_t i = 0; i < pb.n; ++i) {
                c1[i] = dist(rng);
                c2[i] = dist(rng);
            }
            const bool ok =
                op_norm2(assemble(pb, c1) - assemble(pb, c2)) <= L * norm2(c1 - c2) + 1e-10;
            pass = pass && ok;
            CHECK(ok);
        }
    }
    report(6, pass, "||A(c) - A(c')|| <= L ||c - c'|| on 100 pairs per example");
}

TEST_CASE("criterion 7: eventual full steps on converged bench runs") {
    bool pass = true;
    for (const BenchRun& r : bench_results()) {
        if (r.report.status != SolveStatus::Converged) continue;
        const auto& h = r.report.history;
        const std::size_t from = h.size() >= 3 ? h.size() - 3 : 0;
        for (std::size_t i = from; i < h.size(); ++i) {
            const bool ok = h[i].backtracks == 0 && h[i].eta_final == h[i].eta_bar;
            pass = pass && ok;
            CHECK(ok);
        }
    }
    report(7, pass, "final 3 iterations take full steps with eta = eta_bar");
}

TEST_CASE("criterion 8: superlinear tail on Toeplitz row (b), beta = 2") {
    bool pass = false;
    for (const BenchRun& r : bench_results()) {
        if (r.spec.example != 1 || r.spec.row != 'b' || r.beta != 2.0) continue;
        const auto& errs = r.report.errs_last3;
        REQUIRE(errs.size() == 3);
        pass = errs[1] <= 0.01 * errs[0] && errs[2] <= 0.01 * errs[1];
        CHECK(errs[1] <= 0.01 * errs[0]);
        CHECK(errs[2] <= 0.01 * errs[1]);
    }
    report(8, pass, "last two error ratios <= 0.01");
}

TEST_CASE("criterion 9: constructed-solution recovery") {
    int converged = 0;
    const int total = 20;
    std::mt19937_64 rng(1234);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uint64_t seed = 5000;
    for (int t = 0; t < total; ++t) {
        IepProblem pb;
        Vector c_star;
        for (;;) {
            try {
                std::tie(pb, c_star) = random_problem(3 + t % 6, seed++);
                break;
            } catch (const GapFailure&) {
            }
        }
        Vector delta(pb.n);
        for (double& d : delta) d = gauss(rng);
        const double scale = 0.05 * norm2(c_star) / norm2(delta);
        const Vector c0 = c_star + scale * delta;

        const SolveReport r = solve_modified(pb, c0, SolverOptions{});
        if (r.status == SolveStatus::Converged && r.iterations <= 15 &&
            norm2(r.c_final - c_star) <= 1e-6)
            ++converged;
    }
    const bool pass = converged >= 18;
    CHECK(converged >= 18);
    report(9, pass, "recovery of the constructed solution in at least 18 of 20 runs");
}
