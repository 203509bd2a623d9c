#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "iep/problems.hpp"
#include "iep/solver.hpp"

using namespace iep;

TEST_CASE("forcing_term schedule") {
    SolverOptions opts;
    CHECK(forcing_term(0, 1.0, 0.0, 10.0, opts) == doctest::Approx(0.5));

    // merit ratio one and merit >= ||lambda*||: capped at eta_max.
    CHECK(forcing_term(1, 20.0, 20.0, 10.0, opts) == doctest::Approx(0.9));

    // min{1e-4, 1e-2, 0.9} = 1e-4 for merit 0.1, prev 1, ||lambda*|| = 10.
    CHECK(forcing_term(1, 0.1, 1.0, 10.0, opts) == doctest::Approx(1e-4));

    // merit 0 clamps to the floor instead of returning 0.
    CHECK(forcing_term(2, 0.0, 1.0, 10.0, opts) == doctest::Approx(1e-12));
}

TEST_CASE("backtrack_step arithmetic and eta recurrence") {
    const auto [dc, eta] = backtrack_step(0.5, {2.0, 4.0}, 0.5);
    CHECK(dc[0] == doctest::Approx(1.0));
    CHECK(dc[1] == doctest::Approx(2.0));
    CHECK(eta == doctest::Approx(0.75));

    // After m passes with theta fixed, 1 - eta = theta^m (1 - eta_bar).
    double e = 0.3;
    Vector step = {1.0};
    const double theta = 0.7;
    for (int m = 1; m <= 5; ++m) {
        std::tie(step, e) = backtrack_step(e, step, theta);
        CHECK(1.0 - e == doctest::Approx(std::pow(theta, m) * (1.0 - 0.3)));
    }
}

TEST_CASE("choose_theta clamps and interpolates") {
    SolverOptions opts;
    // Merit dropping steeply along the step: model minimizer beyond the
    // range, so the safeguard clamps to theta_max.
    CHECK(choose_theta({{0.0, 1.0}, {1.0, 0.05}}, opts) == doctest::Approx(0.9));

    // Mild decrease: interior minimizer of the quadratic model.
    CHECK(choose_theta({{0.0, 1.0}, {1.0, 0.5}}, opts) == doctest::Approx(0.8));

    // g(theta) = (1 - theta)^2 + 0.01: minimizer near 1, clamped to 0.9.
    const double g0 = std::sqrt(1.01);
    const double g1 = std::sqrt(0.01);
    CHECK(choose_theta({{0.0, g0}, {1.0, g1}}, opts) == doctest::Approx(0.9));

    // A trial much worse than the base point pushes theta toward theta_min.
    const double th = choose_theta({{0.0, 1.0}, {1.0, 20.0}}, opts);
    CHECK(th >= opts.theta_min);
    CHECK(th <= opts.theta_max);
    CHECK(th == doctest::Approx(opts.theta_min));
}

TEST_CASE("solver options are range-checked") {
    SolverOptions opts;
    CHECK_NOTHROW(opts.validate());
    opts.beta = 2.5;
    CHECK_THROWS_AS(opts.validate(), std::invalid_argument);
    opts.beta = 2.0;
    opts.theta_min = 0.95;
    CHECK_THROWS_AS(opts.validate(), std::invalid_argument);
}

TEST_CASE("starting at the solution converges immediately") {
    const IepProblem pb = example1();
    SolverOptions opts;
    for (Algorithm alg : {Algorithm::Basic, Algorithm::Modified}) {
        opts.algorithm = alg;
        const SolveReport r = solve(pb, example1_solution(), opts);
        CHECK(r.status == SolveStatus::Converged);
        CHECK(r.iterations <= 2);
        for (const IterRecord& rec : r.history) CHECK(rec.backtracks == 0);
    }
}

TEST_CASE("basic solver reproduces Toeplitz benchmark row (b)") {
    const IepProblem pb = example1();
    SolverOptions opts;
    opts.algorithm = Algorithm::Basic;
    const SolveReport r = solve_basic(pb, {1, 5, 10, 15, 20}, opts);
    CHECK(r.status == SolveStatus::Converged);
    CHECK(r.iterations >= 6);
    CHECK(r.iterations <= 12);
    const Vector c_star = example1_solution();
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(std::abs(r.c_final[i] - c_star[i]) <= 1e-3);
    CHECK(r.errs_last3.back() <= 1e-10);
}

TEST_CASE("basic solver enforces the accepted-step merit contract") {
    const IepProblem pb = example1();
    SolverOptions opts;
    opts.algorithm = Algorithm::Basic;
    const SolveReport r = solve_basic(pb, {1, 2, 3, 4, 5}, opts);
    REQUIRE(r.status == SolveStatus::Converged);
    for (std::size_t i = 0; i + 1 < r.history.size(); ++i) {
        const IterRecord& cur = r.history[i];
        if (cur.forced_accept) continue;
        const double allowed = (1.0 - opts.xi * (1.0 - cur.eta_final)) * cur.merit;
        CHECK(r.history[i + 1].merit <= allowed * (1.0 + 1e-12));
    }
}

TEST_CASE("per-iteration invariants on a converged run") {
    const IepProblem pb = example2();
    SolverOptions opts;
    const SolveReport r = solve_modified(pb, {1, 2, 3, 4, 5, 6, 7}, opts);
    REQUIRE(r.status == SolveStatus::Converged);
    for (const IterRecord& rec : r.history) {
        CHECK(rec.eta_final >= rec.eta_bar);
        CHECK(rec.residual_ok);
        CHECK(rec.residual <= rec.residual_bound * (1.0 + 1e-12));
        CHECK(rec.orth_defect <= 1e-10);
    }
}

TEST_CASE("modified solver reaches one of the two Toeplitz accumulation points") {
    const IepProblem pb = example1();
    SolverOptions opts;
    const SolveReport r = solve_modified(pb, {1, 2, 3, 4, 5}, opts);
    CHECK(r.status == SolveStatus::Converged);
    const Vector alt = {2.0000, 3.2926, 3.4471, 4.9014, 6.5529};
    const Vector c_star = example1_solution();
    bool near_main = true, near_alt = true;
    for (std::size_t i = 0; i < 5; ++i) {
        near_main = near_main && std::abs(r.c_final[i] - c_star[i]) <= 1e-3;
        near_alt = near_alt && std::abs(r.c_final[i] - alt[i]) <= 1e-3;
    }
    CHECK((near_main || near_alt));
}

TEST_CASE("gamma arithmetic of the step-norm test") {
    // M_k = 2, eta_max = 0.9 gives Gamma = 2 * 1.9 / 0.1 = 38.
    const double m_k = 2.0, eta_max = 0.9;
    CHECK(m_k * (1.0 + eta_max) / (1.0 - eta_max) == doctest::Approx(38.0));
}

TEST_CASE("degenerate target spectrum is reported, not thrown") {
    IepProblem pb;
    pb.n = 2;
    pb.a0 = Matrix(2, 2, 0.0);
    Matrix a2(2, 2, 0.0);
    a2(0, 1) = a2(1, 0) = 1.0;
    pb.basis = {Matrix::identity(2), a2};
    pb.lambda_star = {1.0, 1.0 + 1e-15};
    const SolveReport r = solve_modified(pb, {0.5, 0.5}, SolverOptions{});
    CHECK(r.status == SolveStatus::DegenerateSpectrum);
}

TEST_CASE("random constructed-solution problems converge from a nearby start") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto [pb, c_star] = random_problem(5, seed);
        Vector c0 = c_star;
        for (std::size_t i = 0; i < c0.size(); ++i) c0[i] += 0.01 * (i % 2 ? 1.0 : -1.0);
        const SolveReport r = solve_modified(pb, c0, SolverOptions{});
        REQUIRE(r.status == SolveStatus::Converged);
        CHECK(r.iterations <= 10);
        CHECK(norm2(r.c_final - c_star) <= 1e-6);
    }
}
