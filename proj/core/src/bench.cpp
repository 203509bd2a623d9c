#include "iep/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "iep/eigen.hpp"

namespace iep {

const std::vector<BenchCase>& bench_cases() {
    static const std::vector<BenchCase> cases = {
        {1, 'a', {1, 2, 3, 4, 5}, 6, 3},
        {1, 'b', {1, 5, 10, 15, 20}, 9, 3},
        {1, 'c', {11, 12, 13, 14, 15}, 13, 3},
        {1, 'd', {21, 38, 46, 63, 81}, 75, 25},
        {1, 'e', {101, 112, 123, 134, 145}, 13, -1},
        {2, 'a', {1, 2, 3, 4, 5, 6, 7}, 6, 3},
        {2, 'b', {1, 3, 5, 7, 9, 11, 13}, 7, 3},
        {2, 'c', {11, 13, 15, 17, 19, 21, 23}, 11, 3},
        {2, 'd', {50, 52, 56, 58, 62, 65, 68}, 13, -1},
        {2, 'e', {101, 102, 103, 104, 106, 108, 110}, 13, 3},
    };
    return cases;
}

const std::vector<double>& bench_betas() {
    static const std::vector<double> betas = {1.5, 1.8, 2.0};
    return betas;
}

const std::vector<Vector>& known_points(int example) {
    static const std::vector<Vector> ex1 = {
        {2.0, 3.0, 4.0, 5.0, 6.0},
        {2.0000, 3.2926, 3.4471, 4.9014, 6.5529},
    };
    static const std::vector<Vector> ex2 = {
        {2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0},
        {2.8703, 2.0639, 4.9434, 4.1053, 6.7530, 6.3287, 8.4794},
        {1.1787, -0.0035, 2.0401, 1.6976, 5.3794, 6.2068, 8.5273},
    };
    return example == 1 ? ex1 : ex2;
}

bool matches_known_point(int example, const Vector& c, double tol) {
    for (const Vector& ref : known_points(example)) {
        if (ref.size() != c.size()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (std::abs(c[i] - ref[i]) > tol) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

bool verified_fixed_point(const IepProblem& problem, const Vector& c, double final_error) {
    if (final_error > 1e-10) return false;
    const EigenPair ep = sym_eigen(assemble(problem, c));
    for (std::size_t i = 0; i < problem.n; ++i)
        if (std::abs(ep.values[i] - problem.lambda_star[i]) > 1e-6) return false;
    return true;
}

std::vector<BenchRun> run_bench(const SolverOptions& base_opts) {
    const IepProblem pb1 = example1();
    const IepProblem pb2 = example2();

    std::vector<BenchRun> runs;
    for (const BenchCase& bc : bench_cases())
        for (double beta : bench_betas()) {
            BenchRun r;
            r.spec = bc;
            r.beta = beta;
            runs.push_back(std::move(r));
        }

    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("IEP_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) threads = static_cast<unsigned>(v);
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(runs.size()));

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= runs.size()) return;
            BenchRun& r = runs[idx];
            const IepProblem& pb = r.spec.example == 1 ? pb1 : pb2;

            SolverOptions opts = base_opts;
            opts.beta = r.beta;
            opts.algorithm = Algorithm::Modified;

            const auto t0 = std::chrono::steady_clock::now();
            r.report = solve(pb, r.spec.c0, opts);
            const auto t1 = std::chrono::steady_clock::now();
            r.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();

            const double final_err =
                r.report.errs_last3.empty() ? 1.0 : r.report.errs_last3.back();
            r.converged_ok =
                r.report.status == SolveStatus::Converged && final_err <= 1e-10;
            // Basin boundaries between the fixed points are roundoff-
            // sensitive; a run that lands on a different verified fixed
            // point is accepted, and the reference iteration count (which
            // belongs to the published point's trajectory) is not applied
            // to it.
            const bool listed = matches_known_point(r.spec.example, r.report.c_final);
            const bool verified = verified_fixed_point(pb, r.report.c_final, final_err);
            r.point_ok = listed || verified;
            r.iter_ok = r.spec.iter_tol < 0 || (!listed && verified) ||
                        std::abs(r.report.iterations - r.spec.ref_iterations) <=
                            r.spec.iter_tol;
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return runs;
}

}  // namespace iep
