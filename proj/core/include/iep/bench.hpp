#ifndef IEP_BENCH_HPP
#define IEP_BENCH_HPP

#include <vector>

#include "iep/problems.hpp"
#include "iep/solver.hpp"

namespace iep {

/// One benchmark configuration: a named example, a lettered starting point,
/// and the reference iteration count with its acceptance tolerance
/// (tol < 0 means the count is not checked for that row).
struct BenchCase {
    int example = 1;  // 1 or 2
    char row = 'a';
    Vector c0;
    int ref_iterations = 0;
    int iter_tol = -1;
};

const std::vector<BenchCase>& bench_cases();
const std::vector<double>& bench_betas();  // {1.5, 1.8, 2.0}

/// Known accumulation points for the named examples.
const std::vector<Vector>& known_points(int example);

struct BenchRun {
    BenchCase spec;
    double beta = 2.0;
    SolveReport report;
    double elapsed_seconds = 0.0;
    bool converged_ok = false;  // status Converged and final error <= 1e-10
    bool point_ok = false;      // matches a known point (1e-3) or, for
                                // example 2, a verified alternative fixed point
    bool iter_ok = false;       // within iter_tol of ref_iterations (or unchecked)
    bool pass() const { return converged_ok && point_ok && iter_ok; }
};

/// Whether c matches one of the known accumulation points componentwise.
bool matches_known_point(int example, const Vector& c, double tol = 1e-3);

/// Alternative-fixed-point check: final error <= 1e-10 and the eigenvalues of
/// A(c) match lambda* within 1e-6.
bool verified_fixed_point(const IepProblem& problem, const Vector& c, double final_error);

/// Runs every (case, beta) combination with the modified solver. Concurrency
/// is capped by the IEP_THREADS environment variable (default: hardware).
std::vector<BenchRun> run_bench(const SolverOptions& base_opts = SolverOptions{});

}  // namespace iep

#endif
