#ifndef IEP_SOLVER_HPP
#define IEP_SOLVER_HPP

#include <array>
#include <string>
#include <vector>

#include "iep/iep.hpp"

namespace iep {

enum class Algorithm { Basic, Modified };

struct SolverOptions {
    double eta0 = 0.5;
    double eta_max = 0.9;
    double xi = 1e-4;
    double theta_min = 0.1;
    double theta_max = 0.9;
    double beta = 2.0;
    double outer_tol = 1e-10;
    int max_outer = 200;
    int max_backtracks = 80;
    Algorithm algorithm = Algorithm::Modified;

    /// Throws std::invalid_argument when a parameter is out of range.
    void validate() const;
};

struct IterRecord {
    int k = 0;
    double merit = 0.0;        // ||rho(c^k) - lambda*|| at iteration start
    double outer_error = 0.0;  // at iteration start
    double eta_bar = 0.0;
    double eta_final = 0.0;    // >= eta_bar, backtracking only raises eta
    int backtracks = 0;
    int jacobian_linear_iters = 0;
    int cayley_linear_iters = 0;
    double step_norm = 0.0;
    bool forced_accept = false;   // step taken via the grid-scan fallback
    double residual = 0.0;        // recomputed ||J dc + rho - lambda*||
    double residual_bound = 0.0;  // eta_bar * ||rho - lambda*||
    bool residual_ok = false;
    double orth_defect = 0.0;     // of the committed P_{k+1}
};

enum class SolveStatus {
    Converged,
    MaxOuterReached,
    SingularJacobianFailure,
    DegenerateSpectrum,
    LinearSolveFailure,
};

std::string to_string(SolveStatus s);

struct SolveReport {
    SolveStatus status = SolveStatus::MaxOuterReached;
    Vector c_final;
    std::vector<IterRecord> history;
    /// Outer errors at the last up-to-three iterates (oldest first); matches
    /// the "errs" triplets of the benchmark tables.
    std::vector<double> errs_last3;
    int iterations = 0;
};

/// Forcing term eta_bar_k: eta0 at k = 0, otherwise
/// min{(m_k/||lambda*||)^beta, (m_k/m_prev)^beta, eta_max}, clamped to
/// [1e-12, eta_max].
double forcing_term(int k, double merit_k, double merit_prev, double lambda_star_norm,
                    const SolverOptions& opts);

/// One backtracking pass: (theta * delta_c, 1 - theta * (1 - eta)).
std::pair<Vector, double> backtrack_step(double eta, const Vector& delta_c, double theta);

struct ThetaTrial {
    double theta_cumulative = 0.0;  // product of thetas applied so far (0 = base point)
    double merit_trial = 0.0;
};

/// Safeguarded quadratic interpolation over g(theta) = merit^2 using the base
/// point and the latest failed trial; result clamped to
/// [theta_min, theta_max]. history must start with (0, merit_k).
double choose_theta(const std::vector<ThetaTrial>& history, const SolverOptions& opts);

SolveReport solve_basic(const IepProblem& problem, const Vector& c0, const SolverOptions& opts);
SolveReport solve_modified(const IepProblem& problem, const Vector& c0, const SolverOptions& opts);

/// Dispatches on opts.algorithm.
SolveReport solve(const IepProblem& problem, const Vector& c0, const SolverOptions& opts);

}  // namespace iep

#endif
