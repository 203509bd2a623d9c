#include "iep/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "iep/eigen.hpp"

namespace iep {

void SolverOptions::validate() const {
    if (!(eta0 > 0.0 && eta0 < 1.0)) throw std::invalid_argument("eta0 must be in (0,1)");
    if (!(eta_max >= 0.0 && eta_max < 1.0))
        throw std::invalid_argument("eta_max must be in [0,1)");
    if (!(xi > 0.0 && xi < 1.0)) throw std::invalid_argument("xi must be in (0,1)");
    if (!(theta_min > 0.0 && theta_min < theta_max && theta_max < 1.0))
        throw std::invalid_argument("require 0 < theta_min < theta_max < 1");
    if (!(beta > 1.0 && beta <= 2.0)) throw std::invalid_argument("beta must be in (1,2]");
    if (!(outer_tol > 0.0)) throw std::invalid_argument("outer_tol must be positive");
    if (max_outer <= 0) throw std::invalid_argument("max_outer must be positive");
    if (max_backtracks <= 0) throw std::invalid_argument("max_backtracks must be positive");
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "Converged";
        case SolveStatus::MaxOuterReached: return "MaxOuterReached";
        case SolveStatus::SingularJacobianFailure: return "SingularJacobianFailure";
        case SolveStatus::DegenerateSpectrum: return "DegenerateSpectrum";
        case SolveStatus::LinearSolveFailure: return "LinearSolveFailure";
    }
    return "Unknown";
}

double forcing_term(int k, double merit_k, double merit_prev, double lambda_star_norm,
                    const SolverOptions& opts) {
    constexpr double kEtaFloor = 1e-12;
    if (k == 0) return opts.eta0;
    double eta = opts.eta_max;
    if (lambda_star_norm > 0.0)
        eta = std::min(eta, std::pow(merit_k / lambda_star_norm, opts.beta));
    if (merit_prev > 0.0)
        eta = std::min(eta, std::pow(merit_k / merit_prev, opts.beta));
    return std::clamp(eta, kEtaFloor, opts.eta_max);
}

std::pair<Vector, double> backtrack_step(double eta, const Vector& delta_c, double theta) {
    return {theta * delta_c, 1.0 - theta * (1.0 - eta)};
}

double choose_theta(const std::vector<ThetaTrial>& history, const SolverOptions& opts) {
    if (history.size() < 2) return opts.theta_max;
    const double g0 = history.front().merit_trial * history.front().merit_trial;
    const double t = history.back().theta_cumulative;
    const double gt = history.back().merit_trial * history.back().merit_trial;
    // Quadratic model through g(0) = g0, g'(0) = -2 g0 (Newton decrement),
    // g(t) = gt; minimizer of the model in cumulative theta.
    const double denom = gt - g0 + 2.0 * g0 * t;
    if (denom <= 0.0 || t <= 0.0) return opts.theta_max;
    const double theta_cum = g0 * t * t / denom;
    const double theta_rel = theta_cum / t;
    return std::clamp(theta_rel, opts.theta_min, opts.theta_max);
}

namespace {

struct TrialState {
    Vector c;
    Matrix p;
    Vector rho;
    double merit_val = 0.0;
    int cayley_iters = 0;
};

// Steps 4-6 of the basic algorithm at the trial point c + dc.
TrialState compute_trial(const IepProblem& problem, const Vector& c, const Vector& dc,
                         const Matrix& p) {
    TrialState t;
    t.c = c + dc;
    const Matrix y = form_y(problem, t.c, p);
    CayleyResult cay = cayley_update(p, y);
    t.p = std::move(cay.p_new);
    t.cayley_iters = cay.linear_iters;
    t.rho = rayleigh(problem, t.c, t.p);
    t.merit_val = merit(t.rho, problem.lambda_star);
    return t;
}

struct JacobianSolve {
    Vector dc;
    int linear_iters = 0;
    double residual = 0.0;
    double bound = 0.0;
    bool ok = false;
};

// Inexact solve of J dc = lambda* - rho to the forcing tolerance; the
// residual condition is always verified with a fresh matvec. Escalates
// through tighter QMR tolerances, then a dense solve.
JacobianSolve solve_jacobian_eq(const Matrix& j, const Vector& b, double eta_bar) {
    JacobianSolve out;
    const double bnorm = norm2(b);
    out.bound = eta_bar * bnorm;
    if (bnorm == 0.0) {
        out.dc.assign(b.size(), 0.0);
        out.ok = true;
        return out;
    }
    double tol = eta_bar;
    for (int attempt = 0; attempt < 3; ++attempt) {
        try {
            LinearSolveSpec spec;
            spec.rel_tol = tol;
            const LinearSolveResult res = qmr_solve(j, b, spec);
            out.linear_iters += res.iters_used;
            out.residual = norm2(b - matvec(j, res.x));
            if (out.residual <= out.bound) {
                out.dc = res.x;
                out.ok = true;
                return out;
            }
        } catch (const QmrBreakdown&) {
            break;
        }
        tol /= 10.0;
    }
    out.dc = dense_solve(j, b);  // SingularMatrix propagates to the caller
    out.residual = norm2(b - matvec(j, out.dc));
    out.ok = out.residual <= out.bound;
    return out;
}

SolveReport run_solver(const IepProblem& problem, const Vector& c0, const SolverOptions& opts,
                       bool modified) {
    opts.validate();
    problem.validate();
    if (c0.size() != problem.n)
        throw DimensionMismatch("solve: starting point length mismatch");

    SolveReport report;
    report.c_final = c0;

    double lmax = 0.0;
    for (double l : problem.lambda_star) lmax = std::max(lmax, std::abs(l));
    if (problem.spectral_gap() < 1e-12 * (lmax > 0.0 ? lmax : 1.0)) {
        report.status = SolveStatus::DegenerateSpectrum;
        return report;
    }

    const double lambda_norm = norm2(problem.lambda_star);

    Vector c = c0;
    const EigenPair init = sym_eigen(assemble(problem, c));
    Matrix p = init.vectors;
    Vector rho = init.values;

    std::vector<double> errs;
    double merit_prev = 0.0;
    report.status = SolveStatus::MaxOuterReached;
    report.iterations = opts.max_outer;

    for (int k = 0; k < opts.max_outer; ++k) {
        const double err = outer_error(problem, c, p);
        errs.push_back(err);
        if (err <= opts.outer_tol) {
            report.status = SolveStatus::Converged;
            report.iterations = k;
            break;
        }

        const double m = merit(rho, problem.lambda_star);
        const Matrix j = jacobian(problem, p);
        const double eta_bar = forcing_term(k, m, merit_prev, lambda_norm, opts);

        IterRecord rec;
        rec.k = k;
        rec.merit = m;
        rec.outer_error = err;
        rec.eta_bar = eta_bar;

        JacobianSolve js;
        try {
            js = solve_jacobian_eq(j, problem.lambda_star - rho, eta_bar);
        } catch (const SingularMatrix&) {
            report.status = SolveStatus::LinearSolveFailure;
            report.iterations = k;
            report.history.push_back(rec);
            break;
        }
        rec.jacobian_linear_iters = js.linear_iters;
        rec.residual = js.residual;
        rec.residual_bound = js.bound;
        rec.residual_ok = js.ok;
        if (!js.ok) {
            report.status = SolveStatus::LinearSolveFailure;
            report.iterations = k;
            report.history.push_back(rec);
            break;
        }
        if (norm2(js.dc) == 0.0 && m > 0.0) {
            report.status = SolveStatus::SingularJacobianFailure;
            report.iterations = k;
            report.history.push_back(rec);
            break;
        }

        Vector dc = js.dc;
        double eta = eta_bar;
        TrialState trial;

        bool use_step_norm_loop = false;
        double gamma_k = 0.0;
        if (modified) {
            const double m_inv = mat_inv_norm(j);
            if (std::isfinite(m_inv)) {
                use_step_norm_loop = true;
                gamma_k = m_inv * (1.0 + opts.eta_max) / (1.0 - opts.eta_max);
            }
        }

        try {
            if (use_step_norm_loop) {
                // Step-norm pre-loop. The inexact Newton step always obeys
                // ||dc|| <= M_k (1 + eta) m <= Gamma_k (1 - eta) m, and both
                // sides scale by theta, so this settles immediately in
                // practice; the cap guards against a pathological stall.
                while (norm2(dc) > gamma_k * (1.0 - eta) * m &&
                       rec.backtracks < opts.max_backtracks) {
                    auto [dc2, eta2] = backtrack_step(eta, dc, opts.theta_max);
                    dc = std::move(dc2);
                    eta = eta2;
                    ++rec.backtracks;
                }
            }
            {
                trial = compute_trial(problem, c, dc, p);
                std::vector<ThetaTrial> hist;
                hist.push_back({0.0, m});
                double theta_cum = 1.0;
                hist.push_back({theta_cum, trial.merit_val});
                while (trial.merit_val > (1.0 - opts.xi * (1.0 - eta)) * m) {
                    if (rec.backtracks >= opts.max_backtracks) {
                        // Grid-scan fallback: minimize the merit over a fixed
                        // 21-point grid of theta applied to the original
                        // Newton step (the shrunk one is already negligible)
                        // and force-accept that step.
                        double best_theta = opts.theta_min;
                        TrialState best_trial;
                        double best_merit = std::numeric_limits<double>::infinity();
                        constexpr int kGridPoints = 21;
                        for (int g = 0; g < kGridPoints; ++g) {
                            const double th =
                                opts.theta_min + (opts.theta_max - opts.theta_min) * g /
                                                     (kGridPoints - 1);
                            TrialState cand = compute_trial(problem, c, th * js.dc, p);
                            if (cand.merit_val < best_merit) {
                                best_merit = cand.merit_val;
                                best_theta = th;
                                best_trial = std::move(cand);
                            }
                        }
                        std::tie(dc, eta) = backtrack_step(eta_bar, js.dc, best_theta);
                        trial = std::move(best_trial);
                        rec.forced_accept = true;
                        break;
                    }
                    const double theta = choose_theta(hist, opts);
                    auto [dc2, eta2] = backtrack_step(eta, dc, theta);
                    dc = std::move(dc2);
                    eta = eta2;
                    trial = compute_trial(problem, c, dc, p);
                    ++rec.backtracks;
                    theta_cum *= theta;
                    hist.push_back({theta_cum, trial.merit_val});
                }
            }
        } catch (const DegenerateSpectrum&) {
            report.status = SolveStatus::DegenerateSpectrum;
            report.iterations = k;
            report.history.push_back(rec);
            break;
        } catch (const OrthogonalityLoss&) {
            report.status = SolveStatus::LinearSolveFailure;
            report.iterations = k;
            report.history.push_back(rec);
            break;
        }

        rec.eta_final = eta;
        rec.step_norm = norm2(dc);
        rec.cayley_linear_iters = trial.cayley_iters;

        c = trial.c;
        p = trial.p;
        rho = trial.rho;
        merit_prev = m;
        rec.orth_defect = orth_defect(p);
        report.history.push_back(rec);
    }

    if (report.status == SolveStatus::MaxOuterReached) {
        const double err = outer_error(problem, c, p);
        errs.push_back(err);
        if (err <= opts.outer_tol) report.status = SolveStatus::Converged;
    }

    report.c_final = c;
    const std::size_t keep = std::min<std::size_t>(3, errs.size());
    report.errs_last3.assign(errs.end() - static_cast<std::ptrdiff_t>(keep), errs.end());
    return report;
}

}  // namespace

SolveReport solve_basic(const IepProblem& problem, const Vector& c0, const SolverOptions& opts) {
    return run_solver(problem, c0, opts, false);
}

SolveReport solve_modified(const IepProblem& problem, const Vector& c0,
                           const SolverOptions& opts) {
    return run_solver(problem, c0, opts, true);
}

SolveReport solve(const IepProblem& problem, const Vector& c0, const SolverOptions& opts) {
    return run_solver(problem, c0, opts, opts.algorithm == Algorithm::Modified);
}

}  // namespace iep
