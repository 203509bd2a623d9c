#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "iep/bench.hpp"
#include "iep/problem_io.hpp"
#include "iep/problems.hpp"
#include "iep/solver.hpp"

namespace {

using namespace iep;

Vector parse_c0(const std::string& text) {
    Vector out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("--c0: cannot parse '" + tok + "' as a number");
        }
    }
    if (out.empty()) throw std::invalid_argument("--c0: empty list");
    return out;
}

std::string format_c(const Vector& c) {
    std::string s = "(";
    char buf[32];
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.4f", c[i]);
        s += buf;
        if (i + 1 < c.size()) s += ", ";
    }
    return s + ")";
}

void write_history_csv(std::ostream& out, const SolveReport& report) {
    out << "k,merit,outer_error,eta_bar,eta_final,backtracks,step_norm\n";
    for (const IterRecord& r : report.history) {
        char line[256];
        std::snprintf(line, sizeof(line), "%d,%.17g,%.17g,%.17g,%.17g,%d,%.17g\n", r.k,
                      r.merit, r.outer_error, r.eta_bar, r.eta_final, r.backtracks,
                      r.step_norm);
        out << line;
    }
}

void write_history_json(std::ostream& out, const SolveReport& report) {
    nlohmann::json doc;
    doc["status"] = to_string(report.status);
    doc["iterations"] = report.iterations;
    doc["c_final"] = report.c_final;
    doc["errs_last3"] = report.errs_last3;
    nlohmann::json hist = nlohmann::json::array();
    for (const IterRecord& r : report.history) {
        nlohmann::json rec;
        rec["k"] = r.k;
        rec["merit"] = r.merit;
        rec["outer_error"] = r.outer_error;
        rec["eta_bar"] = r.eta_bar;
        rec["eta_final"] = r.eta_final;
        rec["backtracks"] = r.backtracks;
        rec["step_norm"] = r.step_norm;
        rec["jacobian_linear_iters"] = r.jacobian_linear_iters;
        rec["cayley_linear_iters"] = r.cayley_linear_iters;
        rec["forced_accept"] = r.forced_accept;
        hist.push_back(std::move(rec));
    }
    doc["history"] = std::move(hist);
    out << doc.dump(2) << "\n";
}

int cmd_solve(const std::string& path, const std::string& c0_text, SolverOptions opts,
              const std::string& csv_path, const std::string& json_path) {
    ProblemFile pf;
    Vector c0;
    try {
        pf = load_problem(path);
        if (pf.sorted_on_load)
            std::cerr << "warning: lambda_star was not ascending; sorted on load\n";
        c0 = parse_c0(c0_text);
        if (c0.size() != pf.problem.n) {
            std::cerr << "error: --c0 has " << c0.size() << " entries, problem dimension is "
                      << pf.problem.n << "\n";
            return 1;
        }
        opts.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const SolveReport report = solve(pf.problem, c0, opts);

    std::printf("%4s  %-12s  %-12s  %-10s  %-10s  %s\n", "k", "merit", "outer_error",
                "eta_bar", "eta", "backtracks");
    for (const IterRecord& r : report.history)
        std::printf("%4d  %-12.4e  %-12.4e  %-10.4e  %-10.4e  %d%s\n", r.k, r.merit,
                    r.outer_error, r.eta_bar, r.eta_final, r.backtracks,
                    r.forced_accept ? " (forced)" : "");

    std::printf("\nstatus:     %s\n", to_string(report.status).c_str());
    std::printf("iterations: %d\n", report.iterations);
    std::printf("c_final:    %s\n", format_c(report.c_final).c_str());
    std::printf("errs:      ");
    for (double e : report.errs_last3) std::printf(" %.4e", e);
    std::printf("\n");

    try {
        if (!csv_path.empty()) {
            std::ofstream out(csv_path);
            if (!out) throw std::runtime_error("cannot open " + csv_path);
            write_history_csv(out, report);
        }
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) throw std::runtime_error("cannot open " + json_path);
            write_history_json(out, report);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    return report.status == SolveStatus::Converged ? 0 : 2;
}

int cmd_bench(const std::string& csv_path) {
    const std::vector<BenchRun> runs = run_bench();

    // Group by (example, row); beta varies across columns like the tables.
    std::map<std::pair<int, char>, std::vector<const BenchRun*>> grouped;
    for (const BenchRun& r : runs) grouped[{r.spec.example, r.spec.row}].push_back(&r);

    int last_example = 0;
    bool all_pass = true;
    for (const auto& [key, group] : grouped) {
        if (key.first != last_example) {
            std::printf("\nExample %d\n", key.first);
            std::printf("%-4s %-6s %-14s %-14s %-14s %s\n", "c0", "", "beta=1.5",
                        "beta=1.8", "beta=2.0", "band");
            last_example = key.first;
        }
        for (int line = 0; line < 3; ++line) {
            std::printf("%-4s %-6s", line == 0 ? std::string(1, key.second).c_str() : "",
                        line == 0 ? "errs" : "");
            for (const BenchRun* r : group) {
                const auto& errs = r->report.errs_last3;
                if (line < static_cast<int>(errs.size()))
                    std::printf(" %-14.4e", errs[line]);
                else
                    std::printf(" %-14s", "-");
            }
            std::printf("\n");
        }
        std::printf("%-4s %-6s", "", "ite.");
        for (const BenchRun* r : group) std::printf(" %-14d", r->report.iterations);
        bool group_pass = true;
        for (const BenchRun* r : group) group_pass = group_pass && r->pass();
        std::printf(" %s\n", group_pass ? "pass" : "FAIL");
        std::printf("%-4s %-6s %s\n", "", "c*",
                    format_c(group.back()->report.c_final).c_str());
        all_pass = all_pass && group_pass;
    }

    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) {
            std::cerr << "error: cannot open " << csv_path << "\n";
            return 1;
        }
        out << "example,row,beta,status,iterations,err_final,pass\n";
        for (const BenchRun& r : runs) {
            char line[256];
            std::snprintf(line, sizeof(line), "%d,%c,%.1f,%s,%d,%.4e,%d\n", r.spec.example,
                          r.spec.row, r.beta, to_string(r.report.status).c_str(),
                          r.report.iterations,
                          r.report.errs_last3.empty() ? 1.0 : r.report.errs_last3.back(),
                          r.pass() ? 1 : 0);
            out << line;
        }
    }

    std::printf("\n%s\n", all_pass ? "all acceptance bands satisfied"
                                   : "some runs failed their acceptance bands");
    return all_pass ? 0 : 2;
}

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& out_path) {
    try {
        auto [problem, c_star] = random_problem(n, seed);
        save_problem(out_path, problem, c_star);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::printf("wrote %s (n = %zu, seed = %llu)\n", out_path.c_str(), n,
                static_cast<unsigned long long>(seed));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inexact Newton backtracking Cayley transform solver for inverse "
                 "eigenvalue problems"};
    app.require_subcommand(1);

    SolverOptions opts;
    std::string algorithm = "modified";
    std::string problem_path, c0_text, csv_path, json_path;

    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a problem file");
    solve_cmd->add_option("problem", problem_path, "Problem JSON file")->required();
    solve_cmd->add_option("--c0", c0_text, "Starting point, comma-separated")->required();
    solve_cmd->add_option("--beta", opts.beta, "Forcing-term exponent in (1,2]");
    solve_cmd->add_option("--eta0", opts.eta0, "Initial forcing term");
    solve_cmd->add_option("--eta-max", opts.eta_max, "Forcing-term cap");
    solve_cmd->add_option("--xi", opts.xi, "Sufficient-decrease parameter");
    solve_cmd->add_option("--theta-min", opts.theta_min, "Backtracking theta lower bound");
    solve_cmd->add_option("--theta-max", opts.theta_max, "Backtracking theta upper bound");
    solve_cmd->add_option("--algorithm", algorithm, "basic or modified")
        ->check(CLI::IsMember({"basic", "modified"}));
    solve_cmd->add_option("--max-outer", opts.max_outer, "Outer iteration cap");
    solve_cmd->add_option("--tol", opts.outer_tol, "Outer stopping tolerance");
    solve_cmd->add_option("--csv", csv_path, "Write per-iteration history as CSV");
    solve_cmd->add_option("--json", json_path, "Write the full report as JSON");

    std::string bench_csv;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Reproduce the two benchmark tables");
    bench_cmd->add_option("--csv", bench_csv, "Write per-run results as CSV");

    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random problem file");
    gen_cmd->add_option("n", gen_n, "Problem dimension (>= 2)")->required();
    gen_cmd->add_option("--seed", gen_seed, "RNG seed")->required();
    gen_cmd->add_option("--out", gen_out, "Output path")->required();

    CLI11_PARSE(app, argc, argv);

    if (solve_cmd->parsed()) {
        opts.algorithm = algorithm == "basic" ? Algorithm::Basic : Algorithm::Modified;
        return cmd_solve(problem_path, c0_text, opts, csv_path, json_path);
    }
    if (bench_cmd->parsed()) return cmd_bench(bench_csv);
    if (gen_cmd->parsed()) {
        if (gen_n < 2) {
            std::cerr << "error: n must be >= 2\n";
            return 1;
        }
        return cmd_gen(gen_n, gen_seed, gen_out);
    }
    return 1;
}
