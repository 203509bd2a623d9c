#include "iep/problem_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace iep {

namespace {

using nlohmann::json;

Matrix matrix_from_json(const json& rows, std::size_t n, const std::string& name) {
    if (!rows.is_array() || rows.size() != n)
        throw ProblemFileError(name + ": expected " + std::to_string(n) + " rows");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw ProblemFileError(name + ": row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < n; ++j) {
            if (!row[j].is_number())
                throw ProblemFileError(name + ": non-numeric entry");
            m(i, j) = row[j].get<double>();
        }
    }
    if (!is_symmetric(m, 1e-10))
        throw ProblemFileError(name + ": matrix not symmetric within 1e-10");
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ProblemFile parse_problem(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ProblemFileError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ProblemFileError("missing integer field 'n'");
    const std::size_t n = doc["n"].get<std::size_t>();
    if (n == 0) throw ProblemFileError("'n' must be positive");

    ProblemFile pf;
    pf.problem.n = n;
    if (!doc.contains("a0")) throw ProblemFileError("missing field 'a0'");
    pf.problem.a0 = matrix_from_json(doc["a0"], n, "a0");

    if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].size() != n)
        throw ProblemFileError("'basis' must be a list of n matrices");
    for (std::size_t i = 0; i < n; ++i)
        pf.problem.basis.push_back(
            matrix_from_json(doc["basis"][i], n, "basis[" + std::to_string(i) + "]"));

    if (!doc.contains("lambda_star") || !doc["lambda_star"].is_array() ||
        doc["lambda_star"].size() != n)
        throw ProblemFileError("'lambda_star' must be an array of n reals");
    pf.problem.lambda_star = doc["lambda_star"].get<Vector>();
    if (!std::is_sorted(pf.problem.lambda_star.begin(), pf.problem.lambda_star.end())) {
        std::sort(pf.problem.lambda_star.begin(), pf.problem.lambda_star.end());
        pf.sorted_on_load = true;
    }

    if (doc.contains("known_solution")) {
        if (!doc["known_solution"].is_array() || doc["known_solution"].size() != n)
            throw ProblemFileError("'known_solution' must be an array of n reals");
        pf.known_solution = doc["known_solution"].get<Vector>();
    }

    pf.problem.validate();
    return pf;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemFileError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

std::string serialize_problem(const IepProblem& problem,
                              const std::optional<Vector>& known_solution) {
    json doc;
    doc["n"] = problem.n;
    doc["a0"] = matrix_to_json(problem.a0);
    json basis = json::array();
    for (const Matrix& ai : problem.basis) basis.push_back(matrix_to_json(ai));
    doc["basis"] = std::move(basis);
    doc["lambda_star"] = problem.lambda_star;
    if (known_solution) doc["known_solution"] = *known_solution;
    return doc.dump(2) + "\n";
}

void save_problem(const std::string& path, const IepProblem& problem,
                  const std::optional<Vector>& known_solution) {
    std::ofstream out(path);
    if (!out) throw ProblemFileError("cannot open " + path + " for writing");
    out << serialize_problem(problem, known_solution);
    if (!out) throw ProblemFileError("write failed for " + path);
}

}  // namespace iep
