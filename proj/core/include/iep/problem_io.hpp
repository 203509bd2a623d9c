#ifndef IEP_PROBLEM_IO_HPP
#define IEP_PROBLEM_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "iep/iep.hpp"

namespace iep {

class ProblemFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// On-disk problem statement. Matrices are stored row-major as nested JSON
/// arrays. Loading validates symmetry (1e-10, hard error) and sorts
/// lambda_star ascending if needed (sorted_on_load flags the reorder).
struct ProblemFile {
    IepProblem problem;
    std::optional<Vector> known_solution;
    bool sorted_on_load = false;
};

ProblemFile load_problem(const std::string& path);
ProblemFile parse_problem(const std::string& json_text);

std::string serialize_problem(const IepProblem& problem,
                              const std::optional<Vector>& known_solution = std::nullopt);
void save_problem(const std::string& path, const IepProblem& problem,
                  const std::optional<Vector>& known_solution = std::nullopt);

}  // namespace iep

#endif
