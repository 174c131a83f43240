#pragma once

#include <stdexcept>
#include <string>

#include "scnewton/oracle.hpp"

namespace scnewton {

class ProblemParseError : public std::runtime_error {
public:
    explicit ProblemParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ProblemSpec {
    std::string type;  // log_barrier | quadratic | extremal_barrier
    OraclePtr oracle;
    Eigen::VectorXd x0;
};

/// Parses a JSON problem file:
///
///   {"type": "log_barrier",      "A": [[...], ...], "b": [...], "x0": [...]}
///   {"type": "quadratic",        "Q": [[...], ...], "q": [...], "x0": [...]}
///   {"type": "extremal_barrier", "rho": 1.0,                    "x0": [0.0]}
///
/// Matrices are row-major (one inner array per row). Malformed JSON reports
/// line and column; semantic problems name the offending field.
ProblemSpec parse_problem(const std::string& text);

/// Reads `path` and parses it. Throws ProblemParseError (also for I/O).
ProblemSpec load_problem(const std::string& path);

}  // namespace scnewton
