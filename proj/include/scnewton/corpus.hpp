#pragma once

#include <string>
#include <vector>

#include "scnewton/oracle.hpp"

namespace scnewton {

struct CorpusEntry {
    std::string name;
    OraclePtr oracle;
    Eigen::VectorXd reference_start;  // interior point
    bool self_concordant = true;
    std::string notes;
};

/// Built-in test functions: extremal barriers (rho = 0.25, 1, 4), an interval
/// and a triangle log-barrier, a positive definite quadratic, and the quartic
/// negative entry (flagged not self-concordant).
const std::vector<CorpusEntry>& default_corpus();

}  // namespace scnewton
