#pragma once

#include "scnewton/oracle.hpp"

namespace scnewton {

/// Max over a uniform grid on the segment [x, x+h] of
///
///     |f'''[h,h,h]| / (2 (f''[h,h])^{3/2}),
///
/// the third directional derivative taken by central differences of the
/// Hessian quadratic form with step 1e-4 in segment-parameter units. A
/// self-concordant function stays <= 1 + tol; the extremal barrier sits at 1.
///
/// `grid` is the number of sub-intervals (grid+1 sample points). Grid points
/// where f''[h,h] < 1e-12 leave the ratio undefined and are skipped;
/// `skipped`, when non-null, receives their count. Throws DomainError if the
/// segment (including the difference stencil at its ends) leaves the domain.
double self_concordance_ratio(const FunctionOracle& f,
                              const Eigen::VectorXd& x,
                              const Eigen::VectorXd& h,
                              int grid,
                              int* skipped = nullptr);

}  // namespace scnewton
