#include "scnewton/sc_check.hpp"

#include <cmath>
#include <string>

namespace scnewton {

// Parameterize the segment as x(tau) = x + tau h, tau in [0, 1], and write
// q(tau) = h^T F''(x(tau)) h. Then the directional third derivative is
// q'(tau) and the tested ratio |q'| / (2 q^{3/2}) is invariant under
// rescaling of h, so only the segment placement matters, not its length.
double self_concordance_ratio(const FunctionOracle& f, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& h, int grid, int* skipped) {
    if (grid < 1) throw std::invalid_argument("self_concordance_ratio: grid must be >= 1");
    if (h.size() != x.size() || h.isZero(0.0)) {
        throw std::invalid_argument("self_concordance_ratio: h must be a nonzero direction");
    }

    constexpr double kFdStep = 1e-4;       // central-difference step in tau units
    constexpr double kCurvFloor = 1e-12;   // below this the ratio is undefined

    const auto quad_form = [&](double tau) {
        const Eigen::VectorXd p = x + tau * h;
        if (!f.domain_contains(p)) {
            throw DomainError("self_concordance_ratio: probe left the domain at tau = " +
                              std::to_string(tau));
        }
        return h.dot(f.hessian(p) * h);
    };

    double max_ratio = 0.0;
    int skip_count = 0;
    for (int j = 0; j <= grid; ++j) {
        const double tau = static_cast<double>(j) / grid;
        const double q = quad_form(tau);
        if (q < kCurvFloor) {
            ++skip_count;
            continue;
        }
        const double third = (quad_form(tau + kFdStep) - quad_form(tau - kFdStep)) / (2.0 * kFdStep);
        const double ratio = std::abs(third) / (2.0 * q * std::sqrt(q));
        if (ratio > max_ratio) max_ratio = ratio;
    }
    if (skipped) *skipped = skip_count;
    return max_ratio;
}

}  // namespace scnewton
