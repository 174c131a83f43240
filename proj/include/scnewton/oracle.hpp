#pragma once

#include <Eigen/Dense>
#include <memory>

#include "scnewton/errors.hpp"

namespace scnewton {

/// Value/gradient/Hessian oracle for a convex C^3 function on an open convex
/// domain. Third derivatives are never exposed; anything that needs them
/// (the self-concordance checker) takes finite differences of hessian().
///
/// Oracles are immutable after construction and safe to evaluate from many
/// threads at once.
class FunctionOracle {
public:
    virtual ~FunctionOracle() = default;

    virtual int dimension() const = 0;
    virtual bool domain_contains(const Eigen::VectorXd& x) const = 0;

    // value/gradient/hessian throw DomainError when domain_contains(x) is
    // false; hessian(x) is symmetric PSD everywhere in the domain.
    virtual double value(const Eigen::VectorXd& x) const = 0;
    virtual Eigen::VectorXd gradient(const Eigen::VectorXd& x) const = 0;
    virtual Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const = 0;
};

using OraclePtr = std::shared_ptr<const FunctionOracle>;

/// F(x) = -sum_i log(b_i - a_i^T x) on the open polyhedron {x : Ax < b}.
/// The caller asserts nonempty interior; membership is checked lazily.
OraclePtr make_log_barrier(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

/// F(x) = x^T Q x / 2 + q^T x on all of R^n. Q must be symmetric (checked at
/// construction) and PSD (caller asserts).
OraclePtr make_quadratic(const Eigen::MatrixXd& Q, const Eigen::VectorXd& q);

/// Univariate phi(s) = -(1+rho) s - log(1-s) on s < 1. The Newton decrement
/// at s = 0 equals rho, and phi attains equality in the self-concordance
/// inequality everywhere: phi''' = 2 (phi'')^{3/2}. Requires rho > 0.
OraclePtr make_extremal_barrier(double rho);

/// F(x) = x^4 on R. Convex C^3 but not self-concordant near 0; used as the
/// negative control for the checker.
OraclePtr make_quartic();

}  // namespace scnewton
