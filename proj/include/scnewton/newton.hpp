#pragma once

#include <iosfwd>
#include <limits>
#include <vector>

#include "scnewton/oracle.hpp"

namespace scnewton {

/// Solves H y = g for symmetric positive definite H: Cholesky factorization
/// plus one triangular solve pair and a single refinement step, never an
/// explicit inverse. A pivot at or below 1e-12 throws FactorizationError.
Eigen::VectorXd solve_symmetric(const Eigen::MatrixXd& H, const Eigen::VectorXd& g);

/// One Newton iteration's worth of local information at x.
struct NewtonState {
    Eigen::VectorXd x;
    double rho = 0.0;           // sqrt(F'^T (F'')^{-1} F'), the Newton decrement
    Eigen::VectorXd direction;  // -(F'')^{-1} F', the undamped Newton step
    double value = 0.0;         // F(x)
};

/// Throws DomainError if x is outside, FactorizationError if F''(x) is not PD.
NewtonState newton_state(const FunctionOracle& f, const Eigen::VectorXd& x);

enum class StepKind { fixed, optimal_decrease, full_step };

struct StepPolicy {
    StepKind kind = StepKind::optimal_decrease;
    double gamma_bar = 1.0;  // used by fixed only

    // fixed requires gamma_bar in (0, 1].
    static StepPolicy fixed(double gamma_bar);
    static StepPolicy optimal_decrease();
    static StepPolicy full_step();
};

/// fixed -> gamma_bar; full_step -> 1; optimal_decrease -> 1/(1 + rho).
/// With optimal_decrease, gamma * rho = rho/(1+rho) < 1 always.
double step_length(const StepPolicy& policy, double rho);

struct DampedStepResult {
    Eigen::VectorXd x_next;
    double decrease;  // F(x) - F(x_next)
};

/// x_next = x + gamma * direction. Throws DomainError if x_next leaves the
/// domain (possible under fixed/full_step policies; observable, not fatal to
/// the caller's loop).
DampedStepResult damped_step(const FunctionOracle& f, const NewtonState& state, double gamma);

enum class Termination { converged, max_iters, domain_violation, factorization_failure };

const char* to_string(Termination t);

struct NewtonIteration {
    int k = 0;
    Eigen::VectorXd x;     // iterate before the step
    double rho = 0.0;      // decrement at x
    double gamma = 0.0;    // step taken
    double value = 0.0;    // F(x)
    double decrease = 0.0; // F(x) - F(x_next)
};

struct NewtonTrace {
    std::vector<NewtonIteration> iterations;  // one record per completed step
    Termination termination = Termination::max_iters;
    Eigen::VectorXd final_x;
    double final_rho = std::numeric_limits<double>::quiet_NaN();
    double final_value = std::numeric_limits<double>::quiet_NaN();

    double total_decrease() const;
};

/// Damped Newton loop: stops when rho_k <= tol (converged) or after
/// max_iters steps. Domain exit and factorization failure terminate with the
/// partial trace preserved. No backtracking or safeguards by design: the
/// solver observes the policies as stated.
NewtonTrace run_solver(const FunctionOracle& f, const Eigen::VectorXd& x0,
                       const StepPolicy& policy, double tol = 1e-10, int max_iters = 200);

/// CSV with header k,rho,gamma,value,decrease; one row per iteration record;
/// floating point with 17 significant digits.
void write_trace_csv(std::ostream& os, const NewtonTrace& trace);

}  // namespace scnewton
