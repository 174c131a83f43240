#pragma once

namespace scnewton {

/// Admissibility floor: queries need gamma * rho <= 1 - 1e-9 so that
/// log(1 - gamma*rho) stays finite. Queries beyond it are rejected with
/// std::invalid_argument, never clamped (silent clamping would corrupt grid
/// searches).
inline constexpr double kMaxGammaRho = 1.0 - 1e-9;

struct WorstCaseQuery {
    double rho;    // > 0
    double gamma;  // > 0, gamma * rho <= kMaxGammaRho
};

/// Worst-case decrease of one damped Newton step at decrement rho and step
/// length gamma:  f(gamma) = (1+rho) * gamma*rho + log(1 - gamma*rho).
double worst_case_decrease(double rho, double gamma);
double worst_case_decrease(const WorstCaseQuery& q);

/// The step length maximizing f: gamma* = 1/(1 + rho). Defined for rho >= 0
/// (gamma* = 1 at rho = 0); gamma* * rho < 1 always.
double optimal_gamma(double rho);

/// f(gamma*) = rho - log(1 + rho), evaluated directly via log1p for
/// stability; equality with worst_case_decrease(rho, optimal_gamma(rho)) is a
/// tested property, not the definition.
double guaranteed_decrease(double rho);

/// The extremal trajectory of the control problem in the t-chart, t in
/// [-gamma*rho, 0]: z(t) = (C + t)/(1 + t) with C = -rho + gamma*rho^2 +
/// gamma*rho, adjoint psi(t) = -t, and payoff -f(gamma).
struct ExtremalSolution {
    double rho = 0.0;
    double gamma = 0.0;
    double C = 0.0;
    double payoff = 0.0;    // integral of z/(1+t) dt = -f(gamma)
    double decrease = 0.0;  // -payoff

    double z(double t) const;
    double psi(double t) const { return -t; }
};

ExtremalSolution extremal_solution(double rho, double gamma);
ExtremalSolution extremal_solution(const WorstCaseQuery& q);

/// H(z, psi, t, u) = (z + psi (1 - u z)) / (1 + u t).
/// Requires |u| <= 1 and 1 + u t >= 1e-9 (singularity floor).
double hamiltonian(double z, double psi, double t, double u);

/// psi z + t z + t psi. Negative means u = +1 maximizes the Hamiltonian,
/// positive means u = -1. Along the extremal trajectory the value is -t^2.
double switching_value(double z, double psi, double t);

}  // namespace scnewton
