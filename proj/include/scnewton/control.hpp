#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "scnewton/errors.hpp"
#include "scnewton/worstcase.hpp"

namespace scnewton {

/// Piecewise-constant admissible control: values[i] on
/// [breakpoints[i], breakpoints[i+1]), |values[i]| <= 1, breakpoints strictly
/// increasing and spanning the whole time interval.
class ControlSignal {
public:
    ControlSignal(std::vector<double> breakpoints, std::vector<double> values);

    static ControlSignal constant(double u, double a, double b);
    /// Uniform pieces on [a, b], one value per piece.
    static ControlSignal uniform(std::span<const double> values, double a, double b);

    int pieces() const { return static_cast<int>(values_.size()); }
    double start() const { return breakpoints_.front(); }
    double end() const { return breakpoints_.back(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }

    /// Value of the piece containing t (last piece is closed at the right end).
    double operator()(double t) const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

inline bool state_finite(double y) { return std::isfinite(y); }

/// Classical 4th-order Runge-Kutta on a fixed grid; returns the step_count+1
/// states including y0. For smooth fields the global error is O(h^4). The
/// field must be smooth on the whole interval, so piecewise-constant controls
/// are integrated piece by piece. A non-finite state throws IntegrationError
/// naming the offending grid point. State needs operator+, double*State and a
/// state_finite overload (double and the chart states below are provided).
template <typename State, typename Field>
std::vector<State> integrate_fixed_step(Field&& field, State y0, double t0, double t1,
                                        int step_count) {
    if (step_count < 1) throw IntegrationError("integrate_fixed_step: step_count must be >= 1");
    const double h = (t1 - t0) / step_count;
    std::vector<State> out;
    out.reserve(static_cast<std::size_t>(step_count) + 1);
    out.push_back(y0);
    State y = y0;
    for (int i = 0; i < step_count; ++i) {
        const double t = t0 + i * h;
        const State k1 = field(t, y);
        const State k2 = field(t + 0.5 * h, y + (0.5 * h) * k1);
        const State k3 = field(t + 0.5 * h, y + (0.5 * h) * k2);
        const State k4 = field(t + h, y + h * k3);
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!state_finite(y)) {
            throw IntegrationError("integrate_fixed_step: non-finite state at node " +
                                   std::to_string(i + 1) + " (t = " + std::to_string(t + h) + ")");
        }
        out.push_back(y);
    }
    return out;
}

/// State of the controlled system in the s-chart: s in [0, T],
/// g = <F'(x_k + s h), h>, w = sqrt(F''(x_k + s h)[h, h]) > 0.
struct SCoordState {
    double s, g, w;
};

/// State in the t-chart: t in [-gamma*rho, 0], z = g/w; psi is the adjoint
/// when set (pmp_check), NaN otherwise.
struct TCoordState {
    double t, z;
    double psi = std::numeric_limits<double>::quiet_NaN();
};

struct SSimResult {
    std::vector<SCoordState> trajectory;
    double payoff;    // integral of g ds over [0, T]
    double decrease;  // -payoff
};

struct TSimResult {
    std::vector<TCoordState> trajectory;
    double payoff;    // integral of z/(1+ut) dt over [-gamma*rho, 0]
    double decrease;  // -payoff
};

/// dg/ds = w^2, dw/ds = u w^2 from (g, w)(0) = (-rho, 1), on [0, T] with
/// T = gamma*rho < 1. The integration grid is aligned to the control's
/// breakpoints (an even number of RK4 steps per piece, proportional to piece
/// length) and the payoff is composite Simpson on that same grid.
SSimResult simulate_s(const ControlSignal& u, double rho, double T, int step_count);

/// dz/dt = (1 - u z)/(1 + u t) from z(-gamma*rho) = -rho, on [-gamma*rho, 0].
/// Same grid and quadrature scheme as simulate_s.
TSimResult simulate_t(const ControlSignal& u, double rho, double gamma, int step_count);

struct ChartTransferResult {
    ControlSignal u_t;                // the s-control re-indexed by s -> t
    std::vector<TCoordState> mapped;  // (t, z) images of the s-grid points
};

/// Change of chart t = -w(s) (T - s), z = g/w applied to an s-trajectory.
/// The image interval is [-T, 0] exactly (w(0) = 1). Throws IntegrationError
/// if the mapped times are not strictly increasing, which on the admissible
/// set indicates an integration failure.
ChartTransferResult chart_transfer(const ControlSignal& u_s,
                                   const std::vector<SCoordState>& traj_s);

struct SearchStrategy {
    enum class Kind { grid, random, coordinate_ascent };
    Kind kind = Kind::coordinate_ascent;
    std::uint64_t seed = 0;  // random, coordinate_ascent
    int samples = 0;         // random: number of draws
    int iters = 0;           // coordinate_ascent: max sweeps
    int levels = 21;         // per-piece candidate levels in [-1, 1]

    static SearchStrategy grid(int levels = 21);
    static SearchStrategy random(std::uint64_t seed, int samples);
    static SearchStrategy coordinate_ascent(std::uint64_t seed, int iters);

    std::string name() const;
};

struct AdversaryResult {
    ControlSignal best_control;
    double best_payoff;      // payoff of best_control via simulate_t
    double analytic_payoff;  // payoff of u = 1, i.e. -worst_case_decrease(rho, gamma)
    double gap;              // best_payoff - analytic_payoff
    long evaluations;        // payoff evaluations performed
};

/// Searches piecewise-constant controls on `pieces` uniform pieces of
/// [-gamma*rho, 0] for maximal payoff. Deterministic given (strategy, seed);
/// payoff ties are broken by the lexicographically smallest control vector.
AdversaryResult adversary_search(double rho, double gamma, int pieces,
                                 const SearchStrategy& strategy, int step_count);

struct PmpReport {
    std::vector<TCoordState> trajectory;  // z forward and psi backward, shared grid
    double max_h_deviation;               // max over grid of max_v H(v) - H(u(t))
    double max_abs_psi_plus_t;            // max |psi(t) + t|    (zero iff psi = -t)
    double max_switching_error;           // max |S(z, psi, t) + t^2|
};

/// Integrates z forward and the adjoint psi backward from psi(0) = 0 along
/// the given control, then tests pointwise Hamiltonian maximization against a
/// u_grid-point grid of candidate controls in [-1, 1]. For u = 1 all three
/// report fields stay at integration-error level.
PmpReport pmp_check(const ControlSignal& u, double rho, double gamma, int step_count,
                    int u_grid);

inline constexpr double kCertifyGapTol = 1e-7;
inline constexpr double kCertifyPmpTol = 1e-8;

struct CertificationReport {
    double rho, gamma;
    double analytic_decrease;         // worst_case_decrease(rho, gamma)
    double best_adversary_decrease;   // -best_payoff
    double gap;                       // best_payoff - analytic_payoff
    double pmp_max_deviation;         // for u = 1
    std::uint64_t seed;
    int step_count;
    int pieces;
    std::string strategy;
    bool certified;  // gap <= kCertifyGapTol && pmp_max_deviation <= kCertifyPmpTol
};

/// adversary_search plus pmp_check(u = 1) rolled into one report.
CertificationReport certify(double rho, double gamma, int pieces,
                            const SearchStrategy& strategy, int step_count, int u_grid);

/// JSON with 17-significant-digit numbers; byte-identical for identical
/// inputs.
void write_certification_report(std::ostream& os, const CertificationReport& r);

}  // namespace scnewton
