#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "dagger/lattice.hpp"
#include "dagger/linalg.hpp"
#include "dagger/types.hpp"

namespace dagger {

// Space-time translation weights: T = eps_space·P − eps_time·H.
struct TranslationParams {
  double eps_time = 0.0;   // in τ_PL units
  double eps_space = 0.0;  // in ℓ_PL units

  bool degenerate() const { return eps_time == 0.0 && eps_space == 0.0; }
};

struct EvolutionSample {
  double s = 0.0;
  Operator observable;
  double deviation_from_initial = 0.0;
};

struct EvolutionTrace {
  std::vector<EvolutionSample> samples;
};

struct SchrodingerSolution {
  Eigen::VectorXd eigenvalues;  // ascending
  Eigen::MatrixXcd eigenkets;   // column n pairs with eigenvalues[n]
  Eigen::VectorXd residuals;    // ‖T|n⟩ − T_n|n⟩‖ per pair

  Ket ket(Eigen::Index n) const { return eigenkets.col(n); }
};

struct FlowDerivativeReport {
  double step = 0.0;            // h
  double residual = 0.0;        // at h
  double residual_half = 0.0;   // at h/2
  double observed_order = 0.0;  // log₂(residual/residual_half); NaN when both
                                // sides vanish (commuting pair)
};

struct TimeOperatorFlow {
  EvolutionTrace trace;
  Operator instantaneous_rate;  // (1/iħ)[t̂, T] at s = 0
};

struct WavepacketSpec {
  double center = 0.5;                            // on the unit interval
  double width = 0.125;                           // full width at half maximum
  double wavenumber = 4.0 * std::numbers::pi;     // carrier e^{iqx}
};

struct ConvergenceRow {
  Eigen::Index sites = 0;
  double error = 0.0;
  std::optional<double> order;  // refinement slope towards the next row
};

// F(s) = e^{+isT/ħ}·F·e^{−isT/ħ} for Hermitian T. s = 0 returns F unchanged;
// the flow derivative at s = 0 is (1/iħ)[F, T].
Operator heisenberg_evolve(const Operator& f, const Operator& t, double s,
                           double hbar = 1.0);

// Samples F(s) over strictly increasing s values;
// deviation_from_initial = ‖F(s) − F‖.
EvolutionTrace observable_flow_trace(const Operator& f, const Operator& t,
                                     std::span<const double> s_values,
                                     double hbar = 1.0);

// Central-difference check that the flow derivative equals (1/iħ)[F, T];
// reports residuals at h and h/2 and the observed convergence order.
FlowDerivativeReport flow_derivative_check(const Operator& f,
                                           const Operator& t,
                                           double hbar = 1.0, double h = 1e-3);

// Evolves T along its own flow; deviations stay at rounding level.
EvolutionTrace conserved_quantity_check(const Operator& t,
                                        std::span<const double> s_values,
                                        double hbar = 1.0);

// Evolves the time operator itself and reports the instantaneous flow rate
// (1/iħ)[t̂, T] alongside the finite-s orbit.
TimeOperatorFlow time_operator_flow(const Operator& t_op, const Operator& t,
                                    std::span<const double> s_values,
                                    double hbar = 1.0);

// eps_space·P − eps_time·H for Hermitian P, H of equal dimension.
Operator translation_generator(const TranslationParams& params,
                               const Operator& p, const Operator& h);

// Eigenproblem T|n⟩ = T_n|n⟩ with per-pair residuals.
SchrodingerSolution generalized_schrodinger(const Operator& t);

// Momentum-generated translation on the unit interval with periodic boundary.
// For each site count d: discretize the Gaussian packet on d sites, evolve by
// exp(−i·shift·P/ħ) (whose exact continuum action is translation by `shift`),
// and record the L² error against the analytically translated packet. Rows
// carry the local refinement order log(err_i/err_{i+1})/log(d_{i+1}/d_i).
std::vector<ConvergenceRow> continuum_limit_study(
    std::span<const Eigen::Index> site_counts, const WavepacketSpec& packet,
    double shift, double hbar = 1.0);

}  // namespace dagger
