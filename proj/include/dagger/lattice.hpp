#pragma once

#include <string>

#include "dagger/types.hpp"

namespace dagger {

struct PlanckUnits {
  double ell_pl = 1.0;  // length quantum
  double tau_pl = 1.0;  // time quantum
  double hbar = 1.0;
};

void validate(const PlanckUnits& units);

enum class Centering { from_zero, centered };
enum class Boundary { periodic, open };

struct LatticeSpec {
  Eigen::Index sites = 2;
  double spacing = 1.0;  // in units of ℓ_PL (position) or τ_PL (time)
  Centering centering = Centering::from_zero;
  Boundary boundary = Boundary::periodic;
};

void validate(const LatticeSpec& spec);

// Site labels under the centering convention. from_zero: 0, 1, …, d−1.
// centered: symmetric about 0, half-integers when the site count is even
// (d = 2 gives −1/2, +1/2).
double site_label(const LatticeSpec& spec, Eigen::Index k);
Eigen::VectorXd site_labels(const LatticeSpec& spec);

// Diagonal with entries n·spacing·ℓ_PL; Hermitian by construction.
Operator position_operator(const LatticeSpec& spec,
                           const PlanckUnits& units = {});

// Diagonal with entries n·spacing·τ_PL.
Operator time_operator(const LatticeSpec& spec, const PlanckUnits& units = {});

// Central-difference generator (−iħ/2a)·(S − S†) with a = spacing·ℓ_PL and S
// the one-step shift (cyclic under periodic boundary, zero-padded under open).
// Needs at least two sites.
Operator momentum_operator(const LatticeSpec& spec,
                           const PlanckUnits& units = {});

// Standard basis ket of the site whose label is `label`. The label must match
// a lattice site exactly (integers, or half-integers on even centered
// lattices); anything else is out of range.
Ket basis_ket(const LatticeSpec& spec, double label);

Centering centering_from_string(const std::string& name);
Boundary boundary_from_string(const std::string& name);
const char* to_string(Centering c);
const char* to_string(Boundary b);

}  // namespace dagger
