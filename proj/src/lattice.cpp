#include "dagger/lattice.hpp"

#include <cmath>

namespace dagger {

void validate(const PlanckUnits& units) {
  if (!(units.ell_pl > 0.0) || !(units.tau_pl > 0.0) || !(units.hbar > 0.0)) {
    throw InvalidArgumentError("PlanckUnits: all units must be strictly positive");
  }
}

void validate(const LatticeSpec& spec) {
  if (spec.sites < 1) {
    throw InvalidArgumentError("LatticeSpec: sites must be >= 1");
  }
  if (!(spec.spacing > 0.0) || !std::isfinite(spec.spacing)) {
    throw InvalidArgumentError("LatticeSpec: spacing must be positive and finite");
  }
}

double site_label(const LatticeSpec& spec, Eigen::Index k) {
  if (k < 0 || k >= spec.sites) {
    throw InvalidArgumentError("site_label: index out of range");
  }
  if (spec.centering == Centering::from_zero) {
    return static_cast<double>(k);
  }
  return static_cast<double>(k) - 0.5 * static_cast<double>(spec.sites - 1);
}

Eigen::VectorXd site_labels(const LatticeSpec& spec) {
  validate(spec);
  Eigen::VectorXd labels(spec.sites);
  for (Eigen::Index k = 0; k < spec.sites; ++k) {
    labels(k) = site_label(spec, k);
  }
  return labels;
}

namespace {

Operator diagonal_coordinate(const LatticeSpec& spec, double quantum) {
  Operator m = Operator::Zero(spec.sites, spec.sites);
  for (Eigen::Index k = 0; k < spec.sites; ++k) {
    m(k, k) = site_label(spec, k) * spec.spacing * quantum;
  }
  return m;
}

}  // namespace

Operator position_operator(const LatticeSpec& spec, const PlanckUnits& units) {
  validate(spec);
  validate(units);
  return diagonal_coordinate(spec, units.ell_pl);
}

Operator time_operator(const LatticeSpec& spec, const PlanckUnits& units) {
  validate(spec);
  validate(units);
  return diagonal_coordinate(spec, units.tau_pl);
}

Operator momentum_operator(const LatticeSpec& spec, const PlanckUnits& units) {
  validate(spec);
  validate(units);
  if (spec.sites < 2) {
    throw InvalidArgumentError("momentum_operator: needs at least 2 sites");
  }
  const Eigen::Index d = spec.sites;
  const double a = spec.spacing * units.ell_pl;
  const Complex c(0.0, -units.hbar / (2.0 * a));  // coefficient of S
  Operator p = Operator::Zero(d, d);
  for (Eigen::Index k = 0; k + 1 < d; ++k) {
    p(k, k + 1) += c;
    p(k + 1, k) += std::conj(c);
  }
  if (spec.boundary == Boundary::periodic) {
    p(d - 1, 0) += c;
    p(0, d - 1) += std::conj(c);
  }
  return p;
}

Ket basis_ket(const LatticeSpec& spec, double label) {
  validate(spec);
  for (Eigen::Index k = 0; k < spec.sites; ++k) {
    if (site_label(spec, k) == label) {
      Ket e = Ket::Zero(spec.sites);
      e(k) = Complex(1.0, 0.0);
      return e;
    }
  }
  throw InvalidArgumentError("basis_ket: label " + std::to_string(label) +
                             " does not match any site of the lattice");
}

Centering centering_from_string(const std::string& name) {
  if (name == "from_zero") return Centering::from_zero;
  if (name == "centered") return Centering::centered;
  throw InvalidArgumentError("unknown centering: " + name);
}

Boundary boundary_from_string(const std::string& name) {
  if (name == "periodic") return Boundary::periodic;
  if (name == "open") return Boundary::open;
  throw InvalidArgumentError("unknown boundary: " + name);
}

const char* to_string(Centering c) {
  return c == Centering::from_zero ? "from_zero" : "centered";
}

const char* to_string(Boundary b) {
  return b == Boundary::periodic ? "periodic" : "open";
}

}  // namespace dagger
