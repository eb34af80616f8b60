#include "dagger/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace dagger {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

Operator adjoint(const Operator& a) {
  require_square(a, "adjoint");
  require_finite(a, "adjoint");
  return a.adjoint();
}

Operator commutator(const Operator& a, const Operator& b) {
  require_square(a, "commutator");
  require_same_shape(a, b, "commutator");
  return a * b - b * a;
}

double spectral_radius(const Operator& a) {
  require_square(a, "spectral_radius");
  require_finite(a, "spectral_radius");
  Eigen::ComplexEigenSolver<Operator> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError(
        "spectral_radius: unsymmetric eigensolve did not converge (dim=" +
        std::to_string(a.rows()) +
        ", solver status=" + std::to_string(static_cast<int>(solver.info())) +
        ")");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double cstar_norm(const Operator& a) {
  require_square(a, "cstar_norm");
  require_finite(a, "cstar_norm");
  Operator gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<Operator> solver(gram,
                                                 Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("cstar_norm: eigensolve of A†A did not converge (dim=" +
                           std::to_string(a.rows()) + ")");
  }
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

double hermiticity_defect(const Operator& a) {
  require_square(a, "hermiticity_defect");
  require_finite(a, "hermiticity_defect");
  return cstar_norm(a - a.adjoint());
}

double default_hermiticity_tol(const Operator& a) {
  return 1e-10 * std::max(1.0, cstar_norm(a));
}

EigenDecomposition hermitian_eig(const Operator& a,
                                 std::optional<double> hermiticity_tol) {
  require_square(a, "hermitian_eig");
  require_finite(a, "hermitian_eig");
  const double defect = hermiticity_defect(a);
  const double gate =
      hermiticity_tol ? *hermiticity_tol : default_hermiticity_tol(a);
  if (defect > gate) {
    throw NotHermitianError("hermitian_eig: operator is not Hermitian, ‖A − A†‖ = " +
                                num(defect) + " exceeds tolerance " + num(gate),
                            defect);
  }
  Operator sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("hermitian_eig: eigensolve did not converge (dim=" +
                           std::to_string(a.rows()) + ")");
  }
  EigenDecomposition out;
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  out.source_dim = a.rows();
  return out;
}

Operator reconstruct(const EigenDecomposition& eig) {
  return eig.eigenvectors * eig.eigenvalues.cast<Complex>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

Operator evolution_unitary(const EigenDecomposition& eig, double s,
                           double hbar) {
  if (!(hbar > 0.0)) {
    throw InvalidArgumentError("evolution_unitary: hbar must be positive");
  }
  const Eigen::Index dim = eig.source_dim;
  if (s == 0.0) {
    return Operator::Identity(dim, dim);
  }
  Eigen::VectorXcd phases(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    phases(k) = std::exp(Complex(0.0, -s * eig.eigenvalues(k) / hbar));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

Operator evolution_unitary(const Operator& t, double s, double hbar) {
  if (!(hbar > 0.0)) {
    throw InvalidArgumentError("evolution_unitary: hbar must be positive");
  }
  return evolution_unitary(hermitian_eig(t), s, hbar);
}

}  // namespace dagger
