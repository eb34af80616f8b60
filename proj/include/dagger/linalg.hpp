#pragma once

#include <optional>

#include "dagger/types.hpp"

namespace dagger {

// Full spectral decomposition of a Hermitian operator. Column k of
// `eigenvectors` is the normalized eigenket paired with eigenvalues[k];
// eigenvalues are sorted ascending.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  Eigen::Index source_dim = 0;

  Ket ket(Eigen::Index k) const { return eigenvectors.col(k); }
};

Operator adjoint(const Operator& a);

// AB − BA. Throws DimensionMismatchError when shapes differ.
Operator commutator(const Operator& a, const Operator& b);

// max |λ| over the (general) eigenvalues of a.
double spectral_radius(const Operator& a);

// Largest singular value, sqrt(λ_max(A†A)). Coincides with spectral_radius
// only on normal operators; the nilpotent [[0,1],[0,0]] separates the two.
double cstar_norm(const Operator& a);

// ‖A − A†‖ measured in cstar_norm.
double hermiticity_defect(const Operator& a);

// 1e-10 · max(1, ‖A‖): the scale-aware gate used by hermitian_eig.
double default_hermiticity_tol(const Operator& a);

EigenDecomposition hermitian_eig(const Operator& a,
                                 std::optional<double> hermiticity_tol = {});

// V·Λ·V† from a decomposition; used for residual reporting.
Operator reconstruct(const EigenDecomposition& eig);

// U = exp(−i·s·T/ħ) built from the spectral decomposition of Hermitian T.
// s = 0 returns the exact identity.
Operator evolution_unitary(const Operator& t, double s, double hbar = 1.0);
Operator evolution_unitary(const EigenDecomposition& eig, double s,
                           double hbar = 1.0);

}  // namespace dagger
