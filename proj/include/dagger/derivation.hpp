#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dagger/types.hpp"

namespace dagger {

// Sign/constant conventions for a derivation with a known generator:
//   commutator:  δF = [T, F]
//   heisenberg:  δF = (1/iħ)[F, T]
// The two differ by the factor −1/(iħ); both constructors exist and the
// conversion identity between them is covered by tests. Serialized as the
// wire tokens "eq2" (commutator) and "eq3" (heisenberg).
enum class GeneratorConvention { commutator, heisenberg };

struct KnownGenerator {
  Operator generator;
  double hbar = 1.0;
  GeneratorConvention convention = GeneratorConvention::commutator;
};

// A linear map on the d×d matrix algebra, stored as a d²×d² matrix acting on
// column-stacked operators: vec(AXB) = (Bᵀ ⊗ A)·vec(X). The matrix encoding
// makes every representable map complex-linear; antilinear maps such as
// F ↦ F† cannot be expressed in this type at all.
struct Derivation {
  Eigen::Index algebra_dim = 0;
  Eigen::MatrixXcd matrix;
  std::optional<KnownGenerator> known_generator;

  // δF = unvec(matrix · vec(F)).
  Operator apply(const Operator& f) const;
};

// Shape and finiteness checks; when a known generator is attached, verifies
// that the matrix reproduces the tagged commutator formula to 1e-12.
void validate(const Derivation& delta);

Eigen::VectorXcd vectorize(const Operator& f);
Operator unvectorize(const Eigen::VectorXcd& v, Eigen::Index dim);

// δF = [T, F].
Derivation commutator_derivation(const Operator& t);

// δF = (1/iħ)[F, T]. As superoperator matrices,
// commutator_derivation(T) == (−iħ)·inner_derivation(T, ħ).
Derivation inner_derivation(const Operator& t, double hbar = 1.0);

// Scale-normalized ‖δ(AB) − (δA)B − A(δB)‖.
double leibniz_residual(const Derivation& delta, const Operator& a,
                        const Operator& b);

// Scale-normalized ‖δ(αA+βB) − αδA − βδB‖.
double linearity_residual(const Derivation& delta, const Operator& a,
                          const Operator& b, Complex alpha, Complex beta);

struct DerivationCheck {
  bool passed = false;
  double identity_residual = 0.0;      // ‖δ(1)‖, scale-normalized
  double max_leibniz_residual = 0.0;   // worst Leibniz residual over the trials
  long trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> witness;  // JSON text of the worst-failing inputs
};

// Leibniz rule over seeded random pairs plus the δ(1) = 0 requirement.
// Linearity holds structurally for this matrix representation.
DerivationCheck is_derivation(const Derivation& delta, long trials = 20,
                              std::uint64_t seed = 0,
                              const ToleranceConfig& tol = {});

struct GeneratorExtraction {
  Operator generator;               // trace-zero representative T₀
  Operator minimal_norm_generator;  // spectrum-midpoint shift of Hermitian T₀
  double residual = 0.0;            // worst probe residual of δF − [T₀, F]
  double derivation_norm_lower_bound = 0.0;  // sampled sup ‖δF‖/‖F‖
  std::optional<double> derivation_norm_exact;  // λ_max − λ_min, Hermitian only
};

// Constructive inner-generator recovery: T₀ = Σ_i δ(E_{i1})·E_{1i} shifted
// trace-free; E_{ij} are the matrix units. Residuals are probed over all d²
// matrix units plus 50 seeded Gaussian probes, each normalized by max(1,‖F‖).
// Throws NotADerivationError when the input fails is_derivation at default
// tolerances, and ResidualToleranceError (carrying the residual) when the
// probed residual exceeds the given tolerance.
GeneratorExtraction extract_generator(const Derivation& delta,
                                      const ToleranceConfig& tol = {});

// D with [D, F] = δF for δ = inner_derivation(T, ħ): D = (i/ħ)·T, so that
// −iħ·D recovers T exactly.
Operator ket_generator(const Operator& t, double hbar = 1.0);

const char* to_string(GeneratorConvention c);
GeneratorConvention generator_convention_from_string(const std::string& name);

}  // namespace dagger
