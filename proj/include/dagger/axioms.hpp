#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dagger/derivation.hpp"
#include "dagger/random.hpp"
#include "dagger/types.hpp"

namespace dagger {

enum class AxiomId {
  invol_double,   // (A†)† = A
  invol_scalar,   // (λA)† = λ*·A†
  invol_sum,      // (A+B)† = A† + B†
  invol_product,  // (AB)† = B†·A†
  norm_adjoint,   // ‖A†‖ = ‖A‖
  norm_cstar,     // ‖A†A‖ = ‖A‖²
  leibniz,        // δ(AB) = (δA)B + A(δB)
  linearity,      // δ(αA + βB) = α·δA + β·δB
};

const char* to_string(AxiomId id);

struct AxiomReport {
  AxiomId axiom_id = AxiomId::invol_double;
  bool passed = false;
  double max_residual = 0.0;           // scale-normalized
  std::optional<std::string> witness;  // JSON text; present whenever !passed
  long trials = 1;
  std::uint64_t seed = 0;
};

// Norm used by check_cstar_identity. The spectral-radius variant is kept as
// the documented counterexample: on non-normal operators it breaks
// ‖A†A‖ = ‖A‖² (the shipped nilpotent fixture gives 1 vs 0).
enum class NormKind { cstar, spectral_radius };

// One report per identity: (A†)† = A, (λA)† = λ*A†, (A+B)† = A†+B†,
// (AB)† = B†A†. Residuals are cstar_norm of the difference, normalized by
// max(1, scale of the inputs).
std::vector<AxiomReport> check_involution(const Operator& a, const Operator& b,
                                          Complex lambda,
                                          const ToleranceConfig& tol = {});

// Reports for |‖A†‖ − ‖A‖| and |‖A†A‖ − ‖A‖²|, relative to max(1, ‖A‖²).
std::vector<AxiomReport> check_cstar_identity(const Operator& a,
                                              const ToleranceConfig& tol = {},
                                              NormKind norm = NormKind::cstar);

AxiomReport check_leibniz(const Derivation& delta, const Operator& a,
                          const Operator& b, const ToleranceConfig& tol = {});

AxiomReport check_linearity(const Derivation& delta, const Operator& a,
                            const Operator& b, Complex alpha, Complex beta,
                            const ToleranceConfig& tol = {});

struct SweepConfig {
  RandomOperatorSpec spec;
  long trials = 1000;
  std::uint64_t seed = 0;
  ToleranceConfig tol;
  int max_threads = 0;  // 0 = hardware concurrency; clamped to trials
};

// One aggregated report per AxiomId over `trials` independent trials. Trial k
// derives its own seed as seed + k, so results are order- and
// thread-count-independent; failing axioms carry the worst trial's inputs as
// witness.
std::vector<AxiomReport> run_axiom_sweep(const SweepConfig& config);

}  // namespace dagger
