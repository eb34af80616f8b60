#include "dagger/derivation.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dagger/io.hpp"
#include "dagger/linalg.hpp"
#include "dagger/random.hpp"

namespace dagger {

namespace {

// Seed of the fixed Gaussian probe stream used by extract_generator.
constexpr std::uint64_t kProbeSeed = 1;
constexpr int kGaussianProbes = 50;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Eigen::MatrixXcd expected_superoperator(const KnownGenerator& gen) {
  const Eigen::Index d = gen.generator.rows();
  const Operator id = Operator::Identity(d, d);
  const Eigen::MatrixXcd left = Eigen::kroneckerProduct(id, gen.generator);
  const Eigen::MatrixXcd right =
      Eigen::kroneckerProduct(gen.generator.transpose(), id);
  if (gen.convention == GeneratorConvention::commutator) {
    return left - right;  // vec(TF − FT)
  }
  return (right - left) / Complex(0.0, gen.hbar);  // vec((FT − TF)/iħ)
}

}  // namespace

void validate(const Derivation& delta) {
  if (delta.algebra_dim < 1) {
    throw InvalidArgumentError("Derivation: algebra_dim must be >= 1");
  }
  const Eigen::Index n = delta.algebra_dim * delta.algebra_dim;
  if (delta.matrix.rows() != n || delta.matrix.cols() != n) {
    throw DimensionMismatchError(
        "Derivation: superoperator must be " + std::to_string(n) + "x" +
        std::to_string(n) + ", got " + std::to_string(delta.matrix.rows()) +
        "x" + std::to_string(delta.matrix.cols()));
  }
  if (!delta.matrix.allFinite()) {
    throw InvalidArgumentError("Derivation: superoperator has non-finite entries");
  }
  if (delta.known_generator) {
    const KnownGenerator& gen = *delta.known_generator;
    require_square(gen.generator, "Derivation known generator");
    require_finite(gen.generator, "Derivation known generator");
    if (gen.generator.rows() != delta.algebra_dim) {
      throw DimensionMismatchError(
          "Derivation: known generator dim does not match algebra_dim");
    }
    if (!(gen.hbar > 0.0)) {
      throw InvalidArgumentError("Derivation: known generator hbar must be positive");
    }
    const Eigen::MatrixXcd expected = expected_superoperator(gen);
    const double mismatch = (delta.matrix - expected).norm();
    if (mismatch > 1e-12 * std::max(1.0, expected.norm())) {
      throw InvalidArgumentError(
          "Derivation: superoperator does not reproduce the tagged commutator "
          "formula (mismatch " +
          num(mismatch) + ")");
    }
  }
}

Eigen::VectorXcd vectorize(const Operator& f) {
  require_square(f, "vectorize");
  return Eigen::Map<const Eigen::VectorXcd>(f.data(), f.size());
}

Operator unvectorize(const Eigen::VectorXcd& v, Eigen::Index dim) {
  if (dim < 1 || v.size() != dim * dim) {
    throw DimensionMismatchError("unvectorize: vector length " +
                                 std::to_string(v.size()) +
                                 " is not dim² for dim " + std::to_string(dim));
  }
  return Eigen::Map<const Operator>(v.data(), dim, dim);
}

Derivation commutator_derivation(const Operator& t) {
  require_square(t, "commutator_derivation");
  require_finite(t, "commutator_derivation");
  Derivation delta;
  delta.algebra_dim = t.rows();
  delta.known_generator =
      KnownGenerator{t, 1.0, GeneratorConvention::commutator};
  delta.matrix = expected_superoperator(*delta.known_generator);
  return delta;
}

Derivation inner_derivation(const Operator& t, double hbar) {
  require_square(t, "inner_derivation");
  require_finite(t, "inner_derivation");
  if (!(hbar > 0.0)) {
    throw InvalidArgumentError("inner_derivation: hbar must be positive");
  }
  Derivation delta;
  delta.algebra_dim = t.rows();
  delta.known_generator =
      KnownGenerator{t, hbar, GeneratorConvention::heisenberg};
  delta.matrix = expected_superoperator(*delta.known_generator);
  return delta;
}

Operator Derivation::apply(const Operator& f) const {
  require_square(f, "apply");
  if (f.rows() != algebra_dim) {
    throw DimensionMismatchError("apply: operator dim " +
                                 std::to_string(f.rows()) +
                                 " does not match algebra_dim " +
                                 std::to_string(algebra_dim));
  }
  return unvectorize(matrix * vectorize(f), algebra_dim);
}

double leibniz_residual(const Derivation& delta, const Operator& a,
                        const Operator& b) {
  require_same_shape(a, b, "leibniz_residual");
  const Operator d_ab = delta.apply(a * b);
  const Operator da_b = delta.apply(a) * b;
  const Operator a_db = a * delta.apply(b);
  const double raw = cstar_norm(d_ab - da_b - a_db);
  const double scale = std::max(
      {1.0, cstar_norm(d_ab), cstar_norm(da_b), cstar_norm(a_db)});
  return raw / scale;
}

double linearity_residual(const Derivation& delta, const Operator& a,
                          const Operator& b, Complex alpha, Complex beta) {
  require_same_shape(a, b, "linearity_residual");
  const Operator d_sum = delta.apply(alpha * a + beta * b);
  const Operator da = delta.apply(a);
  const Operator db = delta.apply(b);
  const double raw = cstar_norm(d_sum - alpha * da - beta * db);
  const double scale =
      std::max({1.0, cstar_norm(d_sum), std::abs(alpha) * cstar_norm(da),
                std::abs(beta) * cstar_norm(db)});
  return raw / scale;
}

DerivationCheck is_derivation(const Derivation& delta, long trials,
                              std::uint64_t seed, const ToleranceConfig& tol) {
  validate(delta);
  validate(tol);
  if (trials < 1) {
    throw InvalidArgumentError("is_derivation: trials must be >= 1");
  }
  const Eigen::Index d = delta.algebra_dim;
  DerivationCheck check;
  check.trials = trials;
  check.seed = seed;

  const Operator id = Operator::Identity(d, d);
  const Operator delta_id = delta.apply(id);
  const double id_raw = cstar_norm(delta_id);
  check.identity_residual = id_raw / std::max(1.0, delta.matrix.norm());
  const bool id_ok =
      id_raw <= tol.abs_tol || check.identity_residual <= tol.rel_tol;

  const RandomOperatorSpec probe{d, Ensemble::general_gaussian, 1.0};
  long worst_trial = -1;
  for (long k = 0; k < trials; ++k) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k));
    const Operator a = draw_operator(probe, rng);
    const Operator b = draw_operator(probe, rng);
    const double r = leibniz_residual(delta, a, b);
    if (r > check.max_leibniz_residual) {
      check.max_leibniz_residual = r;
      worst_trial = k;
    }
  }
  const bool leibniz_ok = check.max_leibniz_residual <= tol.rel_tol;
  check.passed = id_ok && leibniz_ok;

  if (!check.passed) {
    io::json witness;
    if (!id_ok) {
      witness["input"] = "identity";
      witness["residual"] = check.identity_residual;
    } else {
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(worst_trial));
      witness["trial"] = worst_trial;
      witness["seed"] = seed + static_cast<std::uint64_t>(worst_trial);
      witness["a"] = io::operator_to_json(draw_operator(probe, rng));
      witness["b"] = io::operator_to_json(draw_operator(probe, rng));
      witness["residual"] = check.max_leibniz_residual;
    }
    check.witness = witness.dump();
  }
  return check;
}

GeneratorExtraction extract_generator(const Derivation& delta,
                                      const ToleranceConfig& tol) {
  validate(tol);
  const DerivationCheck pre = is_derivation(delta);
  if (!pre.passed) {
    throw NotADerivationError(
        "extract_generator: input is not a derivation (identity residual " +
        num(pre.identity_residual) + ", Leibniz residual " +
        num(pre.max_leibniz_residual) + ")");
  }

  const Eigen::Index d = delta.algebra_dim;
  const Operator id = Operator::Identity(d, d);

  // T = Σ_i δ(E_{i1})·E_{1i}; matrix units span the algebra, so zero residual
  // on them is conclusive up to rounding.
  Operator t_raw = Operator::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    Operator e_i1 = Operator::Zero(d, d);
    e_i1(i, 0) = Complex(1.0, 0.0);
    Operator e_1i = Operator::Zero(d, d);
    e_1i(0, i) = Complex(1.0, 0.0);
    t_raw += delta.apply(e_i1) * e_1i;
  }
  GeneratorExtraction out;
  out.generator =
      t_raw - (t_raw.trace() / static_cast<double>(d)) * id;

  const Operator& t0 = out.generator;
  double residual = 0.0;
  double lower_bound = 0.0;
  auto probe = [&](const Operator& f) {
    const double fn = cstar_norm(f);
    const Operator df = delta.apply(f);
    const Operator fit = t0 * f - f * t0;
    residual = std::max(residual,
                        cstar_norm(df - fit) / std::max(1.0, fn));
    if (fn > 1e-12) {
      lower_bound = std::max(lower_bound, cstar_norm(df) / fn);
    }
  };

  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Operator unit = Operator::Zero(d, d);
      unit(i, j) = Complex(1.0, 0.0);
      probe(unit);
    }
  }
  {
    std::mt19937_64 rng(kProbeSeed);
    const RandomOperatorSpec spec{d, Ensemble::general_gaussian, 1.0};
    for (int k = 0; k < kGaussianProbes; ++k) {
      probe(draw_operator(spec, rng));
    }
  }

  const double defect = cstar_norm(t0 - t0.adjoint());
  const bool hermitian = defect <= 1e-10 * std::max(1.0, cstar_norm(t0));
  if (hermitian) {
    const EigenDecomposition eig = hermitian_eig(t0);
    const double lo = eig.eigenvalues(0);
    const double hi = eig.eigenvalues(d - 1);
    out.minimal_norm_generator = t0 - Complex(0.5 * (lo + hi), 0.0) * id;
    out.derivation_norm_exact = hi - lo;
    // Rank-one probe between the extreme eigenvectors; for Hermitian
    // generators it attains the derivation norm, making the sampled lower
    // bound tight.
    probe(eig.eigenvectors.col(d - 1) * eig.eigenvectors.col(0).adjoint());
  } else {
    out.minimal_norm_generator = t0;
  }

  out.residual = residual;
  out.derivation_norm_lower_bound = lower_bound;

  if (residual > std::max(tol.rel_tol, tol.abs_tol)) {
    throw ResidualToleranceError(
        "extract_generator: probe residual " + num(residual) +
            " exceeds tolerance " + num(std::max(tol.rel_tol, tol.abs_tol)),
        residual);
  }
  return out;
}

Operator ket_generator(const Operator& t, double hbar) {
  require_square(t, "ket_generator");
  require_finite(t, "ket_generator");
  if (!(hbar > 0.0)) {
    throw InvalidArgumentError("ket_generator: hbar must be positive");
  }
  return (Complex(0.0, 1.0) / hbar) * t;
}

const char* to_string(GeneratorConvention c) {
  return c == GeneratorConvention::commutator ? "eq2" : "eq3";
}

GeneratorConvention generator_convention_from_string(const std::string& name) {
  if (name == "eq2") return GeneratorConvention::commutator;
  if (name == "eq3") return GeneratorConvention::heisenberg;
  throw InvalidArgumentError("unknown generator convention: " + name);
}

}  // namespace dagger
