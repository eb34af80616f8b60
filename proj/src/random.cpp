#include "dagger/random.hpp"

#include <Eigen/QR>

#include <cmath>

namespace dagger {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

void validate(const RandomOperatorSpec& spec) {
  if (spec.dim < 1) {
    throw InvalidArgumentError("RandomOperatorSpec: dim must be >= 1");
  }
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) {
    throw InvalidArgumentError("RandomOperatorSpec: scale must be positive and finite");
  }
}

Complex standard_complex_gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  const double im = normal(rng);
  return Complex(re * kInvSqrt2, im * kInvSqrt2);
}

namespace {

Operator draw_ginibre(Eigen::Index dim, double scale, std::mt19937_64& rng) {
  Operator m(dim, dim);
  std::normal_distribution<double> normal;
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re * kInvSqrt2 * scale, im * kInvSqrt2 * scale);
    }
  }
  return m;
}

}  // namespace

Operator draw_operator(const RandomOperatorSpec& spec, std::mt19937_64& rng) {
  validate(spec);
  switch (spec.ensemble) {
    case Ensemble::general_gaussian:
      return draw_ginibre(spec.dim, spec.scale, rng);
    case Ensemble::hermitian_gaussian: {
      Operator g = draw_ginibre(spec.dim, spec.scale, rng);
      return 0.5 * (g + g.adjoint());
    }
    case Ensemble::unitary_conjugated_diagonal: {
      Operator g = draw_ginibre(spec.dim, 1.0, rng);
      Eigen::HouseholderQR<Operator> qr(g);
      Operator q = qr.householderQ();
      Eigen::VectorXd diag(spec.dim);
      std::normal_distribution<double> normal;
      for (Eigen::Index k = 0; k < spec.dim; ++k) {
        diag(k) = spec.scale * normal(rng);
      }
      return q * diag.cast<Complex>().asDiagonal() * q.adjoint();
    }
  }
  throw InvalidArgumentError("draw_operator: unknown ensemble");
}

Operator random_operator(const RandomOperatorSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return draw_operator(spec, rng);
}

Ensemble ensemble_from_string(const std::string& name) {
  if (name == "general_gaussian") return Ensemble::general_gaussian;
  if (name == "hermitian_gaussian") return Ensemble::hermitian_gaussian;
  if (name == "unitary_conjugated_diagonal") {
    return Ensemble::unitary_conjugated_diagonal;
  }
  throw InvalidArgumentError("unknown ensemble: " + name);
}

const char* to_string(Ensemble e) {
  switch (e) {
    case Ensemble::general_gaussian:
      return "general_gaussian";
    case Ensemble::hermitian_gaussian:
      return "hermitian_gaussian";
    case Ensemble::unitary_conjugated_diagonal:
      return "unitary_conjugated_diagonal";
  }
  return "unknown";
}

}  // namespace dagger
