#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "dagger/types.hpp"

namespace dagger {

enum class Ensemble {
  general_gaussian,             // iid standard complex Gaussian entries (Ginibre)
  hermitian_gaussian,           // (G + G†)/2 of a Ginibre draw
  unitary_conjugated_diagonal,  // Q·diag(reals)·Q†, Q from QR of a Ginibre draw
};

struct RandomOperatorSpec {
  Eigen::Index dim = 2;
  Ensemble ensemble = Ensemble::general_gaussian;
  double scale = 1.0;
};

void validate(const RandomOperatorSpec& spec);

// (n1 + i·n2)/√2 with n1, n2 ~ N(0,1), so E|z|² = 1.
Complex standard_complex_gaussian(std::mt19937_64& rng);

// Draw from an explicit stream (entries filled row by row).
Operator draw_operator(const RandomOperatorSpec& spec, std::mt19937_64& rng);

// Deterministic for (spec, seed): repeated calls are bit-identical.
Operator random_operator(const RandomOperatorSpec& spec, std::uint64_t seed);

Ensemble ensemble_from_string(const std::string& name);
const char* to_string(Ensemble e);

}  // namespace dagger
