#pragma once

#include <cstdint>

#include "dagger/linalg.hpp"
#include "dagger/random.hpp"
#include "dagger/types.hpp"

namespace testutil {

inline dagger::Operator pauli_x() {
  dagger::Operator m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline dagger::Operator pauli_y() {
  dagger::Operator m(2, 2);
  m << dagger::Complex(0, 0), dagger::Complex(0, -1), dagger::Complex(0, 1),
      dagger::Complex(0, 0);
  return m;
}

inline dagger::Operator pauli_z() {
  dagger::Operator m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

// [[0,1],[0,0]]: spectral radius 0, operator norm 1.
inline dagger::Operator nilpotent2() {
  dagger::Operator m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  return m;
}

inline dagger::Operator random_general(Eigen::Index dim, std::uint64_t seed,
                                       double scale = 1.0) {
  return dagger::random_operator(
      {dim, dagger::Ensemble::general_gaussian, scale}, seed);
}

inline dagger::Operator random_hermitian(Eigen::Index dim, std::uint64_t seed,
                                         double scale = 1.0) {
  return dagger::random_operator(
      {dim, dagger::Ensemble::hermitian_gaussian, scale}, seed);
}

inline dagger::Operator traceless(const dagger::Operator& a) {
  return a - (a.trace() / static_cast<double>(a.rows())) *
                 dagger::Operator::Identity(a.rows(), a.cols());
}

inline double max_abs_diff(const dagger::Operator& a,
                           const dagger::Operator& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline bool bitwise_equal(const dagger::Operator& a,
                          const dagger::Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

}  // namespace testutil
