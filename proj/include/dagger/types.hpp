#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace dagger {

using Complex = std::complex<double>;

// Dense square complex matrix over the truncated Hilbert space. Coordinates,
// momenta, generators and observables all share this carrier type.
using Operator = Eigen::MatrixXcd;

// Complex column vector; kets are kept normalized to unit Euclidean norm.
using Ket = Eigen::VectorXcd;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  NotHermitianError(const std::string& what, double defect)
      : Error(what), defect_(defect) {}

  // ‖A − A†‖ of the offending operator.
  double defect() const { return defect_; }

 private:
  double defect_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class NotADerivationError : public Error {
 public:
  using Error::Error;
};

class ResidualToleranceError : public Error {
 public:
  ResidualToleranceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Pass/fail thresholds shared by the verification routines. Residuals are
// scale-normalized before the relative comparison; abs_tol is a raw floor.
struct ToleranceConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
};

void validate(const ToleranceConfig& tol);

void require_square(const Operator& a, const char* context);
void require_finite(const Operator& a, const char* context);
void require_same_shape(const Operator& a, const Operator& b,
                        const char* context);

}  // namespace dagger
