#include "dagger/types.hpp"

namespace dagger {

void validate(const ToleranceConfig& tol) {
  if (!(tol.rel_tol > 0.0) || !(tol.abs_tol > 0.0)) {
    throw InvalidArgumentError("tolerances must be strictly positive");
  }
}

void require_square(const Operator& a, const char* context) {
  if (a.rows() < 1 || a.rows() != a.cols()) {
    throw DimensionMismatchError(std::string(context) +
                                 ": expected a square operator with dim >= 1, got " +
                                 std::to_string(a.rows()) + "x" +
                                 std::to_string(a.cols()));
  }
}

void require_finite(const Operator& a, const char* context) {
  if (!a.allFinite()) {
    throw InvalidArgumentError(std::string(context) +
                               ": operator has non-finite entries");
  }
}

void require_same_shape(const Operator& a, const Operator& b,
                        const char* context) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatchError(
        std::string(context) + ": dimension mismatch, " +
        std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace dagger
