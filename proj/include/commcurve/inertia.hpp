#pragma once

#include "commcurve/dense.hpp"

namespace commcurve {

struct SignatureReport {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;

  Index dimension() const { return positive + negative + zero; }
  friend bool operator==(const SignatureReport&, const SignatureReport&) = default;
};

/// Sylvester inertia of a real symmetric matrix by symmetric Gaussian
/// elimination over Q. When every remaining diagonal entry vanishes, a
/// congruence adding row/column j to i makes the diagonal entry 2*s_ij.
/// Throws std::invalid_argument for non-square, non-symmetric or
/// non-real input.
SignatureReport inertia(const QMat& s);

}  // namespace commcurve
