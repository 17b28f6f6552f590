#include "commcurve/dense.hpp"

#include <algorithm>

namespace commcurve {

PolyMat to_poly(const QMat& m) {
  return m.unaryExpr([](const GaussianRational& z) { return UniPoly(z); });
}

RatMat to_ratfunc(const PolyMat& m) {
  return m.unaryExpr([](const UniPoly& p) { return RatFunc(p); });
}

QMat evaluate(const PolyMat& m, const GaussianRational& t0) {
  return m.unaryExpr([&](const UniPoly& p) { return p(t0); });
}

QMat evaluate(const RatMat& m, const GaussianRational& t0) {
  return m.unaryExpr([&](const RatFunc& f) { return f(t0); });
}

QMat coefficient(const PolyMat& m, int k) {
  return m.unaryExpr([k](const UniPoly& p) { return p.coeff(k); });
}

PolyMat from_coefficients(const std::vector<QMat>& coeffs) {
  if (coeffs.empty()) return {};
  PolyMat out = zeros<UniPoly>(coeffs[0].rows(), coeffs[0].cols());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (Index j = 0; j < out.cols(); ++j)
      for (Index i = 0; i < out.rows(); ++i)
        if (!coeffs[k](i, j).is_zero()) out(i, j) += UniPoly::monomial(coeffs[k](i, j), static_cast<int>(k));
  return out;
}

int max_degree(const PolyMat& m) {
  int d = -1;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) d = std::max(d, m(i, j).degree());
  return d;
}

}  // namespace commcurve
