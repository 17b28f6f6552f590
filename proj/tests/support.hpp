#pragma once

#include "commcurve/dense.hpp"
#include "commcurve/multipoly.hpp"

#include <random>
#include <vector>

namespace commcurve::testing {

using Rng = std::mt19937_64;

inline long small_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng, long bound = 5, long den = 4) {
  return Rational(small_int(rng, -bound, bound), small_int(rng, 1, den));
}

inline GaussianRational small_gaussian(Rng& rng, long bound = 5, long den = 4) {
  return {small_rational(rng, bound, den), small_rational(rng, bound, den)};
}

inline GaussianRational small_gaussian_int(Rng& rng, long bound = 3) {
  return {Rational(small_int(rng, -bound, bound)), Rational(small_int(rng, -bound, bound))};
}

inline UniPoly small_poly(Rng& rng, int max_deg, long bound = 3) {
  std::vector<GaussianRational> c;
  const int deg = static_cast<int>(small_int(rng, 0, max_deg));
  for (int k = 0; k <= deg; ++k) c.push_back(small_gaussian_int(rng, bound));
  return UniPoly(c);
}

inline QMat small_int_matrix(Rng& rng, Index r, Index c, long bound = 3) {
  QMat m(r, c);
  for (Index j = 0; j < c; ++j)
    for (Index i = 0; i < r; ++i) m(i, j) = GaussianRational(small_int(rng, -bound, bound));
  return m;
}

inline QMat small_gaussian_matrix(Rng& rng, Index r, Index c, long bound = 3) {
  QMat m(r, c);
  for (Index j = 0; j < c; ++j)
    for (Index i = 0; i < r; ++i) m(i, j) = small_gaussian_int(rng, bound);
  return m;
}

inline QMat rational_matrix(const std::vector<std::vector<long>>& rows) {
  QMat m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return m;
}

/// Polynomial from integer coefficients, low to high.
inline UniPoly upoly(std::initializer_list<long> c) {
  std::vector<GaussianRational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

template <class F>
MultiPoly<F> term(const F& c, std::initializer_list<int> e) {
  return MultiPoly<F>::monomial(static_cast<int>(e.size()), Exponents(e), c);
}

}  // namespace commcurve::testing
