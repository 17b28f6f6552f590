#pragma once

#include "commcurve/gaussian_rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace commcurve {

/// Dense univariate polynomial in t over Q(i), coefficients low to high.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(long c) : UniPoly(GaussianRational(c)) {}  // NOLINT
  UniPoly(const GaussianRational& c);                 // NOLINT
  explicit UniPoly(std::vector<GaussianRational> coeffs);
  UniPoly(std::initializer_list<GaussianRational> coeffs)
      : UniPoly(std::vector<GaussianRational>(coeffs)) {}

  /// c * t^k
  static UniPoly monomial(const GaussianRational& c, int k);
  static UniPoly t() { return monomial(1, 1); }

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Coefficient of t^k (zero outside the stored range).
  GaussianRational coeff(int k) const;
  const GaussianRational& lead() const { return c_.back(); }
  /// Lowest k with nonzero coefficient (0 for the zero polynomial).
  int valuation() const;

  GaussianRational operator()(const GaussianRational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly conj() const;
  /// t^n p(1/t) for n >= degree.
  UniPoly reversed(int n) const;
  /// p(t) -> p(-t)
  UniPoly negate_variable() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string str() const;

private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Euclidean division; throws std::domain_error on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws std::domain_error if b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);
/// Squarefree part, monic.
UniPoly squarefree_part(const UniPoly& p);
/// All roots in Q(i), without multiplicity, sorted. Candidates are
/// enumerated from Gaussian-integer divisors; `norm_cap` bounds the search.
std::vector<GaussianRational> gaussian_rational_roots(const UniPoly& p, unsigned long norm_cap = 400000000UL);

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }
std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace commcurve
