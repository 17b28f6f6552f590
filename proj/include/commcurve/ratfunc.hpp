#pragma once

#include "commcurve/unipoly.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace commcurve {

/// Element of Q(i)(t) in lowest terms with a monic denominator.
class RatFunc {
public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}                     // NOLINT
  RatFunc(const GaussianRational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const UniPoly& p) : num_(p), den_(1) {}           // NOLINT
  RatFunc(const UniPoly& num, const UniPoly& den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// True when the denominator is a power of t.
  bool is_laurent() const;
  /// Laurent exponents [low, high] of a Laurent element; nullopt for zero.
  std::optional<std::pair<int, int>> laurent_range() const;
  /// Coefficient of t^k of a Laurent element.
  GaussianRational laurent_coeff(int k) const;

  RatFunc inverse() const;
  /// f(t) -> f(1/t)
  RatFunc invert_variable() const;
  /// Value at t0; throws std::domain_error at a pole.
  GaussianRational operator()(const GaussianRational& t0) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const;

private:
  void normalize();
  UniPoly num_;
  UniPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace commcurve
