#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace commcurve {

using Rational = mpq_class;

/// Exact element of Q(i). Both parts are kept canonical (lowest terms,
/// positive denominators) after every operation.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: implicit from integers
  GaussianRational(const Rational& re) : re_(re) { re_.canonicalize(); }  // NOLINT
  GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 as a rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Total order (re, then im); only for canonical sorting, not a field order.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  /// Human-readable form such as "3/2-1/4*i".
  std::string str() const;

private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses "p/q" or "p" into a canonical rational; throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" text (integers print without denominator).
std::string rational_string(const Rational& q);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

}  // namespace commcurve
