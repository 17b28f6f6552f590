#include "commcurve/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace commcurve {

RatFunc::RatFunc(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    UniPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (!den_.lead().is_one()) {
    const GaussianRational inv = den_.lead().inverse();
    num_ *= UniPoly(inv);
    den_ *= UniPoly(inv);
  }
}

bool RatFunc::is_laurent() const {
  const auto& c = den_.coeffs();
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    if (!c[k].is_zero()) return false;
  return true;
}

std::optional<std::pair<int, int>> RatFunc::laurent_range() const {
  if (!is_laurent()) throw std::domain_error("RatFunc::laurent_range: not a Laurent polynomial");
  if (is_zero()) return std::nullopt;
  return std::make_pair(num_.valuation() - den_.degree(), num_.degree() - den_.degree());
}

GaussianRational RatFunc::laurent_coeff(int k) const {
  if (!is_laurent()) throw std::domain_error("RatFunc::laurent_coeff: not a Laurent polynomial");
  return num_.coeff(k + den_.degree());
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: division by zero");
  return {den_, num_};
}

RatFunc RatFunc::invert_variable() const {
  // num(1/t)/den(1/t) = t^(dd-dn) rev(num)/rev(den)
  const int dn = num_.degree(), dd = den_.degree();
  if (is_zero()) return {};
  UniPoly n = num_.reversed(dn), d = den_.reversed(dd);
  if (dd > dn) n *= UniPoly::monomial(1, dd - dn);
  else if (dn > dd) d *= UniPoly::monomial(1, dn - dd);
  return {n, d};
}

GaussianRational RatFunc::operator()(const GaussianRational& t0) const {
  const GaussianRational d = den_(t0);
  if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole");
  return num_(t0) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace commcurve
