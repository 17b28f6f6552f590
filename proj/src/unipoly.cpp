#include "commcurve/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

namespace commcurve {

UniPoly::UniPoly(const GaussianRational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const GaussianRational& c, int k) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(k)];
}

int UniPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return 0;
}

GaussianRational UniPoly::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  const GaussianRational inv = lead().inverse();
  std::vector<GaussianRational> v(c_);
  for (auto& x : v) x *= inv;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::conj() const {
  std::vector<GaussianRational> v(c_);
  for (auto& x : v) x = x.conj();
  return UniPoly(std::move(v));
}

UniPoly UniPoly::reversed(int n) const {
  if (is_zero()) return {};
  if (n < degree()) throw std::invalid_argument("UniPoly::reversed: n below degree");
  std::vector<GaussianRational> v(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) v[static_cast<std::size_t>(n) - k] = c_[k];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::negate_variable() const {
  std::vector<GaussianRational> v(c_);
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly UniPoly::operator-() const {
  std::vector<GaussianRational> v(c_);
  for (auto& x : v) x = -x;
  return UniPoly(std::move(v));
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const GaussianRational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    if (!out.empty()) out += (cs[0] == '-') ? " - " : " + ";
    if (!out.empty() && cs[0] == '-') cs.erase(0, 1);
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs == "1") cs.clear();
    else if (cs == "-1") cs = "-";
    else cs += "*";
    out += cs + (k == 1 ? "t" : "t^" + std::to_string(k));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<GaussianRational> rem = a.coeffs();
  std::vector<GaussianRational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const GaussianRational inv = b.lead().inverse();
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const GaussianRational q = rem[static_cast<std::size_t>(k + b.degree())] * inv;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
  return q;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_constant()) return p.monic();
  return exact_div(p, poly_gcd(p, p.derivative())).monic();
}

namespace {

struct GaussInt {
  mpz_class re, im;
  mpz_class norm() const { return re * re + im * im; }
};

// b | a in Z[i]
bool divides(const GaussInt& b, const GaussInt& a) {
  const mpz_class n = b.norm();
  if (n == 0) return false;
  // a * conj(b) / N(b)
  const mpz_class r = a.re * b.re + a.im * b.im;
  const mpz_class i = a.im * b.re - a.re * b.im;
  return mpz_divisible_p(r.get_mpz_t(), n.get_mpz_t()) && mpz_divisible_p(i.get_mpz_t(), n.get_mpz_t());
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    out.push_back(k);
    if (k != n / k) out.push_back(n / k);
  }
  return out;
}

// All Gaussian integers dividing a (every associate included).
std::vector<GaussInt> gaussian_divisors(const GaussInt& a, unsigned long cap) {
  const mpz_class n = a.norm();
  if (n > cap) throw std::runtime_error("gaussian_rational_roots: coefficient norm exceeds search cap");
  std::vector<GaussInt> out;
  for (unsigned long m : divisors(n.get_ui())) {
    const auto lim = static_cast<long>(std::sqrt(static_cast<double>(m))) + 1;
    for (long x = -lim; x <= lim; ++x) {
      const long rest = static_cast<long>(m) - x * x;
      if (rest < 0) continue;
      auto y = static_cast<long>(std::llround(std::sqrt(static_cast<double>(rest))));
      while (y * y > rest) --y;
      while ((y + 1) * (y + 1) <= rest) ++y;
      if (y * y != rest) continue;
      for (long sy : {y, -y}) {
        GaussInt g{mpz_class(x), mpz_class(sy)};
        if (divides(g, a)) out.push_back(g);
        if (y == 0) break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<GaussianRational> gaussian_rational_roots(const UniPoly& p, unsigned long norm_cap) {
  if (p.is_zero()) throw std::domain_error("gaussian_rational_roots: zero polynomial");
  std::set<GaussianRational> roots;
  UniPoly q = p;
  if (q.valuation() > 0) {
    roots.insert(GaussianRational{});
    std::vector<GaussianRational> shifted(q.coeffs().begin() + q.valuation(), q.coeffs().end());
    q = UniPoly(std::move(shifted));
  }
  q = squarefree_part(q);
  if (q.degree() >= 1) {
    mpz_class lcm = 1;
    for (const auto& c : q.coeffs()) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im().get_den_mpz_t());
    }
    auto to_int = [&](const GaussianRational& c) {
      Rational re = c.re() * lcm, im = c.im() * lcm;
      return GaussInt{re.get_num(), im.get_num()};
    };
    const auto nums = gaussian_divisors(to_int(q.coeffs().front()), norm_cap);
    const auto dens = gaussian_divisors(to_int(q.lead()), norm_cap);
    for (const auto& u : nums)
      for (const auto& w : dens) {
        GaussianRational r = GaussianRational(Rational(u.re), Rational(u.im)) /
                             GaussianRational(Rational(w.re), Rational(w.im));
        if (!roots.count(r) && q(r).is_zero()) roots.insert(r);
      }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace commcurve
