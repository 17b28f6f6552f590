#pragma once

#include "commcurve/dense.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace commcurve {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

enum class OrderKind { Lex, GrLex, GrevLex };

/// Monomial order on exponent vectors. `priority` lists variable indices
/// from most to least significant; empty means natural order x1 > x2 > ...
struct MonomialOrder {
  OrderKind kind = OrderKind::GrLex;
  std::vector<int> priority;

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Exponents& a, const Exponents& b) const {
    const std::size_t n = a.size();
    auto var = [&](std::size_t k) { return priority.empty() ? k : static_cast<std::size_t>(priority[k]); };
    if (kind != OrderKind::Lex) {
      const int da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db ? -1 : 1;
    }
    if (kind == OrderKind::GrevLex) {
      for (std::size_t k = n; k-- > 0;) {
        const std::size_t v = var(k);
        if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
      }
      return 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t v = var(k);
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }
};

/// Sparse polynomial in x1..xn over the field F. No zero coefficient is stored.
template <class F>
class MultiPoly {
public:
  using Terms = std::map<Exponents, F>;

  explicit MultiPoly(int nvars = 0) : n_(nvars) {}
  MultiPoly(int nvars, const F& c) : n_(nvars) {
    if (!is_zero_scalar(c)) t_[Exponents(static_cast<std::size_t>(nvars), 0)] = c;
  }

  static MultiPoly monomial(int nvars, Exponents e, const F& c) {
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("MultiPoly: exponent length mismatch");
    MultiPoly p(nvars);
    if (!is_zero_scalar(c)) p.t_[std::move(e)] = c;
    return p;
  }
  static MultiPoly variable(int nvars, int k) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(k)] = 1;
    return monomial(nvars, std::move(e), F(1));
  }

  int nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  F coeff(const Exponents& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? F(0) : it->second;
  }

  /// Leading term under the order; requires a nonzero polynomial.
  std::pair<Exponents, F> lead(const MonomialOrder& ord) const {
    if (t_.empty()) throw std::domain_error("MultiPoly::lead of zero");
    auto best = t_.begin();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
      if (ord.compare(it->first, best->first) > 0) best = it;
    return *best;
  }

  void add_term(const Exponents& e, const F& c) {
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_scalar(it->second)) t_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly out(a.n_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) out.add_term(exp_add(ea, eb), ca * cb);
    return out;
  }
  MultiPoly operator-() const {
    MultiPoly out(n_);
    for (const auto& [e, c] : t_) out.t_[e] = -c;
    return out;
  }
  MultiPoly scaled(const F& c, const Exponents& shift) const {
    MultiPoly out(n_);
    if (is_zero_scalar(c)) return out;
    for (const auto& [e, d] : t_) out.t_[exp_add(e, shift)] = c * d;
    return out;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  template <class G, class Fn>
  MultiPoly<G> map_coefficients(Fn&& fn) const {
    MultiPoly<G> out(n_);
    for (const auto& [e, c] : t_) out.add_term(e, fn(c));
    return out;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << it->second << ")";
      for (std::size_t k = 0; k < it->first.size(); ++k)
        if (it->first[k] > 0) os << "*x" << (k + 1) << (it->first[k] > 1 ? "^" + std::to_string(it->first[k]) : "");
    }
    return os.str();
  }

private:
  static bool is_zero_scalar(const F& c) {
    using commcurve::is_zero;
    return is_zero(c);
  }
  void check(const MultiPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  }

  int n_;
  Terms t_;
};

template <class F>
bool is_zero(const MultiPoly<F>& p) {
  return p.is_zero();
}

/// Value at a point of F^n.
template <class F>
F evaluate(const MultiPoly<F>& p, const std::vector<F>& point) {
  if (static_cast<int>(point.size()) != p.nvars()) throw std::invalid_argument("evaluate: point dimension mismatch");
  F acc(0);
  for (const auto& [e, c] : p.terms()) {
    F term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int r = 0; r < e[k]; ++r) term *= point[k];
    acc += term;
  }
  return acc;
}

}  // namespace commcurve
