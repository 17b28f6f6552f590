#pragma once

#include "commcurve/multipoly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace commcurve {

inline constexpr int kDefaultQuotientCap = 64;

/// Raised when the quotient is not finite-dimensional or exceeds the cap.
class QuotientError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

template <class F>
MultiPoly<F> make_monic(const MultiPoly<F>& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  const F inv = F(1) / p.lead(ord).second;
  return p.scaled(inv, Exponents(static_cast<std::size_t>(p.nvars()), 0));
}

/// Full reduction of p modulo the list g (no term of the result is divisible
/// by a leading monomial of g).
template <class F>
MultiPoly<F> normal_form(MultiPoly<F> p, const std::vector<MultiPoly<F>>& g, const MonomialOrder& ord) {
  std::vector<std::pair<Exponents, F>> leads;
  leads.reserve(g.size());
  for (const auto& q : g) leads.push_back(q.lead(ord));
  MultiPoly<F> rest(p.nvars());
  while (!p.is_zero()) {
    auto [e, c] = p.lead(ord);
    bool reduced = false;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!divides(leads[k].first, e)) continue;
      p -= g[k].scaled(c / leads[k].second, exp_sub(e, leads[k].first));
      reduced = true;
      break;
    }
    if (!reduced) {
      rest.add_term(e, c);
      p -= MultiPoly<F>::monomial(p.nvars(), e, c);
    }
  }
  return rest;
}

template <class F>
MultiPoly<F> s_polynomial(const MultiPoly<F>& a, const MultiPoly<F>& b, const MonomialOrder& ord) {
  const auto [ea, ca] = a.lead(ord);
  const auto [eb, cb] = b.lead(ord);
  const Exponents l = exp_lcm(ea, eb);
  return a.scaled(F(1) / ca, exp_sub(l, ea)) - b.scaled(F(1) / cb, exp_sub(l, eb));
}

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing lead.
template <class F>
std::vector<MultiPoly<F>> buchberger(const std::vector<MultiPoly<F>>& gens, const MonomialOrder& ord = {}) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  std::vector<MultiPoly<F>> g;
  for (const auto& p : gens)
    if (!p.is_zero()) g.push_back(make_monic(p, ord));
  if (g.empty()) return g;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return exp_lcm(g[pr.first].lead(ord).first, g[pr.second].lead(ord).first);
  };
  while (!pairs.empty()) {
    // normal selection: smallest lcm first
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
      if (ord.compare(pair_lcm(*it), pair_lcm(*best)) < 0) best = it;
    const auto pr = *best;
    pairs.erase(best);
    const Exponents la = g[pr.first].lead(ord).first, lb = g[pr.second].lead(ord).first;
    if (exp_lcm(la, lb) == exp_add(la, lb)) continue;  // coprime leads reduce to zero
    MultiPoly<F> r = normal_form(s_polynomial(g[pr.first], g[pr.second], ord), g, ord);
    if (r.is_zero()) continue;
    g.push_back(make_monic(r, ord));
    for (std::size_t i = 0; i + 1 < g.size(); ++i) pairs.emplace_back(i, g.size() - 1);
  }

  // minimalize
  std::vector<MultiPoly<F>> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Exponents lk = g[k].lead(ord).first;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (j == k) continue;
      const Exponents lj = g[j].lead(ord).first;
      if (divides(lj, lk) && (lj != lk || j < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[k]);
  }
  // inter-reduce
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<MultiPoly<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != k) others.push_back(minimal[j]);
    const auto [e, c] = minimal[k].lead(ord);
    MultiPoly<F> tail = minimal[k] - MultiPoly<F>::monomial(minimal[k].nvars(), e, c);
    minimal[k] = MultiPoly<F>::monomial(minimal[k].nvars(), e, c) + normal_form(tail, others, ord);
    minimal[k] = make_monic(minimal[k], ord);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const MultiPoly<F>& a, const MultiPoly<F>& b) {
    return ord.compare(a.lead(ord).first, b.lead(ord).first) < 0;
  });
  return minimal;
}

/// Basis display order: total degree ascending, then x1-heavier first.
inline bool basis_order_less(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

/// Standard monomials of a Groebner basis, in basis_order_less order.
/// Throws QuotientError if the quotient is infinite or larger than cap.
template <class F>
std::vector<Exponents> standard_monomials(const std::vector<MultiPoly<F>>& gb, int nvars, const MonomialOrder& ord,
                                          int cap = kDefaultQuotientCap) {
  std::vector<Exponents> leads;
  for (const auto& p : gb) leads.push_back(p.lead(ord).first);
  for (const auto& l : leads)
    if (total_degree(l) == 0) return {};  // unit ideal
  std::vector<int> bound(static_cast<std::size_t>(nvars), -1);
  for (const auto& l : leads) {
    int nonzero = 0, which = -1;
    for (int k = 0; k < nvars; ++k)
      if (l[static_cast<std::size_t>(k)] > 0) {
        ++nonzero;
        which = k;
      }
    if (nonzero == 1) {
      auto& b = bound[static_cast<std::size_t>(which)];
      const int a = l[static_cast<std::size_t>(which)];
      if (b < 0 || a < b) b = a;
    }
  }
  for (int k = 0; k < nvars; ++k)
    if (bound[static_cast<std::size_t>(k)] < 0)
      throw QuotientError("ideal is not zero-dimensional: no pure power of x" + std::to_string(k + 1) + " among leading terms");

  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(nvars), 0);
  for (;;) {
    bool standard = true;
    for (const auto& l : leads)
      if (divides(l, e)) {
        standard = false;
        break;
      }
    if (standard) {
      out.push_back(e);
      if (static_cast<int>(out.size()) > cap)
        throw QuotientError("quotient dimension exceeds cap " + std::to_string(cap));
    }
    int k = 0;
    while (k < nvars) {
      auto& ek = e[static_cast<std::size_t>(k)];
      if (++ek < bound[static_cast<std::size_t>(k)]) break;
      ek = 0;
      ++k;
    }
    if (k == nvars) break;
  }
  std::sort(out.begin(), out.end(), basis_order_less);
  return out;
}

/// Coordinates of a normal form in the given standard monomials.
template <class F>
Vec<F> coordinates(const MultiPoly<F>& nf, const std::vector<Exponents>& basis) {
  Vec<F> v = Vec<F>::Constant(static_cast<Index>(basis.size()), F(0));
  for (const auto& [e, c] : nf.terms()) {
    auto it = std::find(basis.begin(), basis.end(), e);
    if (it == basis.end()) throw std::logic_error("coordinates: term outside the standard basis");
    v(static_cast<Index>(it - basis.begin())) = c;
  }
  return v;
}

/// Matrix of multiplication by each variable on the quotient; column j
/// holds the coordinates of x_k * basis_j.
template <class F>
std::vector<Mat<F>> multiplication_matrices(const std::vector<MultiPoly<F>>& gb, const std::vector<Exponents>& basis,
                                            int nvars, const MonomialOrder& ord) {
  std::vector<Mat<F>> out;
  const auto n = static_cast<Index>(basis.size());
  for (int k = 0; k < nvars; ++k) {
    Mat<F> m(n, n);
    Exponents shift(static_cast<std::size_t>(nvars), 0);
    shift[static_cast<std::size_t>(k)] = 1;
    for (Index j = 0; j < n; ++j) {
      const auto mono = MultiPoly<F>::monomial(nvars, exp_add(basis[static_cast<std::size_t>(j)], shift), F(1));
      m.col(j) = coordinates(normal_form(mono, gb, ord), basis);
    }
    out.push_back(std::move(m));
  }
  return out;
}

template <class F>
struct QuotientAlgebra {
  MonomialOrder order;
  std::vector<MultiPoly<F>> groebner;
  std::vector<Exponents> basis;
  std::vector<Mat<F>> mult;  // one per variable
};

template <class F>
QuotientAlgebra<F> quotient_algebra(const std::vector<MultiPoly<F>>& gens, const MonomialOrder& ord = {},
                                    int cap = kDefaultQuotientCap) {
  if (gens.empty()) throw std::invalid_argument("quotient_algebra: empty generator list");
  const int n = gens.front().nvars();
  QuotientAlgebra<F> q;
  q.order = ord;
  q.groebner = buchberger(gens, ord);
  q.basis = standard_monomials(q.groebner, n, ord, cap);
  q.mult = multiplication_matrices(q.groebner, q.basis, n, ord);
  return q;
}

}  // namespace commcurve
