#pragma once

// Eigen glue for the exact scalar types. Every exact scalar is declared to
// Eigen as a non-complex, initialization-requiring type; only the storage,
// block and product machinery of Eigen is used, never its decompositions.

#include "commcurve/gaussian_rational.hpp"
#include "commcurve/ratfunc.hpp"
#include "commcurve/unipoly.hpp"

#include <Eigen/Core>

namespace commcurve {

/// First-order dual numbers a + b*eps with eps^2 = 0.
template <class F>
struct Dual {
  F re{};
  F eps{};

  Dual() = default;
  Dual(long c) : re(c) {}  // NOLINT
  Dual(F r, F e = F{}) : re(std::move(r)), eps(std::move(e)) {}  // NOLINT

  Dual& operator+=(const Dual& o) { re += o.re; eps += o.eps; return *this; }
  Dual& operator-=(const Dual& o) { re -= o.re; eps -= o.eps; return *this; }
  Dual& operator*=(const Dual& o) {
    eps = re * o.eps + eps * o.re;
    re *= o.re;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    const F inv = F(1) / o.re;
    eps = (eps - re * o.eps * inv) * inv;
    re *= inv;
    return *this;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  Dual operator-() const { return {-re, -eps}; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.re == b.re && a.eps == b.eps; }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }
};

template <class F>
bool is_zero(const Dual<F>& x) {
  return is_zero(x.re) && is_zero(x.eps);
}
template <class F>
bool is_unit(const Dual<F>& x) {
  return !is_zero(x.re);
}

}  // namespace commcurve

namespace Eigen {

#define COMMCURVE_EXACT_NUMTRAITS(T)                               \
  template <>                                                      \
  struct NumTraits<T> : GenericNumTraits<T> {                      \
    using Real = T;                                                \
    using NonInteger = T;                                          \
    using Literal = T;                                             \
    using Nested = T;                                              \
    enum {                                                         \
      IsComplex = 0,                                               \
      IsInteger = 0,                                               \
      IsSigned = 1,                                                \
      RequireInitialization = 1,                                   \
      ReadCost = 10,                                               \
      AddCost = 20,                                                \
      MulCost = 40                                                 \
    };                                                             \
    static inline T epsilon() { return T(0); }                     \
    static inline T dummy_precision() { return T(0); }             \
    static inline int digits10() { return 0; }                     \
  };

COMMCURVE_EXACT_NUMTRAITS(commcurve::GaussianRational)
COMMCURVE_EXACT_NUMTRAITS(commcurve::UniPoly)
COMMCURVE_EXACT_NUMTRAITS(commcurve::RatFunc)
COMMCURVE_EXACT_NUMTRAITS(commcurve::Dual<commcurve::GaussianRational>)

#undef COMMCURVE_EXACT_NUMTRAITS

}  // namespace Eigen

namespace commcurve {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using RowVec = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using QMat = Mat<GaussianRational>;
using QVec = Vec<GaussianRational>;
using QRowVec = RowVec<GaussianRational>;
using PolyMat = Mat<UniPoly>;
using RatMat = Mat<RatFunc>;

/// Pivot admissibility in elimination; fields accept any nonzero entry.
template <class S>
bool is_unit(const S& x) {
  return !is_zero(x);
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
Mat<S> identity(Index n) {
  Mat<S> m = Mat<S>::Constant(n, n, S(0));
  for (Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class S>
Mat<S> zeros(Index r, Index c) {
  return Mat<S>::Constant(r, c, S(0));
}

template <class S>
Vec<S> unit_vector(Index n, Index k) {
  Vec<S> v = Vec<S>::Constant(n, S(0));
  v(k) = S(1);
  return v;
}

template <class S>
Mat<S> commutator(const Mat<S>& a, const Mat<S>& b) {
  return a * b - b * a;
}

/// tr(a*b) without forming the product.
template <class S>
S trace_of_product(const Mat<S>& a, const Mat<S>& b) {
  S acc(0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k)
      if (!is_zero(a(i, k)) && !is_zero(b(k, i))) acc += a(i, k) * b(k, i);
  return acc;
}

/// Column-major flattening.
template <class S>
Vec<S> vectorize(const Mat<S>& m) {
  Vec<S> v(m.size());
  Index k = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

inline QMat conj(const QMat& m) {
  return m.unaryExpr([](const GaussianRational& z) { return z.conj(); });
}

/// Lifts a scalar matrix to a constant polynomial matrix.
PolyMat to_poly(const QMat& m);
RatMat to_ratfunc(const PolyMat& m);
/// Entrywise evaluation at t0.
QMat evaluate(const PolyMat& m, const GaussianRational& t0);
QMat evaluate(const RatMat& m, const GaussianRational& t0);
/// Coefficient matrix of t^k.
QMat coefficient(const PolyMat& m, int k);
/// sum_k t^k coeffs[k]
PolyMat from_coefficients(const std::vector<QMat>& coeffs);
/// Maximum entry degree (-1 for the zero matrix).
int max_degree(const PolyMat& m);

}  // namespace commcurve
