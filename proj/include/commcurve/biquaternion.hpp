#pragma once

// Flat C-hypersymplectic linear algebra on Mat_{d-1}(C) x C^4: the Mat_2
// action on tangent quadruples, the metric g, the forms omega_A and exact
// subspace tests.

#include "commcurve/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace commcurve {

template <class S>
struct TangentQuadT {
  Mat<S> X0, X1, Y0, Y1;

  Index n() const { return X0.rows(); }

  static TangentQuadT zero(Index n) { return {zeros<S>(n, n), zeros<S>(n, n), zeros<S>(n, n), zeros<S>(n, n)}; }

  TangentQuadT& operator+=(const TangentQuadT& o) {
    X0 += o.X0;
    X1 += o.X1;
    Y0 += o.Y0;
    Y1 += o.Y1;
    return *this;
  }
  TangentQuadT& operator-=(const TangentQuadT& o) {
    X0 -= o.X0;
    X1 -= o.X1;
    Y0 -= o.Y0;
    Y1 -= o.Y1;
    return *this;
  }
  friend TangentQuadT operator+(TangentQuadT a, const TangentQuadT& b) { return a += b; }
  friend TangentQuadT operator-(TangentQuadT a, const TangentQuadT& b) { return a -= b; }
  friend TangentQuadT operator*(const S& c, const TangentQuadT& v) { return {c * v.X0, c * v.X1, c * v.Y0, c * v.Y1}; }
  friend bool operator==(const TangentQuadT& a, const TangentQuadT& b) {
    return a.X0 == b.X0 && a.X1 == b.X1 && a.Y0 == b.Y0 && a.Y1 == b.Y1;
  }
  friend bool operator!=(const TangentQuadT& a, const TangentQuadT& b) { return !(a == b); }
};

using TangentQuad = TangentQuadT<GaussianRational>;

/// (a, b; c, d)
using Mat2 = Eigen::Matrix<GaussianRational, 2, 2>;

inline Mat2 mat2(const GaussianRational& a, const GaussianRational& b, const GaussianRational& c,
                 const GaussianRational& d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

inline Mat2 adjugate(const Mat2& m) { return mat2(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)); }
inline GaussianRational det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

/// I = (i, 0; 0, -i), J = (0, 1; -1, 0), K = (0, i; i, 0), so IJ = K.
inline Mat2 quaternion_I() { return mat2(GaussianRational::i(), 0, 0, -GaussianRational::i()); }
inline Mat2 quaternion_J() { return mat2(0, 1, -1, 0); }
inline Mat2 quaternion_K() { return mat2(0, GaussianRational::i(), GaussianRational::i(), 0); }

/// E11, E12, E21, E22
inline std::vector<Mat2> mat2_elementary_basis() {
  return {mat2(1, 0, 0, 0), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0), mat2(0, 0, 0, 1)};
}

/// Left multiplication on (X0 Y0; X1 Y1).
template <class S>
TangentQuadT<S> mat2_act(const Mat2& a, const TangentQuadT<S>& v) {
  const S a00(a(0, 0)), a01(a(0, 1)), a10(a(1, 0)), a11(a(1, 1));
  return {a00 * v.X0 + a01 * v.X1, a10 * v.X0 + a11 * v.X1, a00 * v.Y0 + a01 * v.Y1, a10 * v.Y0 + a11 * v.Y1};
}

/// g(v, w) = 1/2 tr(X1 Y0' + X1' Y0 - X0 Y1' - X0' Y1)
template <class S>
S metric_g(const TangentQuadT<S>& v, const TangentQuadT<S>& w) {
  if (v.n() != w.n()) throw std::invalid_argument("metric_g: shape mismatch");
  const S sum = trace_of_product(v.X1, w.Y0) + trace_of_product(w.X1, v.Y0) - trace_of_product(v.X0, w.Y1) -
                trace_of_product(w.X0, v.Y1);
  return sum * S(GaussianRational(Rational(1, 2)));
}

/// omega_A(v, w) = g(A v, w). Throws std::invalid_argument unless tr A = 0.
GaussianRational omega(const Mat2& a, const TangentQuad& v, const TangentQuad& w);

/// Coordinates in the order X0, X1, Y0, Y1, each column-major.
QVec flatten(const TangentQuad& v);
TangentQuad unflatten(const QVec& x, Index n);

/// Gram matrix of g in flattened coordinates (4n^2 square).
QMat metric_gram(Index n);

/// Subspace of the flattened tangent space, stored as its reduced row
/// echelon basis, so equal subspaces have equal representatives.
class Subspace {
public:
  explicit Subspace(Index n = 0) : n_(n), rows_(0, 4 * n * n) {}
  static Subspace span(Index n, const std::vector<TangentQuad>& vs);
  /// Row space of the given matrix.
  static Subspace row_space(Index n, const QMat& rows);

  Index n() const { return n_; }
  Index ambient_dim() const { return 4 * n_ * n_; }
  Index dim() const { return rows_.rows(); }
  const QMat& echelon() const { return rows_; }
  std::vector<TangentQuad> basis() const;
  bool contains(const TangentQuad& v) const;
  bool contains(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  /// Intersection via annihilators.
  friend Subspace intersect(const Subspace& a, const Subspace& b);

private:
  Index n_;
  QMat rows_;
};

/// {v : g(s, v) = 0 for all s in S}
Subspace g_orthogonal(const Subspace& s);

/// Whether S is closed under the action of every element of Mat_2.
bool is_mat2_invariant(const Subspace& s);

/// I S + J S + K S
Subspace quaternion_span(const Subspace& s);

struct SubspaceReport {
  Subspace g_perp;
  Subspace radical;  // S ∩ S^perp
  bool mat2_invariant = false;
  Index dim_s = 0, dim_perp = 0, dim_radical = 0;
  bool radical_equals_l = false;
  /// Present when H is supplied: dim(I H + J H + K H) and whether it is 3 dim H.
  std::optional<Index> dim_quaternion_h;
  std::optional<bool> quaternion_h_full;
};

SubspaceReport subspace_analysis(const Subspace& s, const Subspace& l, const std::optional<Subspace>& h = std::nullopt);

/// dim M - 4 dim H - 2 dim L. Throws std::invalid_argument on negative input.
long quotient_dimension(long dim_m, long dim_h, long dim_l);

inline long dim_md(long d) { return 4 * (d - 1) * (d - 1) - 4; }
inline long dim_g0(long d) { return (d - 1) * (d - 3); }
inline long dim_l(long d) { return 2 * (d - 3); }

}  // namespace commcurve
