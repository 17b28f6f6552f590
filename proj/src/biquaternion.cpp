#include "commcurve/biquaternion.hpp"

namespace commcurve {

GaussianRational omega(const Mat2& a, const TangentQuad& v, const TangentQuad& w) {
  if (!(a(0, 0) + a(1, 1)).is_zero()) throw std::invalid_argument("omega: A must be traceless");
  return metric_g(mat2_act(a, v), w);
}

QVec flatten(const TangentQuad& v) {
  const Index m = v.n() * v.n();
  QVec out(4 * m);
  out << vectorize(v.X0), vectorize(v.X1), vectorize(v.Y0), vectorize(v.Y1);
  return out;
}

TangentQuad unflatten(const QVec& x, Index n) {
  const Index m = n * n;
  if (x.size() != 4 * m) throw std::invalid_argument("unflatten: wrong length");
  auto block = [&](Index k) {
    QMat b(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) b(i, j) = x(k * m + j * n + i);
    return b;
  };
  return {block(0), block(1), block(2), block(3)};
}

QMat metric_gram(Index n) {
  // g pairs X1 with Y0 (+1/2) and X0 with Y1 (-1/2): tr(P Q) pairs P(i,j) with Q(j,i)
  const Index m = n * n, dim = 4 * m;
  const GaussianRational half(Rational(1, 2));
  QMat g = zeros<GaussianRational>(dim, dim);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Index p = j * n + i, q = i * n + j;  // (i,j) and its transpose (j,i)
      g(1 * m + p, 2 * m + q) = half;
      g(2 * m + q, 1 * m + p) = half;
      g(0 * m + p, 3 * m + q) = -half;
      g(3 * m + q, 0 * m + p) = -half;
    }
  return g;
}

namespace {

QMat reduced_rows(const QMat& m) {
  const Echelon<GaussianRational> e = rref(m);
  return e.reduced.topRows(static_cast<Index>(e.pivots.size()));
}

/// Basis of {x : rows x = 0} as rows.
QMat annihilator(const QMat& rows, Index dim) {
  if (rows.rows() == 0) return identity<GaussianRational>(dim);
  const auto k = rank_kernel(rows).kernel;
  QMat out(static_cast<Index>(k.size()), dim);
  for (std::size_t r = 0; r < k.size(); ++r) out.row(static_cast<Index>(r)) = k[r].transpose();
  return out;
}

QMat stack(const QMat& a, const QMat& b) {
  QMat out(a.rows() + b.rows(), a.cols());
  if (a.rows() > 0) out.topRows(a.rows()) = a;
  if (b.rows() > 0) out.bottomRows(b.rows()) = b;
  return out;
}

}  // namespace

Subspace Subspace::row_space(Index n, const QMat& rows) {
  Subspace s(n);
  if (rows.cols() != s.ambient_dim()) throw std::invalid_argument("Subspace: wrong ambient dimension");
  if (rows.rows() > 0) s.rows_ = reduced_rows(rows);
  return s;
}

Subspace Subspace::span(Index n, const std::vector<TangentQuad>& vs) {
  QMat rows(static_cast<Index>(vs.size()), 4 * n * n);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (vs[k].n() != n) throw std::invalid_argument("Subspace::span: shape mismatch");
    rows.row(static_cast<Index>(k)) = flatten(vs[k]).transpose();
  }
  return row_space(n, rows);
}

std::vector<TangentQuad> Subspace::basis() const {
  std::vector<TangentQuad> out;
  for (Index r = 0; r < rows_.rows(); ++r) out.push_back(unflatten(rows_.row(r).transpose(), n_));
  return out;
}

bool Subspace::contains(const TangentQuad& v) const {
  QMat one(1, ambient_dim());
  one.row(0) = flatten(v).transpose();
  return row_space(n_, stack(rows_, one)).dim() == dim();
}

bool Subspace::contains(const Subspace& o) const { return (*this + o).dim() == dim(); }

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Subspace: shape mismatch");
  return Subspace::row_space(a.n_, stack(a.rows_, b.rows_));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Subspace: shape mismatch");
  const Index dim = a.ambient_dim();
  const QMat both = stack(annihilator(a.rows_, dim), annihilator(b.rows_, dim));
  return Subspace::row_space(a.n_, annihilator(both.rows() ? reduced_rows(both) : both, dim));
}

Subspace g_orthogonal(const Subspace& s) {
  const Index dim = s.ambient_dim();
  if (s.dim() == 0) return Subspace::row_space(s.n(), identity<GaussianRational>(dim));
  return Subspace::row_space(s.n(), annihilator(s.echelon() * metric_gram(s.n()), dim));
}

bool is_mat2_invariant(const Subspace& s) {
  for (const auto& v : s.basis())
    for (const auto& a : mat2_elementary_basis())
      if (!s.contains(mat2_act(a, v))) return false;
  return true;
}

Subspace quaternion_span(const Subspace& s) {
  std::vector<TangentQuad> vs;
  for (const auto& v : s.basis())
    for (const Mat2& a : {quaternion_I(), quaternion_J(), quaternion_K()}) vs.push_back(mat2_act(a, v));
  return Subspace::span(s.n(), vs);
}

SubspaceReport subspace_analysis(const Subspace& s, const Subspace& l, const std::optional<Subspace>& h) {
  SubspaceReport r;
  r.g_perp = g_orthogonal(s);
  r.radical = intersect(s, r.g_perp);
  r.mat2_invariant = is_mat2_invariant(r.radical);
  r.dim_s = s.dim();
  r.dim_perp = r.g_perp.dim();
  r.dim_radical = r.radical.dim();
  r.radical_equals_l = r.radical == l;
  if (h) {
    r.dim_quaternion_h = quaternion_span(*h).dim();
    r.quaternion_h_full = *r.dim_quaternion_h == 3 * h->dim();
  }
  return r;
}

long quotient_dimension(long dim_m, long dim_h, long dim_l) {
  if (dim_m < 0 || dim_h < 0 || dim_l < 0) throw std::invalid_argument("quotient_dimension: negative input");
  return dim_m - 4 * dim_h - 2 * dim_l;
}

}  // namespace commcurve
