#include "commcurve/points_scheme.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace commcurve {

namespace {

void require_commuting(const CommPair& pair, const char* where) {
  if (pair.A.rows() != pair.A.cols() || pair.B.rows() != pair.B.cols() || pair.A.rows() != pair.B.rows())
    throw std::invalid_argument(std::string(where) + ": matrices must be square of equal size");
  if (!pair.commutes()) throw std::invalid_argument(std::string(where) + ": [A,B] != 0");
}

/// Greedy basis {w e : w = A^i B^j in graded order}; empty optional if the
/// images do not span.
std::optional<QMat> krylov_basis(const QMat& a, const QMat& b, const QVec& v) {
  const Index n = a.rows();
  QMat basis(n, 0);
  const auto pa = powers(a, static_cast<int>(n)), pb = powers(b, static_cast<int>(n));
  for (const auto& [i, j] : graded_words(static_cast<int>(n) - 1)) {
    const QVec w = pa[static_cast<std::size_t>(i)] * (pb[static_cast<std::size_t>(j)] * v);
    QMat trial(n, basis.cols() + 1);
    trial << basis, w;
    if (rank(trial) == trial.cols()) basis = std::move(trial);
    if (basis.cols() == n) return basis;
  }
  return std::nullopt;
}

/// Column basis of span{A^i B^j : i, j < n}, vectorized.
QMat algebra_span(const CommPair& pair) {
  const Index n = pair.n();
  const auto pa = powers(pair.A, static_cast<int>(n) - 1), pb = powers(pair.B, static_cast<int>(n) - 1);
  QMat words(n * n, n * n);
  Index col = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) words.col(col++) = vectorize(QMat(pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)]));
  return column_basis(words);
}

QMat unvectorize(const QVec& v, Index n) {
  QMat m(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) m(i, j) = v(j * n + i);
  return m;
}

}  // namespace

CommPair mult_matrices_from_points(const std::vector<PlanePoint>& points, bool normalize) {
  if (points.empty()) throw std::invalid_argument("mult_matrices_from_points: no points");
  std::set<std::pair<std::pair<Rational, Rational>, std::pair<Rational, Rational>>> seen;
  for (const auto& [x, y] : points)
    if (!seen.insert({{x.re(), x.im()}, {y.re(), y.im()}}).second)
      throw std::invalid_argument("mult_matrices_from_points: repeated point");
  const auto n = static_cast<Index>(points.size());
  CommPair out{zeros<GaussianRational>(n, n), zeros<GaussianRational>(n, n)};
  for (Index k = 0; k < n; ++k) {
    out.A(k, k) = points[static_cast<std::size_t>(k)].first;
    out.B(k, k) = points[static_cast<std::size_t>(k)].second;
  }
  if (!normalize) return out;
  const auto p = krylov_basis(out.A, out.B, QVec::Constant(n, GaussianRational(1)));
  if (!p) throw std::logic_error("mult_matrices_from_points: indicator sum not cyclic");
  const QMat pinv = *inverse(*p);
  return {pinv * out.A * *p, pinv * out.B * *p};
}

std::vector<QMat> mult_matrices_from_ideal(const std::vector<MultiPoly<GaussianRational>>& gens,
                                           const MonomialOrder& order, int cap) {
  return quotient_algebra(gens, order, cap).mult;
}

Index algebra_dim(const CommPair& pair) {
  require_commuting(pair, "algebra_dim");
  return algebra_span(pair).cols();
}

Index centralizer_dim(const CommPair& pair) {
  const Index n = pair.n();
  // vec(MC - CM) = (I (x) M - M^T (x) I) vec(C), column-major
  QMat op = zeros<GaussianRational>(2 * n * n, n * n);
  for (int which = 0; which < 2; ++which) {
    const QMat& m = which == 0 ? pair.A : pair.B;
    const Index off = which * n * n;
    for (Index c = 0; c < n; ++c)
      for (Index r = 0; r < n; ++r) {
        // unknown C(r, c) at index c*n + r
        const Index col = c * n + r;
        for (Index i = 0; i < n; ++i) {
          if (!m(i, r).is_zero()) op(off + c * n + i, col) += m(i, r);   // (M C)(i, c)
          if (!m(c, i).is_zero()) op(off + i * n + r, col) -= m(c, i);   // (C M)(r, i)
        }
      }
  }
  return n * n - rank(op);
}

bool has_cyclic_vector(const CommPair& pair) {
  require_commuting(pair, "has_cyclic_vector");
  const Index n = pair.n();
  const QMat span = algebra_span(pair);
  std::vector<QMat> basis;
  for (Index k = 0; k < span.cols(); ++k) basis.push_back(unvectorize(span.col(k), n));
  const auto m = static_cast<Index>(basis.size());
  QMat gram(m, m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      gram(a, b) = trace_of_product(basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]);
  const auto rk = rank_kernel(gram);
  QMat jv(n, 0);
  for (const auto& c : rk.kernel) {
    QMat radical_elem = zeros<GaussianRational>(n, n);
    for (Index a = 0; a < m; ++a)
      if (!c(a).is_zero()) radical_elem += c(a) * basis[static_cast<std::size_t>(a)];
    QMat next(n, jv.cols() + n);
    next << jv, radical_elem;
    jv = std::move(next);
  }
  return n - rank(jv) == rk.rank;
}

bool is_cyclic(const CommPair& pair, const QVec& v) { return generates<GaussianRational>({pair.A, pair.B}, v); }

std::optional<QVec> cyclic_vector(const CommPair& pair, std::uint64_t seed) {
  const Index n = pair.n();
  for (Index k = 0; k < n; ++k) {
    const QVec e = unit_vector<GaussianRational>(n, k);
    if (is_cyclic(pair, e)) return e;
  }
  std::mt19937_64 rng(seed);
  auto random_vector = [&](long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    QVec v(n);
    for (Index k = 0; k < n; ++k) v(k) = GaussianRational(dist(rng));
    return v;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const QVec v = random_vector(3);
    if (is_cyclic(pair, v)) return v;
  }
  if (!has_cyclic_vector(pair)) return std::nullopt;
  // The cyclic locus is a nonempty Zariski-open set; widen the search.
  for (int trial = 0; trial < 2000; ++trial) {
    const QVec v = random_vector(50 + trial);
    if (is_cyclic(pair, v)) return v;
  }
  throw std::logic_error("cyclic_vector: search exhausted although a cyclic vector exists");
}

QMat moment_G(const QMat& a, const QMat& b) {
  const QMat c = commutator(a, b);
  return c.bottomRows(c.rows() - 1);
}

CommPair krylov_canonical_form(const CommPair& pair) {
  require_commuting(pair, "krylov_canonical_form");
  const auto p = krylov_basis(pair.A, pair.B, unit_vector<GaussianRational>(pair.n(), 0));
  if (!p) throw std::invalid_argument("krylov_canonical_form: e1 is not cyclic");
  const QMat pinv = *inverse(*p);
  return {pinv * pair.A * *p, pinv * pair.B * *p};
}

HatPair hat_pair(const ADHMData& d) {
  const Index k = d.k();
  if (d.Y.rows() != k || d.i.rows() != k || d.i.cols() != 2 || d.j.rows() != 2 || d.j.cols() != k)
    throw std::invalid_argument("hat_pair: inconsistent shapes");
  HatPair h{zeros<GaussianRational>(k + 1, k + 1), zeros<GaussianRational>(k + 1, k + 1)};
  h.X.block(1, 1, k, k) = d.X;
  h.Y.block(1, 1, k, k) = d.Y;
  h.X.block(1, 0, k, 1) = d.i.col(0);
  h.Y.block(1, 0, k, 1) = d.i.col(1);
  h.X.block(0, 1, 1, k) = -d.j.row(1);
  h.Y.block(0, 1, 1, k) = d.j.row(0);
  return h;
}

ADHMData unhat(const HatPair& h) {
  const Index k = h.X.rows() - 1;
  if (k < 0 || h.X.cols() != k + 1 || h.Y.rows() != k + 1 || h.Y.cols() != k + 1)
    throw std::invalid_argument("unhat: inconsistent shapes");
  if (!h.X(0, 0).is_zero() || !h.Y(0, 0).is_zero()) throw std::invalid_argument("unhat: nonzero corner entry");
  ADHMData d;
  d.X = h.X.block(1, 1, k, k);
  d.Y = h.Y.block(1, 1, k, k);
  d.i = QMat(k, 2);
  d.i.col(0) = h.X.block(1, 0, k, 1);
  d.i.col(1) = h.Y.block(1, 0, k, 1);
  d.j = QMat(2, k);
  d.j.row(0) = h.Y.block(0, 1, 1, k);
  d.j.row(1) = -h.X.block(0, 1, 1, k);
  return d;
}

QMat adhm_residual(const ADHMData& d) { return commutator(d.X, d.Y) + d.i * d.j; }

bool is_stable(const QMat& x, const QMat& y, const QMat& i) { return generates<GaussianRational>({x, y}, i); }

QMat standard_frame(Index k) {
  if (k < 2) throw std::invalid_argument("standard_frame: k must be at least 2");
  QMat i = zeros<GaussianRational>(k, 2);
  i(0, 0) = 1;
  i(1, 1) = 1;
  return i;
}

HatMoment hat_moment(const QMat& x, const QMat& y) {
  const Index k = x.rows();
  if (k < 2) throw std::invalid_argument("hat_moment: k must be at least 2");
  if (x(0, 1) != y(0, 0) || x(1, 1) != y(1, 0))
    throw std::invalid_argument("hat_moment: requires X(1,2) = Y(1,1) and X(2,2) = Y(2,1)");
  const QMat c = commutator(x, y);
  HatMoment out;
  out.moment_part = c.bottomRows(k - 2);
  out.alpha_part = x.col(1).tail(k - 2) - y.col(0).tail(k - 2);
  return out;
}

HatPair hat_from_pair(const QMat& x, const QMat& y) {
  const QMat c = commutator(x, y);
  return hat_pair({x, y, standard_frame(x.rows()), -c.topRows(2)});
}

bool line_test(const CommPair& pair) {
  require_commuting(pair, "line_test");
  const Index n = pair.n();
  QMat m(n * n, 3);
  m << vectorize(identity<GaussianRational>(n)), vectorize(pair.A), vectorize(pair.B);
  return rank(m) == 3;
}

UniPoly charpoly(const QMat& m) {
  const Index n = m.rows();
  RatMat tm(n, n);
  const RatFunc t(UniPoly::t());
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) tm(i, j) = (i == j ? t : RatFunc(0)) - RatFunc(m(i, j));
  const RatFunc det = determinant(tm);
  if (!det.is_polynomial()) throw std::logic_error("charpoly: non-polynomial determinant");
  return det.num();
}

std::vector<PointWithMultiplicity> recover_points(const CommPair& pair) {
  require_commuting(pair, "recover_points");
  const Index n = pair.n();
  const auto xs = gaussian_rational_roots(charpoly(pair.A));
  const auto ys = gaussian_rational_roots(charpoly(pair.B));
  std::vector<PointWithMultiplicity> out;
  Index total = 0;
  const QMat id = identity<GaussianRational>(n);
  for (const auto& x : xs) {
    const QMat ax = powers(QMat(pair.A - x * id), static_cast<int>(n)).back();
    for (const auto& y : ys) {
      const QMat by = powers(QMat(pair.B - y * id), static_cast<int>(n)).back();
      QMat stacked(2 * n, n);
      stacked << ax, by;
      const Index mult = n - rank(stacked);
      if (mult == 0) continue;
      out.push_back({{x, y}, mult});
      total += mult;
    }
  }
  if (total != n) throw std::domain_error("recover_points: eigenvalues outside Q(i)");
  return out;
}

bool supported_in_first_row(const QMat& m) { return is_zero_matrix(m.bottomRows(m.rows() - 1)); }

bool supported_in_first_row_or_column(const QMat& m) {
  return is_zero_matrix(m.bottomRightCorner(m.rows() - 1, m.cols() - 1));
}

}  // namespace commcurve
