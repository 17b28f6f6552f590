#pragma once

// Exact elimination over any field-like scalar. Pivots are chosen as the
// first admissible entry, so results are deterministic.

#include "commcurve/dense.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace commcurve {

template <class S>
struct Echelon {
  Mat<S> reduced;               // reduced row echelon form
  std::vector<Index> pivots;    // pivot column of each nonzero row
};

template <class S>
Echelon<S> rref(Mat<S> m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && !is_unit(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const S f = m(i, col);
      for (Index j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class S>
Index rank(const Mat<S>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

/// Rank by forward elimination on the transpose with
/// pivots taken from the last row upward. Used as an independent check.
template <class S>
Index rank_reverse_order(const Mat<S>& m) {
  Mat<S> a = m.transpose();
  Index r = 0;
  std::vector<bool> used(static_cast<std::size_t>(a.rows()), false);
  for (Index col = a.cols() - 1; col >= 0; --col) {
    Index p = -1;
    for (Index i = a.rows() - 1; i >= 0; --i)
      if (!used[static_cast<std::size_t>(i)] && !is_zero(a(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    used[static_cast<std::size_t>(p)] = true;
    ++r;
    for (Index i = 0; i < a.rows(); ++i) {
      if (used[static_cast<std::size_t>(i)] || is_zero(a(i, col))) continue;
      const S f = a(i, col) / a(p, col);
      for (Index j = 0; j < a.cols(); ++j)
        if (!is_zero(a(p, j))) a(i, j) -= f * a(p, j);
    }
  }
  return r;
}

template <class S>
struct RankKernel {
  Index rank = 0;
  std::vector<Vec<S>> kernel;
};

/// Rank and a kernel basis (one vector per free column, with a 1 there).
template <class S>
RankKernel<S> rank_kernel(const Mat<S>& m) {
  const Echelon<S> e = rref(m);
  RankKernel<S> out;
  out.rank = static_cast<Index>(e.pivots.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<S> v = Vec<S>::Constant(m.cols(), S(0));
    v(f) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r]) = -e.reduced(static_cast<Index>(r), f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

template <class S>
Mat<S> kernel_matrix(const Mat<S>& m) {
  const auto k = rank_kernel(m).kernel;
  Mat<S> out = zeros<S>(m.cols(), static_cast<Index>(k.size()));
  for (std::size_t j = 0; j < k.size(); ++j) out.col(static_cast<Index>(j)) = k[j];
  return out;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Index n = m.rows();
  Mat<S> aug(n, 2 * n);
  aug << m, identity<S>(n);
  const Echelon<S> e = rref(aug);
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  return Mat<S>(e.reduced.rightCols(n));
}

template <class S>
S determinant(Mat<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  S det(1);
  const Index n = m.rows();
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && !is_unit(m(p, c))) ++p;
    if (p == n) return S(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const S f = m(i, c) / m(c, c);
      for (Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Some solution of m x = b, or nullopt when inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b) {
  Mat<S> aug(m.rows(), m.cols() + 1);
  aug << m, b;
  const Echelon<S> e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<S> x = Vec<S>::Constant(m.cols(), S(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.reduced(static_cast<Index>(r), m.cols());
  return x;
}

/// Columns of m as a matrix whose column space is reduced to a basis
/// (pivot columns of m, in order).
template <class S>
Mat<S> column_basis(const Mat<S>& m) {
  const Echelon<S> e = rref(m);
  Mat<S> out(m.rows(), static_cast<Index>(e.pivots.size()));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.col(static_cast<Index>(k)) = m.col(e.pivots[k]);
  return out;
}

/// Whether v lies in the column span of basis.
template <class S>
bool in_column_span(const Mat<S>& basis, const Vec<S>& v) {
  if (basis.cols() == 0) return is_zero_matrix(v);
  return solve<S>(basis, v).has_value();
}

}  // namespace commcurve
