#pragma once

#include "commcurve/linalg.hpp"

#include <vector>

namespace commcurve {

/// Basis (as columns) of the smallest subspace containing the columns of
/// `start` and invariant under every operator in `ops`.
template <class S>
Mat<S> invariant_closure(const std::vector<Mat<S>>& ops, const Mat<S>& start) {
  Mat<S> basis = column_basis(start);
  Mat<S> frontier = basis;
  while (frontier.cols() > 0 && basis.cols() < basis.rows()) {
    Mat<S> grown = basis;
    for (const auto& op : ops) {
      Mat<S> img = op * frontier;
      Mat<S> next(grown.rows(), grown.cols() + img.cols());
      next << grown, img;
      grown = std::move(next);
    }
    Mat<S> reduced = column_basis(grown);
    const Index added = reduced.cols() - basis.cols();
    // column_basis keeps pivot columns in order, so the old basis is a prefix
    frontier = reduced.rightCols(added);
    basis = std::move(reduced);
  }
  return basis;
}

template <class S>
Index closure_dimension(const std::vector<Mat<S>>& ops, const Mat<S>& start) {
  return invariant_closure(ops, start).cols();
}

/// Whether the columns of `start` generate the whole space under `ops`.
template <class S>
bool generates(const std::vector<Mat<S>>& ops, const Mat<S>& start) {
  return closure_dimension(ops, start) == start.rows();
}

/// Monomials A^i B^j, i + j <= max_total, ordered by total degree and then by
/// increasing exponent of B.
inline std::vector<std::pair<int, int>> graded_words(int max_total) {
  std::vector<std::pair<int, int>> out;
  for (int deg = 0; deg <= max_total; ++deg)
    for (int j = 0; j <= deg; ++j) out.emplace_back(deg - j, j);
  return out;
}

/// Powers m^0..m^max.
template <class S>
std::vector<Mat<S>> powers(const Mat<S>& m, int max) {
  std::vector<Mat<S>> out{identity<S>(m.rows())};
  for (int k = 1; k <= max; ++k) out.push_back(out.back() * m);
  return out;
}

}  // namespace commcurve
