#include "commcurve/polymat.hpp"

#include <stdexcept>

namespace commcurve {

namespace {

void sub_row_multiple(PolyMat& m, Index target, Index source, const UniPoly& q, Index from_col) {
  for (Index j = from_col; j < m.cols(); ++j)
    if (!m(source, j).is_zero()) m(target, j) -= q * m(source, j);
}

void sub_col_multiple(PolyMat& m, Index target, Index source, const UniPoly& q, Index from_row) {
  for (Index i = from_row; i < m.rows(); ++i)
    if (!m(i, source).is_zero()) m(i, target) -= q * m(i, source);
}

}  // namespace

std::vector<UniPoly> equivalent_diagonal(PolyMat m) {
  std::vector<UniPoly> diag;
  const Index n = std::min(m.rows(), m.cols());
  for (Index p = 0; p < n; ++p) {
    // smallest-degree nonzero entry of the trailing block
    Index bi = -1, bj = -1;
    for (Index j = p; j < m.cols(); ++j)
      for (Index i = p; i < m.rows(); ++i)
        if (!m(i, j).is_zero() && (bi < 0 || m(i, j).degree() < m(bi, bj).degree())) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    m.row(bi).swap(m.row(p));
    m.col(bj).swap(m.col(p));
    for (;;) {
      bool clean = true;
      for (Index i = p + 1; i < m.rows(); ++i) {
        if (m(i, p).is_zero()) continue;
        sub_row_multiple(m, i, p, divmod(m(i, p), m(p, p)).first, p);
        if (!m(i, p).is_zero()) clean = false;
      }
      for (Index j = p + 1; j < m.cols(); ++j) {
        if (m(p, j).is_zero()) continue;
        sub_col_multiple(m, j, p, divmod(m(p, j), m(p, p)).first, p);
        if (!m(p, j).is_zero()) clean = false;
      }
      if (clean) break;
      // a remainder of lower degree than the pivot survived; promote it
      Index ri = -1, rj = -1;
      int best = m(p, p).degree();
      for (Index i = p + 1; i < m.rows(); ++i)
        if (!m(i, p).is_zero() && m(i, p).degree() < best) {
          best = m(i, p).degree();
          ri = i;
          rj = p;
        }
      for (Index j = p + 1; j < m.cols(); ++j)
        if (!m(p, j).is_zero() && m(p, j).degree() < best) {
          best = m(p, j).degree();
          ri = p;
          rj = j;
        }
      if (ri < 0) throw std::logic_error("equivalent_diagonal: no progress");
      if (rj == p) m.row(ri).swap(m.row(p));
      else m.col(rj).swap(m.col(p));
    }
    diag.push_back(m(p, p));
  }
  return diag;
}

MinorGcd top_minor_gcd(const PolyMat& m) {
  MinorGcd out;
  const auto diag = equivalent_diagonal(m);
  out.generic_rank = static_cast<Index>(diag.size());
  UniPoly prod(1);
  for (const auto& d : diag) prod *= d;
  out.gcd = prod.monic();
  return out;
}

PolyMat invert_variable(const PolyMat& m, int shift) {
  PolyMat out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      const UniPoly& p = m(i, j);
      if (p.is_zero()) {
        out(i, j) = UniPoly{};
        continue;
      }
      if (p.degree() > shift) throw std::domain_error("invert_variable: negative power remains");
      out(i, j) = p.reversed(shift);
    }
  return out;
}

}  // namespace commcurve
