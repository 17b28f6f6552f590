#include "commcurve/inertia.hpp"

#include <stdexcept>
#include <vector>

namespace commcurve {

SignatureReport inertia(const QMat& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("inertia: matrix not square");
  const auto n = static_cast<std::size_t>(s.rows());
  std::vector<Rational> a(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& z = s(static_cast<Index>(i), static_cast<Index>(j));
      if (!z.is_real()) throw std::invalid_argument("inertia: entry with nonzero imaginary part");
      if (z != s(static_cast<Index>(j), static_cast<Index>(i))) throw std::invalid_argument("inertia: matrix not symmetric");
      at(i, j) = z.re();
    }

  SignatureReport out;
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n && k == n; ++i)
      if (!done[i] && sgn(at(i, i)) != 0) k = i;
    if (k == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[j] && sgn(at(i, j)) != 0) {
            pi = i;
            pj = j;
            break;
          }
      }
      if (pi == n) {
        out.zero += static_cast<Index>(remaining);
        break;
      }
      // row_i += row_j, then col_i += col_j
      for (std::size_t c = 0; c < n; ++c)
        if (!done[c]) at(pi, c) += at(pj, c);
      for (std::size_t r = 0; r < n; ++r)
        if (!done[r]) at(r, pi) += at(r, pj);
      k = pi;
    }
    const Rational pivot = at(k, k);
    (sgn(pivot) > 0 ? out.positive : out.negative) += 1;
    done[k] = true;
    --remaining;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(at(i, k)) == 0) continue;
      const Rational f = at(i, k) / pivot;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j] && sgn(at(k, j)) != 0) at(i, j) -= f * at(k, j);
    }
  }
  return out;
}

}  // namespace commcurve
