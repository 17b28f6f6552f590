#pragma once

#include "commcurve/dense.hpp"

#include <vector>

namespace commcurve {

/// Nonzero diagonal of a matrix unimodularly equivalent to m over Q(i)[t]
/// (Euclidean row and column operations). The diagonal is not forced into
/// Smith divisibility order; its length is the rank over Q(i)(t) and the
/// product of its entries is the gcd of the rank-sized minors up to a unit.
std::vector<UniPoly> equivalent_diagonal(PolyMat m);

struct MinorGcd {
  Index generic_rank = 0;
  UniPoly gcd;  // monic gcd of the generic_rank x generic_rank minors
};

MinorGcd top_minor_gcd(const PolyMat& m);

/// Rank at every t in C equals the generic rank iff the minor gcd is constant.
inline bool rank_constant_on_affine_line(const MinorGcd& g) { return g.gcd.is_constant(); }

/// Entrywise t -> 1/t followed by multiplication with t^shift; throws if a
/// negative power would remain.
PolyMat invert_variable(const PolyMat& m, int shift);

}  // namespace commcurve
