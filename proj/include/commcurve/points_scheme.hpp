#pragma once

// Zero-dimensional plane schemes as commuting matrix pairs, ADHM data and
// the hat construction.

#include "commcurve/groebner.hpp"
#include "commcurve/krylov.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace commcurve {

using PlanePoint = std::pair<GaussianRational, GaussianRational>;

struct CommPair {
  QMat A;
  QMat B;

  Index n() const { return A.rows(); }
  bool commutes() const { return is_zero_matrix(commutator(A, B)); }
  friend bool operator==(const CommPair& a, const CommPair& b) { return a.A == b.A && a.B == b.B; }
};

struct ADHMData {
  QMat X, Y;  // k x k
  QMat i;     // k x 2
  QMat j;     // 2 x k

  Index k() const { return X.rows(); }
  friend bool operator==(const ADHMData& a, const ADHMData& b) {
    return a.X == b.X && a.Y == b.Y && a.i == b.i && a.j == b.j;
  }
};

struct HatPair {
  QMat X, Y;  // (k+1) x (k+1)
  friend bool operator==(const HatPair& a, const HatPair& b) { return a.X == b.X && a.Y == b.Y; }
};

struct PointWithMultiplicity {
  PlanePoint point;
  Index multiplicity = 0;
};

struct HatMoment {
  QMat moment_part;  // last k-2 rows of [X,Y]
  QVec alpha_part;   // X(r,1) - Y(r,0) for rows r = 2..k-1 (0-based)
};

/// Diagonal multiplication matrices in the indicator basis. With `normalize`
/// the pair is conjugated onto the Krylov basis of (1,...,1) so that e1 is
/// cyclic. Throws std::invalid_argument on repeated or no points.
CommPair mult_matrices_from_points(const std::vector<PlanePoint>& points, bool normalize);

/// Multiplication matrices of C[x1..xn]/I, one per variable, in the
/// standard-monomial basis. Throws QuotientError unless zero-dimensional.
std::vector<QMat> mult_matrices_from_ideal(const std::vector<MultiPoly<GaussianRational>>& gens,
                                           const MonomialOrder& order = {}, int cap = kDefaultQuotientCap);

/// dim span{A^i B^j : i, j < n}. Throws std::invalid_argument unless [A,B] = 0.
Index algebra_dim(const CommPair& pair);

/// dim {C : [A,C] = [B,C] = 0}.
Index centralizer_dim(const CommPair& pair);

/// Exact existence test for a cyclic vector of a commuting pair.
/// A cyclic vector exists iff dim V/JV = dim A/J, where A is the algebra
/// generated by the pair and J its radical (the kernel of the trace form).
bool has_cyclic_vector(const CommPair& pair);

/// Standard basis vectors, then 20 seeded small-integer vectors; if none is
/// cyclic, the exact criterion decides between "none" and a longer search.
std::optional<QVec> cyclic_vector(const CommPair& pair, std::uint64_t seed = 1);

bool is_cyclic(const CommPair& pair, const QVec& v);
inline bool e1_cyclic(const QMat& a, const QMat& b) {
  return generates<GaussianRational>({a, b}, unit_vector<GaussianRational>(a.rows(), 0));
}

/// Rows 2..n of [A,B].
QMat moment_G(const QMat& a, const QMat& b);

/// Conjugation by the element of G taking the greedy Krylov basis of e1 to
/// the standard basis. Throws std::invalid_argument if e1 is not cyclic or
/// the pair does not commute.
CommPair krylov_canonical_form(const CommPair& pair);

HatPair hat_pair(const ADHMData& data);
ADHMData unhat(const HatPair& hp);

/// [X,Y] + ij
QMat adhm_residual(const ADHMData& data);

bool is_stable(const QMat& x, const QMat& y, const QMat& i);

/// The frame i = (e1 e2) of C^k.
QMat standard_frame(Index k);

/// Throws std::invalid_argument unless X(0,1) = Y(0,0) and X(1,1) = Y(1,0).
HatMoment hat_moment(const QMat& x, const QMat& y);

/// Hat pair with the standard frame and j = -(first two rows of [X,Y]),
/// so that the residual vanishes exactly when rows 3..k of [X,Y] do.
HatPair hat_from_pair(const QMat& x, const QMat& y);

/// True iff c0 + c1 A + c2 B = 0 forces c = 0.
bool line_test(const CommPair& pair);

/// Characteristic polynomial det(t - m).
UniPoly charpoly(const QMat& m);

/// Joint eigenvalues with the dimension of the joint generalized eigenspace.
/// Eigenvalues must lie in Q(i); throws std::domain_error otherwise.
std::vector<PointWithMultiplicity> recover_points(const CommPair& pair);

bool supported_in_first_row(const QMat& m);
bool supported_in_first_row_or_column(const QMat& m);

}  // namespace commcurve
