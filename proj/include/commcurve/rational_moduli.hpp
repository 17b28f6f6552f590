#pragma once

// Pairs X(t) = X0 + t X1, Y(t) = Y0 + t Y1 of (d-1)x(d-1) matrices modelling
// rational space curves of degree d, the group of triangular gauge
// transformations acting on them, its moment map and the real structure.

#include "commcurve/biquaternion.hpp"
#include "commcurve/inertia.hpp"
#include "commcurve/report.hpp"

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace commcurve {

template <class S>
struct MPointT {
  Index d = 3;
  Mat<S> X0, X1, Y0, Y1;

  Index n() const { return d - 1; }
  TangentQuadT<S> quad() const { return {X0, X1, Y0, Y1}; }
  static MPointT from_quad(Index d, const TangentQuadT<S>& q) { return {d, q.X0, q.X1, q.Y0, q.Y1}; }

  friend bool operator==(const MPointT& a, const MPointT& b) {
    return a.d == b.d && a.X0 == b.X0 && a.X1 == b.X1 && a.Y0 == b.Y0 && a.Y1 == b.Y1;
  }
  friend bool operator!=(const MPointT& a, const MPointT& b) { return !(a == b); }
};
using MPoint = MPointT<GaussianRational>;

/// (g0, u(t)) with u(t) = u0 + t u1; u0, u1 have length d-3.
template <class S>
struct GroupElemT {
  Mat<S> g0;
  RowVec<S> u0, u1;

  Index d() const { return g0.rows() + 1; }
  static GroupElemT identity(Index d) {
    return {commcurve::identity<S>(d - 1), RowVec<S>::Constant(d - 3, S(0)), RowVec<S>::Constant(d - 3, S(0))};
  }
  friend bool operator==(const GroupElemT& a, const GroupElemT& b) {
    return a.g0 == b.g0 && a.u0 == b.u0 && a.u1 == b.u1;
  }
};
using GroupElem = GroupElemT<GaussianRational>;

/// (h, u(t)) with the first two columns of h zero.
struct LieElem {
  QMat h;
  QRowVec u0, u1;
};

/// u padded by two leading zeros to a row of length d-1.
template <class S>
RowVec<S> padded_row(const RowVec<S>& u) {
  RowVec<S> out = RowVec<S>::Constant(u.size() + 2, S(0));
  out.tail(u.size()) = u;
  return out;
}

/// Throws std::invalid_argument unless d >= 3 and every block is (d-1)-square.
void validate(const MPoint& p);
/// Throws std::invalid_argument unless g0 is invertible with first columns
/// e1, e2 and u has length d-3.
void validate(const GroupElem& g);
void validate(const LieElem& r, Index d);

/// X ↦ g0 X g0^-1 - e1 u g0^-1, Y ↦ g0 Y g0^-1 - e2 u g0^-1, coefficientwise in t.
template <class S>
MPointT<S> act(const GroupElemT<S>& g, const MPointT<S>& p) {
  const auto inv = inverse(g.g0);
  if (!inv) throw std::invalid_argument("act: g0 is singular");
  const RowVec<S> w0 = padded_row(g.u0) * *inv, w1 = padded_row(g.u1) * *inv;
  const auto conj = [&](const Mat<S>& m) -> Mat<S> { return g.g0 * m * *inv; };
  MPointT<S> out{p.d, conj(p.X0), conj(p.X1), conj(p.Y0), conj(p.Y1)};
  out.X0.row(0) -= w0;
  out.X1.row(0) -= w1;
  out.Y0.row(1) -= w0;
  out.Y1.row(1) -= w1;
  return out;
}

/// (g0, u)(h0, v) = (g0 h0, v + u h0)
GroupElem compose(const GroupElem& g, const GroupElem& h);
GroupElem inverse(const GroupElem& g);

/// Basis of the Lie algebra: E_ij (j >= 2) in column-major order, then the
/// unit vectors of u0, then those of u1.
std::vector<LieElem> lie_basis(Index d);
/// Size of the g0 part of lie_basis(d).
inline Index lie_h_count(Index d) { return (d - 1) * (d - 3); }

/// δX = [h, X] - e1 u, δY = [h, Y] - e2 u, split by degree in t.
TangentQuad fundamental_field(const LieElem& r, const MPoint& p);

/// 1 + eps h and eps u over the dual numbers.
GroupElemT<Dual<GaussianRational>> infinitesimal(const LieElem& r);

/// Matrix part on the last d-3 rows and vector part as a column of
/// polynomials in t.
struct MomentComponent {
  QMat matrix;
  std::vector<UniPoly> vector;

  bool is_zero() const;
};

struct MomentValue {
  MomentComponent mu11, mu21, mu12;

  bool is_zero() const { return mu11.is_zero() && mu21.is_zero() && mu12.is_zero(); }
};

MomentValue moment(const MPoint& p);

/// X(t) e2 = Y(t) e1 and rows 3.. of [X(t), Y(t)] vanish, identically in t.
struct LemmaConditions {
  bool vector_condition = false;
  bool commutator_rows = false;

  bool hold() const { return vector_condition && commutator_rows; }
};
LemmaConditions lemma_conditions(const MPoint& p);

/// Condition (ii) as four coefficient identities and stability of
/// (X(t), Y(t), <e1, e2>) for all t in P^1.
Report md_check(const MPoint& p);

/// Noncommutative words of length <= d-3 in X(t), Y(t) applied to e1, e2.
PolyMat stability_krylov(const MPoint& p);

struct PointClass {
  bool smooth = false;
  bool nondegenerate = false;
  bool radical_equals_l = false;
  Index dim_g0 = 0, dim_h = 0, dim_l = 0, dim_radical = 0, dim_quaternion_h = 0, dim_h_radical = 0;
  SubspaceReport analysis;
};

/// Throws std::invalid_argument when moment(p) != 0.
PointClass classify_point(const MPoint& p);

/// Dimension of {ρ : fundamental_field(ρ, p) = 0}. A group element
/// (1 + h, u) fixes p iff ρ = (h, u) is in this kernel, so p has trivial
/// stabilizer iff it is 0.
Index stabilizer_dimension(const MPoint& p);

/// Block diagonal with blocks (0, -1; 1, 0). Throws std::domain_error for odd n.
QMat tau(Index n);

/// (X0,X1,Y0,Y1) ↦ (-τ conj(Y1) τ, τ conj(Y0) τ, τ conj(X1) τ, -τ conj(X0) τ).
/// Throws std::domain_error for even d: the real locus is then empty.
MPoint sigma(const MPoint& p);
/// Y0 = τ conj(X1) τ, Y1 = -τ conj(X0) τ.
MPoint sigma_fixed_point(Index d, const QMat& X0, const QMat& X1);

using P3Point = std::array<GaussianRational, 4>;
/// [z0:z1:z2:z3] ↦ [-conj z1 : conj z0 : -conj z3 : conj z2]
P3Point sigma_p3(const P3Point& z);
/// [z0:z1:z2:z3] ↦ [conj z1 : conj z0 : conj z3 : conj z2]
P3Point sigma_prime_p3(const P3Point& z);
/// (X0,X1,Y0,Y1) ↦ (τ' conj(Y1) τ', τ' conj(Y0) τ', τ' conj(X1) τ', τ' conj(X0) τ')
/// with τ' swapping coordinates 2i-1 and 2i; preserves condition (ii).
MPoint sigma_prime(const MPoint& p);

/// Real tangent basis of the σ-fixed locus, already satisfying condition (ii).
std::vector<TangentQuad> real_tangent_basis(Index d);
/// Gram matrix of g on real_tangent_basis(d); real symmetric.
QMat real_gram(Index d);
/// Throws std::domain_error for even d, std::invalid_argument for d < 3.
SignatureReport real_signature(Index d);

/// Six linear polynomials in the order a11, a12, a21, a22, a31, a32.
using CubicParams = std::array<UniPoly, 6>;
struct TwistedCubic {
  PolyMat A, B;
};
TwistedCubic twisted_cubic_model(const CubicParams& a);
/// Lower-right 2x2 blocks of A and B as a point of M_3.
MPoint twisted_cubic_point(const CubicParams& a);
/// Real tangent basis of the σ-fixed parameters a11 = T(a32), a12 = T(a31),
/// a21 = -T(a22) with T(p + q t) = -conj q + conj p t, free in a22, a31, a32.
std::vector<CubicParams> twisted_cubic_real_basis();
QMat twisted_cubic_gram();

/// Random point of μ^-1(0) satisfying md_check: small-integer X0, X1 and a
/// random solution of the linear moment equations in Y0, Y1. Returns nullopt
/// when no stable solution is found within `attempts` draws.
std::optional<MPoint> sample_moment_zero(Index d, std::mt19937_64& rng, int attempts = 50);

/// Affine solution space of the moment equations in (Y0, Y1) for fixed X:
/// a particular solution and a kernel basis, both as tangent quads with zero X.
struct YSolutions {
  TangentQuad particular;
  std::vector<TangentQuad> kernel;
};
std::optional<YSolutions> solve_moment_for_y(Index d, const QMat& X0, const QMat& X1);

}  // namespace commcurve
