#include "doctest.h"
#include "support.hpp"

#include "commcurve/biquaternion.hpp"

using namespace commcurve;
using namespace commcurve::testing;

namespace {

TangentQuad random_quad(Rng& rng, Index n, long bound = 2) {
  return {small_gaussian_matrix(rng, n, n, bound), small_gaussian_matrix(rng, n, n, bound),
          small_gaussian_matrix(rng, n, n, bound), small_gaussian_matrix(rng, n, n, bound)};
}

Mat2 random_mat2(Rng& rng) {
  return mat2(small_gaussian_int(rng, 3), small_gaussian_int(rng, 3), small_gaussian_int(rng, 3),
              small_gaussian_int(rng, 3));
}

/// Quadratic form tr(X1 Y0 - X0 Y1), computed with full products.
GaussianRational quadratic(const TangentQuad& u) {
  const QMat p = u.X1 * u.Y0 - u.X0 * u.Y1;
  return p.trace();
}

/// Polarization of the quadratic form.
GaussianRational polarized(const TangentQuad& v, const TangentQuad& w) {
  return (quadratic(v + w) - quadratic(v) - quadratic(w)) * GaussianRational(Rational(1, 2));
}

/// (a ∧ b)(v, w) = tr(a(v) b(w) - a(w) b(v)) for blocks a, b.
template <class A, class B>
GaussianRational wedge(A a, B b, const TangentQuad& v, const TangentQuad& w) {
  const QMat p = a(v) * b(w) - a(w) * b(v);
  return p.trace();
}

const auto X0 = [](const TangentQuad& q) { return q.X0; };
const auto X1 = [](const TangentQuad& q) { return q.X1; };
const auto Y0 = [](const TangentQuad& q) { return q.Y0; };
const auto Y1 = [](const TangentQuad& q) { return q.Y1; };

}  // namespace

TEST_CASE("Mat2 action: identity, block rules and composition") {
  Rng rng(21);
  const TangentQuad v = random_quad(rng, 2);
  CHECK(mat2_act(mat2(1, 0, 0, 1), v) == v);

  const GaussianRational i = GaussianRational::i();
  const TangentQuad vi = mat2_act(quaternion_I(), v);
  CHECK(vi == TangentQuad{i * v.X0, -i * v.X1, i * v.Y0, -i * v.Y1});
  const TangentQuad vj = mat2_act(quaternion_J(), v);
  CHECK(vj == TangentQuad{v.X1, -v.X0, v.Y1, -v.Y0});
  const TangentQuad vk = mat2_act(quaternion_K(), v);
  CHECK(vk == TangentQuad{i * v.X1, i * v.X0, i * v.Y1, i * v.Y0});

  for (int trial = 0; trial < 100; ++trial) {
    const Mat2 a = random_mat2(rng), b = random_mat2(rng);
    const TangentQuad w = random_quad(rng, static_cast<Index>(small_int(rng, 1, 3)));
    CHECK(mat2_act(a, mat2_act(b, w)) == mat2_act(Mat2(a * b), w));
  }
}

TEST_CASE("quaternion relations hold as operators") {
  const Mat2 I = quaternion_I(), J = quaternion_J(), K = quaternion_K();
  const Mat2 one = mat2(1, 0, 0, 1);
  CHECK(Mat2(I * I) == Mat2(-one));
  CHECK(Mat2(J * J) == Mat2(-one));
  CHECK(Mat2(K * K) == Mat2(-one));
  CHECK(Mat2(I * J) == K);
  for (const Mat2& q : {I, J, K}) CHECK((q(0, 0) + q(1, 1)).is_zero());

  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const TangentQuad v = random_quad(rng, 2);
    CHECK(mat2_act(I, mat2_act(I, v)) == GaussianRational(-1) * v);
    CHECK(mat2_act(J, mat2_act(J, v)) == GaussianRational(-1) * v);
    CHECK(mat2_act(K, mat2_act(K, v)) == GaussianRational(-1) * v);
    CHECK(mat2_act(I, mat2_act(J, v)) == mat2_act(K, v));
  }
}

TEST_CASE("metric: examples, symmetry and polarization oracle") {
  const TangentQuad v{QMat::Constant(1, 1, 1), QMat::Constant(1, 1, 0), QMat::Constant(1, 1, 0), QMat::Constant(1, 1, 0)};
  const TangentQuad w{QMat::Constant(1, 1, 0), QMat::Constant(1, 1, 0), QMat::Constant(1, 1, 0), QMat::Constant(1, 1, 1)};
  CHECK(metric_g(v, w) == GaussianRational(Rational(-1, 2)));
  // the quadratic form itself: g(v + w, v + w) = tr(-X0 Y1) doubled
  CHECK(metric_g(v + w, v + w) == GaussianRational(-1));

  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = static_cast<Index>(small_int(rng, 1, 3));
    TangentQuad x = random_quad(rng, n), y = random_quad(rng, n);
    CHECK(metric_g(x, y) == metric_g(y, x));
    CHECK(metric_g(x, y) == polarized(x, y));
    x.Y0.setConstant(GaussianRational(0));
    x.Y1.setConstant(GaussianRational(0));
    CHECK(metric_g(x, x).is_zero());
  }
  CHECK_THROWS_AS(metric_g(random_quad(rng, 1), random_quad(rng, 2)), std::invalid_argument);
}

TEST_CASE("metric is nondegenerate and matches its Gram matrix") {
  Rng rng(24);
  for (Index n = 1; n <= 4; ++n) {
    const QMat g = metric_gram(n);
    CHECK(rank(g) == 4 * n * n);
    CHECK(g == g.transpose());
    for (int trial = 0; trial < 10; ++trial) {
      const TangentQuad v = random_quad(rng, n), w = random_quad(rng, n);
      CHECK(unflatten(flatten(v), n) == v);
      const QVec fv = flatten(v), fw = flatten(w);
      CHECK(GaussianRational((fv.transpose() * g * fw)(0, 0)) == metric_g(v, w));
    }
  }
}

TEST_CASE("compatibility g(A v, w) = g(v, A_adj w)") {
  Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = static_cast<Index>(small_int(rng, 1, 3));
    const Mat2 a = random_mat2(rng);
    CHECK(Mat2(a * adjugate(a)) == Mat2(det2(a) * mat2(1, 0, 0, 1)));
    const TangentQuad v = random_quad(rng, n), w = random_quad(rng, n);
    CHECK(metric_g(mat2_act(a, v), w) == metric_g(v, mat2_act(adjugate(a), w)));
  }
}

TEST_CASE("omega: antisymmetry, linearity and the twistor-coefficient pairing") {
  Rng rng(26);
  const GaussianRational half(Rational(1, 2)), i = GaussianRational::i();
  CHECK_THROWS_AS(omega(mat2(1, 0, 0, 0), random_quad(rng, 1), random_quad(rng, 1)), std::invalid_argument);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = static_cast<Index>(small_int(rng, 1, 3));
    const TangentQuad v = random_quad(rng, n), w = random_quad(rng, n);
    Mat2 a = random_mat2(rng), b = random_mat2(rng);
    a(1, 1) = -a(0, 0);
    b(1, 1) = -b(0, 0);
    CHECK(omega(a, v, v).is_zero());
    CHECK(omega(a, v, w) == -omega(a, w, v));
    CHECK(omega(Mat2(a + b), v, w) == omega(a, v, w) + omega(b, v, w));

    // t-coefficient of tr dX(t) ∧ dY(t), X(t) = X0 + t X1
    const GaussianRational t1 = wedge(X0, Y1, v, w) + wedge(X1, Y0, v, w);
    CHECK(omega(quaternion_I(), v, w) == -half * i * t1);
    CHECK(omega(mat2(0, 0, 1, 0), v, w) == half * wedge(X0, Y0, v, w));
    CHECK(omega(mat2(0, 1, 0, 0), v, w) == -half * wedge(X1, Y1, v, w));
  }
}

TEST_CASE("subspaces: canonical echelon form, sums and intersections") {
  Rng rng(27);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 2;
    std::vector<TangentQuad> vs;
    for (long k = 0, m = small_int(rng, 0, 5); k < m; ++k) vs.push_back(random_quad(rng, n, 1));
    const Subspace s = Subspace::span(n, vs);
    // scaled, mixed and reordered generators give the same representative
    std::vector<TangentQuad> mixed;
    for (std::size_t k = 0; k < vs.size(); ++k)
      mixed.push_back(GaussianRational(2) * vs[vs.size() - 1 - k] + (k ? vs[0] : TangentQuad::zero(n)));
    if (!vs.empty()) CHECK(Subspace::span(n, mixed) == s);
    for (const auto& v : vs) CHECK(s.contains(v));

    std::vector<TangentQuad> ws;
    for (long k = 0, m = small_int(rng, 0, 5); k < m; ++k) ws.push_back(random_quad(rng, n, 1));
    if (!vs.empty() && small_int(rng, 0, 1)) ws.push_back(vs[0]);
    const Subspace t = Subspace::span(n, ws);
    const Subspace meet = intersect(s, t);
    CHECK(meet.dim() == s.dim() + t.dim() - (s + t).dim());
    CHECK(s.contains(meet));
    CHECK(t.contains(meet));
  }
}

TEST_CASE("radical of a subspace") {
  const Index n = 1;
  const Subspace zero(n);
  const SubspaceReport r0 = subspace_analysis(zero, zero);
  CHECK(r0.dim_radical == 0);
  CHECK(r0.mat2_invariant);
  CHECK(r0.dim_perp == 4);

  auto q = [](long x0, long x1, long y0, long y1) {
    return TangentQuad{QMat::Constant(1, 1, x0), QMat::Constant(1, 1, x1), QMat::Constant(1, 1, y0), QMat::Constant(1, 1, y1)};
  };
  auto orbit = [&](const TangentQuad& v) {
    std::vector<TangentQuad> vs;
    for (const auto& a : mat2_elementary_basis()) vs.push_back(mat2_act(a, v));
    return Subspace::span(n, vs);
  };
  // null vector with a 2-dimensional isotropic orbit
  const TangentQuad v = q(1, 0, 1, 0);
  CHECK(metric_g(v, v).is_zero());
  const Subspace s = orbit(v);
  CHECK(s.dim() == 2);
  const SubspaceReport r = subspace_analysis(s, s);
  CHECK(r.radical == s);
  CHECK(r.radical_equals_l);
  CHECK(r.mat2_invariant);
  // the orbit of the identity block is everything, so nothing is radical
  const Subspace all = orbit(q(1, 0, 0, 1));
  CHECK(all.dim() == 4);
  CHECK(subspace_analysis(all, zero).dim_radical == 0);

  Rng rng(28);
  for (int trial = 0; trial < 40; ++trial) {
    const Index m = 2;
    std::vector<TangentQuad> vs;
    for (long k = 0, c = small_int(rng, 1, 6); k < c; ++k) {
      TangentQuad x = random_quad(rng, m, 1);
      if (small_int(rng, 0, 1)) x.Y0.setConstant(GaussianRational(0)), x.Y1.setConstant(GaussianRational(0));
      vs.push_back(x);
    }
    const Subspace sub = Subspace::span(m, vs);
    const SubspaceReport rep = subspace_analysis(sub, Subspace(m));
    const auto basis = sub.basis();
    QMat gram(sub.dim(), sub.dim());
    for (Index a = 0; a < sub.dim(); ++a)
      for (Index b = 0; b < sub.dim(); ++b) gram(a, b) = metric_g(basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]);
    CHECK(rep.dim_radical == sub.dim() - rank(gram));
    CHECK(rep.dim_perp == 4 * m * m - sub.dim());
    for (const auto& x : rep.radical.basis()) {
      CHECK(sub.contains(x));
      for (const auto& y : basis) CHECK(metric_g(x, y).is_zero());
    }
  }
}

TEST_CASE("quaternion span of a subspace") {
  Rng rng(29);
  const Index n = 2;
  // a generic line spans three quaternion directions
  const Subspace line = Subspace::span(n, {random_quad(rng, n)});
  const SubspaceReport r = subspace_analysis(line, Subspace(n), line);
  REQUIRE(r.dim_quaternion_h);
  CHECK(*r.dim_quaternion_h == 3);
  CHECK(*r.quaternion_h_full);
  // a Mat2-invariant subspace collapses: I S + J S + K S = S
  std::vector<TangentQuad> vs;
  const TangentQuad v = random_quad(rng, n);
  for (const auto& a : mat2_elementary_basis()) vs.push_back(mat2_act(a, v));
  const Subspace inv = Subspace::span(n, vs);
  CHECK(is_mat2_invariant(inv));
  CHECK(quaternion_span(inv) == inv);
  CHECK_FALSE(*subspace_analysis(inv, Subspace(n), inv).quaternion_h_full);
}

TEST_CASE("quotient dimension bookkeeping") {
  CHECK(quotient_dimension(32, 3, 2) == 16);
  CHECK(quotient_dimension(12, 0, 0) == 12);
  CHECK(quotient_dimension(60, 8, 4) == 20);
  for (long d = 3; d <= 12; ++d) CHECK(quotient_dimension(dim_md(d), dim_g0(d), dim_l(d)) == 4 * d);
  CHECK(dim_md(3) == 12);
  CHECK_THROWS_AS(quotient_dimension(-1, 0, 0), std::invalid_argument);
}
