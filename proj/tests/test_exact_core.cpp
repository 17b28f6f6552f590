#include "doctest.h"
#include "support.hpp"

#include "commcurve/groebner.hpp"
#include "commcurve/inertia.hpp"
#include "commcurve/linalg.hpp"
#include "commcurve/polymat.hpp"

using namespace commcurve;
using namespace commcurve::testing;

namespace {

template <class F, class Gen>
void check_field_axioms(Gen&& gen, int trials) {
  for (int n = 0; n < trials; ++n) {
    const F a = gen(), b = gen(), c = gen();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == F(0));
    if (is_unit(a)) CHECK(a * (F(1) / a) == F(1));
  }
}

// Characteristic polynomial by Faddeev-LeVerrier, coefficients low to high.
std::vector<Rational> charpoly(const QMat& s) {
  const Index n = s.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  QMat m = zeros<GaussianRational>(n, n);
  for (Index k = 1; k <= n; ++k) {
    m = s * m;
    for (Index i = 0; i < n; ++i) m(i, i) += GaussianRational(c[static_cast<std::size_t>(n - k + 1)]);
    GaussianRational tr(0);
    for (Index i = 0; i < n; ++i) tr += (s * m)(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr.re() / Rational(k);
  }
  return c;
}

// Inertia of a real symmetric matrix by Descartes' rule on its (real-rooted)
// characteristic polynomial.
SignatureReport descartes_inertia(const QMat& s) {
  auto c = charpoly(s);
  SignatureReport r;
  std::size_t low = 0;
  while (low < c.size() && sgn(c[low]) == 0) ++low;
  r.zero = static_cast<Index>(low);
  auto changes = [&](bool flip) {
    int count = 0, last = 0;
    for (std::size_t k = low; k < c.size(); ++k) {
      int sg = sgn(c[k]);
      if (flip && (k % 2 == 1)) sg = -sg;
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  };
  r.positive = changes(false);
  r.negative = changes(true);
  return r;
}

QMat random_symmetric(Rng& rng, Index n, int rank) {
  QMat b = small_int_matrix(rng, n, rank);
  QMat d = zeros<GaussianRational>(rank, rank);
  for (Index i = 0; i < rank; ++i) d(i, i) = GaussianRational(small_int(rng, 0, 1) ? 1 : -1) * GaussianRational(small_int(rng, 1, 3));
  return b * d * b.transpose();
}

}  // namespace

TEST_CASE("gaussian rational and rational function field axioms") {
  Rng rng(11);
  check_field_axioms<GaussianRational>([&] { return small_gaussian(rng); }, 500);
  check_field_axioms<RatFunc>([&] { return RatFunc(small_poly(rng, 2), small_poly(rng, 1) + UniPoly::t() * UniPoly::t()); }, 500);
  check_field_axioms<Dual<GaussianRational>>(
      [&] { return Dual<GaussianRational>(small_gaussian(rng), small_gaussian(rng)); }, 200);
}

TEST_CASE("gaussian rational invariants") {
  Rng rng(12);
  for (int n = 0; n < 200; ++n) {
    const auto z = small_gaussian(rng);
    CHECK(z.conj().conj() == z);
    CHECK((z * z.conj()).is_real());
    CHECK((z * z.conj()).re() == z.norm());
    CHECK(z.re().get_den() > 0);
  }
  CHECK(GaussianRational(Rational(2, 4)).re() == Rational(1, 2));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(rational_string(Rational(-3, 4)) == "-3/4");
  CHECK(rational_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("poly_gcd examples") {
  const UniPoly t = UniPoly::t();
  CHECK(poly_gcd(t * t - UniPoly(1), t - UniPoly(1)) == t - UniPoly(1));
  const UniPoly p = upoly({4, 0, 2});
  CHECK(poly_gcd(p, UniPoly{}) == p.monic());
  CHECK(poly_gcd(UniPoly{}, UniPoly{}).is_zero());
  const UniPoly ti = t - UniPoly(GaussianRational::i());
  // (t-2)(t-i) = t^2 - (2+i)t + 2i ; (t-i)(t+3) = t^2 + (3-i)t - 3i
  const UniPoly a({GaussianRational(0, 2), GaussianRational(-2, -1), GaussianRational(1)});
  const UniPoly b({GaussianRational(0, -3), GaussianRational(3, -1), GaussianRational(1)});
  CHECK(a == (t - UniPoly(2)) * ti);
  CHECK(poly_gcd(a, b) == ti);
}

TEST_CASE("poly_gcd properties") {
  Rng rng(13);
  for (int n = 0; n < 200; ++n) {
    const UniPoly p = small_poly(rng, 4), q = small_poly(rng, 4), r = small_poly(rng, 2);
    if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
    const UniPoly g = poly_gcd(p, q);
    CHECK(divmod(p, g).second.is_zero());
    CHECK(divmod(q, g).second.is_zero());
    CHECK(poly_gcd(p * r, q * r) == r.monic() * g);
  }
}

TEST_CASE("univariate helpers") {
  const UniPoly t = UniPoly::t();
  const UniPoly p = (t - UniPoly(1)) * (t - UniPoly(1)) * (t + UniPoly(GaussianRational::i()));
  CHECK(squarefree_part(p) == ((t - UniPoly(1)) * (t + UniPoly(GaussianRational::i()))).monic());
  const auto roots = gaussian_rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(p(roots[0]).is_zero());
  CHECK(p(roots[1]).is_zero());
  const UniPoly half = upoly({-1, 2}) * upoly({3, 0, 0, 2});
  const auto hr = gaussian_rational_roots(half);
  REQUIRE(hr.size() == 1);
  CHECK(hr[0] == GaussianRational(Rational(1, 2)));
  CHECK(upoly({1, 2, 3}).reversed(3) == upoly({0, 3, 2, 1}));
  const RatFunc f(upoly({1, 1}), upoly({0, 0, 1}));
  CHECK(f.is_laurent());
  CHECK(f.laurent_coeff(-2) == GaussianRational(1));
  CHECK(f.invert_variable() == RatFunc(upoly({0, 1, 1})));
  CHECK_THROWS_AS(f(GaussianRational(0)), std::domain_error);
}

TEST_CASE("rank_kernel examples") {
  const auto id = rank_kernel<GaussianRational>(identity<GaussianRational>(3));
  CHECK(id.rank == 3);
  CHECK(id.kernel.empty());
  const auto z = rank_kernel<GaussianRational>(zeros<GaussianRational>(2, 4));
  CHECK(z.rank == 0);
  CHECK(z.kernel.size() == 4);

  const RatFunc t(UniPoly::t());
  Mat<RatFunc> m(2, 2);
  m << RatFunc(1), t, t, t * t;
  const auto rk = rank_kernel(m);
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel.size() == 1);
  CHECK(rk.kernel[0](0) == -t);
  CHECK(rk.kernel[0](1) == RatFunc(1));
}

TEST_CASE("rank_kernel properties") {
  Rng rng(14);
  for (int n = 0; n < 200; ++n) {
    const Index r = small_int(rng, 1, 6), c = small_int(rng, 1, 6), k = small_int(rng, 0, std::min(r, c));
    const QMat m = small_gaussian_matrix(rng, r, k) * small_gaussian_matrix(rng, k, c);
    const auto rk = rank_kernel(m);
    CHECK(rk.rank + static_cast<Index>(rk.kernel.size()) == c);
    CHECK(rk.rank == rank_reverse_order(m));
    for (const auto& v : rk.kernel) CHECK(is_zero_matrix(QVec(m * v)));
    if (!rk.kernel.empty()) {
      QMat basis(c, static_cast<Index>(rk.kernel.size()));
      for (std::size_t j = 0; j < rk.kernel.size(); ++j) basis.col(static_cast<Index>(j)) = rk.kernel[j];
      CHECK(rank(basis) == basis.cols());
    }
  }
  for (int n = 0; n < 50; ++n) {
    const QMat a = small_gaussian_matrix(rng, 4, 4);
    const auto inv = inverse(a);
    if (!inv) {
      CHECK(determinant(a).is_zero());
      continue;
    }
    CHECK(a * *inv == identity<GaussianRational>(4));
    CHECK(determinant(a) * determinant(*inv) == GaussianRational(1));
  }
}

TEST_CASE("polynomial matrix minor gcd") {
  Rng rng(15);
  const UniPoly t = UniPoly::t();
  PolyMat d = zeros<UniPoly>(2, 2);
  d(0, 0) = t;
  d(1, 1) = t - UniPoly(1);
  CHECK(top_minor_gcd(d).gcd == t * (t - UniPoly(1)));
  for (int n = 0; n < 60; ++n) {
    PolyMat m(3, 2);
    for (Index j = 0; j < 2; ++j)
      for (Index i = 0; i < 3; ++i) m(i, j) = small_poly(rng, 2, 2);
    // brute-force gcd of the 2x2 minors
    UniPoly g;
    for (Index a = 0; a < 3; ++a)
      for (Index b = a + 1; b < 3; ++b) g = poly_gcd(g, m(a, 0) * m(b, 1) - m(a, 1) * m(b, 0));
    const auto mg = top_minor_gcd(m);
    if (g.is_zero()) {
      CHECK(mg.generic_rank < 2);
    } else {
      CHECK(mg.generic_rank == 2);
      CHECK(mg.gcd == g);
    }
  }
}

TEST_CASE("buchberger examples") {
  using GP = MultiPoly<GaussianRational>;
  const GP x = GP::variable(2, 0), y = GP::variable(2, 1);
  {
    const auto gb = buchberger<GaussianRational>({x, y});
    CHECK(gb.size() == 2);
    const auto sm = standard_monomials(gb, 2, MonomialOrder{});
    CHECK(sm == std::vector<Exponents>{{0, 0}});
  }
  {
    const GP one(2, GaussianRational(1));
    const std::vector<GP> gens{x * x - one, y - x};
    // x > y makes x the lead of y - x; with y > x the standard set is {1, x}
    CHECK(quotient_algebra(gens).basis == std::vector<Exponents>{{0, 0}, {0, 1}});
    const auto q = quotient_algebra(gens, MonomialOrder{OrderKind::GrLex, {1, 0}});
    CHECK(q.basis == std::vector<Exponents>{{0, 0}, {1, 0}});
    // evaluation oracle at the two points (1,1), (-1,-1)
    Rng rng(16);
    for (int n = 0; n < 40; ++n) {
      GP f(2);
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3 - a; ++b) f += term(small_gaussian_int(rng), {a, b});
      const GP nf = normal_form(f, q.groebner, q.order);
      for (long s : {1L, -1L}) {
        const std::vector<GaussianRational> pt{GaussianRational(s), GaussianRational(s)};
        CHECK(evaluate(nf, pt) == evaluate(f, pt));
      }
      CHECK(normal_form(nf, q.groebner, q.order) == nf);
    }
    for (const auto& g : gens) CHECK(normal_form(g, q.groebner, q.order).is_zero());
  }
  {
    using RP = MultiPoly<RatFunc>;
    const RatFunc t(UniPoly::t());
    const RP X = RP::variable(2, 0), Y = RP::variable(2, 1), one(2, RatFunc(1));
    const std::vector<RP> gens{X * Y - one.scaled(t, {0, 0}), Y.scaled(t * t, {0, 0}) - X * X * X,
                               (Y * Y).scaled(t, {0, 0}) - X * X, Y * Y * Y - X};
    const auto q = quotient_algebra(gens);
    CHECK(q.basis == std::vector<Exponents>{{0, 0}, {1, 0}, {0, 1}, {0, 2}});
    for (const auto& g : gens) CHECK(normal_form(g, q.groebner, q.order).is_zero());
    CHECK(q.mult[0] * q.mult[1] == q.mult[1] * q.mult[0]);
  }
}

TEST_CASE("quotient cap and non zero-dimensional ideals") {
  using GP = MultiPoly<GaussianRational>;
  const GP x = GP::variable(2, 0), y = GP::variable(2, 1);
  CHECK_THROWS_AS(quotient_algebra<GaussianRational>({x * y}), QuotientError);
  GP big = x;
  for (int k = 1; k < 9; ++k) big = big * x;
  GP bigy = y;
  for (int k = 1; k < 9; ++k) bigy = bigy * y;
  CHECK_THROWS_AS(quotient_algebra<GaussianRational>({big, bigy}), QuotientError);
  CHECK(quotient_algebra<GaussianRational>({big, bigy}, MonomialOrder{}, 100).basis.size() == 81);
}

TEST_CASE("buchberger properties over random zero-dimensional ideals") {
  using GP = MultiPoly<GaussianRational>;
  Rng rng(17);
  for (const auto kind : {OrderKind::GrLex, OrderKind::Lex, OrderKind::GrevLex}) {
    const MonomialOrder ord{kind, {}};
    for (int n = 0; n < 15; ++n) {
      // leads x^a and y^b under every order; Bezout bounds the length by a*b
      const int a = static_cast<int>(small_int(rng, 1, 3)), b = static_cast<int>(small_int(rng, 1, 3));
      GP f = term(GaussianRational(1), {a, 0}), g = term(GaussianRational(1), {0, b});
      for (int i = 0; i < a; ++i)
        for (int j = 0; i + j < a; ++j) f += term(small_gaussian_int(rng, 2), {i, j});
      for (int j = 0; j < b; ++j) g += term(small_gaussian_int(rng, 2), {0, j});
      const std::vector<GP> gens{f, g};
      std::vector<GP> gb;
      try {
        gb = buchberger(gens, ord);
      } catch (const std::exception&) {
        FAIL("buchberger threw");
      }
      for (const auto& p : gens) CHECK(normal_form(p, gb, ord).is_zero());
      const auto sm = standard_monomials(gb, 2, ord);
      CHECK(static_cast<int>(sm.size()) <= a * b);
      const auto mult = multiplication_matrices(gb, sm, 2, ord);
      CHECK(mult[0] * mult[1] == mult[1] * mult[0]);
    }
  }
}

TEST_CASE("inertia examples") {
  QMat d = zeros<GaussianRational>(3, 3);
  d(0, 0) = 1;
  d(1, 1) = -1;
  CHECK(inertia(d) == SignatureReport{1, 1, 1});
  const QMat h = rational_matrix({{0, 1}, {1, 0}});
  CHECK(inertia(h) == SignatureReport{1, 1, 0});
  CHECK_THROWS_AS(inertia(rational_matrix({{0, 1}, {2, 0}})), std::invalid_argument);
  QMat c = h;
  c(0, 1) = GaussianRational::i();
  c(1, 0) = GaussianRational::i();
  CHECK_THROWS_AS(inertia(c), std::invalid_argument);
}

TEST_CASE("inertia against characteristic polynomial and under congruence") {
  Rng rng(18);
  for (int n = 0; n < 50; ++n) {
    const Index dim = small_int(rng, 1, 6);
    const QMat s = random_symmetric(rng, dim, static_cast<int>(small_int(rng, 0, dim)));
    const auto base = inertia(s);
    CHECK(base == descartes_inertia(s));
    CHECK(base.dimension() == dim);
    QMat p;
    do p = small_int_matrix(rng, dim, dim); while (determinant(p).is_zero());
    CHECK(inertia(QMat(p.transpose() * s * p)) == base);
  }
}
