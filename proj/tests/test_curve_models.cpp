#include "doctest.h"
#include "support.hpp"

#include "commcurve/curve_models.hpp"
#include "commcurve/fixtures.hpp"
#include "commcurve/krylov.hpp"
#include "commcurve/linalg.hpp"

#include <algorithm>

using namespace commcurve;
using namespace commcurve::testing;

namespace {

const UniPoly t = UniPoly::t();

PolyMat poly_matrix(std::initializer_list<std::initializer_list<UniPoly>> rows) {
  PolyMat m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const auto& e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

/// Substitutes the multiplication matrices into a generator: p(A_2, ..., A_r).
PolyMat substitute(const MultiPoly<RatFunc>& p, const std::vector<PolyMat>& mats) {
  const Index d = mats.front().rows();
  RatMat acc = zeros<RatFunc>(d, d);
  for (const auto& [e, c] : p.terms()) {
    RatMat m = identity<RatFunc>(d) * c;
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) m = (m * to_ratfunc(mats[v])).eval();
    acc += m;
  }
  PolyMat out(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      REQUIRE(acc(i, j).is_polynomial());
      out(i, j) = acc(i, j).num();
    }
  return out;
}

/// Fiber check at a single t0: words in the evaluated matrices span a
/// d-dimensional algebra and e1 generates.
bool fiber_ok(const std::vector<QMat>& mats) {
  const Index d = mats.front().rows();
  QMat span = unit_vector<GaussianRational>(d, 0);
  // algebra spanned by the closure of the identity under left multiplication
  QMat id = identity<GaussianRational>(d);
  Mat<GaussianRational> start(d * d, 1);
  start.col(0) = vectorize(id);
  std::vector<QMat> left;
  for (const auto& a : mats) {
    QMat op = zeros<GaussianRational>(d * d, d * d);
    for (Index c = 0; c < d; ++c) op.block(c * d, c * d, d, d) = a;  // vec(A M) for column-major vec
    left.push_back(op);
  }
  const Index alg = closure_dimension(left, start);
  return alg == d && generates(mats, span);
}

std::vector<QMat> evaluate_all(const std::vector<PolyMat>& mats, const GaussianRational& t0) {
  std::vector<QMat> out;
  for (const auto& m : mats) out.push_back(evaluate(m, t0));
  return out;
}

bool check_passed(const ModelReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.pass;
  FAIL("missing check " << name);
  return false;
}

const Check& find_check(const ModelReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::logic_error("missing check");
}

SplittingType sorted_desc(SplittingType v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

SplittingType from_k(const std::vector<int>& k) {
  SplittingType out;
  for (int x : k) out.push_back(-x);
  return sorted_desc(out);
}

RatFunc laurent_monomial(const GaussianRational& c, int e) {
  if (e >= 0) return RatFunc(UniPoly::monomial(c, e));
  return RatFunc(UniPoly(c), UniPoly::monomial(1, -e));
}

/// P(1/t) D Q(t) with P, Q unitriangular in opposite directions and
/// D = diag(t^{-a_i}); the bundle type is a.
RatMat birkhoff_transition(Rng& rng, const std::vector<int>& a) {
  const auto d = static_cast<Index>(a.size());
  RatMat p = identity<RatFunc>(d), q = identity<RatFunc>(d), dm = zeros<RatFunc>(d, d);
  for (Index i = 0; i < d; ++i) {
    dm(i, i) = laurent_monomial(GaussianRational(small_int(rng, 1, 3)), -a[static_cast<std::size_t>(i)]);
    for (Index j = 0; j < d; ++j) {
      if (i < j) q(i, j) = RatFunc(small_poly(rng, 2, 2));
      if (i > j) p(i, j) = RatFunc(small_poly(rng, 2, 2)).invert_variable();
    }
  }
  if (small_int(rng, 0, 1)) {
    p = p.transpose().eval();
    q = q.transpose().eval();
  }
  return p * dm * q;
}

}  // namespace

TEST_CASE("quartic ideal reproduces the displayed A and B") {
  const FiberAlgebra fa = fiber_algebra(fixtures::quartic_ideal());
  REQUIRE(fa.t_chart.polynomial);
  CHECK(fa.t_chart.algebra.basis == std::vector<Exponents>{{0, 0}, {1, 0}, {0, 1}, {0, 2}});
  REQUIRE(fa.model);
  const MatPolyModel displayed = fixtures::quartic_model();
  CHECK(fa.model->mats[0] == poly_matrix({{0, 0, t, 0}, {1, 0, 0, 0}, {0, 0, 0, t}, {0, t, 0, 0}}));
  CHECK(fa.model->mats[1] == poly_matrix({{0, t, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}}));
  CHECK(fa.model->mats == displayed.mats);
  CHECK(fa.model->k == std::vector<int>{0, 1, 1, 1});
  // the chart at infinity uses 1, x, y, x^2
  REQUIRE(fa.s_chart);
  CHECK(fa.s_chart->algebra.basis == std::vector<Exponents>{{0, 0}, {1, 0}, {0, 1}, {2, 0}});
  const auto chart = infinity_chart(displayed);
  for (std::size_t l = 0; l < 2; ++l)
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) CHECK(RatFunc(chart[l](i, j)) == fa.s_chart->algebra.mult[l](i, j));
  CHECK(*fa.splitting == SplittingType{0, -1, -1, -1});
  CHECK(*fa.splitting == from_k(fa.model->k));
  CHECK(genus_from_splitting(*fa.splitting).g == 0);
}

TEST_CASE("quartic model passes every condition, including at infinity") {
  const MatPolyModel m = fixtures::quartic_model();
  const ModelReport rep = verify_model(m);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.witness);
  CHECK(rep.pass);
  CHECK(rep.bad_t.empty());
  CHECK_FALSE(rep.bad_at_infinity);
  CHECK(is_zero_matrix(commutator(m.mats[0], m.mats[1])));

  // independent fiberwise oracle at sample points and at s = 0
  for (long num = -4; num <= 4; ++num)
    for (long den : {1L, 2L, 3L}) CHECK(fiber_ok(evaluate_all(m.mats, GaussianRational(Rational(num, den)))));
  CHECK(fiber_ok(evaluate_all(m.mats, GaussianRational::i())));
  CHECK(fiber_ok(evaluate_all(infinity_chart(m), GaussianRational(0))));
}

TEST_CASE("perturbed quartic fails with a commutator witness") {
  MatPolyModel m = fixtures::quartic_model();
  m.mats[0](0, 2) = t + UniPoly(1);
  // oracle: the evaluated commutator is nonzero at t = 0
  CHECK_FALSE(is_zero_matrix(commutator(evaluate(m.mats[0], 0), evaluate(m.mats[1], 0))));
  const ModelReport rep = verify_model(m);
  CHECK_FALSE(rep.pass);
  const Check& c = find_check(rep, "commutators");
  CHECK_FALSE(c.pass);
  CHECK(c.witness.find("[A_2,A_3]") == 0);
}

TEST_CASE("trivial and small models") {
  MatPolyModel line;
  line.d = 1;
  line.r = 1;
  line.k = {0};
  CHECK(verify_model(line).pass);

  MatPolyModel point;
  point.d = 1;
  point.r = 2;
  point.k = {0};
  point.mats.push_back(poly_matrix({{upoly({5})}}));
  CHECK(infinity_chart(point).front() == point.mats.front());

  // two lines x = +-t: companion matrix of x^2 - t^2
  const FiberAlgebra fa = fiber_algebra(fixtures::two_lines_ideal());
  REQUIRE(fa.model);
  CHECK(fa.model->mats.front() == poly_matrix({{0, t * t}, {1, 0}}));
  CHECK(fa.model->k == std::vector<int>{0, 1});
  CHECK(verify_model(*fa.model).pass);
}

TEST_CASE("twisted cubic chart at infinity") {
  const MatPolyModel m = fixtures::twisted_cubic_model();
  const FiberAlgebra fa = fiber_algebra(fixtures::twisted_cubic_ideal());
  REQUIRE(fa.model);
  CHECK(fa.model->mats == m.mats);
  CHECK(fa.model->k == m.k);
  CHECK(verify_model(m).pass);
  CHECK(*fa.splitting == SplittingType{0, -1, -1});
  const GenusReport g = genus_from_splitting(*fa.splitting);
  CHECK(g.d == 3);
  CHECK(g.g == 0);

  // oracle: conjugate by diag(t^k), divide by t^{k_l}, substitute t = 1/s
  const auto chart = infinity_chart(m);
  for (std::size_t l = 0; l < m.mats.size(); ++l) {
    RatMat dm = zeros<RatFunc>(3, 3), dinv = zeros<RatFunc>(3, 3);
    for (Index i = 0; i < 3; ++i) {
      dm(i, i) = laurent_monomial(1, m.k[static_cast<std::size_t>(i)]);
      dinv(i, i) = dm(i, i).inverse();
    }
    const RatMat conj = dm * to_ratfunc(m.mats[l]) * dinv * laurent_monomial(1, -m.k[l + 1]);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j) CHECK(conj(i, j).invert_variable() == RatFunc(chart[l](i, j)));
  }
}

TEST_CASE("quadric intersection: basis, splitting, genus and obstruction") {
  const CurveIdeal ci = fixtures::quadric_intersection_ideal();
  const FiberAlgebra fa = fiber_algebra(ci);
  CHECK(fa.t_chart.algebra.basis == std::vector<Exponents>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  REQUIRE(fa.model);
  // oracle: the generators vanish on the multiplication matrices
  for (const auto& g : ci.gens) CHECK(is_zero_matrix(substitute(g, fa.model->mats)));
  CHECK(verify_model(*fa.model).pass);
  REQUIRE(fa.splitting);
  CHECK(*fa.splitting == SplittingType{0, -1, -1, -2});
  CHECK(*fa.splitting == from_k(fa.model->k));
  const GenusReport g = genus_from_splitting(*fa.splitting);
  CHECK(g.d == 4);
  CHECK(g.g == 1);
  const ObstructionReport ob = cohomological_obstruction(multiset_from_splitting(*fa.splitting));
  CHECK(ob.a == 1);
  CHECK(ob.b == 9);
  CHECK(ob.c == 6);
  CHECK(ob.obstruction == 2);
  CHECK_FALSE(ob.stable_possible);
}

TEST_CASE("cubic plus line has the same splitting") {
  const CurveIdeal ci = fixtures::cubic_plus_line_ideal();
  const FiberAlgebra fa = fiber_algebra(ci);
  REQUIRE(fa.model);
  for (const auto& g : ci.gens) CHECK(is_zero_matrix(substitute(g, fa.model->mats)));
  CHECK(verify_model(*fa.model).pass);
  CHECK(*fa.splitting == SplittingType{0, -1, -1, -2});
  CHECK(genus_from_splitting(*fa.splitting).g == 1);
}

TEST_CASE("fixture models agree with their splitting types") {
  for (const CurveIdeal& ci : {fixtures::quartic_ideal(), fixtures::twisted_cubic_ideal(), fixtures::two_lines_ideal(),
                               fixtures::quadric_intersection_ideal(), fixtures::cubic_plus_line_ideal()}) {
    const FiberAlgebra fa = fiber_algebra(ci);
    REQUIRE(fa.model);
    CHECK(verify_model(*fa.model).pass);
    CHECK(*fa.splitting == from_k(fa.model->k));
    for (const auto& m : fa.model->mats) CHECK(m.rows() == fa.model->d);
  }
}

TEST_CASE("non-flat and non-finite inputs") {
  // x = 1/t has a pole at t = 0
  const CurveIdeal pole{2, {term(RatFunc(t), {1}) - term(RatFunc(1), {0})}};
  const FiberAlgebra fa = fiber_algebra(pole);
  CHECK_FALSE(fa.t_chart.polynomial);
  CHECK(fa.t_chart.poles == std::vector<GaussianRational>{0});
  CHECK_FALSE(fa.model);
  CHECK_FALSE(fa.notes.empty());

  const CurveIdeal infinite{3, {term(RatFunc(1), {1, 1})}};
  CHECK_THROWS_AS(fiber_algebra(infinite), QuotientError);
}

TEST_CASE("infinity chart rejects entries above the degree pattern") {
  MatPolyModel m = fixtures::quartic_model();
  m.mats[0](1, 1) = t * t;
  CHECK_THROWS_AS(infinity_chart(m), ChartError);
  try {
    infinity_chart(m);
  } catch (const ChartError& e) {
    CHECK(std::string(e.what()).find("A_2(2,2)") != std::string::npos);
  }
  const ModelReport rep = verify_model(m);
  CHECK_FALSE(check_passed(rep, "degree_pattern"));
  CHECK_FALSE(rep.pass);
}

TEST_CASE("projections of rational normal curves") {
  const MatPolyModel p4 = fixtures::quartic_in_p4_model();
  CHECK(verify_model(p4).pass);
  const auto [same, same_rep] = project_model(p4, 4);
  CHECK(same.mats == p4.mats);
  CHECK(same_rep.pass);
  const auto [p3, rep] = project_model(p4, 3);
  CHECK(rep.pass);
  CHECK(p3.mats == fixtures::quartic_model().mats);

  // (w^3, w^2) acquires a cusp over t = 0
  const auto [cusp, cusp_rep] = project_model(rational_normal_model(4, {3, 2, 1}), 3);
  CHECK_FALSE(cusp_rep.pass);
  CHECK(cusp_rep.bad_t == std::vector<GaussianRational>{0});
  CHECK_FALSE(fiber_ok(evaluate_all(cusp.mats, 0)));
  CHECK(fiber_ok(evaluate_all(cusp.mats, 1)));

  CHECK_THROWS_AS(project_model(p4, 2), std::invalid_argument);
}

TEST_CASE("canonical models keep the displayed block structure after projection") {
  for (int r : {4, 5, 6}) {
    std::vector<int> e(static_cast<std::size_t>(r - 1));
    for (int k = 0; k < r - 1; ++k) e[static_cast<std::size_t>(k)] = r - 1 - k;
    const MatPolyModel m = rational_normal_model(r, e);
    CHECK(verify_model(m).pass);
    const auto [p, rep] = project_model(m, 3);
    for (std::size_t l = 0; l < p.mats.size(); ++l) {
      const PolyMat& a = p.mats[l];
      CHECK(a.col(0) == to_poly(unit_vector<GaussianRational>(r, static_cast<Index>(l) + 1)));
      for (Index i = 1; i < r; ++i)
        for (Index j = 1; j < r; ++j) CHECK(a(i, j).degree() <= 1);
      for (Index j = 1; j < r; ++j) CHECK(a(0, j).degree() <= 2);
      CHECK(a == m.mats[l]);
    }
  }
}

TEST_CASE("splitting type of diagonal transitions") {
  CHECK(splitting_type(identity<RatFunc>(3)) == SplittingType{0, 0, 0});
  RatMat d = zeros<RatFunc>(4, 4);
  const std::vector<int> a{2, -1, 0, -3};
  for (Index i = 0; i < 4; ++i) d(i, i) = laurent_monomial(1, -a[static_cast<std::size_t>(i)]);
  CHECK(splitting_type(d) == SplittingType{2, 0, -1, -3});

  RatMat bad(1, 1);
  bad(0, 0) = RatFunc(t + UniPoly(1));
  CHECK_THROWS_AS(splitting_type(bad), std::invalid_argument);
  RatMat singular(2, 2);
  singular << RatFunc(t), RatFunc(1), RatFunc(t), RatFunc(1);
  CHECK_THROWS_AS(splitting_type(singular), std::invalid_argument);
}

TEST_CASE("splitting type recovers Birkhoff factors and h0 profiles") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = static_cast<std::size_t>(small_int(rng, 1, 4));
    std::vector<int> a;
    for (std::size_t i = 0; i < d; ++i) a.push_back(static_cast<int>(small_int(rng, -3, 2)));
    const RatMat tr = birkhoff_transition(rng, a);
    const SplittingReport rep = splitting_profile(tr);
    CHECK(rep.type == sorted_desc(a));
    for (const auto& [m, h] : rep.h0) CHECK(h == predicted_h0(rep.type, m));
  }
}

TEST_CASE("splitting type is additive on direct sums") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> a1, a2;
    for (long i = 0, n = small_int(rng, 1, 3); i < n; ++i) a1.push_back(static_cast<int>(small_int(rng, -3, 1)));
    for (long i = 0, n = small_int(rng, 1, 3); i < n; ++i) a2.push_back(static_cast<int>(small_int(rng, -3, 1)));
    const RatMat t1 = birkhoff_transition(rng, a1), t2 = birkhoff_transition(rng, a2);
    const auto n1 = t1.rows(), n2 = t2.rows();
    RatMat sum = zeros<RatFunc>(n1 + n2, n1 + n2);
    sum.topLeftCorner(n1, n1) = t1;
    sum.bottomRightCorner(n2, n2) = t2;
    SplittingType expect = splitting_type(t1);
    const SplittingType second = splitting_type(t2);
    expect.insert(expect.end(), second.begin(), second.end());
    CHECK(splitting_type(sum) == sorted_desc(expect));
  }
}

TEST_CASE("genus from splitting") {
  CHECK(genus_from_splitting({0, -1, -1}).g == 0);
  CHECK(genus_from_splitting({0, -1, -1}).d == 3);
  CHECK(genus_from_splitting({0, -1, -1, -2}).g == 1);
  CHECK(genus_from_splitting({0}).d == 1);
  CHECK(genus_from_splitting({0}).g == 0);
  CHECK_THROWS_AS(genus_from_splitting({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(genus_from_splitting({0, 0, -1}), std::invalid_argument);
}

TEST_CASE("obstruction examples") {
  const ObstructionReport r = cohomological_obstruction({{1, 2}, {2, 1}});
  CHECK(r.a == 1);
  CHECK(r.b == 9);
  CHECK(r.c == 6);
  CHECK(r.obstruction == 2);
  CHECK_FALSE(r.stable_possible);
  const ObstructionReport s = cohomological_obstruction({{1, 3}});
  CHECK(s.obstruction == -3);
  CHECK(s.stable_possible);
  const ObstructionReport z = cohomological_obstruction({});
  CHECK(z.a == 0);
  CHECK(z.b == 0);
  CHECK(z.c == 0);
  CHECK(z.obstruction == 0);
  CHECK_THROWS_AS(cohomological_obstruction({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(cohomological_obstruction({{1, -1}}), std::invalid_argument);
}

TEST_CASE("obstruction identities on random multisets") {
  Rng rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    SplitMultiset m;
    const long support = small_int(rng, 0, 5);
    for (long k = 0; k < support; ++k) m[static_cast<int>(small_int(rng, 1, 7))] = small_int(rng, 0, 8);
    const ObstructionReport r = cohomological_obstruction(m);
    // brute force over ordered index pairs
    long a = 0, b = 0, c = 0, rhs = 0;
    for (int i = 1; i <= 7; ++i) {
      const long mi = m.count(i) ? m.at(i) : 0;
      for (int j = i; j <= 7; ++j) {
        const long mj = m.count(j) ? m.at(j) : 0;
        b += (j - i + 1) * mi * mj;
        if (j >= i + 1) c += (j - i) * mi * mj;
        if (j >= i + 2) a += (j - i - 1) * mi * mj;
      }
      a += (i - 1) * mi;
      c += i * mi;
      rhs += (i + 1) * mi - mi * mi;
    }
    CHECK(r.a == a);
    CHECK(r.b == b);
    CHECK(r.c == c);
    CHECK(r.obstruction == rhs);
    CHECK(r.closed_form == rhs);

    bool all_small = true, some_tight = false;
    for (const auto& [i, mi] : m) {
      if (mi > i + 1) all_small = false;
      if (mi >= 1 && mi <= i) some_tight = true;
    }
    if (all_small && some_tight) CHECK(r.obstruction > 0);
  }
}
