#include "commcurve/fixtures.hpp"

namespace commcurve::fixtures {

namespace {

using P = MultiPoly<RatFunc>;

/// c(t) * x^a * y^b
P term(int n, const UniPoly& c, int a, int b = 0) {
  Exponents e{a};
  if (n == 2) e.push_back(b);
  return P::monomial(n, e, RatFunc(c));
}

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

}  // namespace

CurveIdeal quartic_ideal() {
  return {3,
          {term(2, 1, 1, 1) - term(2, t, 0, 0), term(2, t * t, 0, 1) - term(2, 1, 3, 0),
           term(2, t, 0, 2) - term(2, 1, 2, 0), term(2, 1, 0, 3) - term(2, 1, 1, 0)}};
}

MatPolyModel quartic_model() {
  MatPolyModel m;
  m.d = 4;
  m.r = 3;
  m.k = {0, 1, 1, 1};
  m.mats.push_back(poly_matrix({{0, 0, t, 0}, {1, 0, 0, 0}, {0, 0, 0, t}, {0, t, 0, 0}}));
  m.mats.push_back(poly_matrix({{0, t, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}}));
  return m;
}

CurveIdeal twisted_cubic_ideal() {
  return {3,
          {term(2, 1, 0, 2) - term(2, 1, 1, 0), term(2, 1, 1, 1) - term(2, t, 0, 0),
           term(2, 1, 2, 0) - term(2, t, 0, 1)}};
}

MatPolyModel twisted_cubic_model() {
  MatPolyModel m;
  m.d = 3;
  m.r = 3;
  m.k = {0, 1, 1};
  m.mats.push_back(poly_matrix({{0, 0, t}, {1, 0, 0}, {0, t, 0}}));
  m.mats.push_back(poly_matrix({{0, t, 0}, {0, 0, 1}, {1, 0, 0}}));
  return m;
}

CurveIdeal two_lines_ideal() { return {2, {term(1, 1, 2) - term(1, t * t, 0)}}; }

CurveIdeal quadric_intersection_ideal() {
  return {3,
          {term(2, 1, 2, 0) - term(2, t, 0, 1) - term(2, 1, 0, 0),
           term(2, 1, 0, 2) - term(2, 1, 1, 0) - term(2, t * t, 0, 0)}};
}

CurveIdeal cubic_plus_line_ideal() {
  return {3, {term(2, t, 0, 1) - term(2, 1, 2, 0), term(2, 1, 1, 0) - term(2, 1, 0, 2)}};
}

MatPolyModel quartic_in_p4_model() { return rational_normal_model(4, {3, 1, 2}); }

std::vector<std::string> names() {
  return {"quartic", "twisted-cubic", "two-lines", "quadric-intersection", "cubic-plus-line", "quartic-p4"};
}

}  // namespace commcurve::fixtures
