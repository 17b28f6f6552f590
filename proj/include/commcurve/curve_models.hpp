#pragma once

// Curves flat over P^1 as commuting matrix polynomials: fiber algebras on
// both affine charts, the gluing transition, splitting types and the
// verification of model conditions for every t including infinity.

#include "commcurve/groebner.hpp"
#include "commcurve/polymat.hpp"
#include "commcurve/report.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace commcurve {

/// Ideal in x1..x_{r-1} over Q(i)(t).
struct CurveIdeal {
  int r = 3;
  std::vector<MultiPoly<RatFunc>> gens;

  int nvars() const { return r - 1; }
};

/// Matrices A_2(t)..A_r(t) (stored from index 0) with splitting exponents k.
struct MatPolyModel {
  Index d = 0;
  int r = 0;
  std::vector<PolyMat> mats;
  std::vector<int> k;
};

/// Degrees a_1 >= ... >= a_d of the summands O(a_i).
using SplittingType = std::vector<int>;

/// i -> m_i, the multiplicity of O(-i), i >= 1.
using SplitMultiset = std::map<int, long>;

using ModelReport = Report;

/// Laurent entries were expected and a negative power survived, or vice versa.
class ChartError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A'_l(s) with (i,j) entry s^{k_j - k_i + k_l} A_l(1/s)_{ij}.
std::vector<PolyMat> infinity_chart(const MatPolyModel& model);

ModelReport verify_model(const MatPolyModel& model);

/// Drops A_{r'+1}..A_r and re-verifies (i)-(iii).
std::pair<MatPolyModel, ModelReport> project_model(const MatPolyModel& model, int r_prime);

/// The same ideal in the chart at t = infinity: x = x'/s, t = 1/s, cleared
/// by the smallest power of s.
std::vector<MultiPoly<RatFunc>> infinity_chart_ideal(const CurveIdeal& ci);

struct ChartAlgebra {
  QuotientAlgebra<RatFunc> algebra;
  bool polynomial = false;             // every multiplication entry in Q(i)[t]
  UniPoly denominator_lcm;             // monic lcm of entry denominators
  std::vector<GaussianRational> poles; // Q(i)-roots of denominator_lcm
};

struct FiberAlgebra {
  ChartAlgebra t_chart;
  std::optional<ChartAlgebra> s_chart;
  /// t-chart basis expressed in the s-chart basis (Laurent in t).
  std::optional<RatMat> transition;
  std::optional<SplittingType> splitting;
  /// Present when both charts are polynomial and the transition is a
  /// diagonal of monomials t^{k_i}.
  std::optional<MatPolyModel> model;
  std::vector<std::string> notes;
};

/// Chart algebra in the first monomial order (default first, then every
/// variable priority under grlex, grevlex and lex) whose multiplication
/// matrices are polynomial; falls back to the default order otherwise.
ChartAlgebra chart_algebra(const std::vector<MultiPoly<RatFunc>>& gens, int nvars, int cap = kDefaultQuotientCap);

FiberAlgebra fiber_algebra(const CurveIdeal& ci, int cap = kDefaultQuotientCap);

/// Transition expressing each t-chart basis monomial m(x) = t^{|m|} m(x')
/// in the s-chart basis, with s = 1/t.
RatMat transition_matrix(const QuotientAlgebra<RatFunc>& t_chart, const QuotientAlgebra<RatFunc>& s_chart);

/// h^0 of the bundle with the given transition twisted by O(m).
Index section_count(const RatMat& transition, const RatMat& inverse_transition, int m);

struct SplittingReport {
  SplittingType type;
  std::map<int, Index> h0;  // probed m -> h^0(E(m))
};

/// Throws std::invalid_argument unless det(transition) is c * t^k.
SplittingReport splitting_profile(const RatMat& transition);
inline SplittingType splitting_type(const RatMat& transition) { return splitting_profile(transition).type; }

/// Predicted h^0(E(m)) = sum max(a_i + m + 1, 0).
Index predicted_h0(const SplittingType& type, int m);

struct GenusReport {
  Index d = 0;
  long g = 0;
};

/// Throws std::invalid_argument unless exactly one summand is zero and the
/// rest are negative.
GenusReport genus_from_splitting(const SplittingType& type);

SplitMultiset multiset_from_splitting(const SplittingType& type);

struct ObstructionReport {
  long a = 0, b = 0, c = 0;
  long obstruction = 0;     // 2c - a - b
  long closed_form = 0;     // sum (i+1) m_i - sum m_i^2
  bool stable_possible = true;
};

/// Throws std::invalid_argument on negative multiplicities or indices < 1.
ObstructionReport cohomological_obstruction(const SplitMultiset& m);

/// Model of the displayed form for curves of degree r in P^r:
/// x_l x_j = sum_k a[l][j][k] x_k + b[l][j], basis (1, x_1, ..., x_{r-1}).
MatPolyModel canonical_model(int r, const std::vector<std::vector<std::vector<UniPoly>>>& a,
                             const std::vector<std::vector<UniPoly>>& b);

/// The rational normal curve x_i = w^{e_i}, t = w^r, where e is a
/// permutation of 1..r-1; quadratic relations reduced by t.
MatPolyModel rational_normal_model(int r, const std::vector<int>& exponents);

}  // namespace commcurve
