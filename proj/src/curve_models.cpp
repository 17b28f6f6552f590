#include "commcurve/curve_models.hpp"

#include "commcurve/krylov.hpp"
#include "commcurve/linalg.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

namespace commcurve {

namespace {

std::string entry_label(std::size_t l, Index i, Index j) {
  std::ostringstream os;
  os << "A_" << (l + 2) << "(" << (i + 1) << "," << (j + 1) << ")";
  return os.str();
}

/// k of the basis vector e_l = A_l e_1; 0 when it falls outside (d = 1).
int weight(const MatPolyModel& m, std::size_t l) {
  return l + 1 < m.k.size() ? m.k[l + 1] : 0;
}

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  return exact_div(a * b, poly_gcd(a, b)).monic();
}

/// All exponent tuples in [0, d-1]^m.
std::vector<std::vector<int>> bounded_words(int m, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  for (;;) {
    out.push_back(e);
    int k = 0;
    while (k < m) {
      if (++e[static_cast<std::size_t>(k)] < d) break;
      e[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == m) break;
  }
  return out;
}

struct ChartMatrices {
  PolyMat words;   // d^2 x #words, columns vec(word)
  PolyMat krylov;  // d x #words, columns word * e1
};

ChartMatrices chart_matrices(const std::vector<PolyMat>& mats, Index d) {
  const int m = static_cast<int>(mats.size());
  std::vector<std::vector<PolyMat>> pw;
  for (const auto& a : mats) pw.push_back(powers(a, static_cast<int>(d) - 1));
  const auto words = bounded_words(m, static_cast<int>(d));
  ChartMatrices out{PolyMat(d * d, static_cast<Index>(words.size())), PolyMat(d, static_cast<Index>(words.size()))};
  for (std::size_t w = 0; w < words.size(); ++w) {
    PolyMat p = identity<UniPoly>(d);
    for (int l = 0; l < m; ++l) p = (p * pw[static_cast<std::size_t>(l)][static_cast<std::size_t>(words[w][static_cast<std::size_t>(l)])]).eval();
    out.words.col(static_cast<Index>(w)) = vectorize(p);
    out.krylov.col(static_cast<Index>(w)) = p.col(0);
  }
  return out;
}

struct RankCheck {
  bool pass = false;
  MinorGcd g;
};

RankCheck full_rank_everywhere(const PolyMat& m, Index target) {
  RankCheck rc;
  rc.g = top_minor_gcd(m);
  rc.pass = rc.g.generic_rank == target && rank_constant_on_affine_line(rc.g);
  return rc;
}

std::string rank_witness(const RankCheck& rc, Index target, const char* chart) {
  std::ostringstream os;
  os << chart << ": generic rank " << rc.g.generic_rank << " (want " << target << "), minor gcd " << rc.g.gcd.str();
  return os.str();
}

void add_roots(std::vector<GaussianRational>& out, const UniPoly& g) {
  if (g.is_constant()) return;
  for (const auto& z : gaussian_rational_roots(g))
    if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
}

}  // namespace

std::vector<PolyMat> infinity_chart(const MatPolyModel& model) {
  const Index d = model.d;
  if (static_cast<Index>(model.k.size()) != d) throw std::invalid_argument("infinity_chart: k has wrong length");
  std::vector<PolyMat> out;
  for (std::size_t l = 0; l < model.mats.size(); ++l) {
    const int kl = weight(model, l);
    const PolyMat& a = model.mats[l];
    PolyMat b(d, d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        const int shift = model.k[static_cast<std::size_t>(j)] - model.k[static_cast<std::size_t>(i)] + kl;
        if (a(i, j).is_zero()) {
          b(i, j) = UniPoly();
          continue;
        }
        if (a(i, j).degree() > shift)
          throw ChartError("infinity_chart: negative power of s left in " + entry_label(l, i, j) + " (degree " +
                           std::to_string(a(i, j).degree()) + " > " + std::to_string(shift) + ")");
        b(i, j) = a(i, j).reversed(shift);
      }
    out.push_back(std::move(b));
  }
  return out;
}

ModelReport verify_model(const MatPolyModel& model) {
  ModelReport rep;
  const Index d = model.d;
  const std::size_t nm = model.mats.size();

  {
    Check c{"shape", true, ""};
    if (static_cast<Index>(model.k.size()) != d || static_cast<int>(nm) != model.r - 1 || d < 1)
      c = {"shape", false, "need r-1 matrices and d splitting exponents"};
    for (const auto& a : model.mats)
      if (a.rows() != d || a.cols() != d) c = {"shape", false, "matrix is not d x d"};
    if (!model.k.empty() && model.k[0] != 0) c = {"shape", false, "k_1 must be 0"};
    if (static_cast<Index>(nm) + 1 > d && d > 0) c = {"shape", false, "more matrices than basis vectors"};
    rep.checks.push_back(c);
    if (!c.pass) return rep;
  }

  {
    Check c{"first_columns", true, ""};
    for (std::size_t l = 0; l < nm && c.pass; ++l)
      for (Index i = 0; i < d; ++i) {
        const UniPoly want = i == static_cast<Index>(l + 1) ? UniPoly(1) : UniPoly();
        if (model.mats[l](i, 0) != want) {
          c.pass = false;
          c.witness = entry_label(l, i, 0) + " = " + model.mats[l](i, 0).str();
          break;
        }
      }
    rep.checks.push_back(c);
  }

  Check degree{"degree_pattern", true, ""};
  for (std::size_t l = 0; l < nm && degree.pass; ++l)
    for (Index i = 0; i < d && degree.pass; ++i)
      for (Index j = 0; j < d; ++j) {
        const int bound = model.k[static_cast<std::size_t>(j)] - model.k[static_cast<std::size_t>(i)] + weight(model, l);
        if (model.mats[l](i, j).degree() > bound) {
          degree.pass = false;
          degree.witness = entry_label(l, i, j) + " has degree " + std::to_string(model.mats[l](i, j).degree()) +
                           " > " + std::to_string(bound);
          break;
        }
      }
  rep.checks.push_back(degree);

  {
    Check c{"commutators", true, ""};
    for (std::size_t a = 0; a < nm && c.pass; ++a)
      for (std::size_t b = a + 1; b < nm; ++b) {
        const PolyMat comm = commutator(model.mats[a], model.mats[b]);
        if (is_zero_matrix(comm)) continue;
        c.pass = false;
        for (Index i = 0; i < d && c.witness.empty(); ++i)
          for (Index j = 0; j < d; ++j)
            if (!comm(i, j).is_zero()) {
              c.witness = "[A_" + std::to_string(a + 2) + ",A_" + std::to_string(b + 2) + "](" + std::to_string(i + 1) +
                          "," + std::to_string(j + 1) + ") = " + comm(i, j).str();
              break;
            }
        break;
      }
    rep.checks.push_back(c);
  }

  const ChartMatrices tc = chart_matrices(model.mats, d);
  const RankCheck t_alg = full_rank_everywhere(tc.words, d);
  const RankCheck t_cyc = full_rank_everywhere(tc.krylov, d);
  if (!t_alg.pass && t_alg.g.generic_rank == d) add_roots(rep.bad_t, t_alg.g.gcd);
  if (!t_cyc.pass && t_cyc.g.generic_rank == d) add_roots(rep.bad_t, t_cyc.g.gcd);
  std::sort(rep.bad_t.begin(), rep.bad_t.end());

  Check alg{"algebra_dimension_t_chart", t_alg.pass, t_alg.pass ? "" : rank_witness(t_alg, d, "t-chart")};
  Check cyc{"e1_cyclic_t_chart", t_cyc.pass, t_cyc.pass ? "" : rank_witness(t_cyc, d, "t-chart")};
  rep.checks.push_back(alg);
  rep.checks.push_back(cyc);

  Check s_alg{"algebra_dimension_s_chart", false, ""}, s_cyc{"e1_cyclic_s_chart", false, ""};
  if (!degree.pass) {
    s_alg.witness = s_cyc.witness = "s-chart undefined: degree pattern fails";
  } else {
    const ChartMatrices sc = chart_matrices(infinity_chart(model), d);
    const RankCheck a = full_rank_everywhere(sc.words, d);
    const RankCheck c = full_rank_everywhere(sc.krylov, d);
    s_alg.pass = a.pass;
    s_cyc.pass = c.pass;
    if (!a.pass) s_alg.witness = rank_witness(a, d, "s-chart");
    if (!c.pass) s_cyc.witness = rank_witness(c, d, "s-chart");
    auto vanishes_at_zero = [&](const RankCheck& rc) {
      return rc.g.generic_rank < d || rc.g.gcd.coeff(0).is_zero();
    };
    rep.bad_at_infinity = vanishes_at_zero(a) || vanishes_at_zero(c);
  }
  rep.checks.push_back(s_alg);
  rep.checks.push_back(s_cyc);

  rep.finish();
  return rep;
}

std::pair<MatPolyModel, ModelReport> project_model(const MatPolyModel& model, int r_prime) {
  if (r_prime < 3 || r_prime > model.r)
    throw std::invalid_argument("project_model: need 3 <= r' <= r, got r' = " + std::to_string(r_prime));
  MatPolyModel out = model;
  out.r = r_prime;
  out.mats.resize(static_cast<std::size_t>(r_prime - 1));
  ModelReport rep = verify_model(out);
  return {std::move(out), std::move(rep)};
}

std::vector<MultiPoly<RatFunc>> infinity_chart_ideal(const CurveIdeal& ci) {
  const int n = ci.nvars();
  std::vector<MultiPoly<RatFunc>> out;
  for (const auto& g : ci.gens) {
    if (g.nvars() != n) throw std::invalid_argument("infinity_chart_ideal: generator has wrong number of variables");
    UniPoly den(1);
    for (const auto& [e, c] : g.terms()) den = poly_lcm(den, c.den());
    int top = 0;
    std::vector<std::pair<Exponents, UniPoly>> terms;
    for (const auto& [e, c] : g.terms()) {
      const UniPoly p = exact_div(c.num() * den, c.den());
      top = std::max(top, total_degree(e) + p.degree());
      terms.emplace_back(e, p);
    }
    MultiPoly<RatFunc> h(n);
    for (const auto& [e, p] : terms) h.add_term(e, RatFunc(p.reversed(top - total_degree(e))));
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

ChartAlgebra assess(QuotientAlgebra<RatFunc> q) {
  ChartAlgebra ca;
  ca.polynomial = true;
  ca.denominator_lcm = UniPoly(1);
  for (const auto& m : q.mult)
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_polynomial()) {
          ca.polynomial = false;
          ca.denominator_lcm = poly_lcm(ca.denominator_lcm, m(i, j).den());
        }
  ca.poles = gaussian_rational_roots(ca.denominator_lcm);
  ca.algebra = std::move(q);
  return ca;
}

std::vector<MonomialOrder> candidate_orders(int n) {
  std::vector<MonomialOrder> out{MonomialOrder{}};
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (OrderKind kind : {OrderKind::GrLex, OrderKind::GrevLex, OrderKind::Lex}) {
    std::iota(perm.begin(), perm.end(), 0);
    do out.push_back(MonomialOrder{kind, perm});
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace

ChartAlgebra chart_algebra(const std::vector<MultiPoly<RatFunc>>& gens, int nvars, int cap) {
  std::optional<ChartAlgebra> first;
  for (const auto& ord : candidate_orders(nvars)) {
    ChartAlgebra ca;
    try {
      ca = assess(quotient_algebra(gens, ord, cap));
    } catch (const QuotientError&) {
      if (!first) throw;  // the default order decides zero-dimensionality
      continue;
    }
    if (ca.polynomial) return ca;
    if (!first) first = std::move(ca);
  }
  return *first;
}

RatMat transition_matrix(const QuotientAlgebra<RatFunc>& t_chart, const QuotientAlgebra<RatFunc>& s_chart) {
  const auto d = static_cast<Index>(t_chart.basis.size());
  if (static_cast<Index>(s_chart.basis.size()) != d)
    throw std::invalid_argument("transition_matrix: fiber dimensions differ between charts");
  const int n = t_chart.basis.empty() ? 0 : static_cast<int>(t_chart.basis.front().size());
  RatMat out(d, d);
  for (Index i = 0; i < d; ++i) {
    const Exponents& e = t_chart.basis[static_cast<std::size_t>(i)];
    const auto mono = MultiPoly<RatFunc>::monomial(n, e, RatFunc(1));
    const Vec<RatFunc> v = coordinates(normal_form(mono, s_chart.groebner, s_chart.order), s_chart.basis);
    const RatFunc scale(UniPoly::monomial(1, total_degree(e)));
    for (Index r = 0; r < d; ++r) out(r, i) = v(r).invert_variable() * scale;
  }
  return out;
}

FiberAlgebra fiber_algebra(const CurveIdeal& ci, int cap) {
  if (ci.r < 2) throw std::invalid_argument("fiber_algebra: need r >= 2");
  if (ci.gens.empty()) throw std::invalid_argument("fiber_algebra: empty generator list");
  for (const auto& g : ci.gens)
    if (g.nvars() != ci.nvars()) throw std::invalid_argument("fiber_algebra: generator has wrong number of variables");

  FiberAlgebra fa;
  fa.t_chart = chart_algebra(ci.gens, ci.nvars(), cap);
  if (!fa.t_chart.polynomial) {
    fa.notes.push_back("t-chart: denominators do not clear; poles at roots of " + fa.t_chart.denominator_lcm.str());
    return fa;
  }
  fa.s_chart = chart_algebra(infinity_chart_ideal(ci), ci.nvars(), cap);
  if (!fa.s_chart->polynomial) {
    fa.notes.push_back("s-chart: denominators do not clear; poles at roots of " + fa.s_chart->denominator_lcm.str());
    return fa;
  }
  fa.transition = transition_matrix(fa.t_chart.algebra, fa.s_chart->algebra);
  try {
    fa.splitting = splitting_type(*fa.transition);
  } catch (const std::invalid_argument& e) {
    fa.notes.push_back(e.what());
    return fa;
  }

  // Model in the t-chart basis when the transition is monomial.
  const RatMat& tr = *fa.transition;
  const Index d = tr.rows();
  std::vector<int> k(static_cast<std::size_t>(d), 0);
  for (Index j = 0; j < d; ++j) {
    Index nonzero = 0;
    for (Index i = 0; i < d; ++i) {
      if (tr(i, j).is_zero()) continue;
      ++nonzero;
      const auto range = tr(i, j).laurent_range();
      if (!range || range->first != range->second) nonzero = d + 1;
      else k[static_cast<std::size_t>(j)] = range->first;
    }
    if (nonzero != 1) {
      fa.notes.push_back("transition is not monomial; the t-chart basis is not adapted to the splitting");
      return fa;
    }
  }
  MatPolyModel model;
  model.d = d;
  model.r = ci.r;
  model.k = k;
  for (const auto& m : fa.t_chart.algebra.mult) {
    PolyMat p(d, d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) p(i, j) = m(i, j).num() * m(i, j).den().lead().inverse();
    model.mats.push_back(std::move(p));
  }
  fa.model = std::move(model);
  return fa;
}

namespace {

int laurent_high(const RatMat& m) {
  int hi = INT_MIN;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (const auto r = m(i, j).laurent_range()) hi = std::max(hi, r->second);
  return hi;
}

void require_laurent(const RatMat& m, const char* what) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_laurent())
        throw std::invalid_argument(std::string("splitting_type: ") + what + " entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") = " + m(i, j).str() + " is not a Laurent polynomial");
}

}  // namespace

Index section_count(const RatMat& transition, const RatMat& inverse_transition, int m) {
  const Index d = transition.rows();
  const int bound = m + laurent_high(inverse_transition);
  if (bound < 0) return 0;
  const int hi = laurent_high(transition);
  // unknown (i, p): coefficient of t^p in f_i; constraints: t^q, q >= 1, in t^{-m} T f
  const Index unknowns = d * (bound + 1);
  const int qmax = hi - m + bound;
  if (qmax < 1) return unknowns;
  QMat sys = zeros<GaussianRational>(d * qmax, unknowns);
  for (Index r = 0; r < d; ++r)
    for (Index i = 0; i < d; ++i) {
      const RatFunc& e = transition(r, i);
      if (e.is_zero()) continue;
      for (int p = 0; p <= bound; ++p)
        for (int q = 1; q <= qmax; ++q) {
          const GaussianRational c = e.laurent_coeff(q + m - p);
          if (!c.is_zero()) sys(r * qmax + (q - 1), i * (bound + 1) + p) = c;
        }
    }
  return unknowns - rank(sys);
}

Index predicted_h0(const SplittingType& type, int m) {
  Index h = 0;
  for (int a : type) h += std::max(a + m + 1, 0);
  return h;
}

SplittingReport splitting_profile(const RatMat& transition) {
  const Index d = transition.rows();
  if (transition.cols() != d || d == 0) throw std::invalid_argument("splitting_type: transition must be square and nonempty");
  require_laurent(transition, "transition");
  const RatFunc det = determinant(transition);
  if (det.is_zero() || !det.is_laurent() || det.laurent_range()->first != det.laurent_range()->second)
    throw std::invalid_argument("splitting_type: transition is not invertible on t != 0 (determinant " + det.str() + ")");
  const RatMat inv = *inverse(transition);

  int lo = -laurent_high(inv) - 1, hi = laurent_high(transition);
  std::map<int, Index> h;
  auto h_at = [&](int m) {
    auto it = h.find(m);
    if (it == h.end()) it = h.emplace(m, section_count(transition, inv, m)).first;
    return it->second;
  };
  for (int guard = 0; h_at(lo) != 0; ++guard, --lo)
    if (guard > 64) throw std::logic_error("splitting_type: no vanishing twist found");
  for (int guard = 0; h_at(hi) - h_at(hi - 1) != d; ++guard, ++hi)
    if (guard > 64) throw std::logic_error("splitting_type: no fully generated twist found");

  SplittingReport rep;
  Index prev = 0;
  for (int m = lo + 1; m <= hi; ++m) {
    const Index delta = h_at(m) - h_at(m - 1);  // #{a_i >= -m}
    for (Index c = 0; c < delta - prev; ++c) rep.type.push_back(-m);
    prev = delta;
  }
  if (static_cast<Index>(rep.type.size()) != d) throw std::logic_error("splitting_type: inconsistent h0 profile");
  rep.h0 = h;
  for (const auto& [m, v] : h)
    if (predicted_h0(rep.type, m) != v) throw std::logic_error("splitting_type: h0 profile mismatch at m = " + std::to_string(m));
  return rep;
}

GenusReport genus_from_splitting(const SplittingType& type) {
  long zeros = 0, deg = 0;
  for (int a : type) {
    if (a > 0) throw std::invalid_argument("genus_from_splitting: positive summand O(" + std::to_string(a) + ")");
    if (a == 0) ++zeros;
    deg += a;
  }
  if (zeros != 1) throw std::invalid_argument("genus_from_splitting: need exactly one trivial summand, got " + std::to_string(zeros));
  const auto d = static_cast<Index>(type.size());
  return {d, -deg - static_cast<long>(d) + 1};
}

SplitMultiset multiset_from_splitting(const SplittingType& type) {
  SplitMultiset m;
  for (int a : type) {
    if (a > 0) throw std::invalid_argument("multiset_from_splitting: positive summand");
    if (a < 0) ++m[-a];
  }
  return m;
}

ObstructionReport cohomological_obstruction(const SplitMultiset& m) {
  for (const auto& [i, mi] : m)
    if (i < 1 || mi < 0) throw std::invalid_argument("cohomological_obstruction: need i >= 1 and m_i >= 0");
  ObstructionReport r;
  for (const auto& [i, mi] : m) {
    for (const auto& [j, mj] : m) {
      if (j >= i + 2) r.a += (j - i - 1) * mi * mj;
      if (j >= i) r.b += (j - i + 1) * mi * mj;
      if (j >= i + 1) r.c += (j - i) * mi * mj;
    }
    if (i >= 2) r.a += (i - 1) * mi;
    r.c += i * mi;
    r.closed_form += (i + 1) * mi - mi * mi;
  }
  r.obstruction = 2 * r.c - r.a - r.b;
  r.stable_possible = r.obstruction <= 0;
  return r;
}

MatPolyModel canonical_model(int r, const std::vector<std::vector<std::vector<UniPoly>>>& a,
                             const std::vector<std::vector<UniPoly>>& b) {
  const int n = r - 1;
  if (r < 2 || static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("canonical_model: coefficient arrays must be (r-1) x (r-1)");
  MatPolyModel model;
  model.d = r;
  model.r = r;
  model.k.assign(static_cast<std::size_t>(r), 1);
  model.k[0] = 0;
  for (int l = 0; l < n; ++l) {
    PolyMat m = zeros<UniPoly>(r, r);
    m(l + 1, 0) = UniPoly(1);
    for (int j = 0; j < n; ++j) {
      const auto& alj = a[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
      if (static_cast<int>(alj.size()) != n) throw std::invalid_argument("canonical_model: a[l][j] must have r-1 entries");
      m(0, j + 1) = b[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k) m(k + 1, j + 1) = alj[static_cast<std::size_t>(k)];
    }
    model.mats.push_back(std::move(m));
  }
  return model;
}

MatPolyModel rational_normal_model(int r, const std::vector<int>& exponents) {
  const int n = r - 1;
  std::vector<int> sorted = exponents;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(static_cast<std::size_t>(n));
  std::iota(expect.begin(), expect.end(), 1);
  if (sorted != expect) throw std::invalid_argument("rational_normal_model: exponents must be a permutation of 1..r-1");
  auto index_of = [&](int e) {
    return static_cast<int>(std::find(exponents.begin(), exponents.end(), e) - exponents.begin());
  };
  std::vector<std::vector<std::vector<UniPoly>>> a(
      static_cast<std::size_t>(n), std::vector<std::vector<UniPoly>>(static_cast<std::size_t>(n), std::vector<UniPoly>(static_cast<std::size_t>(n))));
  std::vector<std::vector<UniPoly>> b(static_cast<std::size_t>(n), std::vector<UniPoly>(static_cast<std::size_t>(n)));
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) {
      const int e = exponents[static_cast<std::size_t>(l)] + exponents[static_cast<std::size_t>(j)];
      // w^e with w^r = t
      if (e < r) a[l][j][index_of(e)] = UniPoly(1);
      else if (e == r) b[l][j] = UniPoly::t();
      else a[l][j][index_of(e - r)] = UniPoly::t();
    }
  return canonical_model(r, a, b);
}

}  // namespace commcurve
