#include "commcurve/rational_moduli.hpp"

#include "commcurve/polymat.hpp"

#include <sstream>

namespace commcurve {

namespace {

using DualQ = Dual<GaussianRational>;

std::string entry_name(const char* block, Index i, Index j) {
  std::ostringstream os;
  os << block << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

bool square(const QMat& m, Index n) { return m.rows() == n && m.cols() == n; }

QMat e_col_outer(Index n, Index col, const QRowVec& u) {
  QMat m = zeros<GaussianRational>(n, n);
  m.row(col) = u;
  return m;
}

PolyMat poly_line(const QMat& a0, const QMat& a1) {
  PolyMat m(a0.rows(), a0.cols());
  for (Index j = 0; j < a0.cols(); ++j)
    for (Index i = 0; i < a0.rows(); ++i) m(i, j) = UniPoly{a0(i, j), a1(i, j)};
  return m;
}

QMat last_rows(const QMat& m, Index count) { return m.bottomRows(count); }

}  // namespace

void validate(const MPoint& p) {
  if (p.d < 3) throw std::invalid_argument("MPoint: d must be at least 3");
  const Index n = p.d - 1;
  if (!square(p.X0, n) || !square(p.X1, n) || !square(p.Y0, n) || !square(p.Y1, n))
    throw std::invalid_argument("MPoint: blocks must be (d-1)x(d-1)");
}

void validate(const GroupElem& g) {
  const Index n = g.g0.rows();
  if (n < 2 || g.g0.cols() != n) throw std::invalid_argument("GroupElem: g0 must be square of size >= 2");
  if (g.u0.size() != n - 2 || g.u1.size() != n - 2) throw std::invalid_argument("GroupElem: u must have length d-3");
  if (g.g0.col(0) != unit_vector<GaussianRational>(n, 0) || g.g0.col(1) != unit_vector<GaussianRational>(n, 1))
    throw std::invalid_argument("GroupElem: first two columns of g0 must be e1, e2");
  if (!inverse(g.g0)) throw std::invalid_argument("GroupElem: g0 is singular");
}

void validate(const LieElem& r, Index d) {
  const Index n = d - 1;
  if (!square(r.h, n)) throw std::invalid_argument("LieElem: h must be (d-1)x(d-1)");
  if (r.u0.size() != d - 3 || r.u1.size() != d - 3) throw std::invalid_argument("LieElem: u must have length d-3");
  if (!is_zero_matrix(r.h.leftCols(2))) throw std::invalid_argument("LieElem: first two columns of h must vanish");
}

GroupElem compose(const GroupElem& g, const GroupElem& h) {
  const QRowVec uh0 = padded_row(g.u0) * h.g0, uh1 = padded_row(g.u1) * h.g0;
  const Index k = g.u0.size();
  return {g.g0 * h.g0, h.u0 + uh0.tail(k), h.u1 + uh1.tail(k)};
}

GroupElem inverse(const GroupElem& g) {
  const auto inv = inverse(g.g0);
  if (!inv) throw std::invalid_argument("GroupElem: g0 is singular");
  const Index k = g.u0.size();
  const QRowVec w0 = -(padded_row(g.u0) * *inv), w1 = -(padded_row(g.u1) * *inv);
  return {*inv, w0.tail(k), w1.tail(k)};
}

std::vector<LieElem> lie_basis(Index d) {
  const Index n = d - 1, k = d - 3;
  const QRowVec zero_u = QRowVec::Constant(k, GaussianRational(0));
  std::vector<LieElem> out;
  for (Index j = 2; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      QMat h = zeros<GaussianRational>(n, n);
      h(i, j) = 1;
      out.push_back({h, zero_u, zero_u});
    }
  for (int which = 0; which < 2; ++which)
    for (Index c = 0; c < k; ++c) {
      QRowVec u = zero_u;
      u(c) = 1;
      out.push_back({zeros<GaussianRational>(n, n), which == 0 ? u : zero_u, which == 0 ? zero_u : u});
    }
  return out;
}

TangentQuad fundamental_field(const LieElem& r, const MPoint& p) {
  const Index n = p.n();
  const QRowVec u0 = padded_row(r.u0), u1 = padded_row(r.u1);
  return {commutator(r.h, p.X0) - e_col_outer(n, 0, u0), commutator(r.h, p.X1) - e_col_outer(n, 0, u1),
          commutator(r.h, p.Y0) - e_col_outer(n, 1, u0), commutator(r.h, p.Y1) - e_col_outer(n, 1, u1)};
}

GroupElemT<DualQ> infinitesimal(const LieElem& r) {
  const Index n = r.h.rows();
  GroupElemT<DualQ> g;
  g.g0 = identity<DualQ>(n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) g.g0(i, j).eps = r.h(i, j);
  g.u0.resize(r.u0.size());
  g.u1.resize(r.u1.size());
  for (Index c = 0; c < r.u0.size(); ++c) {
    g.u0(c) = DualQ(GaussianRational(0), r.u0(c));
    g.u1(c) = DualQ(GaussianRational(0), r.u1(c));
  }
  return g;
}

bool MomentComponent::is_zero() const {
  if (!is_zero_matrix(matrix)) return false;
  for (const auto& v : vector)
    if (!v.is_zero()) return false;
  return true;
}

MomentValue moment(const MPoint& p) {
  validate(p);
  const Index n = p.n(), k = p.d - 3;
  const UniPoly t = UniPoly::t();
  const auto column = [&](const QVec& a0, const QVec& a1) {
    std::vector<UniPoly> v;
    for (Index i = 0; i < n; ++i) v.push_back(UniPoly(a0(i)) + UniPoly(a1(i)) * t);
    return v;
  };
  const QVec zero = QVec::Constant(n, GaussianRational(0));
  const QVec v0 = p.X0.col(1) - p.Y0.col(0), v1 = p.X1.col(1) - p.Y1.col(0);
  const GaussianRational half(Rational(1, 2));

  MomentValue m;
  m.mu21 = {last_rows(commutator(p.X0, p.Y0), k), column(v0, zero)};
  // (X1 + t X0) e2 - (Y1 + t Y0) e1
  m.mu11 = {half * last_rows(QMat(commutator(p.X0, p.Y1) + commutator(p.X1, p.Y0)), k),
            column(half * v1, half * v0)};
  // t (X1 e2 - Y1 e1)
  m.mu12 = {last_rows(commutator(p.X1, p.Y1), k), column(zero, v1)};
  return m;
}

LemmaConditions lemma_conditions(const MPoint& p) {
  validate(p);
  const PolyMat X = poly_line(p.X0, p.X1), Y = poly_line(p.Y0, p.Y1);
  LemmaConditions c;
  c.vector_condition = is_zero_matrix(PolyMat(X.col(1) - Y.col(0)));
  const PolyMat xy = X * Y - Y * X;
  c.commutator_rows = is_zero_matrix(PolyMat(xy.bottomRows(p.d - 3)));
  return c;
}

PolyMat stability_krylov(const MPoint& p) {
  validate(p);
  const Index n = p.n();
  const PolyMat X = poly_line(p.X0, p.X1), Y = poly_line(p.Y0, p.Y1);
  std::vector<Vec<UniPoly>> level{identity<UniPoly>(n).col(0), identity<UniPoly>(n).col(1)};
  std::vector<Vec<UniPoly>> all = level;
  for (Index len = 1; len <= p.d - 3; ++len) {
    std::vector<Vec<UniPoly>> next;
    for (const auto& v : level) {
      next.push_back(X * v);
      next.push_back(Y * v);
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  PolyMat k(n, static_cast<Index>(all.size()));
  for (std::size_t c = 0; c < all.size(); ++c) k.col(static_cast<Index>(c)) = all[c];
  return k;
}

Report md_check(const MPoint& p) {
  Report rep;
  try {
    validate(p);
    rep.checks.push_back({"shape", true, ""});
  } catch (const std::invalid_argument& e) {
    rep.checks.push_back({"shape", false, e.what()});
    rep.finish();
    return rep;
  }

  {
    std::string witness;
    const auto need = [&](const QMat& x, Index xi, Index xj, const QMat& y, Index yi, Index yj, const char* xn,
                          const char* yn) {
      if (x(xi, xj) != y(yi, yj) && witness.empty())
        witness = entry_name(xn, xi, xj) + " = " + x(xi, xj).str() + " != " + entry_name(yn, yi, yj) + " = " +
                  y(yi, yj).str();
    };
    need(p.X0, 0, 1, p.Y0, 0, 0, "X0", "Y0");
    need(p.X1, 0, 1, p.Y1, 0, 0, "X1", "Y1");
    need(p.X0, 1, 1, p.Y0, 1, 0, "X0", "Y0");
    need(p.X1, 1, 1, p.Y1, 1, 0, "X1", "Y1");
    rep.checks.push_back({"condition_ii", witness.empty(), witness});
  }

  const Index n = p.n();
  const PolyMat k = stability_krylov(p);
  const MinorGcd g = top_minor_gcd(k);
  if (g.generic_rank < n) {
    rep.checks.push_back({"stability", false, "generic Krylov rank " + std::to_string(g.generic_rank) + " < " +
                                                  std::to_string(n)});
  } else if (!g.gcd.is_constant()) {
    rep.bad_t = gaussian_rational_roots(g.gcd);
    rep.checks.push_back({"stability", false, "maximal minor gcd " + g.gcd.str()});
  } else {
    rep.checks.push_back({"stability", true, ""});
  }

  // s = 1/t chart: X1 + s X0, Y1 + s Y0 at s = 0
  const MPoint at_inf{p.d, p.X1, zeros<GaussianRational>(n, n), p.Y1, zeros<GaussianRational>(n, n)};
  const Index r_inf = rank(QMat(evaluate(stability_krylov(at_inf), GaussianRational(0))));
  rep.bad_at_infinity = r_inf < n;
  rep.checks.push_back({"stability_at_infinity", r_inf == n,
                        r_inf == n ? "" : "Krylov rank " + std::to_string(r_inf) + " at s = 0"});
  rep.finish();
  return rep;
}

PointClass classify_point(const MPoint& p) {
  if (!moment(p).is_zero()) throw std::invalid_argument("classify_point: moment does not vanish");
  const Index n = p.n(), nh = lie_h_count(p.d);
  const auto basis = lie_basis(p.d);
  std::vector<TangentQuad> fh, fl;
  for (std::size_t c = 0; c < basis.size(); ++c)
    (static_cast<Index>(c) < nh ? fh : fl).push_back(fundamental_field(basis[c], p));
  const Subspace h = Subspace::span(n, fh), l = Subspace::span(n, fl);

  PointClass pc;
  pc.analysis = subspace_analysis(h + l, l, h);
  pc.dim_g0 = nh;
  pc.dim_h = h.dim();
  pc.dim_l = l.dim();
  pc.dim_radical = pc.analysis.dim_radical;
  pc.dim_quaternion_h = *pc.analysis.dim_quaternion_h;
  pc.dim_h_radical = intersect(h, g_orthogonal(h)).dim();
  pc.smooth = pc.dim_quaternion_h == 3 * nh;
  pc.nondegenerate = pc.dim_h == nh && pc.dim_h_radical == 0;
  pc.radical_equals_l = pc.analysis.radical_equals_l;
  return pc;
}

Index stabilizer_dimension(const MPoint& p) {
  validate(p);
  const auto basis = lie_basis(p.d);
  const Index n = p.n();
  QMat m(4 * n * n, static_cast<Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) m.col(static_cast<Index>(c)) = flatten(fundamental_field(basis[c], p));
  return m.cols() - rank(m);
}

QMat tau(Index n) {
  if (n % 2 != 0) throw std::domain_error("tau: size must be even");
  QMat t = zeros<GaussianRational>(n, n);
  for (Index i = 0; i < n; i += 2) {
    t(i, i + 1) = -1;
    t(i + 1, i) = 1;
  }
  return t;
}

namespace {

void require_odd(Index d) {
  if (d % 2 == 0) throw std::domain_error("sigma: the real locus is empty for even d");
}

/// Swaps coordinates 2i-1 and 2i; a trailing odd coordinate is fixed.
QMat tau_prime(Index n) {
  QMat t = zeros<GaussianRational>(n, n);
  for (Index i = 0; i + 1 < n; i += 2) t(i, i + 1) = t(i + 1, i) = 1;
  if (n % 2 == 1) t(n - 1, n - 1) = 1;
  return t;
}

}  // namespace

MPoint sigma(const MPoint& p) {
  validate(p);
  require_odd(p.d);
  const QMat t = tau(p.n());
  const auto c = [&](const QMat& m) -> QMat { return t * conj(m) * t; };
  return {p.d, -c(p.Y1), c(p.Y0), c(p.X1), -c(p.X0)};
}

MPoint sigma_fixed_point(Index d, const QMat& X0, const QMat& X1) {
  require_odd(d);
  const QMat t = tau(d - 1);
  return {d, X0, X1, t * conj(X1) * t, -(t * conj(X0) * t)};
}

P3Point sigma_p3(const P3Point& z) { return {-conj(z[1]), conj(z[0]), -conj(z[3]), conj(z[2])}; }
P3Point sigma_prime_p3(const P3Point& z) { return {conj(z[1]), conj(z[0]), conj(z[3]), conj(z[2])}; }

MPoint sigma_prime(const MPoint& p) {
  validate(p);
  const QMat t = tau_prime(p.n());
  const auto c = [&](const QMat& m) -> QMat { return t * conj(m) * t; };
  return {p.d, c(p.Y1), c(p.Y0), c(p.X1), c(p.X0)};
}

std::vector<TangentQuad> real_tangent_basis(Index d) {
  if (d < 3) throw std::invalid_argument("real_signature: d must be at least 3");
  require_odd(d);
  const Index n = d - 1;
  std::vector<TangentQuad> raw;
  for (int block = 0; block < 2; ++block)
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i)
        for (const GaussianRational& c : {GaussianRational(1), GaussianRational::i()}) {
          QMat e = zeros<GaussianRational>(n, n);
          e(i, j) = c;
          const QMat z = zeros<GaussianRational>(n, n);
          raw.push_back(sigma_fixed_point(d, block == 0 ? e : z, block == 0 ? z : e).quad());
        }
  // condition (ii), split into real and imaginary parts
  QMat constraints(8, static_cast<Index>(raw.size()));
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const TangentQuad& v = raw[k];
    const GaussianRational c[4] = {v.X0(0, 1) - v.Y0(0, 0), v.X1(0, 1) - v.Y1(0, 0), v.X0(1, 1) - v.Y0(1, 0),
                                   v.X1(1, 1) - v.Y1(1, 0)};
    for (int r = 0; r < 4; ++r) {
      constraints(2 * r, static_cast<Index>(k)) = GaussianRational(c[r].re());
      constraints(2 * r + 1, static_cast<Index>(k)) = GaussianRational(c[r].im());
    }
  }
  std::vector<TangentQuad> out;
  for (const QVec& w : rank_kernel(constraints).kernel) {
    TangentQuad v = TangentQuad::zero(n);
    for (std::size_t k = 0; k < raw.size(); ++k)
      if (!w(static_cast<Index>(k)).is_zero()) v += w(static_cast<Index>(k)) * raw[k];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

QMat gram_of(const std::vector<TangentQuad>& vs) {
  const Index m = static_cast<Index>(vs.size());
  QMat g(m, m);
  for (Index a = 0; a < m; ++a)
    for (Index b = a; b < m; ++b) {
      const GaussianRational x = metric_g(vs[a], vs[b]);
      if (!x.is_real()) throw std::logic_error("gram: metric is not real on the real locus");
      g(a, b) = g(b, a) = x;
    }
  return g;
}

}  // namespace

QMat real_gram(Index d) { return gram_of(real_tangent_basis(d)); }

SignatureReport real_signature(Index d) { return inertia(real_gram(d)); }

TwistedCubic twisted_cubic_model(const CubicParams& a) {
  const UniPoly &a11 = a[0], &a12 = a[1], &a21 = a[2], &a22 = a[3], &a31 = a[4], &a32 = a[5];
  const UniPoly A1 = a21 * a32 - a22 * a31, A2 = a11 * a32 - a12 * a31, A3 = a11 * a22 - a12 * a21;
  TwistedCubic m{PolyMat(3, 3), PolyMat(3, 3)};
  m.A << UniPoly(0), -A3, -A2, UniPoly(1), a11 + a22, a32, UniPoly(0), -a12, a11;
  m.B << UniPoly(0), -A2, -A1, UniPoly(0), a32, -a31, UniPoly(1), a11, a21 + a32;
  return m;
}

MPoint twisted_cubic_point(const CubicParams& a) {
  const TwistedCubic m = twisted_cubic_model(a);
  const PolyMat X = m.A.bottomRightCorner(2, 2), Y = m.B.bottomRightCorner(2, 2);
  return {3, coefficient(X, 0), coefficient(X, 1), coefficient(Y, 0), coefficient(Y, 1)};
}

namespace {

/// T(p + q t) = -conj q + conj p t
UniPoly real_twist(const UniPoly& f) { return UniPoly{-conj(f.coeff(1)), conj(f.coeff(0))}; }

}  // namespace

std::vector<CubicParams> twisted_cubic_real_basis() {
  std::vector<CubicParams> out;
  // free parameters a22, a31, a32 at indices 3, 4, 5
  for (int slot : {3, 4, 5})
    for (int deg = 0; deg < 2; ++deg)
      for (const GaussianRational& c : {GaussianRational(1), GaussianRational::i()}) {
        CubicParams a{};
        a[static_cast<std::size_t>(slot)] = UniPoly::monomial(c, deg);
        a[0] = real_twist(a[5]);
        a[1] = real_twist(a[4]);
        a[2] = -real_twist(a[3]);
        out.push_back(a);
      }
  return out;
}

QMat twisted_cubic_gram() {
  std::vector<TangentQuad> vs;
  for (const auto& a : twisted_cubic_real_basis()) vs.push_back(twisted_cubic_point(a).quad());
  return gram_of(vs);
}

namespace {

/// All coefficients of the moment, condition (ii) included.
QVec moment_residual(const MPoint& p) {
  const MomentValue m = moment(p);
  std::vector<GaussianRational> out;
  for (const MomentComponent* c : {&m.mu21, &m.mu11, &m.mu12}) {
    for (Index j = 0; j < c->matrix.cols(); ++j)
      for (Index i = 0; i < c->matrix.rows(); ++i) out.push_back(c->matrix(i, j));
    for (const auto& v : c->vector)
      for (int k = 0; k <= 1; ++k) out.push_back(v.coeff(k));
  }
  out.push_back(p.X0(0, 1) - p.Y0(0, 0));
  out.push_back(p.X1(0, 1) - p.Y1(0, 0));
  out.push_back(p.X0(1, 1) - p.Y0(1, 0));
  out.push_back(p.X1(1, 1) - p.Y1(1, 0));
  QVec v(static_cast<Index>(out.size()));
  for (std::size_t i = 0; i < out.size(); ++i) v(static_cast<Index>(i)) = out[i];
  return v;
}

}  // namespace

std::optional<YSolutions> solve_moment_for_y(Index d, const QMat& X0, const QMat& X1) {
  const Index n = d - 1, m = n * n;
  const QMat z = zeros<GaussianRational>(n, n);
  const MPoint base{d, X0, X1, z, z};
  const QVec f0 = moment_residual(base);
  QMat lin(f0.size(), 2 * m);
  std::vector<TangentQuad> units;
  for (Index k = 0; k < 2 * m; ++k) {
    MPoint q = base;
    (k < m ? q.Y0 : q.Y1)(k % m % n, k % m / n) = 1;
    lin.col(k) = moment_residual(q) - f0;
    units.push_back({z, z, q.Y0, q.Y1});
  }
  const auto y = solve(lin, QVec(-f0));
  if (!y) return std::nullopt;
  const auto combine = [&](const QVec& w) {
    TangentQuad v = TangentQuad::zero(n);
    for (Index k = 0; k < w.size(); ++k)
      if (!w(k).is_zero()) v += w(k) * units[static_cast<std::size_t>(k)];
    return v;
  };
  YSolutions s{combine(*y), {}};
  for (const QVec& w : rank_kernel(lin).kernel) s.kernel.push_back(combine(w));
  return s;
}

std::optional<MPoint> sample_moment_zero(Index d, std::mt19937_64& rng, int attempts) {
  const Index n = d - 1;
  std::uniform_int_distribution<int> entry(-2, 2);
  const auto random_matrix = [&] {
    QMat m(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) m(i, j) = entry(rng);
    return m;
  };
  for (int a = 0; a < attempts; ++a) {
    const QMat X0 = random_matrix(), X1 = random_matrix();
    const auto sol = solve_moment_for_y(d, X0, X1);
    if (!sol) continue;
    TangentQuad y = sol->particular;
    for (const auto& k : sol->kernel) y += GaussianRational(entry(rng)) * k;
    MPoint p{d, X0, X1, y.Y0, y.Y1};
    if (md_check(p).pass) return p;
  }
  return std::nullopt;
}

}  // namespace commcurve
