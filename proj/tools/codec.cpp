#include "codec.hpp"

namespace commcurve::cli {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t k) { return path + "/" + std::to_string(k); }

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array");
  return j;
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(path, e.what());
  }
}

template <class S, class Parse>
Mat<S> matrix_from_json(const Json& j, const std::string& path, Parse parse) {
  require_array(j, path);
  const Index rows = static_cast<Index>(j.size());
  Index cols = -1;
  for (std::size_t i = 0; i < j.size(); ++i) {
    require_array(j[i], child(path, i));
    if (cols < 0) cols = static_cast<Index>(j[i].size());
    if (static_cast<Index>(j[i].size()) != cols) throw InputError(child(path, i), "ragged matrix row");
  }
  Mat<S> m(rows, std::max<Index>(cols, 0));
  for (std::size_t i = 0; i < j.size(); ++i)
    for (std::size_t k = 0; k < j[i].size(); ++k)
      m(static_cast<Index>(i), static_cast<Index>(k)) = parse(j[i][k], child(child(path, i), k));
  return m;
}

template <class S>
Json matrix_json(const Mat<S>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Json multipoly_json(const MultiPoly<F>& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json{{"exps", e}, {"coeff", to_json(c)}});
  return out;
}

template <class F, class Parse>
MultiPoly<F> multipoly_parse(const Json& j, int nvars, const std::string& path, Parse parse) {
  require_array(j, path);
  MultiPoly<F> p(nvars);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = child(path, k);
    const Json& e = field(j[k], "exps", at);
    require_array(e, child(at, "exps"));
    if (static_cast<int>(e.size()) != nvars)
      throw InputError(child(at, "exps"), "expected " + std::to_string(nvars) + " exponents");
    Exponents ex;
    for (std::size_t v = 0; v < e.size(); ++v) {
      const long x = integer_from_json(e[v], child(child(at, "exps"), v));
      if (x < 0) throw InputError(child(child(at, "exps"), v), "negative exponent");
      ex.push_back(static_cast<int>(x));
    }
    p.add_term(ex, parse(field(j[k], "coeff", at), child(at, "coeff")));
  }
  return p;
}

QMat square_qmat(const Json& j, Index n, const std::string& path) {
  QMat m = qmat_from_json(j, path);
  if (m.rows() != n || m.cols() != n)
    throw InputError(path, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  return m;
}

}  // namespace

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw InputError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(child(path, key), "missing field");
  return *it;
}

long integer_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path, "expected an integer");
  return j.get<long>();
}

Json to_json(const GaussianRational& z) {
  return Json{{"re", rational_string(z.re())}, {"im", rational_string(z.im())}};
}

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }
Json to_json(const QMat& m) { return matrix_json(m); }
Json to_json(const PolyMat& m) { return matrix_json(m); }
Json to_json(const MultiPoly<GaussianRational>& p) { return multipoly_json(p); }
Json to_json(const MultiPoly<RatFunc>& p) { return multipoly_json(p); }

Json to_json(const CommPair& p) { return Json{{"n", p.A.rows()}, {"A", to_json(p.A)}, {"B", to_json(p.B)}}; }

Json to_json(const CurveIdeal& ci) {
  Json gens = Json::array();
  for (const auto& g : ci.gens) gens.push_back(to_json(g));
  return Json{{"r", ci.r}, {"gens", gens}};
}

Json to_json(const MatPolyModel& m) {
  Json mats = Json::array();
  for (const auto& a : m.mats) mats.push_back(to_json(a));
  return Json{{"d", m.d}, {"r", m.r}, {"k", m.k}, {"mats", mats}};
}

Json to_json(const MPoint& p) {
  return Json{{"d", p.d}, {"X0", to_json(p.X0)}, {"X1", to_json(p.X1)}, {"Y0", to_json(p.Y0)}, {"Y1", to_json(p.Y1)}};
}

Json to_json(const GroupElem& g) {
  Json u = Json::array();
  for (Index k = 0; k < g.u0.size(); ++k) u.push_back(to_json(UniPoly{g.u0(k), g.u1(k)}));
  return Json{{"g0", to_json(g.g0)}, {"u", u}};
}

Json to_json(const TangentQuad& v) {
  return Json{{"X0", to_json(v.X0)}, {"X1", to_json(v.X1)}, {"Y0", to_json(v.Y0)}, {"Y1", to_json(v.Y1)}};
}

Json to_json(const SignatureReport& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

Json to_json(const ObstructionReport& o) {
  return Json{{"a", o.a}, {"b", o.b}, {"c", o.c}, {"obstruction", o.obstruction}, {"stable_possible", o.stable_possible}};
}

Json to_json(const MomentValue& m) {
  const auto component = [](const MomentComponent& c) {
    Json v = Json::array();
    for (const auto& p : c.vector) v.push_back(to_json(p));
    return Json{{"matrix", to_json(c.matrix)}, {"vector", v}};
  };
  return Json{{"mu11", component(m.mu11)}, {"mu21", component(m.mu21)}, {"mu12", component(m.mu12)}};
}

Json to_json(const Check& c) {
  Json j{{"check", c.name}, {"pass", c.pass}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(to_json(c));
  return out;
}

GaussianRational gaussian_from_json(const Json& j, const std::string& path) {
  if (j.is_object()) {
    const Rational re = j.contains("re") ? rational_from_json(j["re"], child(path, "re")) : Rational(0);
    const Rational im = j.contains("im") ? rational_from_json(j["im"], child(path, "im")) : Rational(0);
    for (const auto& [key, value] : j.items())
      if (key != "re" && key != "im") throw InputError(child(path, key), "unexpected field");
    return {re, im};
  }
  return GaussianRational(rational_from_json(j, path));
}

UniPoly unipoly_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<GaussianRational> c;
  for (std::size_t k = 0; k < j.size(); ++k) c.push_back(gaussian_from_json(j[k], child(path, k)));
  return UniPoly(std::move(c));
}

RatFunc ratfunc_from_json(const Json& j, const std::string& path) {
  if (j.is_array()) return RatFunc(unipoly_from_json(j, path));
  if (j.is_object() && j.contains("num")) {
    const UniPoly num = unipoly_from_json(j["num"], child(path, "num"));
    const UniPoly den = j.contains("den") ? unipoly_from_json(j["den"], child(path, "den")) : UniPoly(1);
    if (den.is_zero()) throw InputError(child(path, "den"), "zero denominator");
    return RatFunc(num, den);
  }
  return RatFunc(gaussian_from_json(j, path));
}

QMat qmat_from_json(const Json& j, const std::string& path) {
  return matrix_from_json<GaussianRational>(j, path, gaussian_from_json);
}

PolyMat polymat_from_json(const Json& j, const std::string& path) {
  return matrix_from_json<UniPoly>(j, path, [](const Json& e, const std::string& p) {
    return e.is_array() ? unipoly_from_json(e, p) : UniPoly(gaussian_from_json(e, p));
  });
}

MultiPoly<GaussianRational> multipoly_from_json(const Json& j, int nvars, const std::string& path) {
  return multipoly_parse<GaussianRational>(j, nvars, path, gaussian_from_json);
}

MultiPoly<RatFunc> ratmultipoly_from_json(const Json& j, int nvars, const std::string& path) {
  return multipoly_parse<RatFunc>(j, nvars, path, ratfunc_from_json);
}

CommPair commpair_from_json(const Json& j, const std::string& path) {
  const long n = integer_from_json(field(j, "n", path), child(path, "n"));
  if (n < 1) throw InputError(child(path, "n"), "n must be positive");
  return {square_qmat(field(j, "A", path), n, child(path, "A")), square_qmat(field(j, "B", path), n, child(path, "B"))};
}

CurveIdeal curve_ideal_from_json(const Json& j, const std::string& path) {
  CurveIdeal ci;
  const long r = integer_from_json(field(j, "r", path), child(path, "r"));
  if (r < 2) throw InputError(child(path, "r"), "r must be at least 2");
  ci.r = static_cast<int>(r);
  const Json& gens = require_array(field(j, "gens", path), child(path, "gens"));
  for (std::size_t k = 0; k < gens.size(); ++k)
    ci.gens.push_back(ratmultipoly_from_json(gens[k], ci.nvars(), child(child(path, "gens"), k)));
  if (ci.gens.empty()) throw InputError(child(path, "gens"), "empty generator list");
  return ci;
}

MatPolyModel model_from_json(const Json& j, const std::string& path) {
  MatPolyModel m;
  m.d = integer_from_json(field(j, "d", path), child(path, "d"));
  m.r = static_cast<int>(integer_from_json(field(j, "r", path), child(path, "r")));
  if (m.d < 1) throw InputError(child(path, "d"), "d must be positive");
  const Json& k = require_array(field(j, "k", path), child(path, "k"));
  for (std::size_t i = 0; i < k.size(); ++i)
    m.k.push_back(static_cast<int>(integer_from_json(k[i], child(child(path, "k"), i))));
  if (static_cast<Index>(m.k.size()) != m.d) throw InputError(child(path, "k"), "expected d weights");
  const Json& mats = require_array(field(j, "mats", path), child(path, "mats"));
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const std::string at = child(child(path, "mats"), i);
    PolyMat a = polymat_from_json(mats[i], at);
    if (a.rows() != m.d || a.cols() != m.d) throw InputError(at, "expected a d x d matrix");
    m.mats.push_back(std::move(a));
  }
  if (static_cast<int>(m.mats.size()) != m.r - 1) throw InputError(child(path, "mats"), "expected r - 1 matrices");
  return m;
}

MPoint mpoint_from_json(const Json& j, const std::string& path) {
  const long d = integer_from_json(field(j, "d", path), child(path, "d"));
  if (d < 3) throw InputError(child(path, "d"), "d must be at least 3");
  const auto block = [&](const char* name) { return square_qmat(field(j, name, path), d - 1, child(path, name)); };
  return {d, block("X0"), block("X1"), block("Y0"), block("Y1")};
}

GroupElem group_from_json(const Json& j, const std::string& path) {
  GroupElem g;
  g.g0 = qmat_from_json(field(j, "g0", path), child(path, "g0"));
  const Json& u = require_array(field(j, "u", path), child(path, "u"));
  g.u0.resize(static_cast<Index>(u.size()));
  g.u1.resize(static_cast<Index>(u.size()));
  for (std::size_t k = 0; k < u.size(); ++k) {
    const std::string at = child(child(path, "u"), k);
    const UniPoly p = unipoly_from_json(u[k], at);
    if (p.degree() > 1) throw InputError(at, "u entries must have degree at most 1");
    g.u0(static_cast<Index>(k)) = p.coeff(0);
    g.u1(static_cast<Index>(k)) = p.coeff(1);
  }
  try {
    validate(g);
  } catch (const std::invalid_argument& e) {
    throw InputError(path, e.what());
  }
  return g;
}

SplitMultiset multiset_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(path, "expected an object of multiplicities");
  SplitMultiset m;
  for (const auto& [key, value] : j.items()) {
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError(child(path, key), "keys must be integers");
    }
    const long c = integer_from_json(value, child(path, key));
    if (i < 1) throw InputError(child(path, key), "indices start at 1");
    if (c < 0) throw InputError(child(path, key), "negative multiplicity");
    m[i] = c;
  }
  return m;
}

}  // namespace commcurve::cli
