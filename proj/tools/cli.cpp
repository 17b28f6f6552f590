#include "cli.hpp"

#include "commcurve/fixtures.hpp"
#include "commcurve/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <random>

namespace commcurve::cli {

namespace {

/// Accumulates one report.
struct Builder {
  Json result = nullptr;
  std::vector<Check> checks;

  void check(const std::string& name, bool pass, const std::string& witness = "") {
    checks.push_back({name, pass, pass ? "" : witness});
  }
  void add(const std::vector<Check>& cs, const std::string& prefix = "") {
    for (const auto& c : cs) checks.push_back({prefix + c.name, c.pass, c.witness});
  }
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

/// Library precondition failures that are reported as failed verification.
struct Rejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<Json> load_input(const Options& o) {
  if (o.json) {
    try {
      return Json::parse(*o.json);
    } catch (const Json::parse_error& e) {
      throw InputError("", std::string("invalid JSON: ") + e.what());
    }
  }
  if (o.input) {
    std::ifstream in(*o.input);
    if (!in) throw InputError("", "cannot read " + *o.input);
    try {
      return Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InputError("", std::string("invalid JSON: ") + e.what());
    }
  }
  if (o.fixture) return fixture_document(*o.fixture);
  return std::nullopt;
}

Json require_input(const Options& o) {
  auto j = load_input(o);
  if (!j) throw InputError("", "this command needs --input, --json or --fixture");
  return *j;
}

Json bad_t_json(const Report& r) {
  Json bad = Json::array();
  for (const auto& t : r.bad_t) bad.push_back(to_json(t));
  return Json{{"bad_t", bad}, {"bad_at_infinity", r.bad_at_infinity}};
}

bool has_polynomial_entries(const Json& m) {
  if (!m.is_array()) return false;
  for (const auto& row : m)
    if (row.is_array())
      for (const auto& e : row)
        if (e.is_array()) return true;
  return false;
}

// ---- commands ----

void points2mat(const Options& o, Builder& b) {
  const Json in = require_input(o);
  const Json& pts = field(in, "points", "");
  if (!pts.is_array() || pts.empty()) throw InputError("/points", "expected a non-empty array of points");
  std::vector<PlanePoint> points;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const std::string at = "/points/" + std::to_string(k);
    if (!pts[k].is_array() || pts[k].size() != 2) throw InputError(at, "expected [x, y]");
    points.emplace_back(gaussian_from_json(pts[k][0], at + "/0"), gaussian_from_json(pts[k][1], at + "/1"));
  }
  bool normalize = true;
  if (in.contains("normalize")) {
    if (!in["normalize"].is_boolean()) throw InputError("/normalize", "expected a boolean");
    normalize = in["normalize"].get<bool>();
  }
  CommPair pair;
  try {
    pair = mult_matrices_from_points(points, normalize);
  } catch (const std::invalid_argument& e) {
    throw InputError("/points", e.what());
  }
  b.result = to_json(pair);
  const Index n = pair.A.rows();
  const bool commute = is_zero_matrix(commutator(pair.A, pair.B));
  b.check("commute", commute, "[A,B] != 0");
  if (commute) b.check("algebra_dim", algebra_dim(pair) == n, "algebra dimension below n");
  if (normalize) b.check("e1_cyclic", e1_cyclic(pair.A, pair.B), "e1 is not cyclic");
  auto expected = points;
  std::vector<PlanePoint> got;
  for (const auto& pm : recover_points(pair))
    for (Index k = 0; k < pm.multiplicity; ++k) got.push_back(pm.point);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  b.check("points_recovered", got == expected, "joint eigenvalues differ from the input points");
}

void ideal2mat(const Options& o, Builder& b) {
  const Json in = require_input(o);
  int nvars = 2;
  if (in.contains("nvars")) nvars = static_cast<int>(integer_from_json(in["nvars"], "/nvars"));
  if (nvars < 1) throw InputError("/nvars", "nvars must be positive");
  const Json& gj = field(in, "gens", "");
  if (!gj.is_array() || gj.empty()) throw InputError("/gens", "expected a non-empty array");
  std::vector<MultiPoly<GaussianRational>> gens;
  for (std::size_t k = 0; k < gj.size(); ++k) gens.push_back(multipoly_from_json(gj[k], nvars, "/gens/" + std::to_string(k)));
  std::vector<QMat> mats;
  try {
    mats = mult_matrices_from_ideal(gens);
  } catch (const QuotientError& e) {
    b.check("zero_dimensional", false, e.what());
    return;
  }
  b.check("zero_dimensional", true);
  Json mj = Json::array();
  for (const auto& m : mats) mj.push_back(to_json(m));
  const Index n = mats.empty() ? 0 : mats[0].rows();
  b.result = Json{{"dim", n}, {"mats", mj}};
  bool commute = true;
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!is_zero_matrix(commutator(mats[i], mats[j]))) commute = false;
  b.check("commute", commute, "multiplication matrices do not commute");
  if (n > 0) {
    std::vector<QMat> ops(mats.begin(), mats.end());
    b.check("algebra_dim", closure_dimension(ops, QMat(identity<GaussianRational>(n).col(0))) == n,
            "1 does not generate the quotient");
  }
}

void verify_polynomial_pair(const Json& in, Builder& b) {
  const long n = integer_from_json(field(in, "n", ""), "/n");
  MatPolyModel m;
  m.d = n;
  m.r = 3;
  for (const char* name : {"A", "B"}) {
    PolyMat a = polymat_from_json(field(in, name, ""), std::string("/") + name);
    if (a.rows() != n || a.cols() != n) throw InputError(std::string("/") + name, "expected an n x n matrix");
    m.mats.push_back(std::move(a));
  }
  const Json& k = field(in, "k", "");
  if (!k.is_array() || static_cast<long>(k.size()) != n) throw InputError("/k", "expected n weights");
  for (std::size_t i = 0; i < k.size(); ++i) m.k.push_back(static_cast<int>(integer_from_json(k[i], "/k/" + std::to_string(i))));
  const Report r = verify_model(m);
  b.add(r.checks);
  b.result = bad_t_json(r);
  b.result["polynomial"] = true;
}

void verify_pair(const Options& o, Builder& b) {
  const Json in = require_input(o);
  if (has_polynomial_entries(field(in, "A", "")) || has_polynomial_entries(field(in, "B", "")))
    return verify_polynomial_pair(in, b);
  const CommPair p = commpair_from_json(in);
  const Index n = p.A.rows();
  const bool commute = is_zero_matrix(commutator(p.A, p.B));
  b.check("commute", commute, "[A,B] != 0");
  Json result{{"n", n}, {"polynomial", false}};
  if (commute) {
    const Index ad = algebra_dim(p), cd = centralizer_dim(p);
    const auto v = cyclic_vector(p);
    result["algebra_dim"] = ad;
    result["centralizer_dim"] = cd;
    result["cyclic_vector"] = v ? to_json(QMat(*v)) : Json(nullptr);
    result["e1_cyclic"] = e1_cyclic(p.A, p.B);
    result["line_test"] = line_test(p);
    b.check("algebra_dim", ad == n, "algebra dimension " + std::to_string(ad));
    b.check("centralizer_dim", cd == n, "centralizer dimension " + std::to_string(cd));
    b.check("cyclic_vector", v.has_value(), "no cyclic vector");
    b.check("consistency", (ad == n) == (cd == n) && (ad == n) == v.has_value(),
            "algebra, centralizer and cyclic-vector tests disagree");
  }
  b.result = result;
}

void curve2mat(const Options& o, Builder& b) {
  const CurveIdeal ci = curve_ideal_from_json(require_input(o));
  FiberAlgebra fa;
  try {
    fa = fiber_algebra(ci);
  } catch (const std::exception& e) {
    b.check("fiber_algebra", false, e.what());
    return;
  }
  b.check("fiber_algebra", true);
  Json basis = Json::array();
  for (const auto& e : fa.t_chart.algebra.basis) basis.push_back(e);
  b.result = Json{{"basis", basis},
                  {"splitting", fa.splitting ? Json(*fa.splitting) : Json(nullptr)},
                  {"model", fa.model ? to_json(*fa.model) : Json(nullptr)},
                  {"notes", fa.notes}};
  b.check("model_built", fa.model.has_value(), fa.notes.empty() ? "no model" : fa.notes.front());
  if (fa.model) b.add(verify_model(*fa.model).checks, "model.");
}

void verify_model_cmd(const Options& o, Builder& b) {
  const MatPolyModel m = model_from_json(require_input(o));
  const Report r = verify_model(m);
  b.add(r.checks);
  b.result = bad_t_json(r);
}

void splitting_cmd(const Options& o, Builder& b) {
  const CurveIdeal ci = curve_ideal_from_json(require_input(o));
  FiberAlgebra fa;
  try {
    fa = fiber_algebra(ci);
  } catch (const std::exception& e) {
    b.check("fiber_algebra", false, e.what());
    return;
  }
  if (!fa.transition) {
    b.check("transition", false, fa.notes.empty() ? "no chart at infinity" : fa.notes.front());
    return;
  }
  const SplittingReport sr = splitting_profile(*fa.transition);
  Json h0 = Json::object();
  bool profile = true;
  for (const auto& [m, h] : sr.h0) {
    h0[std::to_string(m)] = h;
    if (h != predicted_h0(sr.type, m)) profile = false;
  }
  b.check("h0_profile", profile, "h0 differs from the splitting prediction");
  b.result = Json{{"type", sr.type}, {"h0", h0}};
  try {
    const GenusReport g = genus_from_splitting(sr.type);
    const SplitMultiset ms = multiset_from_splitting(sr.type);
    Json mj = Json::object();
    for (const auto& [i, c] : ms) mj[std::to_string(i)] = c;
    const ObstructionReport ob = cohomological_obstruction(ms);
    b.result["genus"] = Json{{"d", g.d}, {"g", g.g}};
    b.result["multiset"] = mj;
    b.result["obstruction"] = to_json(ob);
    b.check("genus", true);
  } catch (const std::invalid_argument& e) {
    b.check("genus", false, e.what());
  }
}

void obstruction_cmd(const Options& o, Builder& b) {
  Json in;
  if (o.m) {
    try {
      in = Json::parse(*o.m);
    } catch (const Json::parse_error& e) {
      throw InputError("", std::string("invalid JSON in --m: ") + e.what());
    }
  } else {
    in = require_input(o);
  }
  const ObstructionReport r = cohomological_obstruction(multiset_from_json(in));
  b.result = to_json(r);
  b.check("closed_form", r.obstruction == r.closed_form,
          "2c - a - b = " + std::to_string(r.obstruction) + " but the closed form gives " + std::to_string(r.closed_form));
}

MPoint point_input(const Options& o, Builder& b) {
  if (auto j = load_input(o)) return mpoint_from_json(*j);
  if (!o.d) throw InputError("", "this command needs an MPoint input or --d to sample one");
  std::mt19937_64 rng(o.seed);
  const auto p = sample_moment_zero(*o.d, rng);
  if (!p) throw Rejected("no stable moment-zero point found for d = " + std::to_string(*o.d));
  b.result = Json{{"point", to_json(*p)}};
  return *p;
}

Json& result_object(Builder& b) {
  if (b.result.is_null()) b.result = Json::object();
  return b.result;
}

void moment_cmd(const Options& o, Builder& b) {
  const MPoint p = point_input(o, b);
  validate(p);
  const MomentValue m = moment(p);
  const LemmaConditions l = lemma_conditions(p);
  Json& r = result_object(b);
  r["moment"] = to_json(m);
  r["zero"] = m.is_zero();
  r["lemma"] = Json{{"vector_condition", l.vector_condition}, {"commutator_rows", l.commutator_rows}};
  b.check("lemma_equivalence", m.is_zero() == l.hold(), "moment and fiberwise conditions disagree");
}

void md_check_cmd(const Options& o, Builder& b) {
  const MPoint p = point_input(o, b);
  const Report r = md_check(p);
  b.add(r.checks);
  Json& res = result_object(b);
  const Json bad = bad_t_json(r);
  for (const auto& [k, v] : bad.items()) res[k] = v;
}

void classify_cmd(const Options& o, Builder& b) {
  const MPoint p = point_input(o, b);
  validate(p);
  if (!moment(p).is_zero()) {
    b.check("moment_zero", false, "moment does not vanish");
    return;
  }
  b.check("moment_zero", true);
  const PointClass c = classify_point(p);
  Json& r = result_object(b);
  r["smooth"] = c.smooth;
  r["nondegenerate"] = c.nondegenerate;
  r["radical_equals_l"] = c.radical_equals_l;
  r["dims"] = Json{{"g0", c.dim_g0},          {"h", c.dim_h},
                   {"l", c.dim_l},            {"field_span", c.analysis.dim_s},
                   {"radical", c.dim_radical}, {"quaternion_h", c.dim_quaternion_h},
                   {"h_radical", c.dim_h_radical}};
  b.check("translations_in_radical", c.analysis.radical.contains(Subspace::span(p.n(), [&] {
    std::vector<TangentQuad> fl;
    const auto basis = lie_basis(p.d);
    for (std::size_t k = static_cast<std::size_t>(lie_h_count(p.d)); k < basis.size(); ++k)
      fl.push_back(fundamental_field(basis[k], p));
    return fl;
  }())), "a translation field is not in the radical");
}

void signature_cmd(const Options& o, Builder& b) {
  long d = 0;
  if (o.d) {
    d = *o.d;
  } else {
    const Json in = require_input(o);
    d = integer_from_json(field(in, "d", ""), "/d");
  }
  if (d < 3) throw InputError(o.d ? "" : "/d", "d must be at least 3");
  if (d % 2 == 0) {
    b.check("odd_degree", false, "the real locus is empty for even d");
    return;
  }
  const SignatureReport s = real_signature(d);
  b.result = to_json(s);
  const long p = 2 * (d - 1) * (d - 1) + 2 * (d - 3), q = 2 * (d - 1) * (d - 1) - 2 * (d - 1);
  b.check("odd_degree", true);
  b.check("formula", s.positive == p && s.negative == q,
          "expected (" + std::to_string(p) + ", " + std::to_string(q) + ")");
  b.check("nondegenerate", s.zero == 0, std::to_string(s.zero) + " null directions");
}

void twisted_cubic_cmd(const Options& o, Builder& b) {
  CubicParams a;
  if (auto in = load_input(o)) {
    const Json& aj = field(*in, "a", "");
    if (!aj.is_array() || aj.size() != 6) throw InputError("/a", "expected six linear polynomials");
    for (std::size_t k = 0; k < 6; ++k) {
      a[k] = unipoly_from_json(aj[k], "/a/" + std::to_string(k));
      if (a[k].degree() > 1) throw InputError("/a/" + std::to_string(k), "expected degree at most 1");
    }
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long> c(-3, 3);
    for (auto& f : a) f = UniPoly{GaussianRational(c(rng)), GaussianRational(c(rng))};
  }
  const TwistedCubic m = twisted_cubic_model(a);
  Json aj = Json::array();
  for (const auto& f : a) aj.push_back(to_json(f));
  const SignatureReport s = inertia(twisted_cubic_gram());
  b.result = Json{{"a", aj}, {"A", to_json(m.A)}, {"B", to_json(m.B)}, {"signature", to_json(s)}};
  b.check("commute", is_zero_matrix(PolyMat(m.A * m.B - m.B * m.A)), "[A,B] != 0");
  b.check("first_columns", m.A.col(0) == identity<UniPoly>(3).col(1) && m.B.col(0) == identity<UniPoly>(3).col(2),
          "first columns are not e2, e3");
  b.add(md_check(twisted_cubic_point(a)).checks, "point.");
  b.check("real_signature", s == SignatureReport{8, 4, 0}, "signature differs from (8, 4, 0)");
}

void fixtures_cmd(const Options&, Builder& b) {
  Json summary = Json::object();
  const auto model_entry = [&](const std::string& name, const MatPolyModel& m) {
    const Report r = verify_model(m);
    b.add(r.checks, name + ".");
    summary[name] = Json{{"d", m.d}, {"k", m.k}, {"pass", r.pass}};
  };
  model_entry("quartic", fixtures::quartic_model());
  model_entry("twisted_cubic", fixtures::twisted_cubic_model());
  model_entry("canonical_r4", rational_normal_model(4, {3, 2, 1}));

  const FiberAlgebra quartic = fiber_algebra(fixtures::quartic_ideal());
  b.check("quartic.ideal_model", quartic.model && quartic.model->mats == fixtures::quartic_model().mats,
          "model from the ideal differs from the displayed matrices");

  const FiberAlgebra qi = fiber_algebra(fixtures::quadric_intersection_ideal());
  if (qi.transition) {
    const SplittingType type = splitting_type(*qi.transition);
    const GenusReport g = genus_from_splitting(type);
    const ObstructionReport ob = cohomological_obstruction(multiset_from_splitting(type));
    summary["quadric_intersection"] = Json{{"splitting", type}, {"genus", g.g}, {"obstruction", to_json(ob)}};
    b.check("quadric_intersection.splitting", type == SplittingType{0, -1, -1, -2}, "unexpected splitting type");
    b.check("quadric_intersection.genus", g.g == 1, "genus " + std::to_string(g.g));
    b.check("quadric_intersection.obstruction", ob.a == 1 && ob.b == 9 && ob.c == 6 && ob.obstruction == 2,
            "unexpected (a, b, c)");
  } else {
    b.check("quadric_intersection.splitting", false, "no chart at infinity");
  }

  const SignatureReport tc = inertia(twisted_cubic_gram());
  b.check("twisted_cubic.signature", tc == SignatureReport{8, 4, 0}, "twisted cubic signature differs from (8, 4, 0)");
  summary["twisted_cubic"]["signature"] = to_json(tc);
  for (long d : {3L, 5L}) {
    const SignatureReport s = real_signature(d);
    const std::string key = "signature_d" + std::to_string(d);
    summary[key] = to_json(s);
    b.check(key, s.positive == 2 * (d - 1) * (d - 1) + 2 * (d - 3) &&
                     s.negative == 2 * (d - 1) * (d - 1) - 2 * (d - 1) && s.zero == 0,
            "signature differs from the formula");
  }
  b.result = summary;
}

using Handler = std::function<void(const Options&, Builder&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"points2mat", points2mat},     {"ideal2mat", ideal2mat},       {"verify-pair", verify_pair},
      {"curve2mat", curve2mat},       {"verify-model", verify_model_cmd}, {"splitting", splitting_cmd},
      {"obstruction", obstruction_cmd}, {"moment", moment_cmd},       {"md-check", md_check_cmd},
      {"classify", classify_cmd},     {"signature", signature_cmd},   {"twisted-cubic", twisted_cubic_cmd},
      {"fixtures", fixtures_cmd}};
  return h;
}

Json pair_document(const MatPolyModel& m, const CurveIdeal& ci) {
  Json doc = to_json(m);
  doc["n"] = m.d;
  doc["A"] = to_json(m.mats.at(0));
  doc["B"] = to_json(m.mats.at(1));
  doc["gens"] = to_json(ci)["gens"];
  return doc;
}

Json args_json(const Options& o) {
  Json a = Json::object();
  if (o.input) a["input"] = *o.input;
  if (o.json) a["json"] = *o.json;
  if (o.fixture) a["fixture"] = *o.fixture;
  if (o.d) a["d"] = *o.d;
  if (o.m) a["m"] = *o.m;
  a["seed"] = o.seed;
  return a;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"points2mat", "ideal2mat",   "verify-pair", "curve2mat",  "verify-model",
                                              "splitting",  "obstruction", "moment",      "md-check",   "classify",
                                              "signature",  "twisted-cubic", "fixtures"};
  return names;
}

std::vector<std::string> fixture_names() {
  return {"quartic", "twisted-cubic", "canonical-r4", "quadric-intersection", "cubic-plus-line", "two-lines",
          "four-points", "twisted-cubic-point"};
}

Json fixture_document(const std::string& name) {
  if (name == "quartic") return pair_document(fixtures::quartic_model(), fixtures::quartic_ideal());
  if (name == "twisted-cubic") return pair_document(fixtures::twisted_cubic_model(), fixtures::twisted_cubic_ideal());
  if (name == "canonical-r4") return to_json(rational_normal_model(4, {3, 2, 1}));
  if (name == "quadric-intersection") return to_json(fixtures::quadric_intersection_ideal());
  if (name == "cubic-plus-line") return to_json(fixtures::cubic_plus_line_ideal());
  if (name == "two-lines") return to_json(fixtures::two_lines_ideal());
  if (name == "four-points") return Json{{"points", Json::array({{0, 0}, {1, 0}, {0, 1}, {1, 1}})}};
  if (name == "twisted-cubic-point") {
    // a22 = 1, a31 = t, a32 = 2 - t with the real-form partners
    CubicParams a{UniPoly{1, 2}, UniPoly{-1, 0}, UniPoly{0, -1}, UniPoly{1}, UniPoly{0, 1}, UniPoly{2, -1}};
    return to_json(twisted_cubic_point(a));
  }
  throw InputError("", "unknown fixture '" + name + "'");
}

Outcome run(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Json report{{"schema", kSchema}, {"command", o.command}, {"args", args_json(o)}};
  Outcome out;
  const auto h = handlers().find(o.command);
  if (h == handlers().end()) {
    report["error"] = Json{{"path", ""}, {"message", "unknown command '" + o.command + "'"}};
    report["pass"] = false;
    return {report, 2};
  }
  Builder b;
  try {
    h->second(o, b);
    out.exit_code = b.pass() ? 0 : 1;
  } catch (const InputError& e) {
    report["error"] = Json{{"path", e.path()}, {"message", e.what()}};
    report["pass"] = false;
    return {report, 2};
  } catch (const std::exception& e) {
    b.check("precondition", false, e.what());
    out.exit_code = 1;
  }
  report["result"] = b.result;
  report["checks"] = checks_json(b.checks);
  report["pass"] = out.exit_code == 0;
  if (o.timing)
    report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.report = std::move(report);
  return out;
}

}  // namespace commcurve::cli
