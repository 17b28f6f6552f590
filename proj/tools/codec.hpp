#pragma once

// JSON encodings. Rationals are canonical GMP strings; matrices are row-major
// nested arrays; polynomials list coefficients from low to high degree.

#include "commcurve/curve_models.hpp"
#include "commcurve/points_scheme.hpp"
#include "commcurve/rational_moduli.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace commcurve::cli {

using Json = nlohmann::ordered_json;

/// Malformed input; `path` is a JSON pointer to the offending value.
class InputError : public std::runtime_error {
public:
  InputError(std::string path, const std::string& message)
      : std::runtime_error(message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

Json to_json(const GaussianRational& z);
Json to_json(const UniPoly& p);
Json to_json(const RatFunc& f);
Json to_json(const QMat& m);
Json to_json(const PolyMat& m);
Json to_json(const MultiPoly<GaussianRational>& p);
Json to_json(const MultiPoly<RatFunc>& p);
Json to_json(const CommPair& p);
Json to_json(const CurveIdeal& ci);
Json to_json(const MatPolyModel& m);
Json to_json(const MPoint& p);
Json to_json(const GroupElem& g);
Json to_json(const TangentQuad& v);
Json to_json(const SignatureReport& s);
Json to_json(const ObstructionReport& o);
Json to_json(const MomentValue& m);
Json to_json(const Check& c);

/// {"check", "pass", "witness"}; the witness is omitted when empty.
Json checks_json(const std::vector<Check>& checks);

/// Parsers; `path` locates `j` inside the document for error messages.
GaussianRational gaussian_from_json(const Json& j, const std::string& path = "");
UniPoly unipoly_from_json(const Json& j, const std::string& path = "");
RatFunc ratfunc_from_json(const Json& j, const std::string& path = "");
QMat qmat_from_json(const Json& j, const std::string& path = "");
PolyMat polymat_from_json(const Json& j, const std::string& path = "");
MultiPoly<GaussianRational> multipoly_from_json(const Json& j, int nvars, const std::string& path = "");
MultiPoly<RatFunc> ratmultipoly_from_json(const Json& j, int nvars, const std::string& path = "");
CommPair commpair_from_json(const Json& j, const std::string& path = "");
CurveIdeal curve_ideal_from_json(const Json& j, const std::string& path = "");
MatPolyModel model_from_json(const Json& j, const std::string& path = "");
MPoint mpoint_from_json(const Json& j, const std::string& path = "");
GroupElem group_from_json(const Json& j, const std::string& path = "");
/// {"i": m_i, ...} with string keys.
SplitMultiset multiset_from_json(const Json& j, const std::string& path = "");

/// Field lookup that reports the path of a missing key.
const Json& field(const Json& j, const std::string& key, const std::string& path);
long integer_from_json(const Json& j, const std::string& path);

}  // namespace commcurve::cli
