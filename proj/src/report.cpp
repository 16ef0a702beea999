#include "qpascal/report.hpp"

#include <sstream>

namespace qpascal {

namespace {

Json raw_cyc(const CycElem& c) {
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(r.get_str());
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Json raw_poly(const CycPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(raw_cyc(c));
  return out;
}

}  // namespace

Json to_json(const FieldElem& x, bool raw) {
  if (!raw) return x.to_string();
  Json out{{"text", x.to_string()}};
  if (x.is_symbolic()) {
    const RatFunc f = x.as_ratfunc();
    out["numerator"] = raw_poly(f.numerator());
    out["denominator"] = raw_poly(f.denominator());
  } else {
    const Json r = raw_cyc(x.cyc());
    out["conductor"] = r["conductor"];
    out["coeffs"] = r["coeffs"];
  }
  return out;
}

Json to_json(const ExactVector& v, bool raw) {
  Json out = Json::array();
  for (const auto& x : v.entries()) out.push_back(to_json(x, raw));
  return out;
}

Json to_json(const ExactMatrix& m, bool raw) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i), raw));
  return out;
}

Json to_json(const CycPoly& p, bool raw) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(raw ? raw_cyc(c) : Json(c.to_string()));
  return Json{{"text", p.to_string()}, {"var", p.var()}, {"coefficients", coeffs}};
}

Json to_json(const RepParams& p, bool raw) {
  Json lambdas = Json::array();
  for (const auto& l : p.lambdas) lambdas.push_back(to_json(l, raw));
  return Json{{"n", p.n}, {"q", to_json(p.q, raw)}, {"lambdas", lambdas}, {"c", to_json(p.c, raw)}};
}

Json to_json(const BraidRep& rep, bool raw) {
  return Json{{"params", to_json(rep.params, raw)},
              {"sigma1", to_json(rep.sigma1, raw)},
              {"sigma2", to_json(rep.sigma2, raw)},
              {"braid_relation", braid_relation_holds(rep.sigma1, rep.sigma2)}};
}

Json to_json(const SubspacePattern& p) {
  Json planes = Json::array();
  for (const auto& pl : p.planes) {
    const char* part = pl.part == PlanePart::None ? "none" : pl.part == PlanePart::Full ? "full" : "line";
    planes.push_back(Json{{"coords", {pl.a, pl.b}}, {"part", part}});
  }
  return Json{{"label", p.label()}, {"dimension", p.dimension()}, {"fixed", p.fixed}, {"planes", planes}};
}

Json to_json(const Verdict& v, bool raw) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) {
    Json j{{"pattern", to_json(w.pattern)}};
    if (w.direction) j["direction"] = Json{{"a", to_json(w.direction->alpha, raw)}, {"b", to_json(w.direction->beta, raw)}};
    Json basis = Json::array();
    for (const auto& b : w.basis) basis.push_back(to_json(b, raw));
    j["basis"] = basis;
    if (!w.original_basis.empty()) {
      Json ob = Json::array();
      for (const auto& b : w.original_basis) ob.push_back(to_json(b, raw));
      j["original_basis"] = ob;
    }
    witnesses.push_back(j);
  }
  Json trace = Json::array();
  for (const auto& t : v.trace)
    trace.push_back(Json{{"dimension", t.dimension}, {"pattern", t.pattern}, {"status", to_string(t.status)}, {"reason", t.reason}});
  Json unresolved = Json::array();
  for (const auto& u : v.unresolved) {
    Json j{{"pattern", u.pattern.label()}, {"reason", u.reason}};
    if (u.minimal_polynomial) j["minimal_polynomial"] = to_json(*u.minimal_polynomial, raw);
    unresolved.push_back(j);
  }
  Json out{{"status", to_string(v.status)}, {"witnesses", witnesses}};
  if (!unresolved.empty()) {
    out["unresolved"] = unresolved;
    out["guidance"] = "invariant lines exist over C but not in this field; rerun with a larger --conductor";
  }
  out["trace"] = trace;
  return out;
}

Json to_json(const Theorem36Result& r, bool raw) {
  Json per_dim = Json::array();
  for (std::size_t d = 0; d < r.per_dimension.size(); ++d)
    per_dim.push_back(Json{{"dimension", d + 1}, {"constraint", to_json(r.per_dimension[d], raw)}});
  Json patterns = Json::array();
  for (const auto& [d, p] : r.patterns) {
    if (p.constraints.empty() && !p.generic) continue;
    Json cs = Json::array();
    for (const auto& c : p.constraints) cs.push_back(to_json(c, raw));
    patterns.push_back(Json{{"dimension", d}, {"pattern", p.pattern.label()}, {"generic", p.generic}, {"constraints", cs}});
  }
  const CycPoly expected = theorem36_expected();
  return Json{{"patterns_examined", r.patterns.size()},
              {"any_generic", r.any_generic},
              {"per_dimension", per_dim},
              {"reducible_patterns", patterns},
              {"combined", to_json(r.combined, raw)},
              {"matches_expected", r.combined == expected},
              {"expected", to_json(expected, raw)}};
}

Json to_json(const RestrictedRep& r, bool raw) {
  return Json{{"lambda1", to_json(r.lambda1, raw)},
              {"transition", to_json(r.A, raw)},
              {"conjugated_sigma1", to_json(r.conj_x, raw)},
              {"conjugated_sigma2", to_json(r.conj_y, raw)},
              {"restricted_sigma1", to_json(r.x, raw)},
              {"restricted_sigma2", to_json(r.y, raw)},
              {"braid_relation", r.braid_relation}};
}

Json to_json(const Theorem41Result& r, bool raw) {
  Json profile = Json::array();
  for (const auto& col : r.nonzero) profile.push_back(col);
  return Json{{"restriction", to_json(r.rep, raw)},
              {"verdict", to_json(r.verdict, raw)},
              {"column_nonzero_profile", profile},
              {"profile_matches", r.profile_matches}};
}

Json to_json(const OperatorCriterion& c, bool raw) {
  Json w = Json::array();
  for (const auto& m : c.witnesses) w.push_back(Json{{"r", m.r}, {"rows", m.rows}, {"minor", to_json(m.value, raw)}});
  Json out{{"operator_irreducible", c.irreducible}, {"witnesses", w}};
  if (c.failing_r) out["failing_r"] = *c.failing_r;
  return out;
}

FieldElem field_from_json(const Json& j) {
  if (j.is_string()) return FieldElem::parse(j.get<std::string>());
  if (j.is_object() && j.contains("text")) return FieldElem::parse(j["text"].get<std::string>());
  throw Error(ErrorCode::ParseError, "expected a field element string");
}

ExactMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw Error(ErrorCode::ParseError, "expected a non-empty array of rows");
  ExactMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "ragged matrix in JSON");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = field_from_json(j[i][k]);
  }
  return m;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ConductorMismatch:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::IndexOutOfRange:
      return 2;
    case ErrorCode::ConstraintViolated:
    case ErrorCode::InadmissibleLambda:
    case ErrorCode::LambdaConditionViolated:
    case ErrorCode::ZeroParameter:
    case ErrorCode::EigenvalueCollision:
    case ErrorCode::QFactorialVanishes:
    case ErrorCode::DivisionByZero:
    case ErrorCode::UnsupportedMultiplicity:
    case ErrorCode::UnsupportedPattern:
      return 3;
    case ErrorCode::SingularMatrix:
    case ErrorCode::BraidRelationFailed:
    case ErrorCode::Internal:
      return 1;
  }
  return 1;
}

namespace {

bool is_flat(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string flat_text(const Json& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
  return out + "]";
}

void render(const Json& j, const std::string& indent, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string head = j.is_object() ? indent + it.key() + ": " : indent + "- ";
    if (!v.is_structured()) {
      os << head << scalar_text(v) << "\n";
    } else if (v.is_array() && is_flat(v)) {
      os << head << flat_text(v) << "\n";
    } else {
      os << (j.is_object() ? indent + it.key() + ":" : indent + "-") << "\n";
      render(v, indent + "  ", os);
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, "", os);
  return os.str();
}

}  // namespace qpascal
