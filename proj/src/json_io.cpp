#include "mhpp/json_io.hpp"

#include "mhpp/errors.hpp"

namespace mhpp::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) bad(std::string("\"") + key + "\" must be an array");
  return a;
}

long integer_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

template <class Scalar, class Read>
Matrix<Scalar> matrix_from(const Json& j, Read read) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const Json& r : j) {
    if (!r.is_array()) bad("matrix row must be an array");
    std::vector<Scalar> row;
    for (const Json& x : r) row.push_back(read(x));
    rows.push_back(std::move(row));
  }
  return Matrix<Scalar>(rows);
}

template <class Scalar, class Write>
Json matrix_to(const Matrix<Scalar>& a, Write write) {
  Json out = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(write(a(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

// Inequality sides: a rational string when constant, else a term array.
Json side_to_json(const PuiseuxNumber& x) {
  if (auto q = x.as_rational()) return rational_to_json(*q);
  return puiseux_to_json(x);
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  bad("expected a rational string \"p/q\"");
}

Json point_to_json(const LatticePoint& p) { return Json(p.coords()); }

LatticePoint point_from_json(const Json& j) {
  if (!j.is_array()) bad("lattice point must be an array of integers");
  std::vector<int> c;
  for (const Json& x : j) c.push_back(static_cast<int>(integer_from_json(x, "coordinate")));
  return LatticePoint(std::move(c));
}

Json point_set_to_json(const PointSet& s) {
  Json pts = Json::array();
  for (const auto& p : s) pts.push_back(point_to_json(p));
  return Json{{"dim", s.dim()}, {"points", std::move(pts)}};
}

PointSet point_set_from_json(const Json& j) {
  if (j.is_object() && j.contains("points") && !j.contains("dim")) {
    return function_from_json(j).support();
  }
  const long dim = integer_from_json(field(j, "dim"), "dim");
  if (dim < 0) bad("dim must be nonnegative");
  PointSet s(static_cast<std::size_t>(dim));
  for (const Json& p : array_field(j, "points")) {
    if (p.is_object()) {
      s.insert(point_from_json(field(p, "alpha")));
    } else {
      s.insert(point_from_json(p));
    }
  }
  return s;
}

Json function_to_json(const DiscreteFunction& f) {
  Json pts = Json::array();
  for (const auto& [p, v] : f) pts.push_back(Json{{"alpha", point_to_json(p)}, {"value", rational_to_json(v)}});
  return Json{{"points", std::move(pts)}};
}

DiscreteFunction function_from_json(const Json& j) {
  std::vector<std::pair<LatticePoint, Rational>> entries;
  for (const Json& p : array_field(j, "points")) {
    entries.emplace_back(point_from_json(field(p, "alpha")), rational_from_json(field(p, "value")));
  }
  if (entries.empty()) bad("function must have at least one point");
  return DiscreteFunction(entries);
}

Json puiseux_to_json(const PuiseuxNumber& x) {
  Json out = Json::array();
  for (const auto& t : x.terms()) {
    out.push_back(Json{{"exp", rational_to_json(t.exponent)}, {"c", rational_to_json(t.coeff)}});
  }
  return out;
}

PuiseuxNumber puiseux_from_json(const Json& j) {
  if (!j.is_array()) return PuiseuxNumber(rational_from_json(j));
  std::vector<PuiseuxNumber::Term> terms;
  for (const Json& t : j) terms.push_back({rational_from_json(field(t, "exp")), rational_from_json(field(t, "c"))});
  return PuiseuxNumber::from_terms(std::move(terms));
}

Json polynomial_to_json(const PuiseuxPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : p.terms()) {
    terms.push_back(Json{{"alpha", point_to_json(alpha)}, {"coeff", puiseux_to_json(c)}});
  }
  return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

PuiseuxPolynomial polynomial_from_json(const Json& j) {
  if (j.is_object() && j.contains("polynomial")) return polynomial_from_json(j.at("polynomial"));
  const long n = integer_from_json(field(j, "nvars"), "nvars");
  if (n < 0) bad("nvars must be nonnegative");
  PuiseuxPolynomial p(static_cast<std::size_t>(n));
  for (const Json& t : array_field(j, "terms")) {
    const LatticePoint alpha = point_from_json(field(t, "alpha"));
    if (alpha.dim() != p.nvars()) bad("term exponent has the wrong length");
    for (int a : alpha) {
      if (a < 0) bad("negative exponent");
    }
    p.add_term(alpha, puiseux_from_json(field(t, "coeff")));
  }
  return p;
}

Json graph_to_json(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges) {
    edges.push_back(Json{{"u", e.u + 1}, {"v", e.v + 1}, {"w", rational_to_json(e.weight)}, {"c", e.multiplicity}});
  }
  return Json{{"n", g.nvertices}, {"edges", std::move(edges)}};
}

WeightedGraph graph_from_json(const Json& j) {
  WeightedGraph g;
  const long n = integer_from_json(field(j, "n"), "n");
  if (n < 0) bad("n must be nonnegative");
  g.nvertices = static_cast<std::size_t>(n);
  for (const Json& e : array_field(j, "edges")) {
    const long u = integer_from_json(field(e, "u"), "u");
    const long v = integer_from_json(field(e, "v"), "v");
    if (u < 1 || v < 1 || u > n || v > n) bad("edge endpoint out of range 1..n");
    Edge edge;
    edge.u = static_cast<std::size_t>(u - 1);
    edge.v = static_cast<std::size_t>(v - 1);
    edge.weight = e.contains("w") ? rational_from_json(e.at("w")) : Rational(0);
    const long c = e.contains("c") ? integer_from_json(e.at("c"), "c") : 1;
    if (c < 1) bad("multiplicity must be positive");
    edge.multiplicity = static_cast<unsigned>(c);
    g.edges.push_back(edge);
  }
  g.validate();
  return g;
}

Json matrix_to_json(const Matrix<Rational>& a) { return matrix_to(a, rational_to_json); }
Json matrix_to_json(const Matrix<PuiseuxNumber>& a) { return matrix_to(a, side_to_json); }

Matrix<Rational> rational_matrix_from_json(const Json& j) {
  return matrix_from<Rational>(j, rational_from_json);
}

Matrix<PuiseuxNumber> puiseux_matrix_from_json(const Json& j) {
  return matrix_from<PuiseuxNumber>(j, puiseux_from_json);
}

Json univariate_to_json(const UnivariatePoly<Rational>& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(rational_to_json(x));
  return Json{{"coeffs", std::move(c)}};
}

Json univariate_to_json(const UnivariatePoly<PuiseuxNumber>& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(side_to_json(x));
  return Json{{"coeffs", std::move(c)}};
}

UnivariatePoly<Rational> rational_univariate_from_json(const Json& j) {
  const Json& a = j.is_array() ? j : array_field(j, "coeffs");
  std::vector<Rational> c;
  for (const Json& x : a) c.push_back(rational_from_json(x));
  return UnivariatePoly<Rational>(std::move(c));
}

UnivariatePoly<PuiseuxNumber> puiseux_univariate_from_json(const Json& j) {
  const Json& a = j.is_array() ? j : array_field(j, "coeffs");
  std::vector<PuiseuxNumber> c;
  for (const Json& x : a) c.push_back(puiseux_from_json(x));
  return UnivariatePoly<PuiseuxNumber>(std::move(c));
}

Json witness_to_json(const Witness& w) {
  Json out{{"rule", w.rule}};
  Json pts = Json::object();
  for (const auto& [name, p] : w.points) pts[name] = point_to_json(p);
  out["points"] = std::move(pts);
  if (!w.vectors.empty()) {
    Json vecs = Json::object();
    for (const auto& [name, v] : w.vectors) {
      Json a = Json::array();
      for (const auto& q : v) a.push_back(rational_to_json(q));
      vecs[name] = std::move(a);
    }
    out["vectors"] = std::move(vecs);
  }
  if (!w.candidates.empty()) {
    Json cands = Json::array();
    for (const auto& c : w.candidates) {
      Json cj{{"step", point_to_json(c.step)}, {"in_support", c.in_support}};
      if (c.value) cj["value"] = rational_to_json(*c.value);
      cands.push_back(std::move(cj));
    }
    out["candidates"] = std::move(cands);
  }
  if (w.lhs) out["lhs"] = rational_to_json(*w.lhs);
  if (w.rhs) out["rhs"] = rational_to_json(*w.rhs);
  if (!w.detail.empty()) out["detail"] = w.detail;
  return out;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  const Json& rule = field(j, "rule");
  if (!rule.is_string()) bad("rule must be a string");
  w.rule = rule.get<std::string>();
  if (j.contains("points")) {
    for (const auto& [name, p] : j.at("points").items()) w.points.emplace_back(name, point_from_json(p));
  }
  if (j.contains("vectors")) {
    for (const auto& [name, v] : j.at("vectors").items()) {
      std::vector<Rational> vals;
      for (const Json& q : v) vals.push_back(rational_from_json(q));
      w.vectors.emplace_back(name, std::move(vals));
    }
  }
  if (j.contains("candidates")) {
    for (const Json& c : j.at("candidates")) {
      Candidate cand;
      cand.step = point_from_json(field(c, "step"));
      cand.in_support = field(c, "in_support").get<bool>();
      if (c.contains("value")) cand.value = rational_from_json(c.at("value"));
      w.candidates.push_back(std::move(cand));
    }
  }
  if (j.contains("lhs")) w.lhs = rational_from_json(j.at("lhs"));
  if (j.contains("rhs")) w.rhs = rational_from_json(j.at("rhs"));
  if (j.contains("detail")) w.detail = j.at("detail").get<std::string>();
  return w;
}

Json report_to_json(const CheckReport& r, bool with_witness) {
  Json out{{"verdict", r.verdict}};
  if (with_witness && r.witness) out["witness"] = witness_to_json(*r.witness);
  return out;
}

Json certificate_to_json(const StabilityCertificate& c) {
  Json detail = Json::array();
  for (const auto& q : c.detail) {
    detail.push_back(Json{{"label", q.label},
                          {"lhs", side_to_json(q.lhs)},
                          {"rhs", side_to_json(q.rhs)},
                          {"strict", q.strict},
                          {"holds", q.holds}});
  }
  return Json{{"kind", to_string(c.kind)},
              {"verdict", to_string(c.verdict)},
              {"sampled", c.sampled},
              {"detail", std::move(detail)},
              {"notes", c.notes}};
}

StabilityCertificate certificate_from_json(const Json& j) {
  StabilityCertificate c;
  const std::string kind = field(j, "kind").get<std::string>();
  bool found = false;
  for (auto k : {CertificateKind::newton, CertificateKind::val_newton_strict, CertificateKind::hutchinson,
                 CertificateKind::sturm, CertificateKind::rhombus_quotient, CertificateKind::slice_harness}) {
    if (kind == to_string(k)) {
      c.kind = k;
      found = true;
    }
  }
  if (!found) bad("unknown certificate kind " + kind);
  const std::string verdict = field(j, "verdict").get<std::string>();
  found = false;
  for (auto v : {Verdict::proves_stable, Verdict::proves_unstable, Verdict::inconclusive}) {
    if (verdict == to_string(v)) {
      c.verdict = v;
      found = true;
    }
  }
  if (!found) bad("unknown verdict " + verdict);
  if (j.contains("sampled")) c.sampled = j.at("sampled").get<bool>();
  for (const Json& q : array_field(j, "detail")) {
    c.detail.push_back({field(q, "label").get<std::string>(), puiseux_from_json(field(q, "lhs")),
                        puiseux_from_json(field(q, "rhs")), field(q, "strict").get<bool>(),
                        field(q, "holds").get<bool>()});
  }
  if (j.contains("notes")) c.notes = j.at("notes").get<std::vector<std::string>>();
  return c;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("json: ") + e.what());
  }
}

Json schemas() {
  const Json rational{{"type", "string"}, {"pattern", "^[-+]?[0-9]+(/[0-9]+)?$"}};
  const Json point{{"type", "array"}, {"items", {{"type", "integer"}}}};
  const Json puiseux{{"type", "array"},
                     {"items",
                      {{"type", "object"},
                       {"required", Json::array({"exp", "c"})},
                       {"properties", {{"exp", rational}, {"c", rational}}}}}};
  Json out;
  out["rational"] = rational;
  out["point_set"] = {{"type", "object"},
                      {"required", Json::array({"dim", "points"})},
                      {"properties", {{"dim", {{"type", "integer"}}}, {"points", {{"type", "array"}, {"items", point}}}}}};
  out["function"] = {{"type", "object"},
                     {"required", Json::array({"points"})},
                     {"properties",
                      {{"points",
                        {{"type", "array"},
                         {"items",
                          {{"type", "object"},
                           {"required", Json::array({"alpha", "value"})},
                           {"properties", {{"alpha", point}, {"value", rational}}}}}}}}}};
  out["puiseux"] = puiseux;
  out["polynomial"] = {{"type", "object"},
                       {"required", Json::array({"nvars", "terms"})},
                       {"properties",
                        {{"nvars", {{"type", "integer"}}},
                         {"terms",
                          {{"type", "array"},
                           {"items",
                            {{"type", "object"},
                             {"required", Json::array({"alpha", "coeff"})},
                             {"properties", {{"alpha", point}, {"coeff", puiseux}}}}}}}}}};
  out["graph"] = {{"type", "object"},
                  {"required", Json::array({"n", "edges"})},
                  {"properties",
                   {{"n", {{"type", "integer"}}},
                    {"edges",
                     {{"type", "array"},
                      {"items",
                       {{"type", "object"},
                        {"required", Json::array({"u", "v"})},
                        {"properties",
                         {{"u", {{"type", "integer"}, {"minimum", 1}}},
                          {"v", {{"type", "integer"}, {"minimum", 1}}},
                          {"w", rational},
                          {"c", {{"type", "integer"}, {"minimum", 1}}}}}}}}}}}};
  out["matrix"] = {{"type", "array"},
                   {"items", {{"type", "array"}, {"items", {{"anyOf", Json::array({rational, puiseux})}}}}}};
  out["univariate"] = {{"type", "object"},
                       {"required", Json::array({"coeffs"})},
                       {"properties", {{"coeffs", {{"type", "array"}, {"items", {{"anyOf", Json::array({rational, puiseux})}}}}}}}};
  out["report"] = {{"type", "object"},
                   {"required", Json::array({"verdict"})},
                   {"properties",
                    {{"verdict", {{"type", "boolean"}}},
                     {"witness",
                      {{"type", "object"},
                       {"required", Json::array({"rule", "points"})},
                       {"properties",
                        {{"rule", {{"type", "string"}}},
                         {"points", {{"type", "object"}, {"additionalProperties", point}}},
                         {"lhs", rational},
                         {"rhs", rational},
                         {"detail", {{"type", "string"}}}}}}}}}};
  out["certificate"] = {{"type", "object"},
                        {"required", Json::array({"kind", "verdict", "detail"})},
                        {"properties",
                         {{"kind", {{"type", "string"}}},
                          {"verdict", {{"enum", Json::array({"proves-stable", "proves-unstable", "inconclusive"})}}},
                          {"sampled", {{"type", "boolean"}}},
                          {"detail",
                           {{"type", "array"},
                            {"items",
                             {{"type", "object"},
                              {"required", Json::array({"label", "lhs", "rhs", "strict", "holds"})},
                              {"properties",
                               {{"label", {{"type", "string"}}},
                                {"lhs", {{"anyOf", Json::array({rational, puiseux})}}},
                                {"rhs", {{"anyOf", Json::array({rational, puiseux})}}},
                                {"strict", {{"type", "boolean"}}},
                                {"holds", {{"type", "boolean"}}}}}}}}},
                          {"notes", {{"type", "array"}, {"items", {{"type", "string"}}}}}}}};
  return out;
}

}  // namespace mhpp::json_io
