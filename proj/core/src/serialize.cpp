#include "rtint/serialize.hpp"

#include <climits>

namespace rtint {

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("integer", "not a decimal integer");
    return x;
  }
  throw ParseError("integer", "expected an integer");
}

json to_json(const Cyclotomic& a) {
  json coeffs = json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(integer_to_json(c));
  return {{"order", a.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(integer_from_json(c));
  return Cyclotomic::from_coeffs(j.at("order").get<int>(), std::move(coeffs));
}

json to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = integer_to_json(c);
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly::Terms terms;
  for (const auto& [k, v] : j.items()) terms.emplace(std::stoi(k), integer_from_json(v));
  return LaurentPoly(std::move(terms));
}

json to_json(const LocalizedCyclotomic& x) {
  return {{"numerator", to_json(x.numerator())}, {"prime", x.prime()}, {"rpow", x.rpow()}};
}

json to_json(const Weight& w) { return w.coords; }

Weight weight_from_json(const json& j) { return Weight(j.get<std::vector<int>>()); }

json to_json(const Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json e = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return {{"title", rep.title}, {"passed", rep.passed()}, {"checks", checks}};
}

namespace {

json int_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json laurent_matrix(const LaurentMatrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

json lie_data_json(const RootSystem& rs, int r) {
  json roots = json::array();
  for (const auto& a : rs.positive_roots()) roots.push_back(a.coords);
  json labels = json::array();
  for (const auto& l : alcove_labels(rs, r)) labels.push_back(to_json(l));
  return {{"lie_type", std::string(1, rs.type().letter())},
          {"rank", rs.rank()},
          {"r", r},
          {"cartan", int_matrix(rs.cartan())},
          {"d", rs.d()},
          {"form", int_matrix(rs.form())},
          {"positive_roots", roots},
          {"rho", to_json(rs.rho())},
          {"alpha0", rs.alpha0().coords},
          {"coxeter_number", rs.coxeter_number()},
          {"m_bound", rs.m_bound()},
          {"sign_w0", rs.sign_w0()},
          {"alcove_labels", labels}};
}

json fusion_json(const FusionTable& t) {
  json labels = json::array();
  for (const auto& l : t.labels()) labels.push_back(to_json(l));
  json entries = json::array();
  const size_t n = t.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (long m = t.N(i, j, k))
          entries.push_back({{"lambda", to_json(t.labels()[i])},
                             {"mu", to_json(t.labels()[j])},
                             {"nu", to_json(t.labels()[k])},
                             {"N", m}});
  json duals = json::array();
  for (size_t i = 0; i < n; ++i) duals.push_back(to_json(t.labels()[t.dual(i)]));
  return {{"lie_type", std::string(1, t.root_system().type().letter())},
          {"rank", t.root_system().rank()},
          {"r", t.r()},
          {"labels", labels},
          {"dual", duals},
          {"entries", entries}};
}

json modular_json(const ModularData& md) {
  json labels = json::array(), qd = json::array(), tw = json::array(), S = json::array();
  for (size_t i = 0; i < md.size(); ++i) {
    labels.push_back(to_json(md.labels()[i]));
    qd.push_back(to_json(md.qdims()[i]));
    tw.push_back(md.twist_exponents()[i]);
    json row = json::array();
    for (size_t j = 0; j < md.size(); ++j) row.push_back(to_json(md.S()(i, j)));
    S.push_back(row);
  }
  return {{"lie_type", std::string(1, md.root_system().type().letter())},
          {"rank", md.root_system().rank()},
          {"r", md.r()},
          {"labels", labels},
          {"qdim", qd},
          {"twist_exponents", tw},
          {"S", S},
          {"Dsq", to_json(md.Dsq())},
          {"delta", to_json(md.delta())},
          {"zeta_order", md.zeta_order()},
          {"D", to_json(md.D())},
          {"F_plus", to_json(md.F_plus())},
          {"F_minus", to_json(md.F_minus())},
          {"kappa", to_json(md.kappa())},
          {"kappa_order", md.kappa_order()}};
}

json sl2_json(int n) {
  const Sl2Module m = build_module(n);
  const LaurentMatrix g = shapovalov_gram(m);
  json diag = json::array();
  for (size_t i = 0; i < g.rows(); ++i) diag.push_back(to_json(g(i, i)));
  const QintFactorization f = det_factorization(n);
  json factors = json::object();
  for (const auto& [k, e] : f.exponents) factors[std::to_string(k)] = e;
  return {{"n", n},
          {"E", laurent_matrix(m.E)},
          {"F", laurent_matrix(m.F)},
          {"K", laurent_matrix(m.K)},
          {"gram_diagonal", diag},
          {"det", to_json(gram_determinant(g))},
          {"det_factorization", {{"sign", f.sign}, {"vpow", f.vpow}, {"qint_exponents", factors}}},
          {"nonunit_over_A", nonunit_over_A(n)},
          {"min_factorial_inverted", min_factorial_inverted(n)}};
}

namespace {

std::string line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

long require_int(const json& doc, const std::string& key, const std::string& ptr) {
  if (!doc.contains(key)) throw ParseError(ptr.empty() ? "/" : ptr, "missing required field \"" + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError(ptr + "/" + key, "expected an integer");
  const long x = v.get<long>();
  if (x < INT_MIN || x > INT_MAX) throw ParseError(ptr + "/" + key, "integer out of range");
  return x;
}

}  // namespace

PresentationFile parse_presentation(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_col(text, e.byte == 0 ? 0 : e.byte - 1) + " (byte " + std::to_string(e.byte) + ")",
                     "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("/", "top level must be an object");
  static const char* known[] = {"lie_type", "rank", "r", "weight", "pieces"};
  for (const auto& [k, v] : doc.items()) {
    bool ok = false;
    for (const char* n : known) ok = ok || k == n;
    if (!ok) throw ParseError("/" + k, "unknown field");
  }
  PresentationFile f;
  if (!doc.contains("lie_type")) throw ParseError("/", "missing required field \"lie_type\"");
  if (!doc["lie_type"].is_string()) throw ParseError("/lie_type", "expected a string");
  const std::string letter = doc["lie_type"].get<std::string>();
  const long rank = require_int(doc, "rank", "");
  if (letter.size() != 1) throw ParseError("/lie_type", "expected one family letter");
  try {
    f.type = LieType::from_letter(letter[0], static_cast<int>(rank));
  } catch (const HypothesisError& e) {
    throw ParseError("/lie_type", e.what());
  }
  f.r = static_cast<int>(require_int(doc, "r", ""));
  f.presentation.weight = doc.contains("weight") ? require_int(doc, "weight", "") : 0;
  if (!doc.contains("pieces")) throw ParseError("/", "missing required field \"pieces\"");
  const json& pieces = doc["pieces"];
  if (!pieces.is_array()) throw ParseError("/pieces", "expected an array");
  for (size_t i = 0; i < pieces.size(); ++i) {
    const std::string ptr = "/pieces/" + std::to_string(i);
    const json& p = pieces[i];
    if (!p.is_object() || p.size() != 1) throw ParseError(ptr, "expected {\"unknot\": f} or {\"hopf\": [f1, f2]}");
    if (p.contains("unknot")) {
      f.presentation.pieces.push_back(Unknot{static_cast<int>(require_int(p, "unknot", ptr))});
    } else if (p.contains("hopf")) {
      const json& h = p["hopf"];
      if (!h.is_array() || h.size() != 2 || !h[0].is_number_integer() || !h[1].is_number_integer())
        throw ParseError(ptr + "/hopf", "expected two integer framings");
      f.presentation.pieces.push_back(HopfPair{h[0].get<int>(), h[1].get<int>()});
    } else {
      throw ParseError(ptr, "unknown piece kind \"" + p.begin().key() + "\"");
    }
  }
  return f;
}

json to_json(const SurgeryPresentation& p) {
  json pieces = json::array();
  for (const auto& piece : p.pieces) {
    if (const auto* u = std::get_if<Unknot>(&piece)) pieces.push_back({{"unknot", u->framing}});
    else pieces.push_back({{"hopf", {std::get<HopfPair>(piece).f1, std::get<HopfPair>(piece).f2}}});
  }
  return {{"weight", p.weight}, {"pieces", pieces}};
}

json to_json(const PresentationFile& f) {
  json out = {{"lie_type", std::string(1, f.type.letter())}, {"rank", f.type.rank()}, {"r", f.r}};
  const json body = to_json(f.presentation);
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

json invariant_json(const ModularData& md, const SurgeryPresentation& p) {
  const InvariantValue v = invariant(md, p);
  const LinkingData ld = linking_data(p);
  const Report rep = check_integrality(md, p);
  return {{"presentation", to_json(p)},
          {"value", to_json(v.value.numerator())},
          {"rpow", v.value.rpow()},
          {"components", p.components()},
          {"sigma_plus", ld.sigma_plus},
          {"sigma_minus", ld.sigma_minus},
          {"beta1", ld.beta1},
          {"even", is_even(p)},
          {"checks", to_json(rep)}};
}

json cache_payload(const ModularData& md) {
  const FusionTable& t = md.fusion();
  json labels = json::array();
  for (const auto& l : t.labels()) labels.push_back(to_json(l));
  json S = json::array();
  for (size_t i = 0; i < md.size(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < md.size(); ++j) row.push_back(to_json(md.S()(i, j)));
    S.push_back(row);
  }
  return {{"labels", labels}, {"fusion", t.entries()}, {"S", S}};
}

ModularData modular_from_cache(const RootSystem& rs, int r, const json& payload) {
  std::vector<Weight> labels;
  for (const auto& l : payload.at("labels")) labels.push_back(weight_from_json(l));
  auto entries = payload.at("fusion").get<std::vector<long>>();
  ModularData md = ModularData::build(FusionTable::from_entries(rs, r, std::move(labels), std::move(entries)));
  const json& S = payload.at("S");
  bool same = S.size() == md.size();
  for (size_t i = 0; same && i < md.size(); ++i)
    for (size_t j = 0; same && j < md.size(); ++j) same = cyclotomic_from_json(S.at(i).at(j)) == md.S()(i, j);
  if (!same) throw ArithmeticError("cached S-matrix differs from the recomputed one");
  return md;
}

}  // namespace rtint
