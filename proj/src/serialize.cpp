#include "mumford/serialize.hpp"

#include <charconv>
#include <variant>

#include "mumford/error.hpp"

namespace mumford {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) schema("bad rational '" + whole + "'");
  return v;
}

// Exponent q in t-units as pi-units over params.
std::int64_t to_pi_units(const FieldParams& params, const Valu& q) {
  const Valu scaled = q * Valu(params.e());
  if (scaled.is_infinite() || scaled.den() != 1)
    schema("exponent " + q.str() + " is not in (1/" + std::to_string(params.e()) + ")Z");
  return scaled.num();
}

Json scaled_json(const ScaledValue& s) {
  Json j{{"val", to_json(s.val)}};
  if (s.val.finite()) j["lead"] = s.lead;
  return j;
}

}  // namespace

FieldParams params_from_json(const Json& j) {
  const int p = static_cast<int>(as_int(field(j, "p"), "p"));
  const int f = j.contains("f") ? static_cast<int>(as_int(j.at("f"), "f")) : 1;
  const int e = j.contains("e") ? static_cast<int>(as_int(j.at("e"), "e")) : 1;
  try {
    return FieldParams(p, f, e);
  } catch (const Error& err) {
    schema(err.what());
  }
}

Json to_json(const FieldParams& params) {
  return Json{{"p", params.p()}, {"f", params.f()}, {"e", params.e()}, {"field", params.describe()}};
}

Valu valu_from_json(const Json& j) {
  if (j.is_number_integer()) return Valu(j.get<std::int64_t>());
  if (!j.is_string()) schema("valuation must be an integer or a rational string");
  const std::string s = j.get<std::string>();
  if (s == "inf") return Valu::infinity();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Valu(parse_int(s, s));
  const std::int64_t den = parse_int(std::string_view(s).substr(slash + 1), s);
  if (den == 0) schema("zero denominator in '" + s + "'");
  return Valu(parse_int(std::string_view(s).substr(0, slash), s), den);
}

Json to_json(const Valu& v) {
  if (!v.is_infinite() && v.den() == 1) return Json(v.num());
  return Json(v.str());
}

Json to_json(const ExtVal& v) {
  if (v.inf > 0) return Json("inf");
  if (v.inf < 0) return Json("-inf");
  return to_json(v.v);
}

Json ord_json(const FieldParams& params, std::int64_t ord) { return to_json(Valu(ord, params.e())); }

LaurentElem laurent_from_json(const FieldParams& params, const Json& j) {
  if (j.is_string()) {
    try {
      return parse_laurent(params, j.get<std::string>());
    } catch (const Error& err) {
      schema(err.what());
    }
  }
  if (j.is_number_integer()) return LaurentElem::from_int(params, j.get<std::int64_t>());
  const Json* terms = &j;
  std::int64_t prec = kExactPrec;
  if (j.is_object()) {
    terms = &field(j, "terms");
    if (j.contains("prec") && !j.at("prec").is_null()) prec = to_pi_units(params, valu_from_json(j.at("prec")));
  }
  if (!terms->is_array()) schema("Laurent literal must be a string, term list or object");
  LaurentElem x(params, prec);
  for (const Json& t : *terms) {
    if (!t.is_array() || t.size() < 3) schema("term must be [exp_num, exp_den, c_0, ...]");
    const std::int64_t den = as_int(t[1], "exp_den");
    if (den <= 0) schema("exp_den must be positive");
    const std::int64_t ord = to_pi_units(params, Valu(as_int(t[0], "exp_num"), den));
    std::vector<int> c;
    for (std::size_t k = 2; k < t.size(); ++k) c.push_back(static_cast<int>(as_int(t[k], "coefficient")));
    if (static_cast<int>(c.size()) > params.f()) schema("more coefficients than the residue degree");
    x += LaurentElem::monomial(params, params.residue().from_coeffs(c), ord);
  }
  return x;
}

Json to_json(const LaurentElem& x) {
  const FieldParams& params = x.params();
  Json terms = Json::array();
  for (const auto& [ord, c] : x.terms()) {
    const Valu q(ord, params.e());
    Json t{q.num(), q.den()};
    for (int v : params.residue().coeffs(c)) t.push_back(v);
    terms.push_back(std::move(t));
  }
  return Json{{"terms", std::move(terms)},
              {"prec", x.is_exact() ? Json(nullptr) : ord_json(params, x.prec())},
              {"text", x.str()}};
}

End end_from_json(const FieldParams& params, const Json& j) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "oo"))
    return End::infinity(params);
  return End::at(laurent_from_json(params, j));
}

Json to_json(const End& z) { return z.is_infinite() ? Json("inf") : to_json(z.value()); }

BranchData branch_data_from_json(const Json& j) {
  const FieldParams params = params_from_json(j);
  const Json& a = field(j, "a");
  const Json& lambda = field(j, "lambda");
  if (!a.is_array() || !lambda.is_array()) schema("'a' and 'lambda' must be arrays");
  if (a.size() != lambda.size()) schema("'a' and 'lambda' differ in length");
  std::vector<End> pts;
  std::vector<LaurentElem> lam;
  for (const Json& x : a) pts.push_back(end_from_json(params, x));
  for (const Json& x : lambda) lam.push_back(laurent_from_json(params, x));
  return make_branch_data(params, pts, std::move(lam));
}

Json to_json(const BranchData& bd) {
  Json j = to_json(bd.params);
  Json a = Json::array(), l = Json::array();
  for (const auto& x : bd.a) a.push_back(to_json(x));
  for (const auto& x : bd.lambda) l.push_back(to_json(x));
  j["a"] = std::move(a);
  j["lambda"] = std::move(l);
  return j;
}

Json to_json(const Verdict& v) {
  Json margins = Json::array();
  for (const auto& row : v.margins) {
    Json r = Json::array();
    for (const auto& m : row) r.push_back(m ? to_json(*m) : Json(nullptr));
    margins.push_back(std::move(r));
  }
  Json j{{"is_mumford", v.is_mumford}, {"margins", std::move(margins)}};
  j["witness"] = v.witness ? Json{v.witness->first + 1, v.witness->second + 1} : Json(nullptr);
  return j;
}

TreeVertex vertex_from_json(const FieldParams& params, const Json& j) {
  return vertex_canonical(laurent_from_json(params, field(j, "center")), as_int(field(j, "level"), "level"));
}

Json to_json(const TreeVertex& v) {
  return Json{{"center", to_json(v.center)}, {"level", v.level}, {"text", v.str()}};
}

Json to_json(const MirrorDistance& md) {
  return Json{{"distance", md.distance}, {"xi1", to_json(md.xi1)}, {"xi2", to_json(md.xi2)},
              {"eta", to_json(md.eta)}, {"P2", to_json(md.p2)}};
}

Json to_json(const GeodesicScan& scan) {
  return Json{{"distance", scan.distance},
              {"fixed_by_first", scan.fixed_by_first},
              {"fixed_by_second", scan.fixed_by_second},
              {"convex", scan.convex}};
}

Json to_json(const HullTree& h) {
  Json pts = Json::array(), nodes = Json::array();
  for (const auto& z : h.points) pts.push_back(to_json(z));
  for (const auto& v : h.nodes) nodes.push_back(to_json(v));
  return Json{{"points", std::move(pts)}, {"base", to_json(h.base)}, {"nodes", std::move(nodes)}};
}

Json to_json(const ThresholdTable& tt) {
  Json rows = Json::array();
  for (const auto& row : tt.rows) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(Json{{"radius", to_json(e.radius)}, {"tags", e.tags}});
    rows.push_back(std::move(r));
  }
  return Json{{"rows", std::move(rows)}, {"e_used", tt.e_used}};
}

Json to_json(const Piece& piece) {
  Json holes = Json::array();
  for (const auto& h : piece.holes) holes.push_back(Json{{"center", h.center + 1}, {"radius", to_json(h.radius)}});
  return Json{{"index", piece.index},
              {"center", piece.center + 1},
              {"outer", to_json(piece.outer)},
              {"holes", std::move(holes)},
              {"text", piece.str()}};
}

Json to_json(const CoverCertificate& cert) {
  Json branches = Json::array();
  for (const auto& segs : cert.branches) {
    Json b = Json::array();
    for (const auto& s : segs)
      b.push_back(Json{{"lo", to_json(s.rho.lo)}, {"hi", to_json(s.rho.hi)}, {"lo_open", s.rho.lo_open},
                       {"hi_open", s.rho.hi_open}, {"piece", s.piece}});
    branches.push_back(std::move(b));
  }
  Json j{{"ok", cert.ok}, {"branches", std::move(branches)}};
  if (cert.uncovered) {
    Json t = Json::array();
    for (const auto& v : *cert.uncovered) t.push_back(to_json(v));
    j["uncovered"] = Json{{"branch", cert.uncovered_branch ? *cert.uncovered_branch + 1 : 0}, {"valuations", t}};
  }
  return j;
}

Json to_json(const ArtinSchreierResult& r) {
  if (const auto* y = std::get_if<LaurentElem>(&r)) return Json{{"solution", to_json(*y)}};
  const auto& ext = std::get<ExtensionRequired>(r);
  return Json{{"extension_required", {{"e_factor", ext.e_factor}, {"f_factor", ext.f_factor}, {"reason", ext.reason}}}};
}

Json to_json(const ReductionReport& rep) {
  Json lam = Json::array();
  for (int i : rep.lambda_set) lam.push_back(i + 1);
  Json sing = Json::array();
  for (const auto& s : rep.curve.singular)
    sing.push_back(Json{{"field_degree", s.field_degree}, {"x", s.x}, {"y", s.y},
                        {"ordinary_double", s.ordinary_double}, {"non_reduced", s.non_reduced}});
  Json j{{"lambda_set", std::move(lam)},
         {"m", rep.m ? Json(*rep.m + 1) : Json(nullptr)},
         {"case", to_string(rep.reduction_case)},
         {"b1", scaled_json(rep.b1)},
         {"b2", scaled_json(rep.b2)},
         {"b1_prime", scaled_json(rep.b1p)},
         {"b2_prime", scaled_json(rep.b2p)},
         {"ring_shape", to_string(rep.ring_shape)},
         {"ring", rep.ring},
         {"residue_parameter", rep.residue_parameter},
         {"dist_split", rep.dist_split},
         {"tail_small", rep.tail_small},
         {"b_ordered", rep.b_ordered},
         {"curve", {{"lines", rep.curve.line_components},
                    {"graph", rep.curve.has_graph_component},
                    {"all_rational", rep.curve.all_rational},
                    {"singular", std::move(sing)},
                    {"all_ordinary_double", rep.curve.all_ordinary_double},
                    {"text", rep.curve.describe()}}},
         {"sheets_separable", rep.sheets_separable},
         {"passes_condition", rep.passes_condition}};
  if (rep.cp) j["C_prime"] = to_json(*rep.cp);
  if (rep.c) j["C"] = to_json(*rep.c);
  if (rep.c_second) j["C_second"] = to_json(*rep.c_second);
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

Moebius moebius_from_json(const FieldParams& params, const Json& j) {
  if (!j.is_array() || j.size() != 4) schema("matrix must be [a, b, c, d]");
  return Moebius(laurent_from_json(params, j[0]), laurent_from_json(params, j[1]),
                 laurent_from_json(params, j[2]), laurent_from_json(params, j[3]));
}

Json to_json(const Moebius& g) { return Json{to_json(g.a()), to_json(g.b()), to_json(g.c()), to_json(g.d())}; }

GroupData group_from_json(const FieldParams& params, const Json& j) {
  if (!j.is_array() || j.empty()) schema("'generators' must be a nonempty array");
  std::vector<ParabolicGen> gens;
  for (const Json& g : j) {
    if (g.contains("matrix"))
      gens.push_back(parabolic_from_matrix(moebius_from_json(params, g.at("matrix"))));
    else
      gens.push_back(make_parabolic(end_from_json(params, field(g, "fixed")), laurent_from_json(params, field(g, "eta"))));
  }
  return make_group(std::move(gens));
}

Json to_json(const GroupData& g) {
  Json gens = Json::array();
  for (const auto& s : g.generators) {
    Json x{{"fixed", to_json(s.fixed_point)}, {"matrix", to_json(s.matrix)}};
    if (s.eta_form) x["eta"] = to_json(s.eta_form->second);
    gens.push_back(std::move(x));
  }
  return Json{{"p", g.p}, {"generators", std::move(gens)}};
}

Json to_json(const WordNF& w) { return Json(w.empty() ? std::string("id") : w.str()); }

Json to_json(const HutiReport& rep) {
  Json items = Json::array();
  for (const auto& it : rep.items) {
    Json x{{"item", it.item}, {"ok", it.ok}};
    if (!it.ok) x["witness"] = it.witness;
    items.push_back(std::move(x));
  }
  return Json{{"ok", rep.ok}, {"eta", to_json(rep.eta)}, {"P2", to_json(rep.p2)},
              {"items", std::move(items)}, {"words_checked", rep.words_checked}};
}

ThetaConfig theta_config_from_json(const Json& j, std::optional<int> L, std::optional<std::int64_t> prec) {
  const FieldParams params = params_from_json(j);
  const int words = L ? *L : (j.contains("L") ? static_cast<int>(as_int(j.at("L"), "L")) : 4);
  const std::int64_t pr = prec ? *prec : (j.contains("prec") ? as_int(j.at("prec"), "prec") : 40);
  if (words < 0 || pr <= 0) schema("L must be >= 0 and prec > 0");
  PrecisionScope scope(pr);
  GroupData g = [&] {
    if (j.contains("generators")) return group_from_json(params, j.at("generators"));
    const LaurentElem one = LaurentElem::from_int(params, 1);
    return make_group({make_parabolic(End::at(LaurentElem(params)), one),
                       make_parabolic(end_from_json(params, field(j, "P2")), laurent_from_json(params, field(j, "eta")))});
  }();
  if (!j.contains("u")) return make_theta_config(g, words, pr);
  ThetaConfig cfg{std::move(g), laurent_from_json(params, j.at("u")), words, pr};
  validate(cfg);
  return cfg;
}

Json to_json(const ThetaConfig& cfg) {
  Json j = to_json(cfg.group.params());
  j["generators"] = to_json(cfg.group)["generators"];
  j["u"] = to_json(cfg.u);
  j["L"] = cfg.L;
  j["prec"] = cfg.prec;
  return j;
}

Json to_json(const LambdaRecovery& rec) {
  return Json{{"alpha", to_json(rec.alpha)}, {"lambda1", to_json(rec.lambda1)},
              {"lambda2", to_json(rec.lambda2)}, {"eta", to_json(rec.eta)}};
}

Json to_json(const StabilityReport& rep, const FieldParams& params) {
  auto m = [&](const std::optional<std::int64_t>& v) { return v ? ord_json(params, *v) : Json("exact"); };
  return Json{{"L", rep.L}, {"compared_with", rep.L - 2}, {"alpha", m(rep.alpha_margin)},
              {"lambda1", m(rep.lambda1_margin)}, {"lambda2", m(rep.lambda2_margin)}};
}

}  // namespace mumford
