// mumford: command-line front end.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "mumford/dot.hpp"
#include "mumford/error.hpp"
#include "mumford/serialize.hpp"

using namespace mumford;

namespace {

struct Options {
  std::string input;
  std::optional<int> p, f, e, r;
  std::optional<std::int64_t> prec;
  std::optional<int> words;
  std::optional<std::int64_t> radius;
  std::string format = "json";
};

constexpr std::int64_t kDefaultPrec = 64;

Json load_input(const Options& o) {
  std::string text = o.input;
  if (text.empty()) throw Error(ErrorKind::SchemaError, "no input given");
  if (text == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (text.front() != '{' && text.front() != '[') {
    std::ifstream in(text);
    if (!in) throw Error(ErrorKind::SchemaError, "cannot read " + text);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw Error(ErrorKind::SchemaError, err.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::SchemaError, "input must be a JSON object");
  if (o.p) j["p"] = *o.p;
  if (o.f) j["f"] = *o.f;
  if (o.e) j["e"] = *o.e;
  return j;
}

int emit(const Options& o, const Json& out, const std::string& dot, int code) {
  if (o.format == "dot" && !dot.empty())
    std::cout << dot;
  else
    std::cout << out.dump(2) << "\n";
  return code;
}

Json error_json(const Error& err) {
  return Json{{"error", {{"kind", std::string(to_string(err.kind()))}, {"message", err.what()}}}};
}

Json deviations(const ThresholdTable& tt) {
  Json d = Json::array();
  for (const auto& row : tt.rows)
    for (const auto& entry : row)
      if (std::find(entry.tags.begin(), entry.tags.end(), "midpoint") != entry.tags.end()) {
        d.push_back("midpoint thresholds (v(lambda_i) + 2 v(a_i - a_j) - v(lambda_j)) / 2 inserted");
        return d;
      }
  return d;
}

// Thresholds, pieces and the cover certificate; code 1 on a domain failure.
int covering_report(const BranchData& bd, bool reduce, Json& out, std::string* dot) {
  ThresholdTable tt;
  try {
    tt = build_thresholds(bd);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::CriterionViolated) throw;
    out["error"] = error_json(err)["error"];
    out["verdict"] = to_json(criterion_margins(bd));
    return 1;
  }
  PieceStats stats;
  const auto pieces = enumerate_pieces(tt, bd, &stats);
  const CoverCertificate cert = verify_cover(pieces, bd);
  out["thresholds"] = to_json(tt);
  out["deviations"] = deviations(tt);
  out["stats"] = {{"in_I", stats.in_i}, {"in_J", stats.in_j}, {"nonempty", stats.nonempty}};
  bool ok = cert.ok;
  Json ps = Json::array();
  for (const auto& piece : pieces) {
    Json pj = to_json(piece);
    std::string why;
    const bool shape = check_piece_shape(piece, bd, &why);
    pj["shape_ok"] = shape;
    if (!shape) pj["shape_failure"] = why;
    ok = ok && shape;
    if (reduce) {
      const ReductionReport rep = classify_reduction(piece, bd);
      pj["reduction"] = to_json(rep);
      ok = ok && rep.passes_condition;
    }
    ps.push_back(std::move(pj));
  }
  out["pieces"] = std::move(ps);
  out["cover"] = to_json(cert);
  out["ok"] = ok;
  if (dot) *dot = pieces_dot(pieces);
  return ok ? 0 : 1;
}

int cmd_check(const Options& o) {
  const Json j = load_input(o);
  PrecisionScope scope(o.prec.value_or(kDefaultPrec));
  const BranchData bd = branch_data_from_json(j);
  const Verdict v = is_mumford(bd);
  Json out = to_json(v);
  out["params"] = to_json(bd.params);
  return emit(o, out, "", v.is_mumford ? 0 : 1);
}

int cmd_genus(const Options& o) {
  if (!o.p || !o.r) throw Error(ErrorKind::SchemaError, "genus needs --p and --r");
  return emit(o, Json{{"p", *o.p}, {"r", *o.r}, {"genus", genus(*o.p, *o.r)}}, "", 0);
}

int cmd_cover(const Options& o, bool reduce) {
  const Json j = load_input(o);
  PrecisionScope scope(o.prec.value_or(kDefaultPrec));
  const BranchData bd = branch_data_from_json(j);
  Json out{{"params", to_json(bd.params)}, {"input", to_json(bd)}};
  std::string dot;
  const int code = covering_report(bd, reduce, out, &dot);
  return emit(o, out, dot, code);
}

struct ThetaOutcome {
  ThetaConfig cfg;
  LambdaRecovery rec;
  bool ok;
};

ThetaOutcome theta_report(const Options& o, const Json& j, Json& out) {
  ThetaConfig cfg = theta_config_from_json(j, o.words, o.prec);
  if (o.radius) {
    PrecisionScope scope(cfg.prec);
    const NormalizeResult nr = normalize_generators(cfg.group, *o.radius);
    out["normalization_rewrites"] = nr.rewrites;
  }
  const FieldParams& params = cfg.group.params();
  const LaurentElem alpha = theta_alpha(cfg);
  const LaurentElem x2 = theta_x(cfg, cfg.p2());
  const LambdaRecovery rec = recover_lambda(cfg);
  const auto [b1, b2] = lambda_bounds(rec.eta, cfg.p2(), cfg.group.p);
  const HutiReport huti = [&] {
    PrecisionScope scope(cfg.prec);
    return huti_check(cfg.group, End::at(cfg.u), cfg.L);
  }();
  const Valu v1 = rec.lambda1.valuation(), v2 = rec.lambda2.valuation();
  const Valu d = -rec.eta.valuation();
  const bool alpha_unit = alpha.ord() == 0;
  const bool x2_one = x2 == LaurentElem::from_int(params, 1);
  const bool bounds_ok = b1 <= v1 && b2 <= v2;
  const bool product_ok = d <= v1 + v2 && Valu(0) < d;
  out["params"] = to_json(params);
  out["config"] = to_json(cfg);
  out["alpha"] = to_json(alpha);
  out["x_at_P2"] = to_json(x2);
  out["lambda1"] = to_json(rec.lambda1);
  out["lambda2"] = to_json(rec.lambda2);
  out["eta"] = to_json(rec.eta);
  out["bounds"] = {{"lambda1", to_json(b1)}, {"lambda2", to_json(b2)},
                   {"val_lambda1", to_json(v1)}, {"val_lambda2", to_json(v2)}, {"mirror_distance", to_json(d)}};
  out["stability"] = to_json(stability(cfg), params);
  out["huti"] = to_json(huti);
  out["checks"] = {{"alpha_unit", alpha_unit}, {"x_at_P2_is_one", x2_one}, {"bounds", bounds_ok},
                   {"product", product_ok}, {"huti", huti.ok}};
  const bool ok = alpha_unit && x2_one && bounds_ok && product_ok && huti.ok;
  return ThetaOutcome{std::move(cfg), rec, ok};
}

int cmd_theta(const Options& o) {
  const Json j = load_input(o);
  Json out;
  const ThetaOutcome t = theta_report(o, j, out);
  out["ok"] = t.ok;
  return emit(o, out, "", t.ok ? 0 : 1);
}

int cmd_roundtrip(const Options& o) {
  const Json j = load_input(o);
  Json out;
  Json theta;
  const ThetaOutcome t = theta_report(o, j, theta);
  out["theta"] = std::move(theta);
  const FieldParams& params = t.cfg.group.params();
  PrecisionScope scope(t.cfg.prec);
  const BranchData bd = make_branch_data(
      params, {End::at(LaurentElem(params)), End::at(LaurentElem::from_int(params, 1))}, {t.rec.lambda1, t.rec.lambda2});
  out["branch_data"] = to_json(bd);
  const Verdict v = criterion_margins(bd);
  out["verdict"] = to_json(v);
  Json cover;
  std::string dot;
  const int code = covering_report(bd, true, cover, &dot);
  out["covering"] = std::move(cover);
  const bool ok = t.ok && v.is_mumford && code == 0;
  out["ok"] = ok;
  return emit(o, out, dot, ok ? 0 : 1);
}

int cmd_tree_dist(const Options& o) {
  const Json j = load_input(o);
  PrecisionScope scope(o.prec.value_or(kDefaultPrec));
  const FieldParams params = params_from_json(j);
  if (!j.contains("v") || !j.contains("w")) throw Error(ErrorKind::SchemaError, "tree dist needs 'v' and 'w'");
  const TreeVertex v = vertex_from_json(params, j.at("v"));
  const TreeVertex w = vertex_from_json(params, j.at("w"));
  Json path = Json::array();
  for (const auto& x : path_vertices(v, w)) path.push_back(x.str());
  return emit(o, Json{{"v", to_json(v)}, {"w", to_json(w)}, {"distance", distance(v, w)}, {"path", path}}, "", 0);
}

int cmd_tree_mirror(const Options& o) {
  const Json j = load_input(o);
  PrecisionScope scope(o.prec.value_or(kDefaultPrec));
  const FieldParams params = params_from_json(j);
  if (!j.contains("g1") || !j.contains("g2")) throw Error(ErrorKind::SchemaError, "tree mirror needs 'g1' and 'g2'");
  const GroupData g = group_from_json(params, Json{j.at("g1"), j.at("g2")});
  const Moebius& g1 = g.generators[0].matrix;
  const Moebius& g2 = g.generators[1].matrix;
  Json out{{"params", to_json(params)}};
  try {
    out["normal_form"] = to_json(mirror_distance(g1, g2));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::MirrorsIntersect) throw;
    out["error"] = error_json(err)["error"];
    return emit(o, out, "", 1);
  }
  const GeodesicScan scan = mirror_distance_scan(g1, g2, o.radius.value_or(256));
  out["scan"] = to_json(scan);
  const bool agree = scan.distance == out["normal_form"]["distance"].get<std::int64_t>();
  out["agree"] = agree;
  return emit(o, out, scan_dot(scan), agree ? 0 : 1);
}

int cmd_tree_hull(const Options& o) {
  const Json j = load_input(o);
  PrecisionScope scope(o.prec.value_or(kDefaultPrec));
  const FieldParams params = params_from_json(j);
  if (!j.contains("points") || !j.at("points").is_array())
    throw Error(ErrorKind::SchemaError, "tree hull needs a 'points' array");
  std::vector<End> pts;
  for (const Json& x : j.at("points")) pts.push_back(end_from_json(params, x));
  const HullTree h = hull_tree(pts);
  return emit(o, to_json(h), hull_dot(h), 0);
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::CriterionViolated:
    case ErrorKind::NotCovering:
    case ErrorKind::MirrorsIntersect:
    case ErrorKind::AssertionFailed:
    case ErrorKind::MultipleMinimizers:
      return 1;
    default:
      return 2;
  }
}

void add_common(CLI::App* sub, Options& o, bool input) {
  if (input) sub->add_option("input", o.input, "JSON file, inline JSON, or - for stdin");
  sub->fallthrough();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for cyclic p-covers of the projective line over F_q((t))"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--p", o.p, "residue characteristic");
  app.add_option("--f", o.f, "residue degree");
  app.add_option("--e", o.e, "ramification index");
  app.add_option("--r", o.r, "number of branch points (genus)");
  app.add_option("--prec", o.prec, "absolute precision in pi-units")->check(CLI::PositiveNumber);
  app.add_option("--words", o.words, "word length cutoff L")->check(CLI::NonNegativeNumber);
  app.add_option("--radius", o.radius, "search radius R")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "dot"}));

  int (*run)(const Options&) = nullptr;
  auto* check = app.add_subcommand("check", "decide the Mumford criterion");
  add_common(check, o, true);
  check->callback([&] { run = cmd_check; });
  auto* gen = app.add_subcommand("genus", "genus (p-1)(r-1)");
  add_common(gen, o, false);
  gen->callback([&] { run = cmd_genus; });
  auto* cover = app.add_subcommand("cover", "affinoid covering and its certificate");
  add_common(cover, o, true);
  cover->callback([&] { run = [](const Options& x) { return cmd_cover(x, false); }; });
  auto* reduce = app.add_subcommand("reduce", "covering plus per-piece reductions");
  add_common(reduce, o, true);
  reduce->callback([&] { run = [](const Options& x) { return cmd_cover(x, true); }; });
  auto* theta = app.add_subcommand("theta", "theta products and recovered lambdas");
  add_common(theta, o, true);
  theta->callback([&] { run = cmd_theta; });
  auto* rt = app.add_subcommand("roundtrip", "theta, then criterion and covering");
  add_common(rt, o, true);
  rt->callback([&] { run = cmd_roundtrip; });
  auto* tree = app.add_subcommand("tree", "Bruhat-Tits tree queries");
  tree->require_subcommand(1);
  tree->fallthrough();
  auto* dist = tree->add_subcommand("dist", "distance between two vertices");
  add_common(dist, o, true);
  dist->callback([&] { run = cmd_tree_dist; });
  auto* mirror = tree->add_subcommand("mirror", "distance between mirrors of two parabolic elements");
  add_common(mirror, o, true);
  mirror->callback([&] { run = cmd_tree_mirror; });
  auto* hull = tree->add_subcommand("hull", "convex hull of ends");
  add_common(hull, o, true);
  hull->callback([&] { run = cmd_tree_hull; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << Json{{"error", {{"kind", "SchemaError"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  }
  try {
    return run(o);
  } catch (const Error& err) {
    std::cout << error_json(err).dump(2) << "\n";
    return exit_code_for(err.kind());
  } catch (const std::exception& err) {
    std::cout << Json{{"error", {{"kind", "InvalidArgument"}, {"message", err.what()}}}}.dump(2) << "\n";
    return 2;
  }
}
