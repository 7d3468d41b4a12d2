#include "mumford/theta.hpp"

#include <algorithm>
#include <string>

#include "mumford/error.hpp"

namespace mumford {

namespace {

struct OrbitPair {
  End a;  // w(P_1)
  End b;  // w(u)
};

// Words of length <= L; with saturate = i also s_i^n w for |w| = L not
// starting with s_i, which makes the set stable under left multiplication by s_i.
std::vector<WordNF> word_set(const GroupData& g, int L, int saturate) {
  std::vector<WordNF> words = enumerate_words(g, L);
  if (saturate < 0) return words;
  const std::size_t n = words.size();
  for (std::size_t k = 0; k < n; ++k) {
    const WordNF& w = words[k];
    if (static_cast<int>(w.length()) != L || (!w.empty() && w.letters.front().first == saturate)) continue;
    for (int e = 1; e < g.p; ++e) words.push_back(WordNF{{{saturate, e}}}.times(w, g.p));
  }
  return words;
}

std::vector<OrbitPair> orbit(const ThetaConfig& cfg, int L, int saturate = -1) {
  const End p1 = cfg.group.generators[0].fixed_point;
  const End u = End::at(cfg.u);
  std::vector<OrbitPair> out;
  for (const WordNF& w : word_set(cfg.group, L, saturate)) {
    const Moebius m = eval_word(cfg.group, w);
    OrbitPair op{m.apply(p1), m.apply(u)};
    if (op.a.is_infinite() || op.b.is_infinite())
      throw Error(ErrorKind::PoleAtOrbitPoint, "orbit point at infinity for " + w.str());
    out.push_back(std::move(op));
  }
  return out;
}

LaurentElem alpha_from(const std::vector<OrbitPair>& orb, const LaurentElem& p2) {
  LaurentElem num = LaurentElem::from_int(p2.params(), 1);
  LaurentElem den = num;
  for (const auto& op : orb) {
    num *= p2 - op.b.value();
    den *= p2 - op.a.value();
  }
  if (den.is_zero()) throw Error(ErrorKind::PrecisionExhausted, "P_2 meets the orbit of P_1");
  return num / den;
}

// (z - A)(P_2 - B) / ((z - B)(P_2 - A)) written as 1 + (z - P_2)(A - B) / ((z - B)(P_2 - A)).
LaurentElem factor(const LaurentElem& z, const LaurentElem& p2, const OrbitPair& op) {
  const LaurentElem& a = op.a.value();
  const LaurentElem& b = op.b.value();
  const LaurentElem za = z - a;
  if (za.is_zero() && za.is_exact()) return LaurentElem(z.params());
  const LaurentElem zb = z - b;
  if (zb.is_zero()) throw Error(ErrorKind::PoleAtOrbitPoint, "z = " + z.str() + " hits the orbit of u");
  const LaurentElem one = LaurentElem::from_int(z.params(), 1);
  const LaurentElem dz = z - p2;
  if (dz.is_zero() && dz.is_exact()) return one;
  return one + dz * (a - b) / (zb * (p2 - a));
}

using Series = std::vector<LaurentElem>;

Series series_mul(const Series& x, const Series& y) {
  const std::size_t n = x.size();
  Series out(n, LaurentElem(x.front().params()));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero() && x[i].is_exact()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

std::vector<LaurentElem> evaluate(const std::vector<OrbitPair>& orb, const LaurentElem& p2,
                                  const LaurentElem& z) {
  std::vector<LaurentElem> out;
  out.reserve(orb.size());
  for (const auto& op : orb) out.push_back(factor(z, p2, op));
  return out;
}

}  // namespace

void validate(const ThetaConfig& cfg) {
  const GroupData& g = cfg.group;
  if (g.r() < 2) throw Error(ErrorKind::NotNormalForm, "need two generators");
  const End& p1 = g.generators[0].fixed_point;
  if (p1.is_infinite() || !p1.value().is_zero()) throw Error(ErrorKind::NotNormalForm, "P_1 != 0");
  const End& q2 = g.generators[1].fixed_point;
  if (q2.is_infinite() || q2.value().is_zero()) throw Error(ErrorKind::NotNormalForm, "P_2 not in K^x");
  const std::int64_t v2 = q2.value().ord();
  for (int i = 0; i < g.r(); ++i) {
    if (i == 1) continue;
    const End& pi = g.generators[static_cast<std::size_t>(i)].fixed_point;
    if (pi.is_infinite() || pi.value().ord() <= v2)
      throw Error(ErrorKind::NotNormalForm, "|P_" + std::to_string(i + 1) + "| >= |P_2|");
  }
  if (cfg.u.ord() != v2 || (cfg.u - q2.value()).ord() != v2)
    throw Error(ErrorKind::NotNormalForm, "|u| = |u - P_2| = |P_2| fails");
  if (cfg.L < 0) throw Error(ErrorKind::InvalidArgument, "negative word cutoff");
}

std::optional<LaurentElem> choose_u(const GroupData& g, int L) {
  const FieldParams& params = g.params();
  const End& q2 = g.generators[1].fixed_point;
  if (q2.is_infinite()) return std::nullopt;
  for (Fq c = 2; c < params.residue().q(); ++c) {
    const LaurentElem u = q2.value() * LaurentElem::monomial(params, c, 0);
    try {
      if (huti_check(g, End::at(u), L).ok) return u;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionViolated) throw;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

ThetaConfig make_theta_config(const GroupData& g, int L, std::int64_t prec) {
  PrecisionScope scope(prec);
  GroupData framed = standard_frame(g).first;
  auto u = choose_u(framed, L);
  if (!u) throw Error(ErrorKind::NotNormalForm, "no admissible u in " + g.params().describe());
  return ThetaConfig{std::move(framed), *u, L, prec};
}

LaurentElem theta_alpha(const ThetaConfig& cfg) {
  validate(cfg);
  PrecisionScope scope(cfg.prec);
  return alpha_from(orbit(cfg, cfg.L), cfg.p2());
}

LaurentElem theta_x(const ThetaConfig& cfg, const LaurentElem& z) {
  validate(cfg);
  PrecisionScope scope(cfg.prec);
  LaurentElem x = LaurentElem::from_int(z.params(), 1);
  for (const auto& f : evaluate(orbit(cfg, cfg.L), cfg.p2(), z)) x *= f;
  return x;
}

SeriesExpansion expand_at(const ThetaConfig& cfg, int i, int order, bool saturate) {
  validate(cfg);
  if (i != 1 && i != 2) throw Error(ErrorKind::InvalidArgument, "expansion centre must be 1 or 2");
  if (order < cfg.group.p) throw Error(ErrorKind::InvalidArgument, "order below p");
  PrecisionScope scope(cfg.prec);
  const FieldParams& params = cfg.group.params();
  const LaurentElem centre = cfg.group.generators[static_cast<std::size_t>(i - 1)].fixed_point.value();
  const auto orb = orbit(cfg, cfg.L, saturate ? i - 1 : -1);
  const std::size_t n = static_cast<std::size_t>(order) + 1;

  SeriesExpansion out{i, Series(n, LaurentElem(params)), alpha_from(orb, cfg.p2()), 0};
  out.c[0] = LaurentElem::from_int(params, 1);
  bool first = true;
  for (const auto& op : orb) {
    const LaurentElem& a = op.a.value();
    const LaurentElem& b = op.b.value();
    const LaurentElem pb = centre - b;
    if (pb.is_zero()) throw Error(ErrorKind::RadiusViolation, "w(u) lies at P_" + std::to_string(i));
    out.radius_val = first ? pb.ord() : std::max(out.radius_val, pb.ord());
    first = false;
    // (z - A)/(z - B) = u_0 + sum_{k>=1} (-1)^k (u_0 - 1) / (P - B)^k (z - P)^k.
    Series s(n, LaurentElem(params));
    const LaurentElem pa = centre - a;
    s[0] = (pa.is_zero() && pa.is_exact()) ? LaurentElem(params) : pa / pb;
    const LaurentElem inv = LaurentElem::from_int(params, 1) / pb;
    LaurentElem term = s[0] - LaurentElem::from_int(params, 1);
    for (std::size_t k = 1; k < n; ++k) {
      term = -(term * inv);
      s[k] = term;
    }
    out.c = series_mul(out.c, s);
  }
  return out;
}

LambdaRecovery recover_lambda(const ThetaConfig& cfg) {
  validate(cfg);
  const auto& gen2 = cfg.group.generators[1];
  if (!gen2.eta_form) throw Error(ErrorKind::NotNormalForm, "s_2 has no eta form");
  const LaurentElem one = LaurentElem::from_int(cfg.group.params(), 1);
  if (!cfg.group.generators[0].matrix.equals(Moebius(one, LaurentElem(cfg.group.params()), one, one)))
    throw Error(ErrorKind::NotNormalForm, "s_1 is not [[1,0],[1,1]]");
  const int p = cfg.group.p;
  const SeriesExpansion e1 = expand_at(cfg, 1, p);
  const SeriesExpansion e2 = expand_at(cfg, 2, p);
  PrecisionScope scope(cfg.prec);
  const LaurentElem& p2 = cfg.p2();
  const LaurentElem& eta = gen2.eta_form->second;
  const LaurentElem k = -(p2 * p2) / eta;
  const auto pp = static_cast<std::size_t>(p);
  return LambdaRecovery{theta_alpha(cfg), e1.alpha * e1.c[pp], k.pow(p) * e2.alpha * e2.c[pp], eta};
}

std::pair<Valu, Valu> lambda_bounds(const LaurentElem& eta, const LaurentElem& p2, int p) {
  if (eta.is_zero() || p2.is_zero()) throw Error(ErrorKind::InvalidArgument, "eta and P_2 must be nonzero");
  const Valu ve = eta.valuation();
  const Valu v2 = p2.valuation();
  if (!(ve < Valu(0))) throw Error(ErrorKind::NonNegativeEtaValuation, "val(eta) = " + ve.str());
  const Valu pv(p);
  return {(pv - Valu(1)) * ve - pv * v2, -pv * ve + pv * v2};
}

StabilityReport stability(const ThetaConfig& cfg) {
  StabilityReport rep{cfg.L, std::nullopt, std::nullopt, std::nullopt};
  if (cfg.L < 2) return rep;
  ThetaConfig prev = cfg;
  prev.L = cfg.L - 2;
  const LambdaRecovery a = recover_lambda(cfg);
  const LambdaRecovery b = recover_lambda(prev);
  auto margin = [](const LaurentElem& x, const LaurentElem& y) -> std::optional<std::int64_t> {
    const LaurentElem d = x - y;
    if (d.is_zero()) return std::nullopt;
    return d.ord();
  };
  rep.alpha_margin = margin(a.alpha, b.alpha);
  rep.lambda1_margin = margin(a.lambda1, b.lambda1);
  rep.lambda2_margin = margin(a.lambda2, b.lambda2);
  return rep;
}

}  // namespace mumford
