#include "mumford/groups.hpp"

#include <algorithm>
#include <map>

#include "mumford/error.hpp"

namespace mumford {

namespace {

LaurentElem one_of(const FieldParams& params) { return LaurentElem::from_int(params, 1); }

// eta of a parabolic fixing the finite nonzero point p2.
LaurentElem eta_of(const Moebius& g, const LaurentElem& p2) {
  const LaurentElem lambda = g.a() - g.c() * p2;
  return -(g.c() * p2 * p2) / lambda;
}

std::int64_t ord_of(const End& z) {
  return z.is_infinite() ? -kExactPrec : z.value().ord();
}

}  // namespace

WordNF WordNF::inverse(int p) const {
  WordNF out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.emplace_back(it->first, p - it->second);
  return out;
}

WordNF WordNF::times(const WordNF& o, int p) const {
  WordNF out = *this;
  std::size_t k = 0;
  while (k < o.letters.size()) {
    if (out.letters.empty() || out.letters.back().first != o.letters[k].first) break;
    const int n = (out.letters.back().second + o.letters[k].second) % p;
    ++k;
    if (n == 0) {
      out.letters.pop_back();
    } else {
      out.letters.back().second = n;
      break;
    }
  }
  out.letters.insert(out.letters.end(), o.letters.begin() + static_cast<std::ptrdiff_t>(k),
                     o.letters.end());
  return out;
}

std::string WordNF::str() const {
  if (letters.empty()) return "1";
  std::string s;
  for (const auto& [i, n] : letters) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(i + 1) + "^" + std::to_string(n);
  }
  return s;
}

ParabolicGen make_parabolic(const End& fixed, const LaurentElem& eta) {
  if (eta.is_zero()) throw Error(ErrorKind::NotParabolic, "eta = 0 gives the identity");
  const FieldParams& params = eta.params();
  const LaurentElem one = one_of(params);
  const LaurentElem zero(params);
  if (fixed.is_infinite())
    return ParabolicGen{Moebius(one, eta, zero, one), fixed, std::nullopt};
  const LaurentElem& p = fixed.value();
  if (p.is_zero()) return ParabolicGen{Moebius(one, zero, eta, one), fixed, std::nullopt};
  return ParabolicGen{Moebius(p * (p - eta), eta * p * p, -eta, p * (p + eta)), fixed,
                      std::make_pair(p, eta)};
}

ParabolicGen parabolic_from_matrix(const Moebius& g) {
  if (!is_parabolic(g)) throw Error(ErrorKind::NotParabolic, "matrix is not parabolic");
  if (!g.pow(g.params().p()).is_identity())
    throw Error(ErrorKind::NotParabolic, "matrix does not have order p");
  const End fixed = parabolic_fixed_point(g);
  ParabolicGen out{g, fixed, std::nullopt};
  if (!fixed.is_infinite() && !fixed.value().is_zero())
    out.eta_form = std::make_pair(fixed.value(), eta_of(g, fixed.value()));
  return out;
}

GroupData make_group(std::vector<ParabolicGen> gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "no generators");
  const FieldParams params = gens.front().matrix.params();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i].matrix.params() == params))
      throw Error(ErrorKind::ParamsMismatch, "generators over different fields");
    for (std::size_t j = 0; j < i; ++j)
      if (same_end(gens[i].fixed_point, gens[j].fixed_point))
        throw Error(ErrorKind::DuplicatePoints, "generators share a fixed point");
  }
  GroupData g{params.p(), std::move(gens), false, std::nullopt};
  const End& p1 = g.generators.front().fixed_point;
  g.p1_is_zero = !p1.is_infinite() && p1.value().is_zero();
  return g;
}

std::uint64_t word_count(int r, int p, int length) {
  if (length == 0) return 1;
  std::uint64_t n = static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(p - 1);
  for (int m = 1; m < length; ++m) n *= static_cast<std::uint64_t>(r - 1) * static_cast<std::uint64_t>(p - 1);
  return n;
}

std::vector<WordNF> enumerate_words(int r, int p, int max_length) {
  std::vector<WordNF> out{WordNF{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (int i = 0; i < r; ++i) {
        if (!out[k].empty() && out[k].letters.back().first == i) continue;
        for (int n = 1; n < p; ++n) {
          WordNF w = out[k];
          w.letters.emplace_back(i, n);
          out.push_back(std::move(w));
        }
      }
    begin = end;
  }
  return out;
}

std::vector<WordNF> enumerate_words(const GroupData& g, int max_length) {
  return enumerate_words(g.r(), g.p, max_length);
}

Moebius eval_word(const GroupData& g, const WordNF& w) {
  Moebius out = Moebius::identity(g.params());
  for (const auto& [i, n] : w.letters) {
    if (i < 0 || i >= g.r() || n < 1 || n >= g.p)
      throw Error(ErrorKind::InvalidArgument, "letter outside the free product: " + w.str());
    out = out * g.generators[static_cast<std::size_t>(i)].matrix.pow(n);
  }
  return out;
}

std::vector<WordNF> schottky_gens(const GroupData& g) {
  std::vector<WordNF> out;
  for (int i = 0; i + 1 < g.r(); ++i)
    for (int n = 1; n < g.p; ++n) out.push_back(WordNF{{{i, n}, {i + 1, g.p - n}}});
  return out;
}

std::int64_t mirror_metric(const GroupData& g) {
  std::int64_t total = 0;
  for (int i = 0; i < g.r(); ++i)
    for (int j = i + 1; j < g.r(); ++j)
      total += 2 * mirror_distance(g.generators[i].matrix, g.generators[j].matrix).distance;
  return total;
}

namespace {

struct MirrorData {
  // xi[m][j] and the first edge e_m(j) from xi_m(j) towards xi_j(m).
  std::vector<std::vector<std::optional<TreeVertex>>> xi;
  std::vector<std::vector<std::optional<TreeEdge>>> first_edge;
  std::vector<std::vector<std::vector<TreeVertex>>> paths;
  std::int64_t max_distance = 0;
};

MirrorData mirror_data(const GroupData& g) {
  const std::size_t r = g.generators.size();
  MirrorData d;
  d.xi.assign(r, std::vector<std::optional<TreeVertex>>(r));
  d.first_edge.assign(r, std::vector<std::optional<TreeEdge>>(r));
  d.paths.assign(r, std::vector<std::vector<TreeVertex>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const MirrorDistance md = mirror_distance(g.generators[i].matrix, g.generators[j].matrix);
      d.max_distance = std::max(d.max_distance, md.distance);
      d.xi[i][j] = md.xi1;
      d.xi[j][i] = md.xi2;
      std::vector<TreeVertex> path = path_vertices(md.xi1, md.xi2);
      d.first_edge[i][j] = make_edge(path[0], path[1]);
      d.first_edge[j][i] = make_edge(path[path.size() - 1], path[path.size() - 2]);
      d.paths[j][i] = std::vector<TreeVertex>(path.rbegin(), path.rend());
      d.paths[i][j] = std::move(path);
    }
  return d;
}

struct Folding {
  std::size_t m;
  int n;
  std::size_t k;
  std::size_t l;
};

std::optional<Folding> find_folding(const GroupData& g, const MirrorData& d) {
  const std::size_t r = g.generators.size();
  for (std::size_t m = 0; m < r; ++m)
    for (int n = 1; n < g.p; ++n) {
      const Moebius sn = g.generators[m].matrix.pow(n);
      for (std::size_t l = 0; l < r; ++l) {
        if (l == m) continue;
        const TreeEdge image = apply_moebius(sn, *d.first_edge[m][l]);
        for (std::size_t k = 0; k < r; ++k) {
          if (k == m || *d.first_edge[m][k] == *d.first_edge[m][l]) continue;
          if (image == *d.first_edge[m][k]) return Folding{m, n, k, l};
        }
      }
    }
  return std::nullopt;
}

// Foldings among all edges of the connecting paths, used as a cross-check.
bool hull_has_folding(const GroupData& g, const MirrorData& d) {
  std::vector<TreeEdge> edges;
  for (const auto& row : d.paths)
    for (const auto& path : row)
      for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        TreeEdge e = make_edge(path[t], path[t + 1]);
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(std::move(e));
      }
  for (const auto& gen : g.generators)
    for (int n = 1; n < g.p; ++n) {
      const Moebius sn = gen.matrix.pow(n);
      for (const auto& e : edges) {
        const TreeEdge image = apply_moebius(sn, e);
        if (!(image == e) && std::find(edges.begin(), edges.end(), image) != edges.end()) return true;
      }
    }
  return false;
}

}  // namespace

NormalizeResult normalize_generators(const GroupData& input, std::int64_t radius) {
  const std::size_t r = input.generators.size();
  NormalizeResult res{input, 0, {}, std::vector<WordNF>(r)};
  if (r < 2) {
    res.metric_trace.push_back(0);
    return res;
  }
  for (;;) {
    GroupData& g = res.group;
    const MirrorData d = mirror_data(g);
    const std::int64_t metric = mirror_metric(g);
    if (!res.metric_trace.empty() && metric >= res.metric_trace.back())
      throw Error(ErrorKind::AssertionFailed, "mirror metric did not decrease");
    res.metric_trace.push_back(metric);
    const std::int64_t limit = radius > 0 ? radius : 2 * d.max_distance;
    if (d.max_distance > limit)
      throw Error(ErrorKind::SearchRadiusExceeded,
                  "mirror distance " + std::to_string(d.max_distance) + " exceeds radius " +
                      std::to_string(limit));
    const std::optional<Folding> f = find_folding(g, d);
    if (!f) {
      if (hull_has_folding(g, d))
        throw Error(ErrorKind::AssertionFailed, "folding on hull edges not visible at mirrors");
      return res;
    }
    // I_l: indices whose first edge out of M(s_m) coincides with e_m(l).
    const Moebius sn = g.generators[f->m].matrix.pow(f->n);
    const Moebius sn_inv = sn.inverse();
    const WordNF& cm = res.conjugators[f->m];
    const WordNF conj_m = cm.times(WordNF{{{static_cast<int>(f->m), f->n}}}, g.p).times(cm.inverse(g.p), g.p);
    std::vector<ParabolicGen> next = g.generators;
    for (std::size_t j = 0; j < r; ++j) {
      if (j == f->m || !(*d.first_edge[f->m][j] == *d.first_edge[f->m][f->l])) continue;
      next[j] = parabolic_from_matrix(sn * g.generators[j].matrix * sn_inv);
      res.conjugators[j] = conj_m.times(res.conjugators[j], g.p);
    }
    g = make_group(std::move(next));
    ++res.rewrites;
  }
}

std::pair<GroupData, Moebius> standard_frame(const GroupData& g) {
  if (g.r() < 2) throw Error(ErrorKind::InvalidArgument, "standard frame needs two generators");
  const FieldParams& params = g.params();
  const LaurentElem one = one_of(params);
  const LaurentElem zero(params);
  const MirrorDistance md = mirror_distance(g.generators[0].matrix, g.generators[1].matrix);
  const LaurentElem& p2 = md.p2;
  // Conjugating by z -> z / (x z + 1) keeps s_1; x = eps - 1/P_2 pushes P_2 to 1/eps.
  for (std::int64_t k = 1; k <= 4 * working_precision(); ++k) {
    const LaurentElem eps = LaurentElem::monomial(params, 1, k);
    const Moebius shear(one, zero, eps - one / p2, one);
    const Moebius frame = shear * md.conjugator;
    std::vector<ParabolicGen> gens;
    for (const auto& gen : g.generators) gens.push_back(parabolic_from_matrix(frame * gen.matrix * frame.inverse()));
    const End q2 = gens[1].fixed_point;
    if (q2.is_infinite()) continue;
    const std::int64_t v2 = q2.value().ord();
    bool ok = gens[1].eta_form && gens[1].eta_form->second.ord() > v2;
    for (int i = 0; ok && i < g.r(); ++i)
      if (i != 1) ok = ord_of(gens[i].fixed_point) > v2;
    if (ok) return {make_group(std::move(gens)), frame};
  }
  throw Error(ErrorKind::PrecisionExhausted, "no standard frame found within working precision");
}

HutiReport huti_check(const GroupData& g, const End& u, int max_length) {
  if (g.r() < 2) throw Error(ErrorKind::PreconditionViolated, "need at least two generators");
  const FieldParams& params = g.params();
  const End& p1 = g.generators[0].fixed_point;
  if (p1.is_infinite() || !p1.value().is_zero())
    throw Error(ErrorKind::PreconditionViolated, "P_1 = 0 fails");
  const LaurentElem one = one_of(params);
  if (!g.generators[0].matrix.equals(Moebius(one, LaurentElem(params), one, one)))
    throw Error(ErrorKind::PreconditionViolated, "s_1 = [[1,0],[1,1]] fails");
  const End& q2 = g.generators[1].fixed_point;
  if (q2.is_infinite() || q2.value().is_zero())
    throw Error(ErrorKind::PreconditionViolated, "P_2 must lie in K^x");
  const LaurentElem p2 = q2.value();
  const std::int64_t v2 = p2.ord();
  for (int i = 0; i < g.r(); ++i)
    if (i != 1 && ord_of(g.generators[i].fixed_point) <= v2)
      throw Error(ErrorKind::PreconditionViolated,
                  "|P_i| < |P_2| fails for i = " + std::to_string(i + 1));
  if (u.is_infinite() || u.value().ord() != v2 || (u.value() - p2).ord() != v2)
    throw Error(ErrorKind::PreconditionViolated, "|u| = |u - P_2| = |P_2| fails");
  const LaurentElem eta = eta_of(g.generators[1].matrix, p2);
  if (eta.ord() <= v2) throw Error(ErrorKind::PreconditionViolated, "|eta| < |P_2| fails");

  HutiReport rep{true, eta, p2, {}, 0};
  for (int item = 1; item <= 6; ++item) rep.items.push_back(HutiItem{item, true, ""});
  auto fail = [&](int item, const std::string& witness) {
    auto& it = rep.items[static_cast<std::size_t>(item - 1)];
    if (it.ok) {
      it.ok = false;
      it.witness = witness;
    }
    rep.ok = false;
  };
  for (int n = 1; n < g.p; ++n) {
    const Moebius s2n = g.generators[1].matrix.pow(n);
    const Moebius s1n = g.generators[0].matrix.pow(n);
    const std::string tag = "n=" + std::to_string(n);
    if (ord_of(s2n.apply(p1)) != eta.ord()) fail(1, tag);
    if (ord_of(s2n.apply(u)) != v2) fail(2, tag);
    if (ord_of(s1n.apply(u)) != 0) fail(3, tag);
  }
  for (const WordNF& w : enumerate_words(g, max_length)) {
    const Moebius gam = eval_word(g, w);
    ++rep.words_checked;
    for (int i = 0; i < g.r(); ++i)
      if (i != 1 && ord_of(gam.apply(g.generators[i].fixed_point)) <= v2)
        fail(4, w.str() + " at P_" + std::to_string(i + 1));
    const End gu = gam.apply(u);
    if (gu.is_infinite() || (gu.value() - p2).ord() != v2) fail(5, w.str());
    if (ord_of(gam.apply(p1)) < ord_of(gu)) fail(6, w.str());
  }
  return rep;
}

}  // namespace mumford
