#include "mumford/covering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "mumford/error.hpp"

namespace mumford {

std::strong_ordering operator<=>(const ExtVal& a, const ExtVal& b) {
  if (a.inf != b.inf) return a.inf <=> b.inf;
  if (a.inf != 0) return std::strong_ordering::equal;
  return a.v <=> b.v;
}

std::string ExtVal::str() const {
  if (inf > 0) return "inf";
  if (inf < 0) return "-inf";
  return v.str();
}

bool Interval::empty() const {
  const auto c = lo <=> hi;
  if (c > 0) return true;
  return c == 0 && (lo_open || hi_open);
}

bool Interval::contains(const ExtVal& x) const {
  const auto a = lo <=> x, b = x <=> hi;
  return (a < 0 || (a == 0 && !lo_open)) && (b < 0 || (b == 0 && !hi_open));
}

ExtVal Interval::sample() const {
  if (!lo_open) return lo;
  if (!hi_open) return hi;
  if (lo.finite() && hi.finite()) return ExtVal((lo.v + hi.v) / Valu(2));
  if (lo.finite()) return ExtVal(lo.v + Valu(1));
  if (hi.finite()) return ExtVal(hi.v - Valu(1));
  return ExtVal(Valu(0));
}

namespace {

Interval full_line() { return Interval{ExtVal::minus_inf(), ExtVal::plus_inf(), false, false}; }

Interval meet(const Interval& a, const Interval& b) {
  Interval out = a;
  if (auto c = b.lo <=> a.lo; c > 0 || (c == 0 && b.lo_open)) {
    out.lo = b.lo;
    out.lo_open = b.lo_open;
  }
  if (auto c = b.hi <=> a.hi; c < 0 || (c == 0 && b.hi_open)) {
    out.hi = b.hi;
    out.hi_open = b.hi_open;
  }
  return out;
}

// a starts no later than b.
bool starts_before(const Interval& a, const Interval& b) {
  const auto c = a.lo <=> b.lo;
  if (c != 0) return c < 0;
  return !a.lo_open && b.lo_open;
}

IntervalSet normalize(IntervalSet xs) {
  xs.erase(std::remove_if(xs.begin(), xs.end(), [](const Interval& i) { return i.empty(); }), xs.end());
  std::sort(xs.begin(), xs.end(), starts_before);
  IntervalSet out;
  for (const auto& x : xs) {
    if (!out.empty()) {
      Interval& last = out.back();
      const auto c = x.lo <=> last.hi;
      if (c < 0 || (c == 0 && !(x.lo_open && last.hi_open))) {
        if (auto d = x.hi <=> last.hi; d > 0 || (d == 0 && !x.hi_open)) {
          last.hi = x.hi;
          last.hi_open = x.hi_open;
        }
        continue;
      }
    }
    out.push_back(x);
  }
  return out;
}

Valu vdiff(const BranchData& bd, int i, int j) { return (bd.a[i] - bd.a[j]).valuation(); }

ExtVal eval_of(const LaurentElem& x) { return ExtVal(x.valuation()); }

}  // namespace

IntervalSet interval_intersect(const IntervalSet& a, const IntervalSet& b) {
  IntervalSet out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(meet(x, y));
  return normalize(std::move(out));
}

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b) {
  IntervalSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return normalize(std::move(out));
}

IntervalSet interval_complement(const IntervalSet& a) {
  IntervalSet out;
  Interval cur{ExtVal::minus_inf(), ExtVal::plus_inf(), false, false};
  for (const auto& x : normalize(a)) {
    out.push_back(Interval{cur.lo, x.lo, cur.lo_open, !x.lo_open});
    cur.lo = x.hi;
    cur.lo_open = !x.hi_open;
  }
  out.push_back(cur);
  return normalize(std::move(out));
}

ThresholdTable build_thresholds(const BranchData& bd) {
  const Verdict verdict = criterion_margins(bd);
  if (!verdict.is_mumford)
    throw Error(ErrorKind::CriterionViolated,
                "pair (" + std::to_string(verdict.witness->first + 1) + ", " +
                    std::to_string(verdict.witness->second + 1) + ") has margin " +
                    verdict.margins[verdict.witness->first][verdict.witness->second]->str());
  const int r = bd.r();
  ThresholdTable tt;
  for (int i = 0; i < r; ++i) {
    std::map<Valu, std::vector<std::string>> entries;
    const Valu li = bd.lambda[i].valuation();
    entries[li].push_back("lambda");
    for (int j = 0; j < r; ++j) {
      if (j == i) continue;
      const Valu vij = vdiff(bd, i, j);
      const Valu quotient = Valu(2) * vij - bd.lambda[j].valuation();
      entries[vij].push_back("dist");
      entries[quotient].push_back("quotient");
      // |lambda_i| < T_{i,j} < |a_i - a_j|^2 / |lambda_j| as the midpoint exponent.
      entries[(li + quotient) / Valu(2)].push_back("midpoint");
      for (int k = 0; k < r; ++k) {
        if (k == i || k == j) continue;
        const Valu vik = vdiff(bd, i, k);
        if (vij > vik) entries[(vij + vik) / Valu(2)].push_back("zeta");
      }
    }
    const Valu eps = entries.rbegin()->first + Valu(1);
    entries[eps].push_back("eps");
    std::vector<ThresholdEntry> row;
    row.push_back(ThresholdEntry{ExtVal::plus_inf(), {"sentinel"}});
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
      row.push_back(ThresholdEntry{ExtVal(it->first), it->second});
    }
    row.push_back(ThresholdEntry{ExtVal::minus_inf(), {"sentinel"}});
    tt.rows.push_back(std::move(row));
  }
  // Denominators in t-units divide 2e, so pi-units need at most ramification 2.
  std::int64_t e_used = bd.params.e();
  for (const auto& row : tt.rows)
    for (const auto& entry : row)
      if (entry.radius.finite()) e_used = std::lcm(e_used, entry.radius.v.den());
  if ((2 * bd.params.e()) % e_used != 0)
    throw Error(ErrorKind::AssertionFailed, "threshold denominators exceed 2e");
  tt.e_used = static_cast<int>(e_used);
  return tt;
}

std::vector<ValConstraint> annulus_constraints(const ThresholdTable& tt, const std::vector<int>& n) {
  std::vector<ValConstraint> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const int k = static_cast<int>(i);
    out.push_back(ValConstraint{k, tt.alpha(k, n[i] + 1), tt.alpha(k, n[i])});
  }
  return out;
}

IntervalSet branch_set(const BranchData& bd, const std::vector<ValConstraint>& cs, int k) {
  IntervalSet cur{full_line()};
  for (const auto& c : cs) {
    const Interval base{c.lo, c.hi, false, false};
    IntervalSet s;
    if (c.index == k) {
      s = {base};
    } else {
      const ExtVal v(vdiff(bd, k, c.index));
      s.push_back(meet(base, Interval{ExtVal::minus_inf(), v, false, true}));
      if (base.contains(v)) s.push_back(Interval{v, ExtVal::plus_inf(), false, false});
      s = normalize(std::move(s));
    }
    cur = interval_intersect(cur, s);
    if (cur.empty()) break;
  }
  return cur;
}

std::vector<ExtVal> tuple_at(const BranchData& bd, int k, const ExtVal& rho) {
  std::vector<ExtVal> out;
  for (int j = 0; j < bd.r(); ++j) {
    if (j == k) {
      out.push_back(rho);
      continue;
    }
    out.push_back(std::min(rho, ExtVal(vdiff(bd, k, j))));
  }
  return out;
}

std::vector<ValConstraint> Piece::constraints() const {
  std::vector<ValConstraint> out;
  out.push_back(ValConstraint{center, outer, ExtVal::plus_inf()});
  for (const auto& h : holes)
    if (h.radius.inf <= 0) out.push_back(ValConstraint{h.center, ExtVal::minus_inf(), h.radius});
  return out;
}

bool Piece::contains(const BranchData& bd, const LaurentElem& x) const {
  for (const auto& c : constraints()) {
    const ExtVal v = eval_of(x - bd.a[c.index]);
    if (v < c.lo || v > c.hi) return false;
  }
  return true;
}

std::string Piece::str() const {
  std::ostringstream os;
  os << "n=(";
  for (std::size_t i = 0; i < index.size(); ++i) os << (i ? "," : "") << index[i];
  os << ") |x-a" << center + 1 << "| <= r(" << outer.str() << ")";
  for (const auto& h : holes)
    if (h.radius.inf <= 0) os << " minus |x-a" << h.center + 1 << "| < r(" << h.radius.str() << ")";
  return os.str();
}

namespace {

bool same_sets(const BranchData& bd, const std::vector<ValConstraint>& a,
               const std::vector<ValConstraint>& b) {
  for (int k = 0; k < bd.r(); ++k) {
    const IntervalSet x = branch_set(bd, a, k), y = branch_set(bd, b, k);
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!(x[i].lo == y[i].lo && x[i].hi == y[i].hi && x[i].lo_open == y[i].lo_open &&
            x[i].hi_open == y[i].hi_open))
        return false;
  }
  return true;
}

Piece normal_form(const ThresholdTable& tt, const BranchData& bd, const std::vector<int>& n) {
  const int r = bd.r();
  // Smallest outer radius: beta = min_i alpha_{i, n_i + 1}.
  int i0 = 0;
  for (int i = 1; i < r; ++i)
    if (tt.alpha(i, n[i] + 1) > tt.alpha(i0, n[i0] + 1)) i0 = i;
  const ExtVal beta = tt.alpha(i0, n[i0] + 1);
  std::vector<Hole> cand;
  for (int i = 0; i < r; ++i)
    if (ExtVal(vdiff(bd, i, i0)) >= beta) cand.push_back(Hole{i, tt.alpha(i, n[i])});
  auto inside = [&](const Hole& h, const Hole& g) {
    // Open disk of h within the open disk of g (a radius-0 hole means its center).
    return ExtVal(vdiff(bd, h.center, g.center)) > g.radius && h.radius >= g.radius;
  };
  std::vector<Hole> kept;
  for (std::size_t s = 0; s < cand.size(); ++s) {
    bool covered = false;
    for (std::size_t t = 0; t < cand.size() && !covered; ++t) {
      if (s == t) continue;
      if (!inside(cand[s], cand[t])) continue;
      covered = !inside(cand[t], cand[s]) || t < s;
    }
    if (!covered) kept.push_back(cand[s]);
  }
  if (kept.empty()) throw Error(ErrorKind::AssertionFailed, "piece without a center");
  // d_0: smallest hole radius, then lowest index; other empty holes are dropped.
  std::size_t zero = 0;
  for (std::size_t s = 1; s < kept.size(); ++s)
    if (kept[s].radius > kept[zero].radius) zero = s;
  Piece piece{n, kept[zero].center, beta, {kept[zero]}};
  for (std::size_t s = 0; s < kept.size(); ++s)
    if (s != zero && kept[s].radius.inf <= 0) piece.holes.push_back(kept[s]);
  return piece;
}

}  // namespace

std::vector<Piece> enumerate_pieces(const ThresholdTable& tt, const BranchData& bd, PieceStats* stats) {
  const int r = bd.r();
  std::vector<Piece> out;
  PieceStats st;
  std::vector<int> n(static_cast<std::size_t>(r), 0);
  for (;;) {
    ++st.in_i;
    bool in_j = true;
    for (int i = 0; i < r && in_j; ++i)
      for (int j = i + 1; j < r && in_j; ++j) {
        const ExtVal v(vdiff(bd, i, j));
        if (v == tt.alpha(i, n[i] + 1) && v == tt.alpha(j, n[j] + 1)) in_j = false;
      }
    if (in_j) {
      ++st.in_j;
      const std::vector<ValConstraint> cs = annulus_constraints(tt, n);
      bool nonempty = false;
      for (int k = 0; k < r && !nonempty; ++k) nonempty = !branch_set(bd, cs, k).empty();
      if (nonempty) {
        ++st.nonempty;
        Piece piece = normal_form(tt, bd, n);
        if (!same_sets(bd, cs, piece.constraints()))
          throw Error(ErrorKind::AssertionFailed, "normal form differs from annuli at " + piece.str());
        out.push_back(std::move(piece));
      }
    }
    int i = 0;
    while (i < r && ++n[i] >= tt.M(i)) n[i++] = 0;
    if (i == r) break;
  }
  if (stats) *stats = st;
  return out;
}

CoverCertificate verify_cover(const std::vector<Piece>& pieces, const BranchData& bd) {
  const HullTree hull = [&] {
    std::vector<End> pts;
    for (const auto& a : bd.a) pts.push_back(End::at(a));
    pts.push_back(End::infinity(bd.params));
    return hull_tree(pts);
  }();
  CoverCertificate cert;
  for (int k = 0; k < bd.r(); ++k) {
    std::vector<CoverSegment> segs;
    IntervalSet covered;
    for (std::size_t p = 0; p < pieces.size(); ++p)
      for (const auto& iv : branch_set(bd, pieces[p].constraints(), k)) {
        segs.push_back(CoverSegment{iv, static_cast<int>(p)});
        covered = interval_union(covered, {iv});
      }
    std::sort(segs.begin(), segs.end(),
              [](const CoverSegment& a, const CoverSegment& b) { return starts_before(a.rho, b.rho); });
    cert.branches.push_back(std::move(segs));
    const IntervalSet gap = interval_complement(covered);
    if (!gap.empty() && cert.ok) {
      cert.ok = false;
      const ExtVal rho = gap.front().sample();
      cert.uncovered = tuple_at(bd, k, rho);
      cert.uncovered_branch = k;
      if (rho.finite()) {
        // Cross-check the witness against the hull parametrization.
        const auto hv = hull.tuple_on_branch(static_cast<std::size_t>(k), rho.v);
        for (std::size_t j = 0; j < hv.size(); ++j)
          if (!(ExtVal(hv[j]) == (*cert.uncovered)[j]))
            throw Error(ErrorKind::AssertionFailed, "hull tuple disagrees with branch tuple");
      }
    }
  }
  return cert;
}

ExtVal dist_to_piece(const LaurentElem& a, const Piece& piece, const BranchData& bd) {
  const ExtVal v0 = eval_of(a - bd.a[piece.center]);
  if (v0 < piece.outer) return v0;
  for (const auto& h : piece.holes) {
    if (h.radius.inf > 0) continue;
    if (eval_of(a - bd.a[h.center]) > h.radius) return h.radius;
  }
  return ExtVal::plus_inf();
}

ExtVal sup_dist(const LaurentElem& a, const Piece& piece, const BranchData& bd) {
  const ExtVal v0 = eval_of(a - bd.a[piece.center]);
  return v0 < piece.outer ? v0 : piece.outer;
}

ExtVal sup_norm_zi(const Piece& piece, const BranchData& bd, int i) {
  const ExtVal d = dist_to_piece(bd.a[i], piece, bd);
  if (d.inf > 0) return ExtVal::minus_inf();
  return ExtVal(bd.lambda[i].valuation() - d.v);
}

bool check_piece_shape(const Piece& piece, const BranchData& bd, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (piece.holes.empty() || piece.holes[0].center != piece.center) return fail("hole 0 not at d_0");
  const ExtVal rho0 = piece.holes[0].radius;
  for (std::size_t s = 0; s < piece.holes.size(); ++s) {
    const Hole& h = piece.holes[s];
    const ExtVal vc(vdiff(bd, h.center, piece.center));
    if (h.center != piece.center && vc < piece.outer) return fail("hole outside the outer ball");
    if (h.radius < piece.outer) return fail("hole radius exceeds the outer radius");
    for (std::size_t t = s + 1; t < piece.holes.size(); ++t) {
      const Hole& g = piece.holes[t];
      if (h.radius.inf > 0 || g.radius.inf > 0) continue;
      if (ExtVal(vdiff(bd, h.center, g.center)) > std::min(h.radius, g.radius))
        return fail("holes overlap");
    }
    if (s == 0) continue;
    if (!(h.radius == vc)) return fail("hole radius differs from |d_0 - d_nu|");
    if (!(vc == rho0) && !(vc == piece.outer)) return fail("|d_0 - d_nu| is neither |b_1| nor |b_2|");
  }
  return true;
}

std::string to_string(ReductionCase c) {
  switch (c) {
    case ReductionCase::LambdaEmpty: return "LAMBDA_EMPTY";
    case ReductionCase::SmallB2: return "SMALL_B2";
    case ReductionCase::BigB1: return "BIG_B1";
  }
  return "?";
}

std::string to_string(RingShape s) {
  switch (s) {
    case RingShape::SplitSheets: return "SPLIT_SHEETS";
    case RingShape::NodalSplit: return "NODAL_SPLIT";
    case RingShape::RationalGraph: return "RATIONAL_GRAPH";
    case RingShape::NodePair: return "NODE_PAIR";
    case RingShape::SmoothGm: return "SMOOTH_GM";
    case RingShape::Line: return "LINE";
  }
  return "?";
}

namespace {

// x * y / z^2 in scaled form; any factor may be a pure power with lead 1.
ScaledValue scaled_product(const ScaledValue& x, const ScaledValue& y, bool y_inverse,
                           const LaurentElem* z_sq_inv, const GaloisField& k) {
  ScaledValue out;
  const ExtVal yv = y_inverse ? (y.val.inf != 0 ? ExtVal{} : ExtVal(-y.val.v)) : y.val;
  if (y_inverse && y.val.inf != 0) {
    out.val = y.val.inf > 0 ? ExtVal::minus_inf() : ExtVal::plus_inf();
    return out;
  }
  if (yv.inf != 0) {
    out.val = yv;
    return out;
  }
  Valu v = x.val.v + yv.v;
  Fq lead = k.mul(x.lead, y_inverse ? k.inv(y.lead) : y.lead);
  if (z_sq_inv) {
    v = v - Valu(2) * z_sq_inv->valuation();
    const Fq zl = z_sq_inv->leading_coeff();
    lead = k.div(lead, k.mul(zl, zl));
  }
  out.val = ExtVal(v);
  out.lead = lead;
  return out;
}

Fq residue_of(const ScaledValue& x) { return x.val.finite() && x.val.v == Valu(0) ? x.lead : 0; }

// Reduction of {|b_1| <= |z| <= |b_2|}: a line when b_1 = 0 or b_2 = infinity,
// otherwise st = residue(b_1 / b_2).
std::pair<Poly, Poly> annulus_curve(const ScaledValue& b1, const ScaledValue& b2, const GaloisField& k) {
  if (b1.val.inf > 0 || b2.val.inf < 0) return {Poly{k.one()}, Poly{}};
  const Fq c = b1.val == b2.val ? k.div(b1.lead, b2.lead) : 0;
  return {Poly{0, k.one()}, Poly{k.neg(c)}};
}

Poly artin_schreier_poly(const GaloisField& k) {
  Poly a(static_cast<std::size_t>(k.p()) + 1, 0);
  a[1] = k.neg(k.one());
  a[static_cast<std::size_t>(k.p())] = k.one();
  return a;
}

}  // namespace

ReductionReport classify_reduction(const Piece& piece, const BranchData& bd) {
  const GaloisField& k = bd.params.residue();
  const int r = bd.r();
  ReductionReport rep;
  rep.b1 = ScaledValue{piece.holes[0].radius, k.one()};
  rep.b2 = ScaledValue{piece.outer, k.one()};

  std::vector<ExtVal> dist(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    dist[i] = dist_to_piece(bd.a[i], piece, bd);
    if (!(dist[i] == rep.b1.val) && dist[i] > rep.b2.val) rep.dist_split = false;
    if (dist[i] >= ExtVal(bd.lambda[i].valuation())) rep.lambda_set.push_back(i);
  }
  if (rep.lambda_set.empty()) {
    rep.reduction_case = ReductionCase::LambdaEmpty;
    rep.ring_shape = RingShape::SplitSheets;
    rep.ring = "O(U)~[y]/(y^p - y)";
    auto [a, b] = annulus_curve(rep.b1, rep.b2, k);
    rep.curve = analyse_linear_curve(k, a, b);
    rep.sheets_separable = is_separable(k, artin_schreier_poly(k));
    rep.passes_condition = rep.dist_split && rep.curve.passes() && rep.sheets_separable;
    return rep;
  }

  int m = rep.lambda_set.front();
  for (int i : rep.lambda_set)
    if (dist[i] > dist[m]) m = i;
  for (int i : rep.lambda_set)
    if (i != m && dist[i] == dist[m])
      throw Error(ErrorKind::MultipleMinimizers,
                  "a_" + std::to_string(i + 1) + " and a_" + std::to_string(m + 1) +
                      " are equally close to " + piece.str());
  rep.m = m;

  const ExtVal sup_m = sup_dist(bd.a[m], piece, bd);
  LaurentElem c(bd.params);
  for (int i : rep.lambda_set) {
    if (i == m) continue;
    const Valu vim = vdiff(bd, i, m);
    if (!sup_m.finite() || !dist[i].finite()) {
      rep.tail_small = false;
    } else if (!(bd.lambda[i].valuation() + sup_m.v - dist[i].v - vim > Valu(0))) {
      rep.tail_small = false;
    }
    c -= bd.lambda[i] / (bd.a[i] - bd.a[m]);
  }
  rep.c = c;

  const ScaledValue lam{ExtVal(bd.lambda[m].valuation()), bd.lambda[m].leading_coeff()};
  LaurentElem cp(bd.params);
  if (dist[m] == rep.b1.val) {
    rep.b1p = scaled_product(lam, rep.b2, true, nullptr, k);
    rep.b2p = scaled_product(lam, rep.b1, true, nullptr, k);
  } else {
    const LaurentElem am_d0 = bd.a[m] - bd.a[piece.center];
    rep.b1p = rep.b1.val.inf > 0 ? ScaledValue{ExtVal::plus_inf(), 0}
                                 : scaled_product(lam, rep.b1, false, &am_d0, k);
    rep.b2p = rep.b2.val.inf < 0 ? ScaledValue{ExtVal::minus_inf(), 0}
                                 : scaled_product(lam, rep.b2, false, &am_d0, k);
    cp = bd.lambda[m] / am_d0;
  }
  rep.cp = cp;
  rep.c_second = artin_schreier_solve(c - cp);

  const ExtVal unit(Valu(0));
  const bool small = rep.b2p.val >= unit;
  const bool big = rep.b1p.val <= unit;
  rep.b_ordered = rep.b1p.val >= rep.b2p.val && (small || big);
  Poly a, b;
  if (small) {
    rep.reduction_case = ReductionCase::SmallB2;
    if (rep.b2p.val > unit) {
      rep.ring_shape = RingShape::SplitSheets;
      rep.ring = "k[s,t,y']/(st - c, y'^p - y')";
      std::tie(a, b) = annulus_curve(rep.b1p, rep.b2p, k);
      rep.sheets_separable = is_separable(k, artin_schreier_poly(k));
    } else {
      rep.residue_parameter = residue_of(rep.b1p);
      rep.ring_shape = rep.residue_parameter == 0 ? RingShape::NodalSplit : RingShape::RationalGraph;
      rep.ring = "k[t,y']/(t(y'^p - y') - c)";
      a = artin_schreier_poly(k);
      b = Poly{k.neg(rep.residue_parameter)};
    }
  } else if (big) {
    rep.reduction_case = ReductionCase::BigB1;
    if (rep.b2p.val.inf < 0) {
      // t(1 - xi'^(p-1) w^(p-1)) - w^p with xi'^p = 1/b_1'.
      const Fq r1 = residue_of(rep.b1p);
      const Fq xi1 = r1 == 0 ? 0 : k.frobenius_root(k.inv(r1));
      rep.residue_parameter = xi1;
      rep.ring_shape = RingShape::Line;
      rep.ring = "k[t,w]/(t(1 - xi'^(p-1) w^(p-1)) - w^p)";
      a.assign(static_cast<std::size_t>(k.p()), 0);
      a[0] = k.one();
      a[static_cast<std::size_t>(k.p() - 1)] = k.neg(k.pow(xi1, k.p() - 1));
      b.assign(static_cast<std::size_t>(k.p()) + 1, 0);
      b[static_cast<std::size_t>(k.p())] = k.neg(k.one());
    } else {
      // y''w - residue(xi / xi') with (xi / xi')^p = b_1' / b_2'.
      const Fq ratio = rep.b1p.val == rep.b2p.val ? k.div(rep.b1p.lead, rep.b2p.lead) : 0;
      rep.residue_parameter = ratio == 0 ? 0 : k.frobenius_root(ratio);
      rep.ring_shape = rep.residue_parameter == 0 ? RingShape::NodePair : RingShape::SmoothGm;
      rep.ring = "k[y'',w]/(y''w - c)";
      a = Poly{0, k.one()};
      b = Poly{k.neg(rep.residue_parameter)};
    }
  } else {
    rep.note = "b_1', b_2' straddle the unit circle";
    rep.passes_condition = false;
    return rep;
  }
  rep.curve = analyse_linear_curve(k, a, b);
  rep.passes_condition = rep.dist_split && rep.tail_small && rep.b_ordered && rep.curve.passes() &&
                         rep.sheets_separable;
  return rep;
}

}  // namespace mumford
