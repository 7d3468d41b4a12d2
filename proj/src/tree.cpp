#include "mumford/tree.hpp"

#include <algorithm>
#include <set>

#include "mumford/error.hpp"

namespace mumford {

namespace {

std::int64_t ord_diff(const LaurentElem& a, const LaurentElem& b) { return (a - b).ord(); }

// ord(x - y) that is reliable up to `need`; throws when the difference vanishes
// only to a precision below it.
std::int64_t ord_diff_upto(const LaurentElem& x, const LaurentElem& y, std::int64_t need) {
  const LaurentElem d = x - y;
  if (d.is_zero() && !d.is_exact() && d.prec() < need)
    throw Error(ErrorKind::InsufficientPrecision, "difference vanishes only to precision");
  return d.ord();
}

Valu to_valu(std::int64_t ord, int e) {
  if (ord >= kExactPrec) return Valu::infinity();
  return Valu(ord, e);
}

std::int64_t min_ord(const LaurentElem& a, const LaurentElem& b) { return std::min(a.ord(), b.ord()); }

}  // namespace

bool TreeVertex::contains(const LaurentElem& x) const { return ord_diff(x, center) >= level; }

std::string TreeVertex::str() const {
  return "(" + center.str() + ", " + std::to_string(level) + ")";
}

TreeVertex vertex_canonical(const LaurentElem& a, std::int64_t level) {
  if (a.prec() < level)
    throw Error(ErrorKind::InsufficientPrecision,
                "center known to pi^" + std::to_string(a.prec()) + ", level " +
                    std::to_string(level));
  return TreeVertex{a.reduced_mod(level), level};
}

TreeVertex base_vertex(const FieldParams& params) { return TreeVertex{LaurentElem(params), 0}; }

std::int64_t distance(const TreeVertex& v, const TreeVertex& w) {
  const std::int64_t common = std::min({v.level, w.level, ord_diff(v.center, w.center)});
  return v.level + w.level - 2 * common;
}

TreeVertex meet_vertex(const End& a, const End& b, const End& c) {
  if (same_end(a, b) || same_end(a, c) || same_end(b, c))
    throw Error(ErrorKind::CoincidentEnds, "meet of coincident ends");
  std::vector<const End*> fin;
  for (const End* x : {&a, &b, &c})
    if (!x->is_infinite()) fin.push_back(x);
  if (fin.size() == 2) {
    const LaurentElem& x = fin[0]->value();
    return vertex_canonical(x, ord_diff(x, fin[1]->value()));
  }
  const LaurentElem& x = a.value();
  const LaurentElem& y = b.value();
  const LaurentElem& z = c.value();
  const std::int64_t vxy = ord_diff(x, y), vxz = ord_diff(x, z), vyz = ord_diff(y, z);
  const std::int64_t top = std::max({vxy, vxz, vyz});
  return vertex_canonical(vyz == top ? y : x, top);
}

TreeVertex meet_vertex(const End& a, const End& b, const TreeVertex& w) {
  if (same_end(a, b)) throw Error(ErrorKind::CoincidentEnds, "geodesic of coincident ends");
  if (a.is_infinite() || b.is_infinite()) {
    const LaurentElem& x = a.is_infinite() ? b.value() : a.value();
    return vertex_canonical(x, std::min(w.level, ord_diff_upto(w.center, x, w.level)));
  }
  const LaurentElem& x = a.value();
  const LaurentElem& y = b.value();
  const std::int64_t join = ord_diff(x, y);
  const std::int64_t la = std::min(w.level, ord_diff_upto(w.center, x, w.level));
  const std::int64_t lb = std::min(w.level, ord_diff_upto(w.center, y, w.level));
  if (la > join) return vertex_canonical(x, la);
  if (lb > join) return vertex_canonical(y, lb);
  return vertex_canonical(x, join);
}

TreeVertex apply_moebius(const Moebius& g, const TreeVertex& v) {
  const FieldParams& params = g.params();
  const LaurentElem pin = LaurentElem::monomial(params, 1, v.level);
  // Columns of g * [[pi^level, center], [0, 1]].
  const LaurentElem x1 = g.a() * pin, x2 = g.a() * v.center + g.b();
  const LaurentElem y1 = g.c() * pin, y2 = g.c() * v.center + g.d();
  const LaurentElem det = g.det() * pin;
  if (det.is_zero()) throw Error(ErrorKind::InsufficientPrecision, "determinant lost");
  const bool use_second = y1.is_zero() || (!y2.is_zero() && y2.ord() <= y1.ord());
  const LaurentElem& pivot = use_second ? y2 : y1;
  const LaurentElem& top = use_second ? x2 : x1;
  if (pivot.is_zero()) throw Error(ErrorKind::InsufficientPrecision, "lattice column lost");
  return vertex_canonical(top / pivot, det.ord() - 2 * pivot.ord());
}

bool is_fixed(const Moebius& g, const TreeVertex& v) {
  const FieldParams& params = g.params();
  const LaurentElem pin = LaurentElem::monomial(params, 1, v.level);
  const LaurentElem& c = v.center;
  // [[1, -c], [0, pi^n]] g [[pi^n, c], [0, 1]]
  const LaurentElem e11 = (g.a() - c * g.c()) * pin;
  const LaurentElem e12 = g.a() * c + g.b() - c * (g.c() * c + g.d());
  const LaurentElem e21 = g.c() * pin * pin;
  const LaurentElem e22 = (g.c() * c + g.d()) * pin;
  const std::int64_t m = std::min(min_ord(e11, e12), min_ord(e21, e22));
  return 2 * m == g.det().ord() + 2 * v.level;
}

std::vector<TreeVertex> path_vertices(const TreeVertex& v, const TreeVertex& w) {
  const std::int64_t top = std::min({v.level, w.level, ord_diff(v.center, w.center)});
  std::vector<TreeVertex> out;
  for (std::int64_t n = v.level; n >= top; --n) out.push_back(vertex_canonical(v.center, n));
  for (std::int64_t n = top + 1; n <= w.level; ++n) out.push_back(vertex_canonical(w.center, n));
  return out;
}

TreeEdge make_edge(const TreeVertex& v, const TreeVertex& w) {
  if (distance(v, w) != 1) throw Error(ErrorKind::InvalidArgument, "vertices are not adjacent");
  return v.level > w.level ? TreeEdge{v, w} : TreeEdge{w, v};
}

TreeEdge apply_moebius(const Moebius& g, const TreeEdge& e) {
  return make_edge(apply_moebius(g, e.lower), apply_moebius(g, e.upper));
}

std::vector<TreeVertex> neighbours(const TreeVertex& v) {
  const FieldParams& params = v.center.params();
  const GaloisField& k = params.residue();
  std::vector<TreeVertex> out;
  out.push_back(vertex_canonical(v.center, v.level - 1));
  for (std::uint32_t c = 0; c < k.q(); ++c)
    out.push_back(TreeVertex{v.center + LaurentElem::monomial(params, c, v.level), v.level + 1});
  return out;
}

Geodesic::Geodesic(End a, End b) : a_(std::move(a)), b_(std::move(b)) {
  if (same_end(a_, b_)) throw Error(ErrorKind::CoincidentEnds, "geodesic of coincident ends");
  if (!a_.is_infinite() && !b_.is_infinite()) join_ = ord_diff(a_.value(), b_.value());
}

TreeVertex Geodesic::at(std::int64_t s) const {
  if (b_.is_infinite()) return vertex_canonical(a_.value(), s);
  if (a_.is_infinite()) return vertex_canonical(b_.value(), -s);
  if (s >= 0) return vertex_canonical(a_.value(), join_ + s);
  return vertex_canonical(b_.value(), join_ - s);
}

bool is_parabolic(const Moebius& g) {
  if (g.is_identity()) return false;
  const LaurentElem disc = (g.a() - g.d()) * (g.a() - g.d()) +
                           LaurentElem::from_int(g.params(), 4) * g.b() * g.c();
  return disc.is_zero();
}

End parabolic_fixed_point(const Moebius& g) {
  if (!is_parabolic(g)) throw Error(ErrorKind::NotParabolic, "element is not parabolic");
  const FieldParams& params = g.params();
  // Eigenvalue lambda with lambda^2 = det and 2 lambda = trace.
  LaurentElem lambda(params);
  if (params.p() == 2) {
    lambda = g.det().frobenius_root();
  } else {
    lambda = (g.a() + g.d()) / LaurentElem::from_int(params, 2);
  }
  const LaurentElem u1 = g.b(), u2 = lambda - g.a();
  const LaurentElem w1 = lambda - g.d(), w2 = g.c();
  const bool first = min_ord(u1, u2) <= min_ord(w1, w2);
  const LaurentElem& num = first ? u1 : w1;
  const LaurentElem& den = first ? u2 : w2;
  if (den.is_zero()) {
    if (!den.is_exact())
      throw Error(ErrorKind::InsufficientPrecision, "fixed point undetermined to precision");
    return End::infinity(params);
  }
  return End::at(num / den);
}

namespace {

// Coordinate change sending p1 to 0 and p2 to a finite nonzero point.
Moebius separate_ends(const End& p1, const End& p2) {
  const FieldParams& params = p1.params();
  const LaurentElem one = LaurentElem::from_int(params, 1);
  const LaurentElem zero(params);
  if (p1.is_infinite()) return Moebius(zero, one, one, one - p2.value());
  if (p2.is_infinite()) return Moebius(one, -p1.value(), one, one - p1.value());
  return Moebius(one, -p1.value(), zero, one);
}

}  // namespace

MirrorDistance mirror_distance(const Moebius& g1, const Moebius& g2) {
  const End f1 = parabolic_fixed_point(g1);
  const End f2 = parabolic_fixed_point(g2);
  if (same_end(f1, f2)) throw Error(ErrorKind::MirrorsIntersect, "common fixed point");
  const FieldParams& params = g1.params();
  const LaurentElem one = LaurentElem::from_int(params, 1);
  const LaurentElem zero(params);

  Moebius t = separate_ends(f1, f2);
  const Moebius h1 = t * g1 * t.inverse();
  // h1 = lambda [[1, 0], [c, 1]]; rescale z -> c z to reach [[1, 0], [1, 1]].
  const LaurentElem c = h1.c() / h1.a();
  t = Moebius(c, zero, zero, one) * t;
  const Moebius n2 = t * g2 * t.inverse();
  const LaurentElem p2 = t.apply(f2).value();
  // n2 = lambda (I + kappa [[-P, P^2], [-1, P]]) with lambda = A - C P, eta = kappa P^2.
  const LaurentElem lambda = n2.a() - n2.c() * p2;
  const LaurentElem eta = -(n2.c() * p2 * p2) / lambda;
  if (eta.is_zero()) throw Error(ErrorKind::NotParabolic, "second element is trivial");
  const std::int64_t d = -eta.ord();
  if (d <= 0)
    throw Error(ErrorKind::MirrorsIntersect,
                "mirrors meet (val(eta) = " + eta.valuation().str() + ")");
  // In the frame y = gamma(w), gamma = [[P, 0], [-1, P]], the closest vertices are
  // (0, 0) on the first mirror and (0, ord(eta)) on the second.
  const Moebius gamma(p2, zero, -one, p2);
  const Moebius back = (gamma * t).inverse();
  const TreeVertex xi1 = apply_moebius(back, base_vertex(params));
  const TreeVertex xi2 = apply_moebius(back, TreeVertex{LaurentElem(params), eta.ord()});
  return MirrorDistance{d, xi1, xi2, eta, p2, t};
}

GeodesicScan mirror_distance_scan(const Moebius& g1, const Moebius& g2, std::int64_t max_window) {
  const Geodesic line(parabolic_fixed_point(g1), parabolic_fixed_point(g2));
  for (std::int64_t w = 8;; w *= 2) {
    const std::int64_t window = std::min(w, max_window);
    GeodesicScan scan{0, {}, {}, true};
    for (std::int64_t s = -window; s <= window; ++s) {
      const TreeVertex v = line.at(s);
      if (is_fixed(g1, v)) scan.fixed_by_first.push_back(s);
      if (is_fixed(g2, v)) scan.fixed_by_second.push_back(s);
    }
    auto contiguous = [](const std::vector<std::int64_t>& xs) {
      return xs.empty() || xs.back() - xs.front() + 1 == static_cast<std::int64_t>(xs.size());
    };
    scan.convex = contiguous(scan.fixed_by_first) && contiguous(scan.fixed_by_second);
    const auto& a = scan.fixed_by_first;
    const auto& b = scan.fixed_by_second;
    // Each mirror reaches the window edge on its own fixed end and has an interior boundary.
    const bool resolved = !a.empty() && !b.empty() && a.back() == window && a.front() > -window &&
                          b.front() == -window && b.back() < window;
    if (resolved || window >= max_window) {
      if (!resolved)
        throw Error(ErrorKind::SearchRadiusExceeded, "mirror boundaries outside scan window");
      scan.distance = a.front() - b.back();
      if (scan.distance <= 0) throw Error(ErrorKind::MirrorsIntersect, "mirrors meet on geodesic");
      return scan;
    }
  }
}

std::vector<Valu> HullTree::tuple_on_branch(std::size_t k, const Valu& rho) const {
  const int e = points.front().params().e();
  const LaurentElem& ak = points[finite_index[k]].value();
  std::vector<Valu> out;
  for (std::size_t j = 0; j < finite_index.size(); ++j) {
    if (j == k) {
      out.push_back(rho);
      continue;
    }
    const Valu vj = to_valu(ord_diff(ak, points[finite_index[j]].value()), e);
    out.push_back(std::min(rho, vj));
  }
  return out;
}

HullTree hull_tree(const std::vector<End>& points) {
  if (points.size() < 2) throw Error(ErrorKind::InvalidArgument, "hull needs two points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (same_end(points[i], points[j]))
        throw Error(ErrorKind::DuplicatePoints,
                    "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  const FieldParams& params = points.front().params();

  // Projection of v1: closest point of the hull, found by projecting onto each
  // geodesic from the first point and keeping the nearest.
  const TreeVertex v1 = base_vertex(params);
  TreeVertex best = meet_vertex(points[0], points[1], v1);
  for (std::size_t j = 2; j < points.size(); ++j) {
    TreeVertex cand = meet_vertex(points[0], points[j], v1);
    if (distance(cand, v1) < distance(best, v1)) best = cand;
  }
  HullTree h{points, best, {best}, {}, {}};
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!points[i].is_infinite()) h.finite_index.push_back(i);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        TreeVertex m = meet_vertex(points[i], points[j], points[k]);
        if (std::find(h.nodes.begin(), h.nodes.end(), m) == h.nodes.end()) h.nodes.push_back(m);
      }
  for (std::size_t i : h.finite_index) {
    std::set<Valu> breaks;
    for (std::size_t j : h.finite_index)
      if (j != i) breaks.insert(to_valu(ord_diff(points[i].value(), points[j].value()), params.e()));
    h.branch_breaks.emplace_back(breaks.begin(), breaks.end());
  }
  return h;
}

}  // namespace mumford
