#include "mumford/residue_curve.hpp"

#include <cmath>
#include <sstream>

#include "mumford/error.hpp"

namespace mumford {

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int poly_degree(const Poly& a) {
  const Poly t = poly_trim(a);
  return static_cast<int>(t.size()) - 1;
}

Poly poly_add(const GaloisField& k, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = k.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return poly_trim(out);
}

Poly poly_sub(const GaloisField& k, const Poly& a, const Poly& b) {
  Poly nb;
  for (Fq c : b) nb.push_back(k.neg(c));
  return poly_add(k, a, nb);
}

Poly poly_mul(const GaloisField& k, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
  return poly_trim(out);
}

namespace {

std::pair<Poly, Poly> poly_divmod(const GaloisField& k, Poly a, Poly b) {
  a = poly_trim(a);
  b = poly_trim(b);
  if (b.empty()) throw Error(ErrorKind::DivisionByZeroToPrecision, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const Fq inv = k.inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const Fq c = k.mul(a[i], inv);
    q[i - (b.size() - 1)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t pos = i - (b.size() - 1) + j;
      a[pos] = k.sub(a[pos], k.mul(c, b[j]));
    }
  }
  return {poly_trim(q), poly_trim(a)};
}

Poly poly_div(const GaloisField& k, const Poly& a, const Poly& b) { return poly_divmod(k, a, b).first; }

Poly monic(const GaloisField& k, Poly a) {
  a = poly_trim(a);
  if (a.empty()) return a;
  const Fq inv = k.inv(a.back());
  for (auto& c : a) c = k.mul(c, inv);
  return a;
}

Poly embed(const Poly& a, const std::vector<Fq>& table) {
  Poly out;
  for (Fq c : a) out.push_back(table[c]);
  return out;
}

}  // namespace

Poly poly_mod(const GaloisField& k, const Poly& a, const Poly& b) { return poly_divmod(k, a, b).second; }

Poly poly_derivative(const GaloisField& k, const Poly& a) {
  Poly out;
  for (std::size_t i = 1; i < a.size(); ++i)
    out.push_back(k.mul(k.from_int(static_cast<std::int64_t>(i)), a[i]));
  return poly_trim(out);
}

Poly poly_gcd(const GaloisField& k, Poly a, Poly b) {
  a = poly_trim(a);
  b = poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

Fq poly_eval(const GaloisField& k, const Poly& a, Fq x) {
  Fq acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = k.add(k.mul(acc, x), a[i]);
  return acc;
}

Poly poly_taylor(const GaloisField& k, const Poly& a, Fq x0) {
  // Repeated synthetic division by (Y - x0).
  Poly rest = poly_trim(a);
  Poly out;
  const Poly lin{k.neg(x0), k.one()};
  while (!rest.empty()) {
    auto [q, r] = poly_divmod(k, rest, lin);
    out.push_back(r.empty() ? 0 : r[0]);
    rest = std::move(q);
  }
  return poly_trim(out);
}

bool is_separable(const GaloisField& k, const Poly& a) {
  const Poly t = poly_trim(a);
  if (poly_degree(t) <= 0) return true;
  return poly_degree(poly_gcd(k, t, poly_derivative(k, t))) == 0;
}

CurveAnalysis analyse_linear_curve(const GaloisField& k, const Poly& a_in, const Poly& b_in) {
  const Poly a = poly_trim(a_in), b = poly_trim(b_in);
  CurveAnalysis out;
  if (a.empty() && b.empty()) {
    out.all_rational = false;
    out.all_ordinary_double = false;
    return out;
  }
  const Poly g = poly_gcd(k, a, b);
  out.has_graph_component = !a.empty() && poly_degree(poly_div(k, a, g)) >= 0;
  const int want = std::max(0, poly_degree(g));
  if (want == 0) return out;

  // Locate the roots of gcd(A, B) in the smallest extension holding all of them.
  for (int deg = 1;; ++deg) {
    if (static_cast<double>(k.f()) * deg * std::log2(static_cast<double>(k.p())) > 20)
      throw Error(ErrorKind::PrecisionExhausted, "roots of the residue polynomial lie too high");
    const GaloisField& big = *GaloisField::get(k.p(), k.f() * deg);
    const std::vector<Fq> table = k.embedding_into(big);
    Poly rest = embed(g, table);
    std::vector<Fq> roots;
    for (Fq x = 0; x < big.q(); ++x) {
      if (poly_eval(big, rest, x) != 0) continue;
      roots.push_back(x);
      const Poly lin{big.neg(x), big.one()};
      while (poly_degree(rest) > 0 && poly_eval(big, rest, x) == 0) rest = poly_div(big, rest, lin);
    }
    if (poly_degree(rest) > 0) continue;
    out.line_components = static_cast<int>(roots.size());
    const Poly ae = embed(a, table), be = embed(b, table);
    const Poly da = poly_derivative(big, ae), db = poly_derivative(big, be);
    for (Fq y0 : roots) {
      const Fq ad = poly_eval(big, da, y0), bd = poly_eval(big, db, y0);
      if (ad == 0) {
        if (bd == 0) {
          out.singular.push_back(SingularPoint{deg, 0, y0, false, true});
          out.all_ordinary_double = false;
        }
        continue;
      }
      const Fq x0 = big.neg(big.div(bd, ad));
      const Poly ta = poly_taylor(big, ae, y0), tb = poly_taylor(big, be, y0);
      auto at = [](const Poly& p, std::size_t i) -> Fq { return i < p.size() ? p[i] : 0; };
      // Quadratic part a2 X^2 + b2 X Y + c2 Y^2 of F(x0 + X, y0 + Y).
      const Fq a2 = 0;
      const Fq b2 = at(ta, 1);
      const Fq c2 = big.add(big.mul(x0, at(ta, 2)), at(tb, 2));
      const Fq disc = big.sub(big.mul(b2, b2), big.mul(big.from_int(4), big.mul(a2, c2)));
      const bool odp = disc != 0;
      out.singular.push_back(SingularPoint{deg, x0, y0, odp, false});
      if (!odp) out.all_ordinary_double = false;
    }
    return out;
  }
}

std::string CurveAnalysis::describe() const {
  std::ostringstream os;
  os << line_components << " line(s)" << (has_graph_component ? " + graph" : "") << ", "
     << singular.size() << " singular point(s)";
  if (!singular.empty()) os << (all_ordinary_double ? ", all ordinary double" : ", not all ordinary double");
  return os.str();
}

}  // namespace mumford
