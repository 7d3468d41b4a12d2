#include <doctest.h>

#include <set>

#include "mumford/residue_curve.hpp"
#include "support.hpp"

using namespace mumford;
using testing_support::Gen;

namespace {

Poly random_poly(Gen& gen, const GaloisField& k, int deg) {
  Poly a(static_cast<std::size_t>(deg) + 1);
  for (auto& c : a) c = static_cast<Fq>(gen.uniform(0, static_cast<int>(k.q()) - 1));
  return a;
}

Poly embedded(const Poly& a, const std::vector<Fq>& table) {
  Poly out;
  for (Fq c : a) out.push_back(table[c]);
  return out;
}

// y-coordinates of singular points of X A(Y) + B(Y) = 0, found by testing every point.
std::set<Fq> brute_singular(const GaloisField& big, const Poly& a, const Poly& b) {
  const Poly da = poly_derivative(big, a), db = poly_derivative(big, b);
  std::set<Fq> ys;
  for (Fq y = 0; y < big.q(); ++y)
    for (Fq x = 0; x < big.q(); ++x) {
      const Fq f = big.add(big.mul(x, poly_eval(big, a, y)), poly_eval(big, b, y));
      const Fq fx = poly_eval(big, a, y);
      const Fq fy = big.add(big.mul(x, poly_eval(big, da, y)), poly_eval(big, db, y));
      if (f == 0 && fx == 0 && fy == 0) ys.insert(y);
    }
  return ys;
}

}  // namespace

TEST_CASE("polynomial arithmetic agrees with evaluation") {
  Gen gen(testing_support::property_seed() + 50);
  for (auto [p, f] : {std::pair{3, 1}, {2, 2}, {5, 1}}) {
    const GaloisField& k = *GaloisField::get(p, f);
    for (int trial = 0; trial < 20; ++trial) {
      const Poly a = random_poly(gen, k, gen.uniform(0, 5));
      const Poly b = random_poly(gen, k, gen.uniform(0, 5));
      const Poly prod = poly_mul(k, a, b);
      const Poly g = poly_gcd(k, a, b);
      const Fq x0 = static_cast<Fq>(gen.uniform(0, static_cast<int>(k.q()) - 1));
      const Poly ta = poly_taylor(k, a, x0);
      for (Fq x = 0; x < k.q(); ++x) {
        CHECK(poly_eval(k, prod, x) == k.mul(poly_eval(k, a, x), poly_eval(k, b, x)));
        CHECK(poly_eval(k, poly_sub(k, poly_add(k, a, b), b), x) == poly_eval(k, a, x));
        CHECK(poly_eval(k, ta, k.sub(x, x0)) == poly_eval(k, a, x));
      }
      if (!g.empty()) {
        CHECK(poly_mod(k, a, g).empty());
        CHECK(poly_mod(k, b, g).empty());
        CHECK(g.back() == k.one());
      }
    }
  }
}

TEST_CASE("singular points match a point search") {
  Gen gen(testing_support::property_seed() + 51);
  for (auto [p, f] : {std::pair{3, 1}, {2, 1}, {2, 2}}) {
    const GaloisField& k = *GaloisField::get(p, f);
    int with_lines = 0;
    for (int trial = 0; trial < 40; ++trial) {
      // share a factor so that line components appear
      const Poly common = random_poly(gen, k, gen.uniform(0, 2));
      const Poly a = poly_mul(k, common, random_poly(gen, k, gen.uniform(0, 2)));
      const Poly b = poly_mul(k, common, random_poly(gen, k, gen.uniform(0, 2)));
      if (poly_trim(a).empty() && poly_trim(b).empty()) continue;
      const CurveAnalysis an = analyse_linear_curve(k, a, b);
      if (an.line_components == 0) {
        CHECK(an.singular.empty());
        continue;
      }
      ++with_lines;
      const int deg = an.singular.empty() ? 1 : an.singular.front().field_degree;
      const GaloisField& big = *GaloisField::get(p, f * deg);
      const auto table = k.embedding_into(big);
      const std::set<Fq> ys = brute_singular(big, embedded(poly_trim(a), table), embedded(poly_trim(b), table));
      std::set<Fq> got;
      for (const auto& s : an.singular) got.insert(s.y);
      CHECK(got == ys);
      CHECK(an.passes() == (an.all_rational && an.all_ordinary_double));
    }
    CHECK(with_lines > 0);
  }
}

TEST_CASE("shapes of the reduction curves") {
  const GaloisField& k = *GaloisField::get(3, 1);
  // X (Y^3 - Y) = 0: three lines meeting the line X = 0 in nodes
  const Poly as{0, k.neg(k.one()), 0, k.one()};
  const CurveAnalysis nodal = analyse_linear_curve(k, as, Poly{});
  CHECK(nodal.line_components == 3);
  CHECK(nodal.has_graph_component);
  CHECK(nodal.singular.size() == 3);
  CHECK(nodal.passes());
  // X (Y^3 - Y) - 1 = 0 is smooth
  const CurveAnalysis smooth = analyse_linear_curve(k, as, Poly{k.neg(k.one())});
  CHECK(smooth.line_components == 0);
  CHECK(smooth.singular.empty());
  CHECK(smooth.passes());
  // X Y^2 = 0 has a doubled line
  const CurveAnalysis doubled = analyse_linear_curve(k, Poly{0, 0, k.one()}, Poly{});
  CHECK_FALSE(doubled.passes());
  CHECK(is_separable(k, as));
  CHECK_FALSE(is_separable(k, Poly{0, 0, k.one()}));
}
