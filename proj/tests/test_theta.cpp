#include <doctest.h>

#include "mumford/error.hpp"
#include "mumford/theta.hpp"
#include "support.hpp"

using namespace mumford;
using testing_support::lit;

namespace {

ThetaConfig standard_config(int p, int d, int L, std::int64_t prec = 40) {
  const FieldParams F = testing_support::theta_field(p);
  PrecisionScope scope(prec);
  return make_theta_config(testing_support::standard_pair(F, d), L, prec);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::SchemaError;
}

// Newton divided difference f[h_0, ..., h_k].
LaurentElem divided_difference(const std::vector<LaurentElem>& h, std::vector<LaurentElem> f) {
  for (std::size_t level = 1; level < h.size(); ++level)
    for (std::size_t j = h.size() - 1; j >= level; --j) f[j] = (f[j] - f[j - 1]) / (h[j] - h[j - level]);
  return f.back();
}

}  // namespace

TEST_CASE("x is one at P2 and alpha is a unit for every cutoff") {
  for (int p : {2, 3}) {
    for (int d = 1; d <= 3; ++d) {
      for (int L = 0; L <= 6; ++L) {
        const ThetaConfig cfg = standard_config(p, d, L);
        CAPTURE(p);
        CAPTURE(d);
        CAPTURE(L);
        CHECK(theta_x(cfg, cfg.p2()) == LaurentElem::from_int(cfg.p2().params(), 1));
        CHECK(theta_alpha(cfg).ord() == 0);
      }
    }
  }
}

TEST_CASE("alpha and x at small cutoffs") {
  const ThetaConfig cfg = standard_config(3, 2, 0);
  PrecisionScope scope(cfg.prec);
  CHECK(equal_to_precision(theta_alpha(cfg), (cfg.p2() - cfg.u) / cfg.p2()));
  const ThetaConfig c4 = standard_config(3, 2, 4);
  const FieldParams& F = c4.p2().params();
  CHECK(theta_x(c4, LaurentElem(F)).is_zero());
  CHECK(kind_of([&] { (void)theta_x(c4, c4.u); }) == ErrorKind::PoleAtOrbitPoint);
}

TEST_CASE("series coefficients at the fixed points") {
  for (int p : {2, 3}) {
    for (int d = 1; d <= 3; ++d) {
      const ThetaConfig cfg = standard_config(p, d, 4);
      const FieldParams& F = cfg.p2().params();
      const SeriesExpansion e1 = expand_at(cfg, 1, p);
      const SeriesExpansion e2 = expand_at(cfg, 2, p);
      PrecisionScope scope(cfg.prec);
      CHECK((e1.alpha * e1.c[0]).is_zero());
      CHECK(equal_to_precision(e2.alpha * e2.c[0], LaurentElem::from_int(F, 1)));
      CHECK((e1.alpha * e1.c[1]).ord() >= 40);
      CHECK((e2.alpha * e2.c[1]).ord() >= 40);
    }
  }
  const ThetaConfig cfg = standard_config(3, 2, 4);
  CHECK(kind_of([&] { (void)expand_at(cfg, 1, 2); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { (void)expand_at(cfg, 3, 4); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("c_p matches divided differences of x near P1") {
  for (int p : {2, 3}) {
    const std::int64_t prec = 400;
    const ThetaConfig cfg = standard_config(p, 2, 3, prec);
    const FieldParams& F = cfg.p2().params();
    const SeriesExpansion e = expand_at(cfg, 1, p + 2, false);
    PrecisionScope scope(prec);
    const int m = 60;
    std::vector<LaurentElem> h, x;
    for (int j = 0; j <= p; ++j) {
      h.push_back(LaurentElem::t_power(F, m) + LaurentElem::t_power(F, m + j + 1));
      x.push_back(theta_x(cfg, h.back()));
    }
    const LaurentElem dd = divided_difference(h, x);
    const LaurentElem cp = e.alpha * e.c[static_cast<std::size_t>(p)];
    CAPTURE(cp.str());
    CHECK((dd - cp).ord() - cp.ord() >= 20);
    // the truncated series reproduces x at a nearby point
    LaurentElem series(F);
    for (std::size_t n = e.c.size(); n-- > 0;) series = series * h[0] + e.c[n];
    CHECK((e.alpha * series - x[0]).ord() >= m * static_cast<std::int64_t>(e.c.size()) - 100);
  }
}

TEST_CASE("lambda bounds") {
  const FieldParams F(3), G(2);
  CHECK(lambda_bounds(lit(F, "t^-2"), lit(F, "1"), 3) == std::pair{Valu(-4), Valu(6)});
  CHECK(lambda_bounds(lit(G, "t^-1"), lit(G, "1"), 2) == std::pair{Valu(-1), Valu(2)});
  CHECK(lambda_bounds(lit(F, "t^-1"), lit(F, "t^-1"), 3) == std::pair{Valu(1), Valu(0)});
  CHECK(kind_of([&] { (void)lambda_bounds(lit(F, "t"), lit(F, "1"), 3); }) == ErrorKind::NonNegativeEtaValuation);
  CHECK(kind_of([&] { (void)lambda_bounds(lit(F, "1"), lit(F, "1"), 3); }) == ErrorKind::NonNegativeEtaValuation);
}

TEST_CASE("recovered lambdas satisfy the bounds and the criterion") {
  for (int p : {2, 3}) {
    for (int d = 1; d <= 3; ++d) {
      const ThetaConfig cfg = standard_config(p, d, 4);
      const LambdaRecovery rec = recover_lambda(cfg);
      const auto [b1, b2] = lambda_bounds(rec.eta, cfg.p2(), p);
      const Valu v1 = rec.lambda1.valuation(), v2 = rec.lambda2.valuation();
      CAPTURE(p);
      CAPTURE(d);
      CHECK(b1 <= v1);
      CHECK(b2 <= v2);
      CHECK(Valu(d) <= v1 + v2);
      CHECK(-rec.eta.valuation() == Valu(d));
      CHECK(-cfg.p2().valuation() == Valu(d + 1));
      const FieldParams& F = cfg.p2().params();
      PrecisionScope scope(cfg.prec);
      const BranchData bd = make_branch_data(F, {End::at(LaurentElem(F)), End::at(LaurentElem::from_int(F, 1))},
                                             {rec.lambda1, rec.lambda2});
      CHECK(criterion_margins(bd).is_mumford);
    }
  }
}

TEST_CASE("truncations stabilise") {
  for (int p : {2, 3}) {
    const ThetaConfig cfg = standard_config(p, 2, 5);
    const StabilityReport st = stability(cfg);
    CHECK(st.L == 5);
    CHECK((!st.alpha_margin || *st.alpha_margin > 0));
    CHECK((!st.lambda1_margin || *st.lambda1_margin > recover_lambda(cfg).lambda1.ord()));
  }
}

TEST_CASE("configs outside the normal form are rejected") {
  const FieldParams F(3);
  PrecisionScope scope(40);
  const GroupData g = make_group({make_parabolic(End::at(LaurentElem(F)), lit(F, "2")),
                                  make_parabolic(End::at(lit(F, "t^-3")), lit(F, "t^-1"))});
  ThetaConfig cfg{g, lit(F, "2*t^-3"), 3, 40};
  CHECK(kind_of([&] { (void)recover_lambda(cfg); }) == ErrorKind::NotNormalForm);
  cfg.u = lit(F, "t^-3");
  CHECK(kind_of([&] { validate(cfg); }) == ErrorKind::NotNormalForm);
}
