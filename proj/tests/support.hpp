#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "mumford/criterion.hpp"
#include "mumford/error.hpp"
#include "mumford/groups.hpp"

namespace testing_support {

using namespace mumford;

/// Seed for randomized property drivers; MUMFORD_SEED overrides the default.
inline std::uint64_t property_seed() {
  if (const char* s = std::getenv("MUMFORD_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240601;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Fq unit(const FieldParams& params) {
    return static_cast<Fq>(uniform(1, static_cast<int>(params.residue().q()) - 1));
  }
  Fq element(const FieldParams& params) {
    return static_cast<Fq>(uniform(0, static_cast<int>(params.residue().q()) - 1));
  }

  /// Leading term of order `ord` plus up to `extra` further terms within `span`.
  LaurentElem laurent(const FieldParams& params, std::int64_t ord, int extra = 3, int span = 6) {
    LaurentElem x = LaurentElem::monomial(params, unit(params), ord);
    for (int k = 0; k < extra; ++k) x += LaurentElem::monomial(params, element(params), ord + uniform(1, span));
    return x;
  }

  Moebius moebius(const FieldParams& params, int lo = -2, int hi = 2) {
    for (;;) {
      auto entry = [&] { return coin() ? LaurentElem(params) : laurent(params, uniform(lo, hi), 2, 4); };
      LaurentElem a = entry(), b = entry(), c = entry(), d = entry();
      if (!(a * d - b * c).is_zero()) return Moebius(a, b, c, d);
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline LaurentElem lit(const FieldParams& params, const std::string& s) { return parse_laurent(params, s); }

/// s_1 = [[1,0],[1,1]] at 0 and s_2 with parameter t^-d at P_2 = 1.
inline GroupData standard_pair(const FieldParams& params, int d) {
  const LaurentElem one = LaurentElem::from_int(params, 1);
  return make_group({make_parabolic(End::at(LaurentElem(params)), one),
                     make_parabolic(End::at(one), LaurentElem::t_power(params, -d))});
}

/// Random branch data with r points whose valuations lie in [lo, hi] and whose
/// criterion verdict equals `want`.
inline BranchData random_instance(Gen& gen, const FieldParams& params, int r, bool want, int lo = -3, int hi = 3) {
  for (;;) {
    std::vector<End> a;
    std::vector<LaurentElem> lam;
    for (int i = 0; i < r; ++i) {
      a.push_back(End::at(gen.uniform(0, 4) == 0 ? LaurentElem(params) : gen.laurent(params, gen.uniform(lo, hi), 2, 3)));
      lam.push_back(gen.laurent(params, gen.uniform(lo, hi), 2, 3));
    }
    try {
      BranchData bd = make_branch_data(params, a, std::move(lam));
      if (criterion_margins(bd).is_mumford == want) return bd;
    } catch (const Error&) {
    }
  }
}

/// Residue field large enough to hold an admissible u.
inline FieldParams theta_field(int p) { return FieldParams(p, p == 2 ? 2 : 1, 1); }

}  // namespace testing_support
