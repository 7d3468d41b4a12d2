#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mumford/groups.hpp"

namespace mumford {

struct ThetaConfig {
  GroupData group;
  LaurentElem u;
  int L = 4;
  std::int64_t prec = 40;

  const LaurentElem& p2() const { return group.generators[1].fixed_point.value(); }
};

/// Checks P_1 = 0, P_2 in K^x, |P_i| < |P_2| and |u| = |u - P_2| = |P_2|.
void validate(const ThetaConfig& cfg);

/// Picks u = c P_2 with c a nonzero residue class other than 1 such that the
/// huti assertions hold up to length L. Needs q > 2.
std::optional<LaurentElem> choose_u(const GroupData& g, int L);

/// Standard frame of a two-generator group plus a choice of u.
ThetaConfig make_theta_config(const GroupData& g, int L, std::int64_t prec);

/// Product over words of length <= L of (P_2 - w(u)) / (P_2 - w(P_1)).
LaurentElem theta_alpha(const ThetaConfig& cfg);

/// alpha * product of (z - w(P_1)) / (z - w(u)).
LaurentElem theta_x(const ThetaConfig& cfg, const LaurentElem& z);

struct SeriesExpansion {
  int index;  // 1 or 2
  /// x(z) = alpha * sum c[n] (z - P_i)^n over words of length <= L, closed
  /// under left multiplication by s_i when saturated.
  std::vector<LaurentElem> c;
  LaurentElem alpha;
  /// Valuation of the largest admissible radius: eps with val(eps) > radius_val.
  std::int64_t radius_val;
};

SeriesExpansion expand_at(const ThetaConfig& cfg, int i, int order, bool saturate = true);

struct LambdaRecovery {
  LaurentElem alpha;
  LaurentElem lambda1;
  LaurentElem lambda2;
  LaurentElem eta;
};

LambdaRecovery recover_lambda(const ThetaConfig& cfg);

/// Lower bounds for val(lambda_1), val(lambda_2).
std::pair<Valu, Valu> lambda_bounds(const LaurentElem& eta, const LaurentElem& p2, int p);

struct StabilityReport {
  int L;
  /// val(alpha_L - alpha_{L-2}) and the same for the lambdas; nullopt means equal.
  std::optional<std::int64_t> alpha_margin;
  std::optional<std::int64_t> lambda1_margin;
  std::optional<std::int64_t> lambda2_margin;
};

/// Compares truncations at L and L - 2.
StabilityReport stability(const ThetaConfig& cfg);

}  // namespace mumford
