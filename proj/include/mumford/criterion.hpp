#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mumford/moebius.hpp"

namespace mumford {

/// Coefficients of the cover y^p - y = sum_i lambda_i / (x - a_i).
struct BranchData {
  FieldParams params;
  std::vector<LaurentElem> a;
  std::vector<LaurentElem> lambda;

  int p() const noexcept { return params.p(); }
  int r() const noexcept { return static_cast<int>(a.size()); }
};

/// Builds branch data from ends, rejecting infinity and invalid shapes.
BranchData make_branch_data(const FieldParams& params, const std::vector<End>& a,
                            std::vector<LaurentElem> lambda);
/// Throws DuplicateBranchPoints or InvalidArgument.
void validate_shape(const BranchData& bd);
/// validate_shape plus GenusTooSmall.
void validate(const BranchData& bd);

struct Verdict {
  bool is_mumford;
  std::optional<std::pair<int, int>> witness;  // 0-based, i < j
  /// margins[i][j] = val(lambda_i) + val(lambda_j) - 2 val(a_i - a_j); empty on the diagonal.
  std::vector<std::vector<std::optional<Valu>>> margins;
};

int genus(int p, int r);
Verdict is_mumford(const BranchData& bd);
/// The pairwise test without the genus restriction (r = 2, p = 2 allowed).
Verdict criterion_margins(const BranchData& bd);

struct TransformedBranchData {
  BranchData data;
  LaurentElem constant;
};

/// Pulls the cover back along x' = g(x).
TransformedBranchData moebius_transform(const BranchData& bd, const Moebius& g);

}  // namespace mumford
