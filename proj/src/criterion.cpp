#include "mumford/criterion.hpp"

#include "mumford/error.hpp"

namespace mumford {

int genus(int p, int r) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  if (r < 2) throw Error(ErrorKind::InvalidArgument, "r must be at least 2");
  return (p - 1) * (r - 1);
}

void validate_shape(const BranchData& bd) {
  if (bd.a.size() != bd.lambda.size())
    throw Error(ErrorKind::InvalidArgument, "a and lambda differ in length");
  if (bd.r() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two branch points");
  for (int i = 0; i < bd.r(); ++i) {
    if (!(bd.a[i].params() == bd.params) || !(bd.lambda[i].params() == bd.params))
      throw Error(ErrorKind::ParamsMismatch, "branch data over different fields");
    if (bd.lambda[i].is_zero())
      throw Error(ErrorKind::InvalidArgument, "lambda_" + std::to_string(i + 1) + " vanishes");
    for (int j = 0; j < i; ++j)
      if (equal_to_precision(bd.a[i], bd.a[j]))
        throw Error(ErrorKind::DuplicateBranchPoints,
                    "a_" + std::to_string(j + 1) + " = a_" + std::to_string(i + 1));
  }
}

void validate(const BranchData& bd) {
  validate_shape(bd);
  if (genus(bd.p(), bd.r()) < 2) throw Error(ErrorKind::GenusTooSmall, "need r >= 3, or r = 2 and p >= 3");
}

BranchData make_branch_data(const FieldParams& params, const std::vector<End>& a,
                            std::vector<LaurentElem> lambda) {
  BranchData bd{params, {}, std::move(lambda)};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_infinite())
      throw Error(ErrorKind::InfinityBranchPoint, "a_" + std::to_string(i + 1) + " = inf");
    bd.a.push_back(a[i].value());
  }
  validate_shape(bd);
  return bd;
}

Verdict is_mumford(const BranchData& bd) {
  validate(bd);
  return criterion_margins(bd);
}

Verdict criterion_margins(const BranchData& bd) {
  validate_shape(bd);
  const int r = bd.r();
  Verdict v{true, std::nullopt,
            std::vector<std::vector<std::optional<Valu>>>(r, std::vector<std::optional<Valu>>(r))};
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const Valu m = bd.lambda[i].valuation() + bd.lambda[j].valuation() -
                     Valu(2) * (bd.a[i] - bd.a[j]).valuation();
      v.margins[i][j] = m;
      v.margins[j][i] = m;
      if (m <= Valu(0) && v.is_mumford) {
        v.is_mumford = false;
        v.witness = std::make_pair(i, j);
      }
    }
  return v;
}

TransformedBranchData moebius_transform(const BranchData& bd, const Moebius& g) {
  const Moebius h = g.inverse();
  const LaurentElem &b = h.a(), &c = h.b(), &d = h.c(), &e = h.d();
  const LaurentElem det = b * e - c * d;
  TransformedBranchData out{BranchData{bd.params, {}, {}}, LaurentElem(bd.params)};
  for (int i = 0; i < bd.r(); ++i) {
    const LaurentElem den = b - bd.a[i] * d;
    if (den.is_zero())
      throw Error(ErrorKind::BranchPointSentToInfinity,
                  "a_" + std::to_string(i + 1) + " is sent to infinity");
    out.data.a.push_back(-(c - bd.a[i] * e) / den);
    out.data.lambda.push_back(bd.lambda[i] * det / (den * den));
    out.constant += bd.lambda[i] * d / den;
  }
  return out;
}

}  // namespace mumford
