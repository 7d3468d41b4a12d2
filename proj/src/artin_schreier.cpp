#include "mumford/artin_schreier.hpp"

#include "mumford/error.hpp"

namespace mumford {

namespace {

// y = -sum_k c^{p^k} for val(c) > 0; the terms' orders grow by a factor p.
LaurentElem solve_positive(const LaurentElem& c) {
  LaurentElem y(c.params(), c.prec());
  LaurentElem power = c;
  const std::int64_t prec = c.prec();
  while (!power.is_zero() && power.ord() < prec) {
    y -= power;
    power = power.frobenius();
  }
  return y;
}

}  // namespace

ArtinSchreierResult artin_schreier_solve(const LaurentElem& c) {
  const FieldParams& params = c.params();
  const auto& k = params.residue();
  const int p = params.p();
  if (c.is_zero()) return LaurentElem(params, c.prec());

  LaurentElem y(params);
  LaurentElem rest = c;
  // Peel off negative exponents, most negative first.
  while (!rest.is_zero() && rest.ord() < 0) {
    const std::int64_t ex = rest.ord();
    const Fq a = rest.leading_coeff();
    if ((-ex) % p != 0) {
      return ExtensionRequired{p, 1,
                               "leading term pi^" + std::to_string(ex) +
                                   " needs a solution of valuation " +
                                   Rational(ex, static_cast<std::int64_t>(p) * params.e()).str() +
                                   " (t-units), outside the value group"};
    }
    const LaurentElem b = LaurentElem::monomial(params, k.frobenius_root(a), ex / p);
    y += b;
    rest = rest - (b.frobenius() - b);
  }
  if (!rest.is_zero() && rest.ord() == 0) {
    const Fq c0 = rest.leading_coeff();
    const auto root = k.solve_artin_schreier(c0);
    if (!root) {
      return ExtensionRequired{1, p,
                               "residue equation y^p - y = " + std::to_string(c0) +
                                   " has nonzero trace over F_" + std::to_string(p)};
    }
    const LaurentElem b = LaurentElem::monomial(params, *root, 0);
    y += b;
    rest = rest - (b.frobenius() - b);
  }
  if (!rest.is_zero()) {
    if (rest.is_exact()) rest = rest.truncated(working_precision());
    y += solve_positive(rest);
  }
  return y.truncated(rest.prec());
}

}  // namespace mumford
