#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mumford/finite_field.hpp"
#include "mumford/rational.hpp"

namespace mumford {

/// K = F_{p^f}((pi)) with pi^e = t. Exponents of stored elements are in
/// pi-units; valuations reported as Valu are in t-units (val(t) = 1).
class FieldParams {
 public:
  FieldParams(int p, int f = 1, int e = 1);

  int p() const noexcept { return p_; }
  int f() const noexcept { return f_; }
  int e() const noexcept { return e_; }
  const GaloisField& residue() const noexcept { return *field_; }

  FieldParams extended(int e_factor, int f_factor) const {
    return FieldParams(p_, f_ * f_factor, e_ * e_factor);
  }

  friend bool operator==(const FieldParams& a, const FieldParams& b) {
    return a.p_ == b.p_ && a.f_ == b.f_ && a.e_ == b.e_;
  }

  std::string describe() const;

 private:
  int p_;
  int f_;
  int e_;
  std::shared_ptr<const GaloisField> field_;
};

inline constexpr std::int64_t kExactPrec = std::numeric_limits<std::int64_t>::max() / 4;

/// Absolute cap applied when an exact division produces an infinite series.
std::int64_t working_precision();

/// Sets the working precision (in pi-units) for the lifetime of the guard.
class PrecisionScope {
 public:
  explicit PrecisionScope(std::int64_t prec);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::int64_t saved_;
};

/// Truncated Laurent series in pi over F_{p^f}, with absolute precision:
/// the element is known modulo pi^prec. Terms are sorted, nonzero and below prec.
class LaurentElem {
 public:
  using Term = std::pair<std::int64_t, Fq>;

  explicit LaurentElem(FieldParams params, std::int64_t prec = kExactPrec);
  LaurentElem(FieldParams params, std::vector<Term> terms, std::int64_t prec = kExactPrec);

  static LaurentElem monomial(const FieldParams& params, Fq coeff, std::int64_t exponent,
                              std::int64_t prec = kExactPrec);
  static LaurentElem from_int(const FieldParams& params, std::int64_t n);
  /// t^k = pi^(e k).
  static LaurentElem t_power(const FieldParams& params, std::int64_t k);

  const FieldParams& params() const noexcept { return params_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::int64_t prec() const noexcept { return prec_; }
  bool is_exact() const noexcept { return prec_ >= kExactPrec; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1 && is_exact(); }

  /// Order in pi-units; for zero, the precision cap (kExactPrec if exact).
  std::int64_t ord() const noexcept { return terms_.empty() ? prec_ : terms_.front().first; }
  /// Valuation in t-units; exact zero gives +infinity, truncated zero its cap.
  Valu valuation() const;
  /// Precision in t-units (+infinity when exact).
  Valu precision() const;
  Fq leading_coeff() const;
  Fq coeff(std::int64_t exponent) const;

  LaurentElem operator-() const;
  friend LaurentElem operator+(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator-(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator*(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator/(const LaurentElem& a, const LaurentElem& b);
  LaurentElem& operator+=(const LaurentElem& o) { return *this = *this + o; }
  LaurentElem& operator-=(const LaurentElem& o) { return *this = *this - o; }
  LaurentElem& operator*=(const LaurentElem& o) { return *this = *this * o; }

  LaurentElem scaled(Fq c) const;
  LaurentElem shifted(std::int64_t pi_exponent) const;
  LaurentElem pow(std::int64_t k) const;
  LaurentElem frobenius() const;
  /// p-th root; requires every exponent divisible by p.
  LaurentElem frobenius_root() const;
  LaurentElem inverse() const;
  /// Drop terms at or above `cap` and lower the precision to it.
  LaurentElem truncated(std::int64_t cap) const;
  /// Terms strictly below `level`, returned as an exact element.
  LaurentElem reduced_mod(std::int64_t level) const;

  /// Representational equality (terms and precision).
  friend bool operator==(const LaurentElem& a, const LaurentElem& b) {
    return a.params_ == b.params_ && a.terms_ == b.terms_ && a.prec_ == b.prec_;
  }

  std::string str() const;

 private:
  void normalize();

  FieldParams params_;
  std::vector<Term> terms_;
  std::int64_t prec_;
};

/// Zero difference to the joint precision.
bool equal_to_precision(const LaurentElem& a, const LaurentElem& b);

/// Re-express x over F_{p^{f f'}}((pi^{1/e'})).
LaurentElem extend_field(const LaurentElem& x, int e_factor, int f_factor);

/// Parse the shorthand grammar, e.g. "t^-2 + 2", "[0,1]*t^(1/2) + O(t^10)".
LaurentElem parse_laurent(const FieldParams& params, const std::string& text);

}  // namespace mumford
