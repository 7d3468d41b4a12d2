#include "mumford/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "mumford/error.hpp"

namespace mumford {

FieldParams::FieldParams(int p, int f, int e)
    : p_(p), f_(f), e_(e), field_(GaloisField::get(p, f)) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "ramification index must be >= 1");
}

std::string FieldParams::describe() const {
  std::ostringstream os;
  os << residue().describe() << "((t" << (e_ > 1 ? "^(1/" + std::to_string(e_) + ")" : "")
     << "))";
  return os.str();
}

namespace {

thread_local std::int64_t g_working_prec = 64;

// Saturating sum on precisions: anything reaching kExactPrec stays exact.
std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kExactPrec || b >= kExactPrec) return kExactPrec;
  return std::min(a + b, kExactPrec);
}

void require_same(const LaurentElem& a, const LaurentElem& b) {
  if (!(a.params() == b.params()))
    throw Error(ErrorKind::ParamsMismatch, "operands live in different fields");
}

}  // namespace

std::int64_t working_precision() { return g_working_prec; }

PrecisionScope::PrecisionScope(std::int64_t prec) : saved_(g_working_prec) {
  g_working_prec = prec;
}
PrecisionScope::~PrecisionScope() { g_working_prec = saved_; }

LaurentElem::LaurentElem(FieldParams params, std::int64_t prec)
    : params_(std::move(params)), prec_(std::min(prec, kExactPrec)) {}

LaurentElem::LaurentElem(FieldParams params, std::vector<Term> terms, std::int64_t prec)
    : params_(std::move(params)), terms_(std::move(terms)), prec_(std::min(prec, kExactPrec)) {
  normalize();
}

void LaurentElem::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  const auto& k = params_.residue();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [ex, c] : terms_) {
    if (ex >= prec_) break;
    if (!out.empty() && out.back().first == ex) {
      out.back().second = k.add(out.back().second, c);
      if (out.back().second == 0) out.pop_back();
    } else if (c != 0) {
      out.emplace_back(ex, c);
    }
  }
  terms_ = std::move(out);
}

LaurentElem LaurentElem::monomial(const FieldParams& params, Fq coeff, std::int64_t exponent,
                                  std::int64_t prec) {
  return LaurentElem(params, {{exponent, coeff}}, prec);
}

LaurentElem LaurentElem::from_int(const FieldParams& params, std::int64_t n) {
  return monomial(params, params.residue().from_int(n), 0);
}

LaurentElem LaurentElem::t_power(const FieldParams& params, std::int64_t k) {
  return monomial(params, 1, k * params.e());
}

Valu LaurentElem::valuation() const {
  const std::int64_t o = ord();
  if (o >= kExactPrec) return Valu::infinity();
  return Valu(o, params_.e());
}

Valu LaurentElem::precision() const {
  if (is_exact()) return Valu::infinity();
  return Valu(prec_, params_.e());
}

Fq LaurentElem::leading_coeff() const { return terms_.empty() ? 0 : terms_.front().second; }

Fq LaurentElem::coeff(std::int64_t exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, std::int64_t v) { return t.first < v; });
  return (it != terms_.end() && it->first == exponent) ? it->second : 0;
}

LaurentElem LaurentElem::operator-() const {
  LaurentElem r = *this;
  const auto& k = params_.residue();
  for (auto& t : r.terms_) t.second = k.neg(t.second);
  return r;
}

LaurentElem operator+(const LaurentElem& a, const LaurentElem& b) {
  require_same(a, b);
  std::vector<LaurentElem::Term> terms;
  terms.reserve(a.terms_.size() + b.terms_.size());
  terms.insert(terms.end(), a.terms_.begin(), a.terms_.end());
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return LaurentElem(a.params_, std::move(terms), std::min(a.prec_, b.prec_));
}

LaurentElem operator-(const LaurentElem& a, const LaurentElem& b) { return a + (-b); }

LaurentElem operator*(const LaurentElem& a, const LaurentElem& b) {
  require_same(a, b);
  const std::int64_t prec = std::min(sat_add(a.ord(), b.prec_), sat_add(b.ord(), a.prec_));
  if (a.is_zero() || b.is_zero()) return LaurentElem(a.params_, prec);
  const auto& k = a.params_.residue();
  const std::int64_t lo = a.terms_.front().first + b.terms_.front().first;
  std::int64_t hi = a.terms_.back().first + b.terms_.back().first;  // inclusive
  if (prec < kExactPrec) hi = std::min(hi, prec - 1);
  if (hi < lo) return LaurentElem(a.params_, prec);
  std::vector<Fq> dense(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [ea, ca] : a.terms_) {
    if (ea + b.terms_.front().first > hi) break;
    for (const auto& [eb, cb] : b.terms_) {
      const std::int64_t ex = ea + eb;
      if (ex > hi) break;
      auto& slot = dense[ex - lo];
      slot = k.add(slot, k.mul(ca, cb));
    }
  }
  std::vector<LaurentElem::Term> terms;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) terms.emplace_back(lo + static_cast<std::int64_t>(i), dense[i]);
  LaurentElem r(a.params_, prec);
  r.terms_ = std::move(terms);
  return r;
}

LaurentElem LaurentElem::scaled(Fq c) const {
  if (c == 0) return LaurentElem(params_, prec_);
  LaurentElem r = *this;
  const auto& k = params_.residue();
  for (auto& t : r.terms_) t.second = k.mul(t.second, c);
  return r;
}

LaurentElem LaurentElem::shifted(std::int64_t s) const {
  LaurentElem r = *this;
  for (auto& t : r.terms_) t.first += s;
  if (!is_exact()) r.prec_ += s;
  return r;
}

LaurentElem operator/(const LaurentElem& a, const LaurentElem& b) {
  require_same(a, b);
  if (b.is_zero())
    throw Error(ErrorKind::DivisionByZeroToPrecision,
                "divisor is zero modulo pi^" + std::to_string(b.prec_));
  const auto& k = a.params_.residue();
  const std::int64_t vb = b.ord();
  const Fq cb_inv = k.inv(b.leading_coeff());
  if (b.is_monomial()) {
    LaurentElem r = a.scaled(cb_inv).shifted(-vb);
    return r;
  }
  if (a.is_zero()) return LaurentElem(a.params_, a.is_exact() ? kExactPrec : a.prec_ - vb);
  const std::int64_t va = a.ord();
  std::int64_t prec;
  if (a.is_exact() && b.is_exact()) {
    prec = working_precision();
  } else {
    const std::int64_t rel_a = a.is_exact() ? kExactPrec : a.prec_ - va;
    const std::int64_t rel_b = b.is_exact() ? kExactPrec : b.prec_ - vb;
    prec = va - vb + std::min(rel_a, rel_b);
    if (prec >= kExactPrec / 2) prec = working_precision();
  }
  const std::int64_t lead = va - vb;
  const std::int64_t n = prec - lead;  // number of quotient coefficients
  if (n <= 0) return LaurentElem(a.params_, prec);

  // Unit part of b: b = cb pi^vb (1 + w).
  std::vector<Fq> u(static_cast<std::size_t>(n), 0);
  for (const auto& [ex, c] : b.terms_) {
    const std::int64_t i = ex - vb;
    if (i >= n) break;
    u[i] = k.mul(c, cb_inv);
  }
  std::vector<Fq> w(static_cast<std::size_t>(n), 0);
  w[0] = 1;
  for (std::int64_t i = 1; i < n; ++i) {
    Fq s = 0;
    for (std::int64_t j = 1; j <= i; ++j)
      if (u[j] != 0 && w[i - j] != 0) s = k.add(s, k.mul(u[j], w[i - j]));
    w[i] = k.neg(s);
  }
  std::vector<Fq> q(static_cast<std::size_t>(n), 0);
  for (const auto& [ex, c] : a.terms_) {
    const std::int64_t i = ex - va;
    if (i >= n) break;
    for (std::int64_t j = 0; i + j < n; ++j)
      if (w[j] != 0) q[i + j] = k.add(q[i + j], k.mul(c, w[j]));
  }
  std::vector<LaurentElem::Term> terms;
  for (std::int64_t i = 0; i < n; ++i)
    if (q[i] != 0) terms.emplace_back(lead + i, k.mul(q[i], cb_inv));
  LaurentElem r(a.params_, prec);
  r.terms_ = std::move(terms);
  return r;
}

LaurentElem LaurentElem::inverse() const { return LaurentElem::from_int(params_, 1) / *this; }

LaurentElem LaurentElem::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  LaurentElem result = from_int(params_, 1);
  LaurentElem base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentElem LaurentElem::frobenius() const {
  const int p = params_.p();
  const auto& k = params_.residue();
  LaurentElem r(params_, is_exact() ? kExactPrec : prec_ * p);
  r.terms_.reserve(terms_.size());
  for (const auto& [ex, c] : terms_) r.terms_.emplace_back(ex * p, k.frobenius(c));
  return r;
}

LaurentElem LaurentElem::frobenius_root() const {
  const int p = params_.p();
  const auto& k = params_.residue();
  std::int64_t prec = kExactPrec;
  if (!is_exact()) prec = prec_ >= 0 ? (prec_ + p - 1) / p : -((-prec_) / p);
  LaurentElem r(params_, prec);
  for (const auto& [ex, c] : terms_) {
    if (ex % p != 0)
      throw Error(ErrorKind::InvalidArgument, "not a p-th power: exponent " + std::to_string(ex));
    if (ex / p < prec) r.terms_.emplace_back(ex / p, k.frobenius_root(c));
  }
  return r;
}

LaurentElem LaurentElem::truncated(std::int64_t cap) const {
  if (cap >= prec_) return *this;
  std::vector<Term> terms;
  for (const auto& t : terms_)
    if (t.first < cap) terms.push_back(t);
  return LaurentElem(params_, std::move(terms), cap);
}

LaurentElem LaurentElem::reduced_mod(std::int64_t level) const {
  if (level > prec_)
    throw Error(ErrorKind::InsufficientPrecision,
                "need precision " + std::to_string(level) + ", have " + std::to_string(prec_));
  std::vector<Term> terms;
  for (const auto& t : terms_)
    if (t.first < level) terms.push_back(t);
  return LaurentElem(params_, std::move(terms));
}

namespace {

std::string coeff_str(const GaloisField& k, Fq c) {
  if (k.f() == 1) return std::to_string(c);
  auto v = k.coeffs(c);
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string exp_str(std::int64_t ex, int e) {
  Rational r(ex, e);
  if (r.is_integer()) return std::to_string(r.num());
  return "(" + r.str() + ")";
}

}  // namespace

std::string LaurentElem::str() const {
  std::string s;
  const auto& k = params_.residue();
  for (const auto& [ex, c] : terms_) {
    if (!s.empty()) s += " + ";
    const bool unit = (c == 1);
    if (ex == 0) {
      s += coeff_str(k, c);
    } else {
      if (!unit) s += coeff_str(k, c) + "*";
      s += "t";
      if (!(ex == params_.e())) s += "^" + exp_str(ex, params_.e());
    }
  }
  if (!is_exact()) {
    if (!s.empty()) s += " + ";
    s += "O(t^" + exp_str(prec_, params_.e()) + ")";
  }
  if (s.empty()) s = "0";
  return s;
}

bool equal_to_precision(const LaurentElem& a, const LaurentElem& b) { return (a - b).is_zero(); }

LaurentElem extend_field(const LaurentElem& x, int e_factor, int f_factor) {
  if (e_factor < 1 || f_factor < 1)
    throw Error(ErrorKind::InvalidArgument, "extension degrees must be >= 1");
  const FieldParams big = x.params().extended(e_factor, f_factor);
  const auto table = x.params().residue().embedding_into(big.residue());
  std::vector<LaurentElem::Term> terms;
  for (const auto& [ex, c] : x.terms()) terms.emplace_back(ex * e_factor, table[c]);
  return LaurentElem(big, std::move(terms), x.is_exact() ? kExactPrec : x.prec() * e_factor);
}

// ---------------------------------------------------------------------------
// Shorthand grammar (version 1):
//   expr  := ['-'] item (('+' | '-') item)*
//   item  := 'O(' var ['^' exp] ')' | coef ['*' var ['^' exp]] | var ['^' exp]
//   coef  := integer | '[' int (',' int)* ']' | 'g' ['^' int]
//   var   := 't' | 'pi'
//   exp   := ['-'] int | '(' ['-'] int '/' int ')'
// 't' is the base uniformizer, 'pi' = t^(1/e); 'g' is the residue field generator.

namespace {

class Parser {
 public:
  Parser(const FieldParams& params, const std::string& s) : params_(params), s_(s) {}

  LaurentElem parse() {
    std::vector<LaurentElem::Term> terms;
    std::int64_t prec = kExactPrec;
    bool negate = false;
    skip();
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    while (true) {
      item(terms, prec, negate);
      skip();
      if (pos_ >= s_.size()) break;
      const char c = s_[pos_++];
      if (c == '+') negate = false;
      else if (c == '-') negate = true;
      else fail("expected '+' or '-'");
    }
    return LaurentElem(params_, std::move(terms), prec);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::SchemaError,
                "laurent literal '" + s_ + "' at " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  std::int64_t integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }
  // Exponent in pi-units for the given variable scale.
  std::int64_t exponent(std::int64_t scale) {
    if (!accept("^")) return scale;
    Rational r;
    if (accept("(")) {
      const std::int64_t num = integer();
      if (!accept("/")) fail("expected '/'");
      const std::int64_t den = integer();
      if (!accept(")")) fail("expected ')'");
      r = Rational(num, den);
    } else {
      r = Rational(integer());
    }
    const Rational pi_units = r * Rational(scale);
    if (!pi_units.is_integer()) fail("exponent not in the value group");
    return pi_units.num();
  }
  bool var(std::int64_t& scale) {
    if (accept("pi")) {
      scale = 1;
      return true;
    }
    if (accept("t")) {
      scale = params_.e();
      return true;
    }
    return false;
  }
  void item(std::vector<LaurentElem::Term>& terms, std::int64_t& prec, bool negate) {
    const auto& k = params_.residue();
    if (accept("O(")) {
      std::int64_t scale = 0;
      if (!var(scale)) fail("expected variable in O()");
      prec = std::min(prec, exponent(scale));
      if (!accept(")")) fail("expected ')'");
      return;
    }
    Fq coeff = 1;
    bool have_coeff = false;
    const char c = peek();
    if (c == '[') {
      ++pos_;
      std::vector<int> v;
      do {
        v.push_back(static_cast<int>(integer()));
      } while (accept(","));
      if (!accept("]")) fail("expected ']'");
      coeff = k.from_coeffs(v);
      have_coeff = true;
    } else if (c == 'g') {
      ++pos_;
      std::int64_t power = 1;
      if (accept("^")) power = integer();
      coeff = k.pow(k.generator(), power);
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = k.from_int(integer());
      have_coeff = true;
    }
    std::int64_t ex = 0;
    std::int64_t scale = 0;
    if (have_coeff) {
      if (accept("*")) {
        if (!var(scale)) fail("expected variable after '*'");
        ex = exponent(scale);
      } else if (var(scale)) {
        ex = exponent(scale);
      }
    } else {
      if (!var(scale)) fail("expected term");
      ex = exponent(scale);
    }
    if (negate) coeff = k.neg(coeff);
    terms.emplace_back(ex, coeff);
  }

  const FieldParams& params_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentElem parse_laurent(const FieldParams& params, const std::string& text) {
  return Parser(params, text).parse();
}

}  // namespace mumford
