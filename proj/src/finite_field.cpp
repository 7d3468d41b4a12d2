#include "mumford/finite_field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "mumford/error.hpp"

namespace mumford {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Polynomials over F_p as coefficient vectors, constant term first.
using Poly = std::vector<int>;

// Multiply by x modulo the monic `mod` (degree f).
void times_x(Poly& a, const Poly& mod, int p) {
  const int f = static_cast<int>(mod.size()) - 1;
  const int top = a[f - 1];
  for (int i = f - 1; i > 0; --i) a[i] = a[i - 1];
  a[0] = 0;
  for (int i = 0; i < f; ++i) a[i] = ((a[i] - top * mod[i]) % p + p) % p;
}

Fq encode(const Poly& a, int p) {
  Fq v = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) v = v * p + a[i];
  return v;
}

bool is_primitive(const Poly& mod, int p, std::uint32_t q) {
  const int f = static_cast<int>(mod.size()) - 1;
  if (mod[0] == 0) return false;
  Poly a(f, 0);
  a[0] = 1;
  for (std::uint32_t k = 1; k < q; ++k) {
    times_x(a, mod, p);
    bool is_one = a[0] == 1;
    for (int i = 1; i < f && is_one; ++i) is_one = a[i] == 0;
    if (is_one) return k == q - 1;
  }
  return false;
}

}  // namespace

GaloisField::GaloisField(int p, int f) : p_(p), f_(f) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  if (f < 1) throw Error(ErrorKind::InvalidArgument, "f must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < f; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > (1u << 20)) throw Error(ErrorKind::InvalidArgument, "residue field too large");
  }
  q_ = static_cast<std::uint32_t>(q);

  // Enumerate monic polynomials in order of their lower coefficients
  // read as a base-p integer.
  Poly mod(f + 1, 0);
  mod[f] = 1;
  bool found = false;
  for (std::uint32_t idx = 0; idx < q_ && !found; ++idx) {
    std::uint32_t v = idx;
    for (int i = 0; i < f; ++i) {
      mod[i] = static_cast<int>(v % p);
      v /= p;
    }
    if (q_ == 2 && f == 1) {
      // F_2: x + 1 (root 1) generates the trivial group.
      found = mod[0] == 1;
    } else {
      found = is_primitive(mod, p, q_);
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "no primitive polynomial found");
  modulus_ = mod;

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Poly a(f, 0);
  a[0] = 1;
  if (f == 1) {
    // x ≡ -mod[0]
    const int g = ((-mod[0]) % p + p) % p;
    std::int64_t cur = 1;
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      exp_[k] = static_cast<Fq>(cur);
      log_[cur] = k;
      cur = cur * g % p;
    }
  } else {
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      const Fq v = encode(a, p);
      exp_[k] = v;
      log_[v] = k;
      times_x(a, mod, p);
    }
  }
}

std::shared_ptr<const GaloisField> GaloisField::get(int p, int f) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const GaloisField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, f});
  if (it != cache.end()) return it->second;
  auto field = std::shared_ptr<const GaloisField>(new GaloisField(p, f));
  cache.emplace(std::make_pair(p, f), field);
  return field;
}

Fq GaloisField::from_int(std::int64_t n) const {
  return static_cast<Fq>(((n % p_) + p_) % p_);
}

Fq GaloisField::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > f_)
    throw Error(ErrorKind::InvalidArgument, "coefficient vector longer than residue degree");
  Poly a(f_, 0);
  for (std::size_t i = 0; i < c.size(); ++i) a[i] = ((c[i] % p_) + p_) % p_;
  return encode(a, p_);
}

std::vector<int> GaloisField::coeffs(Fq x) const {
  std::vector<int> c(f_);
  for (int i = 0; i < f_; ++i) {
    c[i] = static_cast<int>(x % p_);
    x /= p_;
  }
  return c;
}

Fq GaloisField::add(Fq a, Fq b) const {
  if (f_ == 1) return (a + b) % p_;
  Fq r = 0, scale = 1;
  for (int i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Fq GaloisField::neg(Fq a) const {
  if (f_ == 1) return (p_ - a) % p_;
  Fq r = 0, scale = 1;
  for (int i = 0; i < f_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Fq GaloisField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq GaloisField::mul(Fq a, Fq b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

Fq GaloisField::inv(Fq a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZeroToPrecision, "inverse of zero in residue field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Fq GaloisField::pow(Fq a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw Error(ErrorKind::DivisionByZeroToPrecision, "negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t order = q_ - 1;
  std::int64_t e = (static_cast<std::int64_t>(log_[a]) * (k % order)) % order;
  if (e < 0) e += order;
  return exp_[e];
}

Fq GaloisField::frobenius_root(Fq a) const {
  // a^(p^(f-1)) is the inverse Frobenius on F_{p^f}.
  Fq r = a;
  for (int i = 1; i < f_; ++i) r = frobenius(r);
  return r;
}

int GaloisField::trace(Fq a) const {
  Fq s = 0, cur = a;
  for (int i = 0; i < f_; ++i) {
    s = add(s, cur);
    cur = frobenius(cur);
  }
  return static_cast<int>(s);  // lies in F_p, so the encoding is the integer itself
}

std::optional<Fq> GaloisField::solve_artin_schreier(Fq c) const {
  if (trace(c) != 0) return std::nullopt;
  for (Fq y = 0; y < q_; ++y)
    if (sub(frobenius(y), y) == c) return y;
  return std::nullopt;
}

std::uint32_t GaloisField::log(Fq a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "log of zero");
  return log_[a];
}

std::vector<Fq> GaloisField::embedding_into(const GaloisField& larger) const {
  if (larger.p_ != p_ || larger.f_ % f_ != 0)
    throw Error(ErrorKind::ParamsMismatch, "not a subfield");
  if (larger.f_ == f_) {
    std::vector<Fq> id(q_);
    for (Fq x = 0; x < q_; ++x) id[x] = x;
    return id;
  }
  // Image of our generator g: a root of our modulus in the larger field.
  Fq image = 0;
  bool found = false;
  const std::uint32_t big_order = larger.q_ - 1;
  const std::uint32_t step = big_order / (q_ - 1);
  for (std::uint32_t j = 1; j < q_ && !found; ++j) {
    const Fq cand = larger.exp(static_cast<std::uint64_t>(step) * j);
    Fq val = 0, powc = 1;
    for (int i = 0; i <= f_; ++i) {
      val = larger.add(val, larger.mul(larger.from_int(modulus_[i]), powc));
      powc = larger.mul(powc, cand);
    }
    if (val == 0) {
      image = cand;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "subfield embedding not found");
  std::vector<Fq> table(q_, 0);
  for (std::uint32_t k = 0; k + 1 < q_; ++k) table[exp_[k]] = larger.pow(image, k);
  return table;
}

std::string GaloisField::describe() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (f_ > 1) {
    os << "^" << f_ << " = F_" << p_ << "[x]/(";
    bool first = true;
    for (int i = f_; i >= 0; --i) {
      if (modulus_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i >= 1) os << "x";
      if (i > 1) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace mumford
