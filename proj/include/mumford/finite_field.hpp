#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mumford {

/// Element of F_{p^f}, encoded as the base-p integer whose digits are the
/// coefficients of its polynomial representative (constant term first).
using Fq = std::uint32_t;

/// The finite field F_{p^f} built from the lexicographically first monic
/// primitive polynomial of degree f. Multiplication goes through log tables.
class GaloisField {
 public:
  /// Shared, cached instance. Throws for non-prime p or q > 2^20.
  static std::shared_ptr<const GaloisField> get(int p, int f);

  int p() const noexcept { return p_; }
  int f() const noexcept { return f_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Monic modulus, constant term first, length f + 1.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Fq zero() const noexcept { return 0; }
  Fq one() const noexcept { return 1; }
  Fq from_int(std::int64_t n) const;
  Fq from_coeffs(const std::vector<int>& c) const;
  std::vector<int> coeffs(Fq x) const;
  /// Generator of the multiplicative group (the class of the polynomial variable).
  Fq generator() const noexcept { return exp(1); }

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::int64_t k) const;
  Fq frobenius(Fq a) const { return pow(a, p_); }
  /// Unique p-th root (the field is perfect).
  Fq frobenius_root(Fq a) const;
  /// Absolute trace down to F_p, returned as an integer in [0, p).
  int trace(Fq a) const;
  /// Some y with y^p - y = c, or nothing when the trace of c is nonzero.
  std::optional<Fq> solve_artin_schreier(Fq c) const;
  std::uint32_t log(Fq a) const;
  Fq exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  /// Embedding of this field into `larger` (whose degree is a multiple of f),
  /// sending the generator to the least power of larger's generator that is
  /// a root of this field's modulus. Returned as a lookup table.
  std::vector<Fq> embedding_into(const GaloisField& larger) const;

  std::string describe() const;

 private:
  GaloisField(int p, int f);

  int p_;
  int f_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  std::vector<Fq> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::int64_t n);

}  // namespace mumford
