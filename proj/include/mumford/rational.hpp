#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace mumford {

/// Exact rational number with an optional +infinity, used for valuations
/// and radius exponents. Always stored reduced with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  static Rational infinity() {
    Rational r;
    r.inf_ = true;
    return r;
  }

  bool is_infinite() const noexcept { return inf_; }
  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.inf_ == b.inf_ && (a.inf_ || (a.num_ == b.num_ && a.den_ == b.den_));
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Largest integer <= value; infinite values are rejected.
  std::int64_t floor() const;
  std::int64_t ceil() const;
  bool is_integer() const noexcept { return !inf_ && den_ == 1; }

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool inf_ = false;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Valuation values: rationals with +infinity absorbing under addition.
using Valu = Rational;

}  // namespace mumford
