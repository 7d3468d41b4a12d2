#include "mumford/rational.hpp"

#include <numeric>
#include <ostream>

#include "mumford/error.hpp"

namespace mumford {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZeroToPrecision: return "DivisionByZeroToPrecision";
    case ErrorKind::ParamsMismatch: return "ParamsMismatch";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CoincidentEnds: return "CoincidentEnds";
    case ErrorKind::NotParabolic: return "NotParabolic";
    case ErrorKind::MirrorsIntersect: return "MirrorsIntersect";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::SearchRadiusExceeded: return "SearchRadiusExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::AssertionFailed: return "AssertionFailed";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::DuplicateBranchPoints: return "DuplicateBranchPoints";
    case ErrorKind::InfinityBranchPoint: return "InfinityBranchPoint";
    case ErrorKind::BranchPointSentToInfinity: return "BranchPointSentToInfinity";
    case ErrorKind::CriterionViolated: return "CriterionViolated";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::MultipleMinimizers: return "MultipleMinimizers";
    case ErrorKind::RadiusNotInValueGroup: return "RadiusNotInValueGroup";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::PoleAtOrbitPoint: return "PoleAtOrbitPoint";
    case ErrorKind::RadiusViolation: return "RadiusViolation";
    case ErrorKind::NotNormalForm: return "NotNormalForm";
    case ErrorKind::NonNegativeEtaValuation: return "NonNegativeEtaValuation";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator-() const {
  if (inf_) throw Error(ErrorKind::InvalidArgument, "negation of +infinity");
  return Rational(-num_, den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.inf_ || b.inf_) return Rational::infinity();
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return Rational(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (b.inf_) throw Error(ErrorKind::InvalidArgument, "subtracting +infinity");
  if (a.inf_) return a;
  return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.inf_ || b.inf_) {
    const Rational& finite = a.inf_ ? b : a;
    if (!finite.inf_ && finite.num_ <= 0)
      throw Error(ErrorKind::InvalidArgument, "infinity times non-positive");
    return Rational::infinity();
  }
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.inf_ || b.num_ == 0) throw Error(ErrorKind::InvalidArgument, "bad rational divisor");
  if (a.inf_) {
    if (b.num_ < 0) throw Error(ErrorKind::InvalidArgument, "infinity over negative");
    return a;
  }
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::int64_t Rational::floor() const {
  if (inf_) throw Error(ErrorKind::InvalidArgument, "floor of infinity");
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  if (inf_) throw Error(ErrorKind::InvalidArgument, "ceil of infinity");
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (inf_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mumford
