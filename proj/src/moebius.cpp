#include "mumford/moebius.hpp"

#include "mumford/error.hpp"

namespace mumford {

bool same_end(const End& a, const End& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return equal_to_precision(a.value(), b.value());
}

Moebius::Moebius(LaurentElem a, LaurentElem b, LaurentElem c, LaurentElem d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (const auto& x : m_)
    if (!(x.params() == m_[0].params()))
      throw Error(ErrorKind::ParamsMismatch, "matrix entries in different fields");
  if (det().is_zero())
    throw Error(ErrorKind::InsufficientPrecision, "determinant is zero to precision");
  canonicalize();
}

Moebius Moebius::identity(const FieldParams& params) {
  return Moebius(LaurentElem::from_int(params, 1), LaurentElem(params), LaurentElem(params),
                 LaurentElem::from_int(params, 1));
}

void Moebius::canonicalize() {
  int pivot = -1;
  for (int i = 0; i < 4; ++i) {
    if (m_[i].is_zero()) continue;
    if (pivot < 0 || m_[i].ord() < m_[pivot].ord()) pivot = i;
  }
  const std::int64_t v = m_[pivot].ord();
  const Fq inv = m_[pivot].params().residue().inv(m_[pivot].leading_coeff());
  for (auto& x : m_) x = x.scaled(inv).shifted(-v);
}

Moebius operator*(const Moebius& g, const Moebius& h) {
  return Moebius(g.m_[0] * h.m_[0] + g.m_[1] * h.m_[2], g.m_[0] * h.m_[1] + g.m_[1] * h.m_[3],
                 g.m_[2] * h.m_[0] + g.m_[3] * h.m_[2], g.m_[2] * h.m_[1] + g.m_[3] * h.m_[3]);
}

Moebius Moebius::inverse() const { return Moebius(m_[3], -m_[1], -m_[2], m_[0]); }

Moebius Moebius::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  Moebius result = identity(params());
  Moebius base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

End Moebius::apply(const End& z) const {
  if (z.is_infinite()) {
    if (m_[2].is_zero()) {
      if (!m_[2].is_exact())
        throw Error(ErrorKind::InsufficientPrecision, "image of infinity undetermined");
      return End::infinity(params());
    }
    return End::at(m_[0] / m_[2]);
  }
  const LaurentElem num = m_[0] * z.value() + m_[1];
  const LaurentElem den = m_[2] * z.value() + m_[3];
  if (den.is_zero()) {
    if (!den.is_exact())
      throw Error(ErrorKind::InsufficientPrecision, "denominator vanishes only to precision");
    return End::infinity(params());
  }
  return End::at(num / den);
}

// Proportionality test by 2x2 minors, so non-monomial scalars are handled exactly.
bool Moebius::equals(const Moebius& o) const {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!equal_to_precision(m_[i] * o.m_[j], m_[j] * o.m_[i])) return false;
  return true;
}

bool Moebius::is_identity() const { return equals(identity(params())); }

std::string Moebius::str() const {
  return "[[" + m_[0].str() + ", " + m_[1].str() + "], [" + m_[2].str() + ", " + m_[3].str() +
         "]]";
}

}  // namespace mumford
