#pragma once

#include <array>
#include <optional>
#include <string>

#include "mumford/laurent.hpp"

namespace mumford {

/// A point of P^1(K): either infinity or a field element.
class End {
 public:
  static End at(LaurentElem x) { return End(std::move(x), false); }
  static End infinity(const FieldParams& params) { return End(LaurentElem(params), true); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Finite coordinate; only meaningful when !is_infinite().
  const LaurentElem& value() const noexcept { return value_; }
  const FieldParams& params() const noexcept { return value_.params(); }

  std::string str() const { return infinite_ ? "inf" : value_.str(); }

 private:
  End(LaurentElem v, bool inf) : value_(std::move(v)), infinite_(inf) {}

  LaurentElem value_;
  bool infinite_;
};

/// Same end to the working precision.
bool same_end(const End& a, const End& b);

/// Element of PGL_2(K). The stored matrix is scaled so that the first entry
/// (row-major) of minimal order is a monic monomial-led series of order 0.
class Moebius {
 public:
  Moebius(LaurentElem a, LaurentElem b, LaurentElem c, LaurentElem d);

  static Moebius identity(const FieldParams& params);

  const LaurentElem& a() const noexcept { return m_[0]; }
  const LaurentElem& b() const noexcept { return m_[1]; }
  const LaurentElem& c() const noexcept { return m_[2]; }
  const LaurentElem& d() const noexcept { return m_[3]; }
  const FieldParams& params() const noexcept { return m_[0].params(); }

  LaurentElem det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  friend Moebius operator*(const Moebius& g, const Moebius& h);
  Moebius inverse() const;
  Moebius pow(std::int64_t k) const;

  End apply(const End& z) const;

  /// Equality in PGL_2 to precision.
  bool equals(const Moebius& o) const;
  bool is_identity() const;

  std::string str() const;

 private:
  void canonicalize();
  std::array<LaurentElem, 4> m_;
};

}  // namespace mumford
