#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "novikov/eigen_traits.hpp"
#include "novikov/laurent.hpp"
#include "novikov/upoly.hpp"

namespace novikov {

// Element p(t)/q(t) of the ring R: p a Laurent polynomial over Z, q in Z[t]
// monic. Values are not reduced to lowest terms; equality is by
// cross-multiplication.
class RationalFnR {
 public:
  RationalFnR() = default;
  RationalFnR(int c) : num_(c) {}  // NOLINT: literal conversion

  // t^shift * num / den; den must be monic.
  RationalFnR(IntPoly num, IntPoly den, std::int64_t shift = 0);
  // Laurent numerator (rank 1) over denominator 1.
  static RationalFnR from_laurent(const GroupRingElement& p);
  static RationalFnR from_laurent(const GroupRingElement& p, const IntPoly& den);

  // Numerator as a Laurent polynomial t^shift * num.
  GroupRingElement numerator() const;
  const IntPoly& numerator_poly() const { return num_; }
  std::int64_t shift() const { return shift_; }
  const IntPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  // Unit of R: numerator = ±t^k * c * p0 with content c = 1 and the top
  // coefficient of p0 equal to ±1. The zero element is not a unit.
  bool is_unit() const;
  // Inverse of a unit; throws NotInvertibleError otherwise.
  RationalFnR inverse() const;

  // Value at a rational point; throws when the denominator vanishes there.
  Rational evaluate(const Rational& a) const;

  // Divides out gcd(numerator, denominator); the value is unchanged.
  RationalFnR reduced() const;

  RationalFnR& operator+=(const RationalFnR& o);
  RationalFnR& operator-=(const RationalFnR& o) { return *this += -o; }
  RationalFnR& operator*=(const RationalFnR& o);
  RationalFnR operator-() const;

  friend RationalFnR operator+(RationalFnR a, const RationalFnR& b) { return a += b; }
  friend RationalFnR operator-(RationalFnR a, const RationalFnR& b) { return a -= b; }
  friend RationalFnR operator*(RationalFnR a, const RationalFnR& b) { return a *= b; }
  friend bool operator==(const RationalFnR& a, const RationalFnR& b);
  friend bool operator!=(const RationalFnR& a, const RationalFnR& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFnR& f) { return os << f.str(); }

 private:
  void normalize();

  std::int64_t shift_ = 0;
  IntPoly num_;
  IntPoly den_ = IntPoly(1);
};

inline bool is_zero(const RationalFnR& f) { return f.is_zero(); }

// The unit test of R applied to a Laurent polynomial over Z.
bool is_unit_in_R(const IntPoly& numerator);

// Same class modulo units of R: f/h and g/h are both R-units where
// h = gcd(f, g) in Z[t].
bool associated_in_R(const IntPoly& f, const IntPoly& g);

}  // namespace novikov

NOVIKOV_EXACT_NUMTRAITS(novikov::RationalFnR)
