#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "novikov/errors.hpp"
#include "novikov/numbers.hpp"

namespace novikov {

// Element of the prime field F_p with the modulus carried at runtime.
//
// Integer literals (Fp(0), Fp(1), ...) are "unbound": they carry modulus 0
// and adopt the modulus of whatever bound element they meet. This lets
// generic code (and Eigen) create additive and multiplicative identities
// without knowing the characteristic.
class Fp {
 public:
  Fp() = default;
  Fp(int literal) : value_(literal) {}  // NOLINT: implicit literal conversion
  Fp(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw PreconditionError("F_p needs a modulus p >= 2");
    value_ = reduce(value, modulus);
  }

  static Fp from_rational(const Rational& x, std::uint64_t modulus) {
    Integer p(static_cast<unsigned long>(modulus));
    Integer num = x.get_num() % p;
    Integer den = x.get_den() % p;
    if (den == 0) {
      throw NotInvertibleError("denominator of " + to_string(x) + " vanishes mod " +
                               std::to_string(modulus));
    }
    Fp n(num.get_si(), modulus);
    Fp d(den.get_si(), modulus);
    return n * d.inverse();
  }

  std::uint64_t modulus() const { return modulus_; }
  bool bound() const { return modulus_ != 0; }
  // Representative in [0, p) for bound elements; the literal otherwise.
  std::int64_t value() const { return value_; }

  bool is_zero() const { return value_ == 0; }

  Fp inverse() const {
    if (value_ == 0) throw NotInvertibleError("inverse of zero in F_p");
    if (!bound()) {
      if (value_ == 1 || value_ == -1) return *this;
      throw PreconditionError("cannot invert an unbound F_p literal");
    }
    // Fermat: a^(p-2).
    return pow(modulus_ - 2);
  }

  Fp pow(std::uint64_t e) const {
    Fp base = *this;
    Fp result = bound() ? Fp(1, modulus_) : Fp(1);
    while (e != 0) {
      if (e & 1U) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  Fp& operator+=(const Fp& o) {
    auto p = join(o);
    if (p == 0) {
      value_ += o.value_;
    } else {
      value_ = reduce(static_cast<std::int64_t>(reduce(value_, p) + reduce(o.value_, p)), p);
      modulus_ = p;
    }
    return *this;
  }
  Fp& operator-=(const Fp& o) { return *this += -o; }
  Fp& operator*=(const Fp& o) {
    auto p = join(o);
    if (p == 0) {
      value_ *= o.value_;
    } else {
      unsigned __int128 prod = static_cast<unsigned __int128>(reduce(value_, p)) *
                               static_cast<unsigned __int128>(reduce(o.value_, p));
      value_ = static_cast<std::int64_t>(prod % p);
      modulus_ = p;
    }
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  Fp operator-() const {
    Fp r = *this;
    r.value_ = bound() ? (value_ == 0 ? 0 : static_cast<std::int64_t>(modulus_) - value_) : -value_;
    return r;
  }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint64_t p = a.modulus_ != 0 ? a.modulus_ : b.modulus_;
    if (p == 0) return a.value_ == b.value_;
    return reduce(a.value_, p) == reduce(b.value_, p);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value_; }

 private:
  static std::int64_t reduce(std::int64_t v, std::uint64_t p) {
    auto m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
  }

  std::uint64_t join(const Fp& o) const {
    if (modulus_ != 0 && o.modulus_ != 0 && modulus_ != o.modulus_) {
      throw DimensionError("F_p characteristic mismatch: " + std::to_string(modulus_) + " vs " +
                           std::to_string(o.modulus_));
    }
    return modulus_ != 0 ? modulus_ : o.modulus_;
  }

  std::int64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Fp field_inverse(const Fp& x) { return x.inverse(); }

}  // namespace novikov
