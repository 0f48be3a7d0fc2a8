#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/numbers.hpp"
#include "novikov/prime_field.hpp"

namespace novikov {

// Dense univariate polynomial, coefficients in ascending degree order with
// no trailing zeros.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  UPoly(int c) {  // NOLINT: literal conversion
    if (c != 0) coeffs_.push_back(C(c));
  }
  explicit UPoly(std::vector<C> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static UPoly constant(const C& c) { return UPoly(std::vector<C>{c}); }
  static UPoly monomial(std::size_t k, const C& c) {
    std::vector<C> v(k + 1, C(0));
    v[k] = c;
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<C>& coeffs() const { return coeffs_; }
  C operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }
  const C& lead() const {
    if (coeffs_.empty()) throw UndefinedInputError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  // Index of the lowest nonzero coefficient (the t-adic valuation).
  std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!is_zero_coef(coeffs_[i])) return i;
    return 0;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) { return *this += -o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<C> r(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const C& s, const UPoly& p) { return UPoly::constant(s) * p; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Multiplication by t^k.
  UPoly shifted_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<C> v(k, C(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return UPoly(std::move(v));
  }

  // Division by t^k; the caller guarantees k <= valuation().
  UPoly shifted_down(std::size_t k) const {
    if (k > coeffs_.size()) return UPoly();
    return UPoly(std::vector<C>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  UPoly derivative() const {
    if (coeffs_.size() <= 1) return UPoly();
    std::vector<C> v(coeffs_.size() - 1, C(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * C(static_cast<int>(i));
    return UPoly(std::move(v));
  }

  // Coefficients in reverse order: t^deg * p(1/t).
  UPoly reversed() const {
    std::vector<C> v(coeffs_.rbegin(), coeffs_.rend());
    return UPoly(std::move(v));
  }

  template <class To, class F>
  UPoly<To> map_coefficients(F&& f) const {
    std::vector<To> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return UPoly<To>(std::move(v));
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const UPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = p.coeffs_.size(); k-- > 0;) {
      const C& c = p.coeffs_[k];
      if (is_zero_coef(c)) continue;
      if (!first) os << " + ";
      first = false;
      if (k == 0 || !(c == C(1))) {
        os << c;
        if (k != 0) os << "*";
      }
      if (k >= 1) os << "t";
      if (k >= 2) os << "^" << k;
    }
    return os;
  }

 private:
  static bool is_zero_coef(const C& c) { return ::novikov::is_zero(c); }
  void trim() {
    while (!coeffs_.empty() && is_zero_coef(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

template <class C>
bool is_zero(const UPoly<C>& p) {
  return p.is_zero();
}

using IntPoly = UPoly<Integer>;
using RatPoly = UPoly<Rational>;

// ---- Field coefficients (Rational, Fp) ----

template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.is_zero()) throw UndefinedInputError("polynomial division by zero");
  std::vector<F> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly<F>(), a};
  std::vector<F> quot(static_cast<std::size_t>(a.degree() - db + 1), F(0));
  F inv_lead = field_inverse(b.lead());
  for (int k = a.degree(); k >= db; --k) {
    F c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (is_zero(c)) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  return {UPoly<F>(std::move(quot)), UPoly<F>(std::move(rem))};
}

template <class F>
UPoly<F> make_monic(const UPoly<F>& p) {
  if (p.is_zero()) return p;
  return UPoly<F>::constant(field_inverse(p.lead())) * p;
}

// Monic gcd over a field; gcd(0, 0) = 0.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// ---- Integer coefficients ----

// Positive gcd of the coefficients; 0 for the zero polynomial.
Integer content(const IntPoly& p);
// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);
// gcd in Z[t], normalised with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// a / b when b divides a in Z[t].
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);
// Product of the distinct irreducible factors, primitive, positive lead.
IntPoly squarefree_part(const IntPoly& p);
// All rational roots, sorted ascending, without multiplicity.
std::vector<Rational> rational_roots(const IntPoly& p);

// Clears denominators: c * p with c > 0 minimal so that the result is in Z[t]
// and primitive.
IntPoly to_primitive_integer(const RatPoly& p);
RatPoly to_rational(const IntPoly& p);

}  // namespace novikov
