#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include "novikov/eigen_traits.hpp"
#include "novikov/laurent.hpp"
#include "novikov/laurent_algebra.hpp"
#include "novikov/upoly.hpp"

namespace novikov {

// Element of the field of rational functions k(t_1, ..., t_r), k = Q or F_p,
// stored as a quotient of Laurent polynomials.
//
// In one variable the quotient is kept in lowest terms via Euclid. In
// several variables only cheap normalisations are applied (exact division
// of the numerator by the denominator, monic lexicographic leading term,
// monomial content moved to the numerator); equality is by cross
// multiplication, so this never affects results.
template <class F>
class RationalFunction {
 public:
  using poly_type = Laurent<F>;

  RationalFunction() : den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}  // NOLINT: literal conversion
  explicit RationalFunction(poly_type num) : num_(std::move(num)), den_(1) { normalize(); }
  RationalFunction(poly_type num, poly_type den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw UndefinedInputError("rational function with zero denominator");
    normalize();
  }

  const poly_type& numerator() const { return num_; }
  const poly_type& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction inverse() const {
    if (is_zero()) throw NotInvertibleError("inverse of zero in the rational function field");
    return RationalFunction(den_, num_);
  }

  RationalFunction& operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    }
    normalize();
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
  RationalFunction& operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    os << "(" << f.num_ << ")";
    if (!(f.den_ == poly_type(1))) os << "/(" << f.den_ << ")";
    return os;
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = poly_type(1);
      if (num_.has_rank()) den_.bind_rank(num_.rank());
      return;
    }
    if (num_.has_rank() && !den_.has_rank()) den_.bind_rank(num_.rank());
    if (den_.has_rank() && !num_.has_rank()) num_.bind_rank(den_.rank());
    const std::size_t r = den_.rank();
    if (!den_.has_rank() || r == 0) {
      // Both are constants.
      F d = den_.coefficient(Exponent(den_.has_rank() ? r : 0, 0));
      num_ = num_.template map_coefficients<F>([&](const F& c) { return F(c / d); });
      den_ = poly_type(1);
      if (num_.has_rank()) den_.bind_rank(num_.rank());
      return;
    }
    if (r == 1) {
      auto [sn, pn] = to_shifted_upoly(num_);
      auto [sd, pd] = to_shifted_upoly(den_);
      auto g = gcd(pn, pd);
      pn = divmod(pn, g).first;
      pd = divmod(pd, g).first;
      F lead = pd.lead();
      F inv = field_inverse(lead);
      pn = UPoly<F>::constant(inv) * pn;
      pd = UPoly<F>::constant(inv) * pd;
      num_ = from_upoly(pn, sn - sd);
      den_ = from_upoly(pd, 0);
      return;
    }
    if (auto q = divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = poly_type::constant(r, F(1));
      return;
    }
    Exponent m = den_.min_exponents();
    Exponent neg = negate_exponent(m);
    den_ = den_.shifted(neg);
    num_ = num_.shifted(neg);
    F inv = field_inverse(den_.terms().rbegin()->second);
    poly_type scale = poly_type::constant(r, inv);
    den_ = den_ * scale;
    num_ = num_ * scale;
  }

  poly_type num_;
  poly_type den_;
};

template <class F>
bool is_zero(const RationalFunction<F>& f) {
  return f.is_zero();
}

template <class F>
RationalFunction<F> field_inverse(const RationalFunction<F>& f) {
  return f.inverse();
}

}  // namespace novikov

namespace Eigen {
template <class F>
struct NumTraits<novikov::RationalFunction<F>>
    : novikov::detail::ExactNumTraits<novikov::RationalFunction<F>> {};
}  // namespace Eigen
