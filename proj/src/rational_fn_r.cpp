#include "novikov/rational_fn_r.hpp"

#include <sstream>

#include "novikov/laurent_algebra.hpp"

namespace novikov {

namespace {

bool is_monic(const IntPoly& q) { return !q.is_zero() && q.lead() == 1; }

}  // namespace

bool is_unit_in_R(const IntPoly& numerator) {
  if (numerator.is_zero()) return false;
  if (content(numerator) != 1) return false;
  const Integer& top = numerator.lead();
  return top == 1 || top == -1;
}

bool associated_in_R(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  IntPoly h = gcd(f, g);
  auto a = divide_exact(f, h);
  auto b = divide_exact(g, h);
  return is_unit_in_R(*a) && is_unit_in_R(*b);
}

RationalFnR::RationalFnR(IntPoly num, IntPoly den, std::int64_t shift)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  if (!is_monic(den_)) {
    throw PreconditionError("denominator of an element of R must be monic, got " + den_.str());
  }
  normalize();
}

RationalFnR RationalFnR::from_laurent(const GroupRingElement& p) {
  return from_laurent(p, IntPoly(1));
}

RationalFnR RationalFnR::from_laurent(const GroupRingElement& p, const IntPoly& den) {
  auto [shift, poly] = to_shifted_upoly(p);
  return RationalFnR(std::move(poly), den, shift);
}

void RationalFnR::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    return;
  }
  std::size_t v = num_.valuation();
  if (v > 0) {
    num_ = num_.shifted_down(v);
    shift_ += static_cast<std::int64_t>(v);
  }
}

GroupRingElement RationalFnR::numerator() const { return from_upoly(num_, shift_); }

bool RationalFnR::is_unit() const { return is_unit_in_R(num_); }

RationalFnR RationalFnR::inverse() const {
  if (!is_unit()) {
    throw NotInvertibleError("not a unit of R: " + str());
  }
  // num = t^shift * p0 with lead(p0) = s = ±1.
  int s = sgn(num_.lead());
  IntPoly new_den = IntPoly::constant(Integer(s)) * num_;
  IntPoly new_num = IntPoly::constant(Integer(s)) * den_;
  return RationalFnR(std::move(new_num), std::move(new_den), -shift_);
}

Rational RationalFnR::evaluate(const Rational& a) const {
  Rational d = den_.evaluate<Rational>(a);
  if (d == 0) throw UndefinedInputError("denominator of " + str() + " vanishes at " + to_string(a));
  if (a == 0 && shift_ < 0 && !num_.is_zero()) {
    throw UndefinedInputError("negative power of t evaluated at 0");
  }
  return num_.evaluate<Rational>(a) * power(a, static_cast<long>(shift_)) / d;
}

RationalFnR RationalFnR::reduced() const {
  if (num_.is_zero()) return *this;
  IntPoly g = primitive_part(gcd(num_, den_));
  if (g.degree() <= 0) return *this;
  // g divides the monic den in Z[t], so its top coefficient is ±1.
  auto n = divide_exact(num_, g);
  auto d = divide_exact(den_, g);
  IntPoly dd = *d;
  IntPoly nn = *n;
  if (sgn(dd.lead()) < 0) {
    dd = -dd;
    nn = -nn;
  }
  return RationalFnR(nn, dd, shift_);
}

RationalFnR& RationalFnR::operator+=(const RationalFnR& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  IntPoly a = num_;
  IntPoly b = o.num_;
  IntPoly den;
  if (den_ == o.den_) {
    den = den_;
  } else {
    a = a * o.den_;
    b = b * den_;
    den = den_ * o.den_;
  }
  std::int64_t s = std::min(shift_, o.shift_);
  a = a.shifted_up(static_cast<std::size_t>(shift_ - s));
  b = b.shifted_up(static_cast<std::size_t>(o.shift_ - s));
  num_ = a + b;
  den_ = std::move(den);
  shift_ = s;
  normalize();
  return *this;
}

RationalFnR& RationalFnR::operator*=(const RationalFnR& o) {
  num_ = num_ * o.num_;
  if (o.den_ != IntPoly(1)) den_ = den_ * o.den_;
  shift_ += o.shift_;
  normalize();
  return *this;
}

RationalFnR RationalFnR::operator-() const {
  RationalFnR r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RationalFnR& a, const RationalFnR& b) {
  if (a.num_.is_zero() || b.num_.is_zero()) return a.num_.is_zero() && b.num_.is_zero();
  if (a.den_ == b.den_) return a.shift_ == b.shift_ && a.num_ == b.num_;
  // t^sa na db == t^sb nb da
  IntPoly left = a.num_ * b.den_;
  IntPoly right = b.num_ * a.den_;
  std::int64_t sl = a.shift_ + static_cast<std::int64_t>(left.valuation());
  std::int64_t sr = b.shift_ + static_cast<std::int64_t>(right.valuation());
  return sl == sr && left.shifted_down(left.valuation()) == right.shifted_down(right.valuation());
}

std::string RationalFnR::str() const {
  std::ostringstream os;
  os << "(" << numerator() << ")";
  if (den_ != IntPoly(1)) os << "/(" << den_ << ")";
  return os.str();
}

}  // namespace novikov
