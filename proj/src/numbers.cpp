#include "novikov/numbers.hpp"

#include <cctype>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw ParseError("not an integer: \"" + std::string(text) + "\"");
  }
  return Integer(strip_plus(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str(10);
}
std::string to_string(const Integer& x) { return x.get_str(10); }

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational power(const Rational& x, long k) {
  if (k < 0) {
    if (x == 0) throw UndefinedInputError("negative power of zero");
    return power(1 / x, -k);
  }
  Rational result(1);
  Rational base = x;
  unsigned long e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace novikov
