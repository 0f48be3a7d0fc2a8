#include "novikov/upoly.hpp"

#include <algorithm>
#include <set>

namespace novikov {

namespace {

IntPoly positive_lead(IntPoly p) {
  if (!p.is_zero() && sgn(p.lead()) < 0) p = -p;
  return p;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[t].
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r = a.coeffs();
  int db = b.degree();
  const Integer& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    Integer c = r[static_cast<std::size_t>(k)];
    for (auto& x : r) x *= lb;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  return IntPoly(std::move(r));
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Integer content(const IntPoly& p) {
  Integer g(0);
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (sgn(p.lead()) < 0) c = -c;
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) v.push_back(x / c);
  return IntPoly(std::move(v));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  Integer c = gcd(content(a), content(b));
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  return IntPoly::constant(c) * primitive_part(x);
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw UndefinedInputError("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Integer(0));
  int db = b.degree();
  const Integer& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (top % lb != 0) return std::nullopt;
    Integer c = top / lb;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

bool divides(const IntPoly& b, const IntPoly& a) { return divide_exact(a, b).has_value(); }

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  IntPoly pp = primitive_part(p);
  if (pp.degree() <= 0) return IntPoly(1);
  IntPoly g = gcd(pp, pp.derivative());
  auto q = divide_exact(pp, primitive_part(g));
  return primitive_part(*q);
}

std::vector<Rational> rational_roots(const IntPoly& p) {
  std::set<Rational> roots;
  if (p.is_zero()) throw UndefinedInputError("roots of the zero polynomial");
  std::size_t v = p.valuation();
  if (v > 0) roots.insert(Rational(0));
  IntPoly q = p.shifted_down(v);
  if (q.degree() >= 1) {
    auto nums = positive_divisors(q[0]);
    auto dens = positive_divisors(q.lead());
    for (const auto& d : dens) {
      for (const auto& n : nums) {
        for (int s : {1, -1}) {
          Rational x(n * s, d);
          x.canonicalize();
          if (roots.count(x)) continue;
          if (q.evaluate<Rational>(x) == 0) roots.insert(x);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

IntPoly to_primitive_integer(const RatPoly& p) {
  if (p.is_zero()) return IntPoly();
  Integer l(1);
  for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> v;
  for (const auto& c : p.coeffs()) v.push_back(Integer(c.get_num()) * (l / c.get_den()));
  return primitive_part(IntPoly(std::move(v)));
}

RatPoly to_rational(const IntPoly& p) {
  return p.map_coefficients<Rational>([](const Integer& c) { return Rational(c); });
}

}  // namespace novikov
