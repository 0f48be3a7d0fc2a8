#include "novikov/dirichlet.hpp"

#include <algorithm>

namespace novikov {

namespace {

// Positive and negative divisors of a nonzero integer.
std::vector<Integer> signed_divisors(const Integer& n) {
  Integer a = abs(n);
  std::vector<Integer> pos;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      pos.push_back(d);
      if (d * d != a) pos.push_back(Integer(a / d));
    }
  }
  std::vector<Integer> all;
  for (const auto& d : pos) {
    all.push_back(d);
    all.push_back(Integer(-d));
  }
  return all;
}

bool has_quadratic_factor(const IntPoly& f) {
  const Integer f0 = f.evaluate<Integer>(Integer(0));
  const Integer f1 = f.evaluate<Integer>(Integer(1));
  const Integer fm = f.evaluate<Integer>(Integer(-1));
  if (f0 == 0 || f1 == 0 || fm == 0) return true;
  const auto d0 = signed_divisors(f0);
  const auto d1 = signed_divisors(f1);
  const auto dm = signed_divisors(fm);
  for (const auto& c : d0)
    for (const auto& u : d1)
      for (const auto& v : dm) {
        Integer twice_a = u + v - 2 * c;
        Integer twice_b = u - v;
        if (twice_a % 2 != 0 || twice_b % 2 != 0 || twice_a == 0) continue;
        IntPoly g(std::vector<Integer>{c, Integer(twice_b / 2), Integer(twice_a / 2)});
        if (divides(g, f)) return true;
      }
  return false;
}

}  // namespace

IntPoly MinimalPolynomialCandidate::polynomial() const {
  std::vector<Integer> asc(coefficients.rbegin(), coefficients.rend());
  return IntPoly(std::move(asc));
}

bool is_irreducible_small(const IntPoly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() > kIrreducibilityCheckDegree) {
    throw PreconditionError("irreducibility is only checked up to degree " +
                            std::to_string(kIrreducibilityCheckDegree));
  }
  if (p.degree() == 1) return true;
  const IntPoly q = primitive_part(p);
  if (!rational_roots(q).empty()) return false;
  if (q.degree() <= 3) return true;
  return !has_quadratic_factor(q);
}

void validate_candidate(const MinimalPolynomialCandidate& c) {
  IntPoly p = c.polynomial();
  if (p.degree() < 1) throw PreconditionError("minimal polynomial candidate must have degree >= 1");
  if (content(p) != 1) throw PreconditionError("minimal polynomial candidate " + p.str() + " is not primitive");
  if (p[0] == 0) throw PreconditionError("minimal polynomial candidate " + p.str() + " has a zero root");
  if (p.degree() <= kIrreducibilityCheckDegree) {
    if (!is_irreducible_small(p)) throw PreconditionError("minimal polynomial candidate " + p.str() + " is reducible");
    if (c.irreducible && !*c.irreducible) {
      throw PreconditionError("candidate " + p.str() + " is flagged reducible but is irreducible");
    }
    return;
  }
  if (!c.irreducible || !*c.irreducible) {
    throw PreconditionError("degree " + std::to_string(p.degree()) + " candidate needs the irreducible flag");
  }
}

bool is_algebraic_integer(const Rational& x) {
  if (is_zero(x)) throw UndefinedInputError("zero is excluded");
  return x.get_den() == 1;
}

bool is_algebraic_integer(const MinimalPolynomialCandidate& c) {
  validate_candidate(c);
  const Integer lead = c.polynomial().lead();
  return lead == 1 || lead == -1;
}

bool is_dirichlet_unit(const Rational& x) {
  if (is_zero(x)) throw UndefinedInputError("zero is excluded");
  return x == 1 || x == -1;
}

bool is_dirichlet_unit(const MinimalPolynomialCandidate& c) {
  validate_candidate(c);
  IntPoly p = c.polynomial();
  auto unit = [](const Integer& v) { return v == 1 || v == -1; };
  return unit(p.lead()) && unit(p[0]);
}

Rational monodromy_value(const LineBundleMonodromy& l, const GroupRingElement& p) {
  if (p.has_rank() && !p.is_zero() && p.rank() != l.values.size()) {
    throw DimensionError("element of rank " + std::to_string(p.rank()) + " against a bundle of rank " +
                         std::to_string(l.values.size()));
  }
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = Rational(c);
    for (std::size_t j = 0; j < e.size(); ++j) term *= power(l.values[j], static_cast<long>(e[j]));
    acc += term;
  }
  return acc;
}

bool verify_xi_algebraic_integer_witness(const LineBundleMonodromy& l, const CohomologyClass& xi,
                                         const GroupRingElement& p) {
  if (l.values.size() != xi.rank()) {
    throw DimensionError("bundle of rank " + std::to_string(l.values.size()) + " against a class of rank " +
                         std::to_string(xi.rank()));
  }
  for (std::size_t j = 0; j < l.values.size(); ++j) {
    if (is_zero(l.values[j])) throw PreconditionError("monodromy value " + std::to_string(j + 1) + " is zero");
    if (is_zero(xi.weights[j]) && l.values[j] != 1) {
      throw PreconditionError("monodromy along basis direction " + std::to_string(j + 1) +
                              " lies in ker(xi) and must be 1");
    }
  }
  if (!is_zero(monodromy_value(l, p))) return false;
  auto top = xi_degree_and_top(xi, p);
  return top && (top->top == 1 || top->top == -1);
}

}  // namespace novikov
