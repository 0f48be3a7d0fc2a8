#pragma once

#include <optional>
#include <utility>

#include "novikov/eigen_traits.hpp"
#include "novikov/laurent.hpp"
#include "novikov/upoly.hpp"

namespace novikov {

// Exact coefficient division a / b, none when b does not divide a.
inline std::optional<Integer> coefficient_quotient(const Integer& a, const Integer& b) {
  if (b == 0 || a % b != 0) return std::nullopt;
  return Integer(a / b);
}
inline std::optional<Rational> coefficient_quotient(const Rational& a, const Rational& b) {
  if (b == 0) return std::nullopt;
  return Rational(a / b);
}
inline std::optional<Fp> coefficient_quotient(const Fp& a, const Fp& b) {
  if (b.is_zero()) return std::nullopt;
  return a / b;
}

// a / b in the Laurent ring when b divides a, none otherwise.
//
// Monomials are units, so both sides are first shifted into the polynomial
// ring with b free of monomial factors; then b | a in the Laurent ring iff
// b | a in the polynomial ring, which lexicographic division decides.
template <class C>
std::optional<Laurent<C>> divide_exact(const Laurent<C>& a, const Laurent<C>& b) {
  if (b.is_zero()) throw UndefinedInputError("division by zero");
  std::size_t r = b.has_rank() ? b.rank() : a.rank();
  if (a.has_rank()) r = a.rank();
  Laurent<C> num = a.bound_to(r);
  Laurent<C> den = b.bound_to(r);
  if (num.is_zero()) return num;
  Exponent shift_num = num.min_exponents();
  Exponent shift_den = den.min_exponents();
  Laurent<C> rem = num.shifted(negate_exponent(shift_num));
  den = den.shifted(negate_exponent(shift_den));
  const auto& [lead_exp, lead_coef] = *den.terms().rbegin();
  Laurent<C> quot(r);
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().rbegin();
    Exponent diff(r);
    for (std::size_t i = 0; i < r; ++i) {
      diff[i] = e[i] - lead_exp[i];
      if (diff[i] < 0) return std::nullopt;
    }
    auto q = coefficient_quotient(c, lead_coef);
    if (!q) return std::nullopt;
    Laurent<C> step = Laurent<C>::monomial(diff, *q);
    quot += step;
    rem -= step * den;
  }
  Exponent total(r);
  for (std::size_t i = 0; i < r; ++i) total[i] = shift_num[i] - shift_den[i];
  return quot.shifted(total);
}

// Rank-1 Laurent polynomial as t^shift * p(t) with p(0) != 0 (or p = 0).
template <class C>
std::pair<std::int64_t, UPoly<C>> to_shifted_upoly(const Laurent<C>& a) {
  Laurent<C> p = a.bound_to(1);
  if (p.is_zero()) return {0, UPoly<C>()};
  std::int64_t lo = p.min_exponents()[0];
  std::int64_t hi = p.max_exponents()[0];
  std::vector<C> v(static_cast<std::size_t>(hi - lo + 1), C(0));
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e[0] - lo)] = c;
  return {lo, UPoly<C>(std::move(v))};
}

template <class C>
Laurent<C> from_upoly(const UPoly<C>& p, std::int64_t shift = 0) {
  Laurent<C> r(std::size_t{1});
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    r.add_term(Exponent{static_cast<std::int64_t>(k) + shift}, p.coeffs()[k]);
  return r;
}

// Determinant over the Laurent ring by fraction-free (Bareiss) elimination.
template <class C>
Laurent<C> determinant(Matrix<Laurent<C>> m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw ShapeError("determinant of a non-square matrix");
  if (n == 0) return Laurent<C>(1);
  Laurent<C> prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = k; i < n; ++i) {
      if (!m(i, k).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Laurent<C>(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Laurent<C> v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        auto q = divide_exact(v, prev);
        if (!q) throw InvariantViolation("Bareiss step is not an exact division");
        m(i, j) = std::move(*q);
      }
      m(i, k) = Laurent<C>(0);
    }
    prev = m(k, k);
  }
  return negate ? Laurent<C>(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

// Rank over the fraction field of the Laurent ring, by fraction-free
// elimination with deterministic pivoting (first nonzero entry of the
// leftmost usable column, scanning rows top to bottom).
template <class C>
std::size_t rank_fraction_free(Matrix<Laurent<C>> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Laurent<C> prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(r).swap(m.row(pivot));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        Laurent<C> v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        auto q = divide_exact(v, prev);
        if (!q) throw InvariantViolation("Bareiss step is not an exact division");
        m(i, j) = std::move(*q);
      }
      m(i, c) = Laurent<C>(0);
    }
    prev = m(r, c);
    ++r;
  }
  return static_cast<std::size_t>(r);
}

}  // namespace novikov
