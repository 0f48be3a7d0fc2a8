#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "novikov/eigen_traits.hpp"
#include "novikov/laurent_algebra.hpp"
#include "novikov/novikov_series.hpp"
#include "novikov/rational_fn_r.hpp"
#include "novikov/rational_function.hpp"
#include "novikov/upoly.hpp"

namespace novikov {

// ---- Ranks ----

// Gaussian elimination over a field (Rational, Fp).
template <class F>
std::size_t field_rank(Matrix<F> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(r).swap(m.row(pivot));
    F inv = field_inverse(m(r, c));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      F factor = m(i, c) * inv;
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return static_cast<std::size_t>(r);
}

inline std::size_t matrix_rank(const Matrix<Rational>& m) { return field_rank(m); }
inline std::size_t matrix_rank(const Matrix<Fp>& m) { return field_rank(m); }

// Rank over the fraction field of Z[H] (or k[H]), fraction free.
std::size_t rank_over_fraction_field(const Matrix<GroupRingElement>& m);
inline std::size_t rank_over_fraction_field(const Matrix<Laurent<Rational>>& m) {
  return rank_fraction_free(m);
}
inline std::size_t rank_over_fraction_field(const Matrix<Laurent<Fp>>& m) {
  return rank_fraction_free(m);
}

// Rows are scaled by their common denominator, which never changes the rank.
template <class F>
std::size_t rank_over_fraction_field(const Matrix<RationalFunction<F>>& m) {
  Matrix<Laurent<F>> cleared(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Laurent<F> common(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto& d = m(i, j).denominator();
      if (!(d == Laurent<F>(1))) common = common * d;
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      auto q = divide_exact(common * m(i, j).numerator(), m(i, j).denominator());
      cleared(i, j) = *q;
    }
  }
  return rank_fraction_free(cleared);
}
std::size_t rank_over_fraction_field(const Matrix<RationalFnR>& m);

template <class F>
std::size_t matrix_rank(const Matrix<RationalFunction<F>>& m) {
  return rank_over_fraction_field(m);
}
inline std::size_t matrix_rank(const Matrix<GroupRingElement>& m) { return rank_over_fraction_field(m); }
inline std::size_t matrix_rank(const Matrix<Laurent<Rational>>& m) { return rank_over_fraction_field(m); }
inline std::size_t matrix_rank(const Matrix<Laurent<Fp>>& m) { return rank_over_fraction_field(m); }
inline std::size_t matrix_rank(const Matrix<RationalFnR>& m) { return rank_over_fraction_field(m); }

// ---- Inverses ----

// Gauss-Jordan inverse over a field. Throws NotInvertibleError when singular.
template <class F>
Matrix<F> field_inverse_matrix(const Matrix<F>& input) {
  if (input.rows() != input.cols()) throw ShapeError("inverse of a non-square matrix");
  const Eigen::Index n = input.rows();
  Matrix<F> m = input;
  Matrix<F> inv = identity_matrix<F>(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!is_zero(m(i, c))) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw NotInvertibleError("matrix is singular: determinant 0");
    if (pivot != c) {
      m.row(c).swap(m.row(pivot));
      inv.row(c).swap(inv.row(pivot));
    }
    F p = field_inverse(m(c, c));
    for (Eigen::Index j = 0; j < n; ++j) {
      m(c, j) = m(c, j) * p;
      inv(c, j) = inv(c, j) * p;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || is_zero(m(i, c))) continue;
      F factor = m(i, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        m(i, j) -= factor * m(c, j);
        inv(i, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

inline Matrix<Rational> exact_inverse(const Matrix<Rational>& m) { return field_inverse_matrix(m); }
inline Matrix<Fp> exact_inverse(const Matrix<Fp>& m) { return field_inverse_matrix(m); }
template <class F>
Matrix<RationalFunction<F>> exact_inverse(const Matrix<RationalFunction<F>>& m) {
  return field_inverse_matrix(m);
}
// Over R: adjugate over the denominator, valid when the determinant is an
// R-unit. Throws NotInvertibleError naming the determinant otherwise.
Matrix<RationalFnR> exact_inverse(const Matrix<RationalFnR>& m);
// Over the truncated completion: the unit-plus-negative shape only.
inline Matrix<NovikovElement> exact_inverse(const Matrix<NovikovElement>& m) {
  return invert_unit_plus_negative(m);
}

// Determinant over R, as an element of R.
RationalFnR determinant(const Matrix<RationalFnR>& m);

// ---- Invariant factors over R ----

struct InvariantFactorProfile {
  std::size_t rank = 0;
  std::size_t unit_count = 0;
  // Non-unit nonzero invariant factors; Z[t] representatives up to R-units.
  std::vector<IntPoly> torsion_factors;
  // Delta_1 .. Delta_rank, normalised (no t factor, positive lead).
  std::vector<IntPoly> determinantal_divisors;
};

inline constexpr Eigen::Index kInvariantFactorSizeCap = 12;

// Determinantal-divisor computation of the invariant factors of a matrix
// over Z[t, t^-1] regarded over R. Throws SizeError beyond 12 x 12.
InvariantFactorProfile invariant_factors_over_R(const Matrix<GroupRingElement>& m);
// Denominators are monic, hence R-units, and are cleared row by row.
InvariantFactorProfile invariant_factors_over_R(const Matrix<RationalFnR>& m);

// Drops factors that are R-units and are cheap to find: powers of t, sign,
// and monic linear factors t - k with k an integer.
IntPoly simplify_modulo_R_units(const IntPoly& p);

// gcd over Q[t] of all k x k minors of m, as a primitive integer polynomial
// (0 when all minors vanish). Powers of t are stripped. Used for jump loci.
IntPoly minors_gcd(const Matrix<Laurent<Rational>>& m, std::size_t k);

}  // namespace novikov
