#pragma once

#include <Eigen/Core>

#include "novikov/laurent.hpp"
#include "novikov/numbers.hpp"
#include "novikov/prime_field.hpp"

namespace novikov {

// Dense matrix over one of the exact rings of the tower.
template <class Ring>
using Matrix = Eigen::Matrix<Ring, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

// Eigen needs a NumTraits specialisation for every scalar. None of these
// rings is ordered or approximate, so precision queries return zero and
// nothing is vectorised.
template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline T epsilon() { return T(0); }
  static inline T dummy_precision() { return T(0); }
  static inline int digits10() { return 0; }
};

}  // namespace detail
}  // namespace novikov

#define NOVIKOV_EXACT_NUMTRAITS(TYPE)                                   \
  namespace Eigen {                                                    \
  template <>                                                          \
  struct NumTraits<TYPE> : novikov::detail::ExactNumTraits<TYPE> {};   \
  }

NOVIKOV_EXACT_NUMTRAITS(novikov::Integer)
NOVIKOV_EXACT_NUMTRAITS(novikov::Rational)
NOVIKOV_EXACT_NUMTRAITS(novikov::Fp)

namespace Eigen {
template <class Coef>
struct NumTraits<novikov::Laurent<Coef>> : novikov::detail::ExactNumTraits<novikov::Laurent<Coef>> {};
}  // namespace Eigen

namespace novikov {

template <class Ring>
Matrix<Ring> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  Matrix<Ring> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Ring(0);
  return m;
}

template <class Ring>
Matrix<Ring> identity_matrix(Eigen::Index n) {
  Matrix<Ring> m = zero_matrix<Ring>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Ring(1);
  return m;
}

template <class Ring>
bool is_zero_matrix(const Matrix<Ring>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

// Entrywise ring equality; shapes must agree.
template <class Ring>
bool matrices_equal(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class Ring, class F>
auto map_entries(const Matrix<Ring>& m, F&& f) {
  using To = std::decay_t<decltype(f(m(0, 0)))>;
  Matrix<To> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = f(m(i, j));
  return r;
}

// Submatrix on the given row and column index lists.
template <class Ring>
Matrix<Ring> submatrix(const Matrix<Ring>& m, const std::vector<Eigen::Index>& rows,
                       const std::vector<Eigen::Index>& cols) {
  Matrix<Ring> r(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(rows[i], cols[j]);
  return r;
}

}  // namespace novikov
