#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "novikov/cohomology.hpp"
#include "novikov/eigen_traits.hpp"
#include "novikov/laurent.hpp"

namespace novikov {

using ClassPtr = std::shared_ptr<const CohomologyClass>;

// Element of the Novikov-Sikorav completion known modulo monomials of
// xi-weight below `cutoff`: an exact representative of a coset. Equality
// and zero tests are coset tests. An element without a cutoff is exact
// (the image of a finite sum), and an element without a class is a
// rank-free literal that adopts the context of whatever it meets.
class NovikovElement {
 public:
  NovikovElement() = default;
  NovikovElement(int c) : terms_(c) {}  // NOLINT: literal conversion
  NovikovElement(GroupRingElement terms, ClassPtr xi, std::optional<Rational> cutoff);

  const GroupRingElement& terms() const { return terms_; }
  const ClassPtr& xi() const { return xi_; }
  const std::optional<Rational>& cutoff() const { return cutoff_; }

  bool is_zero() const { return terms_.is_zero(); }

  // Coarsens to a (higher) cutoff.
  NovikovElement truncated(const Rational& cutoff) const;

  NovikovElement& operator+=(const NovikovElement& o);
  NovikovElement& operator-=(const NovikovElement& o) { return *this += -o; }
  NovikovElement& operator*=(const NovikovElement& o);
  NovikovElement operator-() const;

  friend NovikovElement operator+(NovikovElement a, const NovikovElement& b) { return a += b; }
  friend NovikovElement operator-(NovikovElement a, const NovikovElement& b) { return a -= b; }
  friend NovikovElement operator*(NovikovElement a, const NovikovElement& b) { return a *= b; }

  // Agreement above the larger of the two cutoffs.
  friend bool operator==(const NovikovElement& a, const NovikovElement& b);
  friend bool operator!=(const NovikovElement& a, const NovikovElement& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const NovikovElement& x) { return os << x.str(); }

 private:
  // Joins class and cutoff with another operand; returns the combined cutoff.
  std::optional<Rational> join(const NovikovElement& o);
  void apply_cutoff();

  GroupRingElement terms_;
  ClassPtr xi_;
  std::optional<Rational> cutoff_;
};

inline bool is_zero(const NovikovElement& x) { return x.is_zero(); }

// The identity embedding Z[H] -> completion followed by truncation.
NovikovElement rho_novikov(const GroupRingElement& p, const ClassPtr& xi, const Rational& cutoff);

// Truncated Neumann series sum_{k=0}^{K} (-A)^k for a xi-negative square A
// with K = ceil(cutoff / (-lambda)), lambda = -max weight of the entries of A.
// Satisfies (I + A) * result = I modulo weights below the cutoff.
Matrix<NovikovElement> neumann_inverse(const Matrix<GroupRingElement>& a, const ClassPtr& xi,
                                       const Rational& cutoff);

// Inverse of a matrix whose nonnegative-weight part is a signed permutation
// matrix S and whose remainder N is xi-negative: (S + N)^{-1} =
// (I + S^T N)^{-1} S^T. Throws RepresentationError for any other shape.
Matrix<NovikovElement> invert_unit_plus_negative(const Matrix<NovikovElement>& m);

}  // namespace novikov

NOVIKOV_EXACT_NUMTRAITS(novikov::NovikovElement)
