#pragma once

#include <optional>
#include <vector>

#include "novikov/cohomology.hpp"
#include "novikov/upoly.hpp"

namespace novikov {

// Integer polynomial proposed as the minimal polynomial of an algebraic
// number.
struct MinimalPolynomialCandidate {
  std::vector<Integer> coefficients;  // highest degree first
  // Caller's irreducibility claim; required above degree 4.
  std::optional<bool> irreducible;

  IntPoly polynomial() const;
};

inline constexpr int kIrreducibilityCheckDegree = 4;

// Irreducibility over Q of a primitive polynomial of degree <= 4, by the
// rational root test and a search for quadratic factors.
bool is_irreducible_small(const IntPoly& p);

// Throws PreconditionError unless the candidate is primitive, of degree
// >= 1, has a nonzero constant term and is irreducible (checked up to
// degree 4, taken from the flag beyond).
void validate_candidate(const MinimalPolynomialCandidate& c);

bool is_algebraic_integer(const Rational& x);
bool is_algebraic_integer(const MinimalPolynomialCandidate& c);
bool is_dirichlet_unit(const Rational& x);
bool is_dirichlet_unit(const MinimalPolynomialCandidate& c);

// Rational monodromy of a line bundle along the basis of H.
struct LineBundleMonodromy {
  std::vector<Rational> values;
};

// ml(p) = sum n_h prod_j m_j^{h_j}.
Rational monodromy_value(const LineBundleMonodromy& l, const GroupRingElement& p);

// p is a witness when ml(p) = 0 and v_xi(p) = +-1. The bundle must be
// trivial (m_j = 1) along every basis direction with lambda_j = 0.
bool verify_xi_algebraic_integer_witness(const LineBundleMonodromy& l, const CohomologyClass& xi,
                                         const GroupRingElement& p);

}  // namespace novikov
