#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "novikov/chain_complex.hpp"
#include "novikov/representation.hpp"
#include "novikov/upoly.hpp"

namespace novikov {

struct NovikovNumbers {
  std::vector<std::size_t> b;
  // Absent for non-integral classes.
  std::optional<std::vector<std::size_t>> q;
};

// Single-variable complex over Z[t, 1/t]: b_i over Q(t), q_i the number of
// non-unit nonzero invariant factors of d_{i+1} over R.
NovikovNumbers novikov_numbers(const ChainComplex<GroupRingElement>& x);
// Pushes forward along xi first. For a non-integral rational class only b is
// computed, through the integral class on the same ray.
NovikovNumbers novikov_numbers(const ChainComplex<GroupRingElement>& x, const CohomologyClass& xi);

enum class Verdict { pass, fail, not_computed };
std::string to_string(Verdict v);

struct InequalityCheck {
  std::size_t degree = 0;
  std::string kind;  // "novikov", "single" or "alternating"
  Rational lhs;
  Rational rhs;
  Rational slack;  // lhs - rhs
  Verdict verdict = Verdict::not_computed;
};

// c_j >= b_j + q_j + q_{j-1} per degree, q_{-1} = 0. Degrees beyond the
// shorter of the inputs count as zero.
std::vector<InequalityCheck> check_novikov_inequalities(const std::vector<std::size_t>& c,
                                                        const NovikovNumbers& numbers);

// c_p >= dims_p / dimE and sum_j (-1)^j c_{p-j} >= sum_j (-1)^j dims_{p-j} / dimE.
std::vector<InequalityCheck> morse_type_inequalities(const std::vector<std::size_t>& c,
                                                     const std::vector<std::size_t>& dims, std::size_t dim_e);

bool all_pass(const std::vector<InequalityCheck>& checks);

// dim H_p(X; a^xi (x) E) over Q.
std::vector<std::size_t> bundle_homology_dims(const ChainComplex<GroupRingElement>& x, const Rational& a,
                                              const MonodromyRep& e, const CohomologyClass& xi);

// sum n_h t^{xi(h)} E(h) blocks over Q[t, 1/t].
ChainComplex<Laurent<Rational>> twisted_laurent_complex(const ChainComplex<GroupRingElement>& x,
                                                        const MonodromyRep& e, const CohomologyClass& xi);

struct JumpReport {
  std::vector<std::size_t> generic_b;
  // Per degree; the constant 1 when there are no jumps in that degree.
  std::vector<IntPoly> jump_polynomials;
};

// b_i(xi; E) over Q(t) and, per degree, the squarefree part of the product
// of the generic-rank minor gcds of d_i and d_{i+1}, powers of t removed.
JumpReport generic_betti_and_jumps(const ChainComplex<GroupRingElement>& x, const MonodromyRep& e,
                                   const CohomologyClass& xi);

struct GenericityReport {
  bool generic = true;
  std::vector<std::size_t> fraction_field_dims;
  std::vector<std::size_t> trivial_line_dims;
};

// Compares dim over k(H) of the k(H) (x) E twisted complex with dim over k
// of the complex at the trivial line bundle (every variable -> 1).
GenericityReport is_xi_generic(const ChainComplex<GroupRingElement>& x, const MonodromyRep& e,
                               const FieldSpec& k = {});

// Cone of 1 - t h over Z[t, 1/t]: degree i is C_i + C_{i-1} with
// d = [[d_i, 1 - t h_{i-1}], [0, -d_{i-1}]]. Under t -> a the differential
// degenerates exactly when 1/a is an eigenvalue of h.
ChainComplex<GroupRingElement> mapping_torus(const ChainComplex<Integer>& c, const std::vector<Matrix<Integer>>& h);

}  // namespace novikov
