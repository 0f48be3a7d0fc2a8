#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novikov/eigen_traits.hpp"
#include "novikov/laurent.hpp"
#include "novikov/numbers.hpp"

namespace novikov {

// A class xi: H -> R given by its rational values on the basis of H.
struct CohomologyClass {
  std::vector<Rational> weights;

  CohomologyClass() = default;
  explicit CohomologyClass(std::vector<Rational> w) : weights(std::move(w)) {}

  std::size_t rank() const { return weights.size(); }
  bool is_integral() const;
  bool is_zero() const;

  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

// xi(m) = sum_i lambda_i m_i.
Rational weight(const CohomologyClass& xi, const Exponent& m);

// Largest weight among the monomials of p; none for p = 0.
std::optional<Rational> max_weight(const CohomologyClass& xi, const GroupRingElement& p);

// Every stored monomial has strictly negative weight. Zero is negative.
bool is_xi_negative(const CohomologyClass& xi, const GroupRingElement& p);
bool is_xi_negative_matrix(const CohomologyClass& xi, const Matrix<GroupRingElement>& a);

struct XiTop {
  Rational degree;  // d_xi(p)
  Integer top;      // v_xi(p)

  friend bool operator==(const XiTop&, const XiTop&) = default;
};

// The xi-degree and xi-top coefficient: the highest weight level whose
// coefficient sum is nonzero. Returns none when every level sums to zero.
// Throws UndefinedInputError for p = 0.
std::optional<XiTop> xi_degree_and_top(const CohomologyClass& xi, const GroupRingElement& p);

// Drops every monomial whose weight is strictly below `cutoff`.
GroupRingElement truncate_below(const CohomologyClass& xi, const GroupRingElement& p,
                                const Rational& cutoff);

}  // namespace novikov
