#include "novikov/cohomology.hpp"

#include <map>

#include "novikov/errors.hpp"

namespace novikov {

bool CohomologyClass::is_integral() const {
  for (const auto& w : weights)
    if (!novikov::is_integral(w)) return false;
  return true;
}

bool CohomologyClass::is_zero() const {
  for (const auto& w : weights)
    if (w != 0) return false;
  return true;
}

Rational weight(const CohomologyClass& xi, const Exponent& m) {
  if (m.size() != xi.rank()) {
    throw DimensionError("weight: exponent of length " + std::to_string(m.size()) +
                         " against a class of rank " + std::to_string(xi.rank()));
  }
  Rational w(0);
  for (std::size_t i = 0; i < m.size(); ++i) w += xi.weights[i] * m[i];
  return w;
}

std::optional<Rational> max_weight(const CohomologyClass& xi, const GroupRingElement& p) {
  auto q = p.bound_to(xi.rank());
  std::optional<Rational> best;
  for (const auto& [e, c] : q.terms()) {
    Rational w = weight(xi, e);
    if (!best || w > *best) best = w;
  }
  return best;
}

bool is_xi_negative(const CohomologyClass& xi, const GroupRingElement& p) {
  auto q = p.bound_to(xi.rank());
  for (const auto& [e, c] : q.terms())
    if (weight(xi, e) >= 0) return false;
  return true;
}

bool is_xi_negative_matrix(const CohomologyClass& xi, const Matrix<GroupRingElement>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_xi_negative(xi, a(i, j))) return false;
  return true;
}

std::optional<XiTop> xi_degree_and_top(const CohomologyClass& xi, const GroupRingElement& p) {
  if (p.is_zero()) throw UndefinedInputError("xi-degree of the zero element is undefined");
  auto q = p.bound_to(xi.rank());
  std::map<Rational, Integer> levels;
  for (const auto& [e, c] : q.terms()) levels[weight(xi, e)] += c;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    if (it->second != 0) return XiTop{it->first, it->second};
  }
  return std::nullopt;
}

GroupRingElement truncate_below(const CohomologyClass& xi, const GroupRingElement& p,
                                const Rational& cutoff) {
  auto q = p.bound_to(xi.rank());
  GroupRingElement r(xi.rank());
  for (const auto& [e, c] : q.terms())
    if (weight(xi, e) >= cutoff) r.add_term(e, c);
  return r;
}

}  // namespace novikov
