#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "novikov/chain_complex.hpp"
#include "novikov/laurent.hpp"
#include "novikov/upoly.hpp"

namespace testing_support {

using novikov::Exponent;
using novikov::GroupRingElement;
using novikov::IntPoly;
using novikov::Integer;
using novikov::Matrix;
using novikov::Rational;

// sum_k c_k t^(low + k) in rank 1.
inline GroupRingElement lp(std::initializer_list<long> ascending, long low = 0) {
  GroupRingElement p(std::size_t{1});
  long k = low;
  for (long c : ascending) {
    p.add_term(Exponent{k}, Integer(c));
    ++k;
  }
  return p;
}

inline GroupRingElement mono(const Exponent& e, long c = 1) { return GroupRingElement::monomial(e, Integer(c)); }

// Highest degree first.
inline IntPoly poly(std::initializer_list<long> descending) {
  std::vector<Integer> v;
  for (long c : descending) v.insert(v.begin(), Integer(c));
  return IntPoly(std::move(v));
}

template <class Ring>
Matrix<Ring> mat(std::initializer_list<std::initializer_list<Ring>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  Matrix<Ring> m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline std::vector<std::string> labels(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(stem + std::to_string(k));
  return out;
}

// 0 -> Z[t,1/t] --p--> Z[t,1/t] -> 0 in degrees 1, 0.
inline novikov::ChainComplex<GroupRingElement> one_cell_complex(const GroupRingElement& p) {
  return novikov::ChainComplex<GroupRingElement>({{"x"}, {"y"}}, {mat<GroupRingElement>({{p}})});
}

}  // namespace testing_support
