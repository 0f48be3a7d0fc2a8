#include "novikov/matrix.hpp"

#include <functional>

namespace novikov {

namespace {

using Index = Eigen::Index;

// Calls f on every increasing k-subset of {0..n-1}; stops when f returns false.
void for_each_subset(Index n, Index k, const std::function<bool(const std::vector<Index>&)>& f) {
  if (k > n || k < 0) return;
  std::vector<Index> idx(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!f(idx)) return;
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Numerator matrix of an R-matrix after multiplying by the product q of the
// distinct denominators; returns q as well.
std::pair<Matrix<GroupRingElement>, IntPoly> clear_denominators(const Matrix<RationalFnR>& m) {
  std::vector<IntPoly> dens;
  IntPoly q(1);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const IntPoly& d = m(i, j).denominator();
      if (d == IntPoly(1)) continue;
      if (std::find(dens.begin(), dens.end(), d) != dens.end()) continue;
      dens.push_back(d);
      q = q * d;
    }
  Matrix<GroupRingElement> n(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      auto cof = divide_exact(q, m(i, j).denominator());
      n(i, j) = m(i, j).numerator() * from_upoly(*cof);
    }
  return {n, q};
}

IntPoly strip_t(const IntPoly& p) {
  if (p.is_zero()) return p;
  IntPoly r = p.shifted_down(p.valuation());
  if (sgn(r.lead()) < 0) r = -r;
  return r;
}

IntPoly to_int_poly(const GroupRingElement& p) { return strip_t(to_shifted_upoly(p).second); }

}  // namespace

std::size_t rank_over_fraction_field(const Matrix<GroupRingElement>& m) { return rank_fraction_free(m); }

std::size_t rank_over_fraction_field(const Matrix<RationalFnR>& m) {
  Matrix<GroupRingElement> rows(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    IntPoly common(1);
    for (Index j = 0; j < m.cols(); ++j) common = common * m(i, j).denominator();
    for (Index j = 0; j < m.cols(); ++j) {
      auto cof = divide_exact(common, m(i, j).denominator());
      rows(i, j) = m(i, j).numerator() * from_upoly(*cof);
    }
  }
  return rank_fraction_free(rows);
}

RationalFnR determinant(const Matrix<RationalFnR>& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  auto [n, q] = clear_denominators(m);
  GroupRingElement det = determinant(n);
  IntPoly qn(1);
  for (Index i = 0; i < m.rows(); ++i) qn = qn * q;
  return RationalFnR::from_laurent(det.bound_to(1), qn);
}

Matrix<RationalFnR> exact_inverse(const Matrix<RationalFnR>& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const Index size = m.rows();
  if (size == 0) return m;
  auto [n, q] = clear_denominators(m);
  GroupRingElement det = determinant(n).bound_to(1);
  auto [shift, poly] = to_shifted_upoly(det);
  if (!is_unit_in_R(poly)) {
    throw NotInvertibleError("determinant " + determinant(m).str() + " is not a unit of R");
  }
  Integer s(sgn(poly.lead()));
  IntPoly den = IntPoly::constant(s) * poly;
  GroupRingElement scale = from_upoly(IntPoly::constant(s) * q, -shift);

  Matrix<RationalFnR> inv(size, size);
  std::vector<Index> all(static_cast<std::size_t>(size));
  for (Index i = 0; i < size; ++i) all[static_cast<std::size_t>(i)] = i;
  for (Index i = 0; i < size; ++i) {
    for (Index j = 0; j < size; ++j) {
      // (i, j) entry of the adjugate: cofactor of (j, i).
      std::vector<Index> rows, cols;
      for (Index k = 0; k < size; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      GroupRingElement minor = size == 1 ? GroupRingElement::constant(1, 1)
                                         : determinant(submatrix(n, rows, cols)).bound_to(1);
      if ((i + j) % 2 == 1) minor = -minor;
      inv(i, j) = RationalFnR::from_laurent(minor * scale, den);
    }
  }
  return inv;
}

IntPoly simplify_modulo_R_units(const IntPoly& p) {
  IntPoly r = strip_t(p);
  bool changed = true;
  while (changed && r.degree() >= 1) {
    changed = false;
    for (const auto& root : rational_roots(r)) {
      if (!is_integral(root)) continue;
      IntPoly lin(std::vector<Integer>{Integer(-root.get_num()), Integer(1)});
      if (auto q = divide_exact(r, lin)) {
        r = *q;
        changed = true;
        break;
      }
    }
  }
  return strip_t(r);
}

InvariantFactorProfile invariant_factors_over_R(const Matrix<GroupRingElement>& input) {
  if (input.rows() > kInvariantFactorSizeCap || input.cols() > kInvariantFactorSizeCap) {
    throw SizeError("invariant factors are limited to " + std::to_string(kInvariantFactorSizeCap) + "x" +
                    std::to_string(kInvariantFactorSizeCap) + " matrices, got " +
                    std::to_string(input.rows()) + "x" + std::to_string(input.cols()));
  }
  Matrix<GroupRingElement> m = map_entries(input, [](const GroupRingElement& p) { return p.bound_to(1); });
  InvariantFactorProfile profile;
  const Index limit = std::min(m.rows(), m.cols());
  IntPoly previous(1);
  for (Index k = 1; k <= limit; ++k) {
    IntPoly g;
    for_each_subset(m.rows(), k, [&](const std::vector<Index>& rows) {
      bool unit_reached = false;
      for_each_subset(m.cols(), k, [&](const std::vector<Index>& cols) {
        GroupRingElement det = determinant(submatrix(m, rows, cols));
        if (!det.is_zero()) g = gcd(g, to_int_poly(det));
        unit_reached = (g == IntPoly(1));
        return !unit_reached;
      });
      return !unit_reached;
    });
    if (g.is_zero()) break;
    g = strip_t(g);
    auto factor = divide_exact(g, previous);
    if (!factor) {
      throw InvariantViolation("determinantal divisor chain broken: " + previous.str() +
                               " does not divide " + g.str());
    }
    profile.determinantal_divisors.push_back(g);
    ++profile.rank;
    if (is_unit_in_R(*factor)) {
      ++profile.unit_count;
    } else {
      profile.torsion_factors.push_back(simplify_modulo_R_units(*factor));
    }
    previous = g;
  }
  return profile;
}

InvariantFactorProfile invariant_factors_over_R(const Matrix<RationalFnR>& m) {
  return invariant_factors_over_R(clear_denominators(m).first);
}

IntPoly minors_gcd(const Matrix<Laurent<Rational>>& m, std::size_t k) {
  const Index kk = static_cast<Index>(k);
  if (kk == 0) return IntPoly(1);
  RatPoly g;
  for_each_subset(m.rows(), kk, [&](const std::vector<Index>& rows) {
    bool one = false;
    for_each_subset(m.cols(), kk, [&](const std::vector<Index>& cols) {
      Laurent<Rational> det = determinant(submatrix(m, rows, cols));
      if (!det.is_zero()) g = gcd(g, to_shifted_upoly(det.bound_to(1)).second);
      one = g.degree() == 0;
      return !one;
    });
    return !one;
  });
  if (g.is_zero()) return IntPoly();
  return strip_t(to_primitive_integer(g));
}

}  // namespace novikov
