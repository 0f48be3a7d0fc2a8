#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "novikov/laurent_algebra.hpp"
#include "novikov/matrix.hpp"
#include "novikov/rational_function.hpp"

using namespace novikov;
using testing_support::lp;
using testing_support::mat;
using testing_support::poly;

namespace {

bool associated(const IntPoly& a, const IntPoly& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("determinants over Z[t, 1/t]") {
  auto m = mat<GroupRingElement>({{lp({1}), lp({0, 1})}, {lp({0, 1}), lp({1})}});
  CHECK(determinant(m) == lp({1, 0, -1}));
  auto z = mat<GroupRingElement>({{lp({1, -1}), lp({2, -2})}, {lp({1}), lp({2})}});
  CHECK(determinant(z).is_zero());
  CHECK(rank_over_fraction_field(z) == 1);
}

TEST_CASE("field ranks and inverses over Q") {
  auto a = mat<Rational>({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(matrix_rank(a) == 2);
  auto b = mat<Rational>({{2, 1}, {1, 1}});
  Matrix<Rational> inv = exact_inverse(b);
  CHECK(matrices_equal(Matrix<Rational>((b * inv).eval()), identity_matrix<Rational>(2)));
  CHECK_THROWS_AS(exact_inverse(a), NotInvertibleError);
  CHECK_THROWS_AS(exact_inverse(mat<Rational>({{1, 2}})), ShapeError);
}

TEST_CASE("inverses over Q(t)") {
  using RF = RationalFunction<Rational>;
  auto t = Laurent<Rational>::variable(1, 0);
  auto one = Laurent<Rational>::constant(1, 1);
  Matrix<RF> m(2, 2);
  m(0, 0) = RF(one - t);
  m(0, 1) = RF(t);
  m(1, 0) = RF(one);
  m(1, 1) = RF(one + t);
  Matrix<RF> inv = exact_inverse(m);
  Matrix<RF> p = (m * inv).eval();
  CHECK(p(0, 0) == RF(one));
  CHECK(p(0, 1).is_zero());
  CHECK(p(1, 0).is_zero());
  CHECK(p(1, 1) == RF(one));
}

TEST_CASE("inverses over R need a unit determinant") {
  Matrix<RationalFnR> u(2, 2);
  u(0, 0) = RationalFnR::from_laurent(lp({1, -1}));
  u(0, 1) = RationalFnR::from_laurent(lp({0, 1}));
  u(1, 0) = RationalFnR(0);
  u(1, 1) = RationalFnR::from_laurent(lp({1, 1}));
  Matrix<RationalFnR> inv = exact_inverse(u);
  Matrix<RationalFnR> p = (u * inv).eval();
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) CHECK(p(i, j) == RationalFnR(i == j ? 1 : 0));
  Matrix<RationalFnR> bad(1, 1);
  bad(0, 0) = RationalFnR::from_laurent(lp({1, -2}));
  CHECK_THROWS_AS(exact_inverse(bad), NotInvertibleError);
}

TEST_CASE("invariant factors over R") {
  auto d = mat<GroupRingElement>({{lp({1, -1}), lp({}), lp({})},
                                  {lp({}), lp({1, -2}), lp({})},
                                  {lp({}), lp({}), lp({})}});
  InvariantFactorProfile p = invariant_factors_over_R(d);
  CHECK(p.rank == 2);
  CHECK(p.unit_count == 1);
  REQUIRE(p.torsion_factors.size() == 1);
  CHECK(associated(p.torsion_factors[0], poly({2, -1})));

  // diag(1 - 2t, 1 - 2t) has two torsion factors.
  auto twice = mat<GroupRingElement>({{lp({1, -2}), lp({})}, {lp({}), lp({1, -2})}});
  CHECK(invariant_factors_over_R(twice).torsion_factors.size() == 2);

  Matrix<GroupRingElement> big = zero_matrix<GroupRingElement>(13, 13);
  CHECK_THROWS_AS(invariant_factors_over_R(big), SizeError);
}

TEST_CASE("torsion classes drop R-unit factors") {
  CHECK(associated(simplify_modulo_R_units(poly({1, -1}) * poly({2, -1})), poly({2, -1})));
  CHECK(simplify_modulo_R_units(poly({1, 0, -1})).degree() == 0);
  CHECK(associated(simplify_modulo_R_units(poly({3, -1, 0})), poly({3, -1})));
}

TEST_CASE("gcd of minors") {
  auto t = Laurent<Rational>::variable(1, 0);
  auto one = Laurent<Rational>::constant(1, 1);
  Matrix<Laurent<Rational>> m(2, 2);
  m(0, 0) = one - Laurent<Rational>::constant(1, 2) * t;
  m(0, 1) = Laurent<Rational>(std::size_t{1});
  m(1, 0) = Laurent<Rational>(std::size_t{1});
  m(1, 1) = one - Laurent<Rational>::constant(1, 3) * t;
  CHECK(minors_gcd(m, 1) == IntPoly(1));
  CHECK(associated(minors_gcd(m, 2), poly({2, -1}) * poly({3, -1})));
  CHECK(minors_gcd(m, 0) == IntPoly(1));
}
