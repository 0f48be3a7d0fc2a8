#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "novikov/collapse.hpp"
#include "novikov/matrix.hpp"
#include "novikov/rational_function.hpp"

using namespace novikov;
using testing_support::mat;

namespace {

// Degree 0: a in D, x in C. Degree 1: b in D', c in C.
// d_1 = [[2, 3], [5, 7]], so gamma = 2, alpha = 3, beta = 5, d_C = 7.
ChainComplex<Rational> two_by_two() {
  return ChainComplex<Rational>({{"a", "x"}, {"b", "c"}}, {mat<Rational>({{2, 3}, {5, 7}})});
}

BlockPartition two_by_two_blocks() { return BlockPartition{{{Block::D, Block::C}, {Block::DPrime, Block::C}}}; }

}  // namespace

TEST_CASE("shape checks at construction") {
  CHECK_THROWS_AS(ChainComplex<Rational>({{"a"}, {"b"}}, {mat<Rational>({{1, 2}})}), ShapeError);
  CHECK_THROWS_AS(ChainComplex<Rational>({{"a"}, {"b"}}, {}), ShapeError);
  ChainComplex<Rational> x({{"a"}, {"b"}}, {mat<Rational>({{1}})});
  CHECK(x.top_degree() == 1);
  CHECK(x.d(0).rows() == 0);
  CHECK(x.d(2).cols() == 0);
}

TEST_CASE("validate names the offending pair") {
  ChainComplex<Integer> bad({{"a"}, {"b"}, {"c"}}, {mat<Integer>({{1}}), mat<Integer>({{1}})});
  auto v = validate(bad);
  REQUIRE(v);
  CHECK(v->row_label == "a");
  CHECK(v->column_label == "c");
  ChainComplex<Integer> good({{"a"}, {"b"}, {"c"}}, {mat<Integer>({{0}}), mat<Integer>({{1}})});
  CHECK_FALSE(validate(good));
}

TEST_CASE("homology dims and Euler characteristic") {
  ChainComplex<Rational> x({{"a", "b"}, {"e"}}, {mat<Rational>({{1}, {-1}})});
  CHECK(homology_over_field(x) == std::vector<std::size_t>{1, 0});
  CHECK(euler_characteristic(x) == 1);
}

TEST_CASE("non-simple collapse deforms the differential") {
  CollapseResult<Rational> r = collapse(two_by_two(), two_by_two_blocks());
  CHECK_FALSE(r.simple);
  REQUIRE(r.complex.basis() == std::vector<std::vector<std::string>>{{"x"}, {"c"}});
  // 7 - 5 * 2^-1 * 3.
  CHECK(r.complex.d(1)(0, 0) == Rational(-1, 2));
  CHECK_FALSE(verify_witness(two_by_two(), r.complex, r.witness));
  CHECK(euler_characteristic(r.complex) == euler_characteristic(two_by_two()));
}

TEST_CASE("simple collapse restricts the differential") {
  ChainComplex<Rational> b({{"a", "x"}, {"b", "c"}}, {mat<Rational>({{2, 0}, {5, 7}})});
  CollapseResult<Rational> r = collapse(b, two_by_two_blocks());
  CHECK(r.simple);
  CHECK(r.complex.d(1)(0, 0) == 7);
}

TEST_CASE("tampered witnesses are caught") {
  CollapseResult<Rational> r = collapse(two_by_two(), two_by_two_blocks());
  CollapseWitness<Rational> w = r.witness;
  w.g[1](0, 0) += 1;
  CHECK(verify_witness(two_by_two(), r.complex, w));
}

TEST_CASE("collapse preconditions") {
  // D' must not be hit from outside D'.
  ChainComplex<Rational> hit({{"a"}, {"b", "c"}}, {mat<Rational>({{1, 1}})});
  CHECK_THROWS_AS(collapse(hit, BlockPartition{{{Block::DPrime}, {Block::C, Block::C}}}), StructureError);
  // |D'_1| != |D_0|.
  CHECK_THROWS_AS(collapse(two_by_two(), BlockPartition{{{Block::C, Block::C}, {Block::DPrime, Block::C}}}),
                  ShapeError);
  // gamma = 0.
  ChainComplex<Rational> zero({{"a"}, {"b"}}, {mat<Rational>({{0}})});
  CHECK_THROWS_AS(collapse(zero, BlockPartition{{{Block::D}, {Block::DPrime}}}), NotInvertibleError);
  CHECK_THROWS_AS(collapse(two_by_two(), BlockPartition{{{Block::D}}}), ShapeError);
}

TEST_CASE("collapse over Q(t) with a unit gamma") {
  using RF = RationalFunction<Rational>;
  auto t = Laurent<Rational>::variable(1, 0);
  auto one = Laurent<Rational>::constant(1, 1);
  ChainComplex<RF> b({{"a"}, {"b"}}, {mat<RF>({{RF(one - t)}})});
  CollapseResult<RF> r = collapse(b, BlockPartition{{{Block::D}, {Block::DPrime}}});
  CHECK(r.complex.size(0) == 0);
  CHECK(r.complex.size(1) == 0);
  CHECK(r.witness.h[0](0, 0) == RF(one - t).inverse());
}
