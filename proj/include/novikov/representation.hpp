#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "novikov/chain_complex.hpp"
#include "novikov/cohomology.hpp"
#include "novikov/matrix.hpp"
#include "novikov/novikov_series.hpp"
#include "novikov/rational_fn_r.hpp"
#include "novikov/rational_function.hpp"

namespace novikov {

// Flat bundle on H: r commuting invertible m x m matrices, the images of
// the basis of H. Line bundles (m = 1) may have rational monodromy.
class MonodromyRep {
 public:
  MonodromyRep() = default;

  static MonodromyRep trivial(std::size_t rank, std::size_t dim = 1);
  static MonodromyRep from_integer_matrices(const std::vector<Matrix<Integer>>& mats);
  static MonodromyRep from_rational_matrices(std::vector<Matrix<Rational>> mats, std::size_t dim);
  static MonodromyRep line(const std::vector<Rational>& values);

  std::size_t rank() const { return mats_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix<Rational>>& matrices() const { return mats_; }

  // E(h) = prod_i E_i^{h_i}.
  Matrix<Rational> image(const Exponent& h) const;

 private:
  std::size_t dim_ = 1;
  std::vector<Matrix<Rational>> mats_;
  std::vector<Matrix<Rational>> inverses_;
};

// Coefficient field of the rational-function representations: Q when
// characteristic is 0, F_p otherwise.
struct FieldSpec {
  std::uint64_t characteristic = 0;
};

template <class F>
F field_element(const Rational& x, const FieldSpec& k);
template <>
inline Rational field_element<Rational>(const Rational& x, const FieldSpec&) {
  return x;
}
template <>
inline Fp field_element<Fp>(const Rational& x, const FieldSpec& k) {
  if (k.characteristic < 2) throw PreconditionError("F_p needs a characteristic p >= 2");
  return Fp::from_rational(x, k.characteristic);
}

// ---- Representation descriptors ----

struct NovikovRepresentation {
  ClassPtr xi;
  Rational cutoff;
};
struct RationalFnRRepresentation {
  CohomologyClass xi;
};
struct ScalarRepresentation {
  Rational a;
  CohomologyClass xi;
};
struct RationalFieldRepresentation {
  std::vector<CohomologyClass> basis;
  FieldSpec field;
};
struct ScalarBundleRepresentation {
  Rational a;
  CohomologyClass xi;
  MonodromyRep bundle;
};
// k(H) (t_i for the i-th basis element of H) tensored with E.
struct FractionFieldBundleRepresentation {
  MonodromyRep bundle;
  FieldSpec field;
};

using RepresentationDescriptor =
    std::variant<NovikovRepresentation, RationalFnRRepresentation, ScalarRepresentation,
                 RationalFieldRepresentation, ScalarBundleRepresentation, FractionFieldBundleRepresentation>;

// Checks the class constraints of a descriptor against the rank of H.
void check_descriptor(const RepresentationDescriptor& rho, std::size_t rank);

// ---- Entrywise maps ----

// g -> t^{xi(g)}; xi integral.
RationalFnR rho_R(const GroupRingElement& p, const CohomologyClass& xi);
// Rank-1 Laurent image of the same substitution.
GroupRingElement push_forward(const GroupRingElement& p, const CohomologyClass& xi);
// sum n_j a^{xi(g_j)}; xi integral, a != 0.
Rational rho_scalar(const GroupRingElement& p, const Rational& a, const CohomologyClass& xi);

// g -> t_1^{xi_1(g)} ... t_r^{xi_r(g)} in k(t_1, ..., t_r).
Exponent basis_exponent(const std::vector<CohomologyClass>& basis, const Exponent& h);

template <class F>
RationalFunction<F> rho_rational_field(const GroupRingElement& p, const std::vector<CohomologyClass>& basis,
                                       const FieldSpec& k = {}) {
  Laurent<F> r(basis.size());
  for (const auto& [e, c] : p.terms()) r.add_term(basis_exponent(basis, e), field_element<F>(Rational(c), k));
  return RationalFunction<F>(std::move(r));
}

// Block images of the bundle-twisted representations.
Matrix<Rational> rho_scalar_bundle(const GroupRingElement& p, const Rational& a, const CohomologyClass& xi,
                                   const MonodromyRep& e);
// sum n_h t^{xi(h)} E(h) over Q[t, 1/t]; xi integral.
Matrix<Laurent<Rational>> rho_laurent_bundle(const GroupRingElement& p, const CohomologyClass& xi,
                                             const MonodromyRep& e);

template <class F>
Matrix<RationalFunction<F>> rho_fraction_field_bundle(const GroupRingElement& p, const MonodromyRep& e,
                                                      const FieldSpec& k = {}) {
  const auto m = static_cast<Eigen::Index>(e.dim());
  Matrix<Laurent<F>> acc = zero_matrix<Laurent<F>>(m, m);
  for (const auto& [h, c] : p.terms()) {
    Matrix<Rational> eh = e.image(h);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j) {
        Rational v = Rational(c) * eh(i, j);
        if (!is_zero(v)) acc(i, j) += Laurent<F>::monomial(h, field_element<F>(v, k));
      }
  }
  return map_entries(acc, [](const Laurent<F>& x) { return RationalFunction<F>(x); });
}

// ---- Complexes ----

template <class To, class Fn>
ChainComplex<To> map_complex(const ChainComplex<GroupRingElement>& x, Fn&& entry) {
  std::vector<Matrix<To>> ds;
  for (const auto& d : x.differentials()) ds.push_back(map_entries(d, entry));
  return ChainComplex<To>(x.basis(), std::move(ds));
}

// Each entry becomes an m x m block; basis labels fan out to "label/1" ..
// "label/m" (unchanged when m = 1).
template <class To, class Fn>
ChainComplex<To> block_map_complex(const ChainComplex<GroupRingElement>& x, std::size_t m, Fn&& block) {
  if (m == 1) {
    return map_complex<To>(x, [&](const GroupRingElement& p) { return block(p)(0, 0); });
  }
  std::vector<std::vector<std::string>> labels;
  for (const auto& degree : x.basis()) {
    std::vector<std::string> out;
    for (const auto& l : degree)
      for (std::size_t k = 1; k <= m; ++k) out.push_back(l + "/" + std::to_string(k));
    labels.push_back(std::move(out));
  }
  const auto mm = static_cast<Eigen::Index>(m);
  std::vector<Matrix<To>> ds;
  for (const auto& d : x.differentials()) {
    Matrix<To> big = zero_matrix<To>(d.rows() * mm, d.cols() * mm);
    for (Eigen::Index i = 0; i < d.rows(); ++i)
      for (Eigen::Index j = 0; j < d.cols(); ++j) {
        if (d(i, j).is_zero()) continue;
        Matrix<To> b = block(d(i, j));
        big.block(i * mm, j * mm, mm, mm) = b;
      }
    ds.push_back(std::move(big));
  }
  return ChainComplex<To>(std::move(labels), std::move(ds));
}

using AnyComplex =
    std::variant<ChainComplex<GroupRingElement>, ChainComplex<NovikovElement>, ChainComplex<RationalFnR>,
                 ChainComplex<Rational>, ChainComplex<Fp>, ChainComplex<RationalFunction<Rational>>,
                 ChainComplex<RationalFunction<Fp>>, ChainComplex<Integer>>;

// Rank of H read off the entries of x; none when every entry is zero.
std::optional<std::size_t> entry_rank(const ChainComplex<GroupRingElement>& x);

// Applies rho entrywise (or blockwise for bundle twists).
AnyComplex base_change(const ChainComplex<GroupRingElement>& x, const RepresentationDescriptor& rho);

ChainComplex<NovikovElement> base_change(const ChainComplex<GroupRingElement>& x, const NovikovRepresentation& rho);
ChainComplex<RationalFnR> base_change(const ChainComplex<GroupRingElement>& x, const RationalFnRRepresentation& rho);
ChainComplex<Rational> base_change(const ChainComplex<GroupRingElement>& x, const ScalarRepresentation& rho);
ChainComplex<Rational> base_change(const ChainComplex<GroupRingElement>& x, const ScalarBundleRepresentation& rho);

// Rank-1 Laurent complex obtained by pushing forward along an integral xi.
ChainComplex<GroupRingElement> push_forward(const ChainComplex<GroupRingElement>& x, const CohomologyClass& xi);

}  // namespace novikov
