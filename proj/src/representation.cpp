#include "novikov/representation.hpp"

#include <algorithm>

namespace novikov {

namespace {

void require_integral(const CohomologyClass& xi, const char* what) {
  if (!xi.is_integral()) throw PreconditionError(std::string(what) + " needs an integral class");
}

void require_rank(const CohomologyClass& xi, const GroupRingElement& p) {
  if (p.has_rank() && p.rank() != xi.rank()) {
    throw DimensionError("element of rank " + std::to_string(p.rank()) + " against a class of rank " +
                         std::to_string(xi.rank()));
  }
}

long integral_weight(const CohomologyClass& xi, const Exponent& h) {
  Rational w = weight(xi, h);
  return w.get_num().get_si();
}

Matrix<Rational> matrix_power(const Matrix<Rational>& m, const Matrix<Rational>& inv, std::int64_t k) {
  Matrix<Rational> r = identity_matrix<Rational>(m.rows());
  const Matrix<Rational>& base = k >= 0 ? m : inv;
  for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) r = (r * base).eval();
  return r;
}

}  // namespace

MonodromyRep MonodromyRep::trivial(std::size_t rank, std::size_t dim) {
  std::vector<Matrix<Rational>> mats(rank, identity_matrix<Rational>(static_cast<Eigen::Index>(dim)));
  return from_rational_matrices(std::move(mats), dim);
}

MonodromyRep MonodromyRep::from_integer_matrices(const std::vector<Matrix<Integer>>& mats) {
  if (mats.empty()) throw RepresentationError("a bundle needs at least one monodromy matrix");
  std::vector<Matrix<Rational>> q;
  for (const auto& m : mats) q.push_back(map_entries(m, [](const Integer& x) { return Rational(x); }));
  return from_rational_matrices(std::move(q), static_cast<std::size_t>(mats.front().rows()));
}

MonodromyRep MonodromyRep::from_rational_matrices(std::vector<Matrix<Rational>> mats, std::size_t dim) {
  if (dim == 0) throw RepresentationError("bundle dimension must be positive");
  MonodromyRep e;
  e.dim_ = dim;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const auto& m = mats[i];
    if (m.rows() != static_cast<Eigen::Index>(dim) || m.cols() != static_cast<Eigen::Index>(dim)) {
      throw RepresentationError("monodromy matrix " + std::to_string(i + 1) + " is not " + std::to_string(dim) +
                                "x" + std::to_string(dim));
    }
    if (field_rank(m) != dim) {
      throw RepresentationError("monodromy matrix " + std::to_string(i + 1) + " is not invertible");
    }
  }
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      Matrix<Rational> ab = (mats[i] * mats[j]).eval();
      Matrix<Rational> ba = (mats[j] * mats[i]).eval();
      if (!matrices_equal(ab, ba)) {
        throw RepresentationError("monodromy matrices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " do not commute");
      }
    }
  for (const auto& m : mats) e.inverses_.push_back(field_inverse_matrix(m));
  e.mats_ = std::move(mats);
  return e;
}

MonodromyRep MonodromyRep::line(const std::vector<Rational>& values) {
  std::vector<Matrix<Rational>> mats;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (is_zero(values[i])) throw RepresentationError("line bundle monodromy " + std::to_string(i + 1) + " is zero");
    Matrix<Rational> m(1, 1);
    m(0, 0) = values[i];
    mats.push_back(std::move(m));
  }
  return from_rational_matrices(std::move(mats), 1);
}

Matrix<Rational> MonodromyRep::image(const Exponent& h) const {
  if (h.size() != mats_.size()) {
    throw DimensionError("exponent of length " + std::to_string(h.size()) + " against a bundle of rank " +
                         std::to_string(mats_.size()));
  }
  Matrix<Rational> r = identity_matrix<Rational>(static_cast<Eigen::Index>(dim_));
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] != 0) r = (r * matrix_power(mats_[i], inverses_[i], h[i])).eval();
  }
  return r;
}

void check_descriptor(const RepresentationDescriptor& rho, std::size_t rank) {
  auto check_class = [&](const CohomologyClass& xi) {
    if (xi.rank() != rank) {
      throw DimensionError("class of rank " + std::to_string(xi.rank()) + " for H of rank " + std::to_string(rank));
    }
  };
  auto check_bundle = [&](const MonodromyRep& e) {
    if (e.rank() != rank) {
      throw DimensionError("bundle of rank " + std::to_string(e.rank()) + " for H of rank " + std::to_string(rank));
    }
  };
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, NovikovRepresentation>) {
          if (!r.xi) throw PreconditionError("Novikov representation without a class");
          check_class(*r.xi);
        } else if constexpr (std::is_same_v<T, RationalFnRRepresentation>) {
          check_class(r.xi);
          require_integral(r.xi, "the ring R");
        } else if constexpr (std::is_same_v<T, ScalarRepresentation>) {
          check_class(r.xi);
          require_integral(r.xi, "scalar evaluation");
          if (is_zero(r.a)) throw PreconditionError("scalar evaluation at a = 0");
        } else if constexpr (std::is_same_v<T, RationalFieldRepresentation>) {
          for (const auto& c : r.basis) {
            check_class(c);
            require_integral(c, "the rational function field");
          }
        } else if constexpr (std::is_same_v<T, ScalarBundleRepresentation>) {
          check_class(r.xi);
          require_integral(r.xi, "scalar evaluation");
          if (is_zero(r.a)) throw PreconditionError("scalar evaluation at a = 0");
          check_bundle(r.bundle);
        } else {
          check_bundle(r.bundle);
        }
      },
      rho);
}

GroupRingElement push_forward(const GroupRingElement& p, const CohomologyClass& xi) {
  require_integral(xi, "push forward");
  require_rank(xi, p);
  GroupRingElement r(std::size_t{1});
  for (const auto& [e, c] : p.terms()) r.add_term(Exponent{integral_weight(xi, e)}, c);
  return r;
}

RationalFnR rho_R(const GroupRingElement& p, const CohomologyClass& xi) {
  return RationalFnR::from_laurent(push_forward(p, xi));
}

Rational rho_scalar(const GroupRingElement& p, const Rational& a, const CohomologyClass& xi) {
  require_integral(xi, "scalar evaluation");
  require_rank(xi, p);
  if (is_zero(a)) throw PreconditionError("scalar evaluation at a = 0");
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) acc += Rational(c) * power(a, integral_weight(xi, e));
  return acc;
}

Exponent basis_exponent(const std::vector<CohomologyClass>& basis, const Exponent& h) {
  Exponent r;
  r.reserve(basis.size());
  for (const auto& xi : basis) {
    require_integral(xi, "the rational function field");
    r.push_back(integral_weight(xi, h));
  }
  return r;
}

Matrix<Rational> rho_scalar_bundle(const GroupRingElement& p, const Rational& a, const CohomologyClass& xi,
                                   const MonodromyRep& e) {
  require_integral(xi, "scalar evaluation");
  require_rank(xi, p);
  if (is_zero(a)) throw PreconditionError("scalar evaluation at a = 0");
  const auto m = static_cast<Eigen::Index>(e.dim());
  Matrix<Rational> acc = zero_matrix<Rational>(m, m);
  for (const auto& [h, c] : p.terms()) {
    Rational s = Rational(c) * power(a, integral_weight(xi, h));
    acc += (s * e.image(h).array()).matrix();
  }
  return acc;
}

Matrix<Laurent<Rational>> rho_laurent_bundle(const GroupRingElement& p, const CohomologyClass& xi,
                                             const MonodromyRep& e) {
  require_integral(xi, "push forward");
  require_rank(xi, p);
  const auto m = static_cast<Eigen::Index>(e.dim());
  Matrix<Laurent<Rational>> acc = zero_matrix<Laurent<Rational>>(m, m);
  for (const auto& [h, c] : p.terms()) {
    Matrix<Rational> eh = e.image(h);
    Exponent w{integral_weight(xi, h)};
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j) {
        Rational v = Rational(c) * eh(i, j);
        if (!is_zero(v)) acc(i, j) += Laurent<Rational>::monomial(w, v);
      }
  }
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) acc(i, j).bind_rank(1);
  return acc;
}

std::optional<std::size_t> entry_rank(const ChainComplex<GroupRingElement>& x) {
  for (const auto& d : x.differentials())
    for (Eigen::Index i = 0; i < d.rows(); ++i)
      for (Eigen::Index j = 0; j < d.cols(); ++j)
        if (d(i, j).has_rank() && !d(i, j).is_zero()) return d(i, j).rank();
  return std::nullopt;
}

ChainComplex<NovikovElement> base_change(const ChainComplex<GroupRingElement>& x, const NovikovRepresentation& rho) {
  if (!rho.xi) throw PreconditionError("Novikov representation without a class");
  return map_complex<NovikovElement>(x, [&](const GroupRingElement& p) {
    require_rank(*rho.xi, p);
    return rho_novikov(p, rho.xi, rho.cutoff);
  });
}

ChainComplex<RationalFnR> base_change(const ChainComplex<GroupRingElement>& x, const RationalFnRRepresentation& rho) {
  require_integral(rho.xi, "the ring R");
  return map_complex<RationalFnR>(x, [&](const GroupRingElement& p) { return rho_R(p, rho.xi); });
}

ChainComplex<Rational> base_change(const ChainComplex<GroupRingElement>& x, const ScalarRepresentation& rho) {
  require_integral(rho.xi, "scalar evaluation");
  if (is_zero(rho.a)) throw PreconditionError("scalar evaluation at a = 0");
  return map_complex<Rational>(x, [&](const GroupRingElement& p) { return rho_scalar(p, rho.a, rho.xi); });
}

ChainComplex<Rational> base_change(const ChainComplex<GroupRingElement>& x, const ScalarBundleRepresentation& rho) {
  require_integral(rho.xi, "scalar evaluation");
  if (is_zero(rho.a)) throw PreconditionError("scalar evaluation at a = 0");
  return block_map_complex<Rational>(
      x, rho.bundle.dim(), [&](const GroupRingElement& p) { return rho_scalar_bundle(p, rho.a, rho.xi, rho.bundle); });
}

ChainComplex<GroupRingElement> push_forward(const ChainComplex<GroupRingElement>& x, const CohomologyClass& xi) {
  return map_complex<GroupRingElement>(x, [&](const GroupRingElement& p) { return push_forward(p, xi); });
}

AnyComplex base_change(const ChainComplex<GroupRingElement>& x, const RepresentationDescriptor& rho) {
  if (auto r = entry_rank(x)) check_descriptor(rho, *r);
  return std::visit(
      [&](const auto& r) -> AnyComplex {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, RationalFieldRepresentation>) {
          if (r.field.characteristic == 0) {
            return map_complex<RationalFunction<Rational>>(
                x, [&](const GroupRingElement& p) { return rho_rational_field<Rational>(p, r.basis, r.field); });
          }
          return map_complex<RationalFunction<Fp>>(
              x, [&](const GroupRingElement& p) { return rho_rational_field<Fp>(p, r.basis, r.field); });
        } else if constexpr (std::is_same_v<T, FractionFieldBundleRepresentation>) {
          if (r.field.characteristic == 0) {
            return block_map_complex<RationalFunction<Rational>>(x, r.bundle.dim(), [&](const GroupRingElement& p) {
              return rho_fraction_field_bundle<Rational>(p, r.bundle, r.field);
            });
          }
          return block_map_complex<RationalFunction<Fp>>(
              x, r.bundle.dim(),
              [&](const GroupRingElement& p) { return rho_fraction_field_bundle<Fp>(p, r.bundle, r.field); });
        } else {
          return base_change(x, r);
        }
      },
      rho);
}

}  // namespace novikov
