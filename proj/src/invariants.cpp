#include "novikov/invariants.hpp"

#include <algorithm>

namespace novikov {

namespace {

std::size_t entry_rank_or_zero(const ChainComplex<GroupRingElement>& x) { return entry_rank(x).value_or(0); }

template <class Ring>
std::vector<std::size_t> ranks_of(const ChainComplex<Ring>& x) {
  std::vector<std::size_t> r(x.degree_count() + 1, 0);
  for (int i = 1; i <= x.top_degree(); ++i) r[static_cast<std::size_t>(i)] = matrix_rank(x.d(i));
  return r;
}

template <class Ring>
std::vector<std::size_t> dims_from_ranks(const ChainComplex<Ring>& x, const std::vector<std::size_t>& r) {
  std::vector<std::size_t> dims;
  for (int i = 0; i <= x.top_degree(); ++i)
    dims.push_back(x.size(i) - r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(i + 1)]);
  return dims;
}

InequalityCheck make_check(std::size_t degree, std::string kind, Rational lhs, Rational rhs) {
  InequalityCheck c;
  c.degree = degree;
  c.kind = std::move(kind);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = lhs - rhs;
  c.verdict = c.slack >= 0 ? Verdict::pass : Verdict::fail;
  return c;
}

// Sum n_h E(h) in F, every variable sent to 1.
template <class F>
Matrix<F> at_trivial_line(const GroupRingElement& p, const MonodromyRep& e, const FieldSpec& k) {
  const auto m = static_cast<Eigen::Index>(e.dim());
  Matrix<Rational> acc = zero_matrix<Rational>(m, m);
  for (const auto& [h, c] : p.terms()) acc += (Rational(c) * e.image(h).array()).matrix();
  return map_entries(acc, [&](const Rational& v) { return field_element<F>(v, k); });
}

template <class F>
GenericityReport genericity(const ChainComplex<GroupRingElement>& x, const MonodromyRep& e, const FieldSpec& k) {
  GenericityReport rep;
  auto twisted = block_map_complex<RationalFunction<F>>(
      x, e.dim(), [&](const GroupRingElement& p) { return rho_fraction_field_bundle<F>(p, e, k); });
  auto trivial = block_map_complex<F>(x, e.dim(), [&](const GroupRingElement& p) { return at_trivial_line<F>(p, e, k); });
  rep.fraction_field_dims = homology_over_field(twisted);
  rep.trivial_line_dims = homology_over_field(trivial);
  rep.generic = rep.fraction_field_dims == rep.trivial_line_dims;
  return rep;
}

}  // namespace

NovikovNumbers novikov_numbers(const ChainComplex<GroupRingElement>& x) {
  if (entry_rank_or_zero(x) > 1) {
    throw DimensionError("novikov_numbers needs a single-variable complex; push forward along xi first");
  }
  NovikovNumbers out;
  auto r = ranks_of(x);
  out.b = dims_from_ranks(x, r);
  std::vector<std::size_t> q;
  for (int i = 0; i <= x.top_degree(); ++i) {
    if (i + 1 > x.top_degree()) {
      q.push_back(0);
      continue;
    }
    q.push_back(invariant_factors_over_R(x.d(i + 1)).torsion_factors.size());
  }
  out.q = std::move(q);
  return out;
}

NovikovNumbers novikov_numbers(const ChainComplex<GroupRingElement>& x, const CohomologyClass& xi) {
  if (auto r = entry_rank(x); r && *r != xi.rank()) {
    throw DimensionError("complex of rank " + std::to_string(*r) + " against a class of rank " +
                         std::to_string(xi.rank()));
  }
  if (xi.is_integral()) return novikov_numbers(push_forward(x, xi));
  Integer scale = 1;
  for (const auto& w : xi.weights) scale = lcm(scale, Integer(w.get_den()));
  std::vector<Rational> scaled;
  for (const auto& w : xi.weights) scaled.push_back(w * Rational(scale));
  ChainComplex<GroupRingElement> pushed = push_forward(x, CohomologyClass(scaled));
  NovikovNumbers out;
  out.b = dims_from_ranks(pushed, ranks_of(pushed));
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_computed: return "not-computed";
  }
  return "not-computed";
}

std::vector<InequalityCheck> check_novikov_inequalities(const std::vector<std::size_t>& c,
                                                        const NovikovNumbers& numbers) {
  const std::size_t n = std::max(c.size(), numbers.b.size());
  auto at = [](const std::vector<std::size_t>& v, std::size_t i) -> long {
    return i < v.size() ? static_cast<long>(v[i]) : 0L;
  };
  std::vector<InequalityCheck> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (!numbers.q) {
      InequalityCheck chk;
      chk.degree = j;
      chk.kind = "novikov";
      chk.lhs = at(c, j);
      chk.rhs = at(numbers.b, j);
      chk.slack = chk.lhs - chk.rhs;
      chk.verdict = Verdict::not_computed;
      out.push_back(chk);
      continue;
    }
    long rhs = at(numbers.b, j) + at(*numbers.q, j) + (j > 0 ? at(*numbers.q, j - 1) : 0);
    out.push_back(make_check(j, "novikov", at(c, j), rhs));
  }
  return out;
}

std::vector<InequalityCheck> morse_type_inequalities(const std::vector<std::size_t>& c,
                                                     const std::vector<std::size_t>& dims, std::size_t dim_e) {
  if (dim_e == 0) throw PreconditionError("bundle dimension must be positive");
  const std::size_t n = std::max(c.size(), dims.size());
  auto at = [](const std::vector<std::size_t>& v, std::size_t i) -> long {
    return i < v.size() ? static_cast<long>(v[i]) : 0L;
  };
  const Rational e(static_cast<long>(dim_e));
  std::vector<InequalityCheck> out;
  for (std::size_t p = 0; p < n; ++p) {
    out.push_back(make_check(p, "single", at(c, p), Rational(at(dims, p)) / e));
    Rational lhs = 0;
    Rational rhs = 0;
    for (std::size_t j = 0; j <= p; ++j) {
      const long sign = j % 2 == 0 ? 1 : -1;
      lhs += sign * at(c, p - j);
      rhs += Rational(sign * at(dims, p - j)) / e;
    }
    out.push_back(make_check(p, "alternating", lhs, rhs));
  }
  return out;
}

bool all_pass(const std::vector<InequalityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.verdict == Verdict::pass; });
}

std::vector<std::size_t> bundle_homology_dims(const ChainComplex<GroupRingElement>& x, const Rational& a,
                                              const MonodromyRep& e, const CohomologyClass& xi) {
  if (auto r = entry_rank(x)) check_descriptor(ScalarBundleRepresentation{a, xi, e}, *r);
  return homology_over_field(base_change(x, ScalarBundleRepresentation{a, xi, e}));
}

ChainComplex<Laurent<Rational>> twisted_laurent_complex(const ChainComplex<GroupRingElement>& x,
                                                        const MonodromyRep& e, const CohomologyClass& xi) {
  if (auto r = entry_rank(x)) check_descriptor(ScalarBundleRepresentation{Rational(1), xi, e}, *r);
  return block_map_complex<Laurent<Rational>>(
      x, e.dim(), [&](const GroupRingElement& p) { return rho_laurent_bundle(p, xi, e); });
}

JumpReport generic_betti_and_jumps(const ChainComplex<GroupRingElement>& x, const MonodromyRep& e,
                                   const CohomologyClass& xi) {
  auto t = twisted_laurent_complex(x, e, xi);
  auto r = ranks_of(t);
  JumpReport out;
  out.generic_b = dims_from_ranks(t, r);
  std::vector<IntPoly> per_map(t.degree_count() + 1, IntPoly(1));
  for (int i = 1; i <= t.top_degree(); ++i) {
    const auto k = r[static_cast<std::size_t>(i)];
    if (k > 0) per_map[static_cast<std::size_t>(i)] = minors_gcd(t.d(i), k);
  }
  for (int i = 0; i <= t.top_degree(); ++i) {
    IntPoly prod = per_map[static_cast<std::size_t>(i)] * per_map[static_cast<std::size_t>(i + 1)];
    out.jump_polynomials.push_back(prod.degree() <= 0 ? IntPoly(1) : squarefree_part(prod));
  }
  return out;
}

GenericityReport is_xi_generic(const ChainComplex<GroupRingElement>& x, const MonodromyRep& e, const FieldSpec& k) {
  if (auto r = entry_rank(x); r && *r != e.rank()) {
    throw DimensionError("bundle of rank " + std::to_string(e.rank()) + " for a complex of rank " +
                         std::to_string(*r));
  }
  if (k.characteristic == 0) return genericity<Rational>(x, e, k);
  return genericity<Fp>(x, e, k);
}

ChainComplex<GroupRingElement> mapping_torus(const ChainComplex<Integer>& c, const std::vector<Matrix<Integer>>& h) {
  const int n = c.top_degree();
  if (h.size() != c.degree_count()) {
    throw ShapeError("chain map has " + std::to_string(h.size()) + " components for " +
                     std::to_string(c.degree_count()) + " degrees");
  }
  for (int i = 0; i <= n; ++i) {
    const auto& hi = h[static_cast<std::size_t>(i)];
    const auto s = static_cast<Eigen::Index>(c.size(i));
    if (hi.rows() != s || hi.cols() != s) {
      throw ShapeError("chain map component " + std::to_string(i) + " is not " + std::to_string(s) + "x" +
                       std::to_string(s));
    }
  }
  for (int i = 1; i <= n; ++i) {
    Matrix<Integer> lhs = (c.d(i) * h[static_cast<std::size_t>(i)]).eval();
    Matrix<Integer> rhs = (h[static_cast<std::size_t>(i - 1)] * c.d(i)).eval();
    if (!matrices_equal(lhs, rhs)) {
      throw PreconditionError("h is not a chain map: d_" + std::to_string(i) + " h_" + std::to_string(i) +
                              " != h_" + std::to_string(i - 1) + " d_" + std::to_string(i));
    }
  }
  const GroupRingElement t = GroupRingElement::variable(1, 0);
  auto lift = [](const Matrix<Integer>& m) {
    return map_entries(m, [](const Integer& v) { return GroupRingElement::constant(1, v); });
  };
  auto phi = [&](int i) {
    Matrix<GroupRingElement> hm = lift(h[static_cast<std::size_t>(i)]);
    Matrix<GroupRingElement> r = identity_matrix<GroupRingElement>(hm.rows());
    for (Eigen::Index a = 0; a < hm.rows(); ++a)
      for (Eigen::Index b = 0; b < hm.cols(); ++b) r(a, b) = (r(a, b) - t * hm(a, b)).bound_to(1);
    return r;
  };
  std::vector<std::vector<std::string>> labels;
  for (int i = 0; i <= n + 1; ++i) {
    std::vector<std::string> l = c.basis(i);
    for (const auto& s : c.basis(i - 1)) l.push_back("cone:" + s);
    labels.push_back(std::move(l));
  }
  std::vector<Matrix<GroupRingElement>> ds;
  for (int i = 1; i <= n + 1; ++i) {
    const auto ci = static_cast<Eigen::Index>(c.size(i));
    const auto ci1 = static_cast<Eigen::Index>(c.size(i - 1));
    const auto ci2 = static_cast<Eigen::Index>(c.size(i - 2));
    Matrix<GroupRingElement> d = zero_matrix<GroupRingElement>(ci1 + ci2, ci + ci1);
    if (ci1 > 0 && ci > 0) d.block(0, 0, ci1, ci) = lift(c.d(i));
    if (ci1 > 0) d.block(0, ci, ci1, ci1) = phi(i - 1);
    if (ci2 > 0 && ci1 > 0) d.block(ci1, ci, ci2, ci1) = lift(Matrix<Integer>(-c.d(i - 1)));
    for (Eigen::Index a = 0; a < d.rows(); ++a)
      for (Eigen::Index b = 0; b < d.cols(); ++b) d(a, b).bind_rank(1);
    ds.push_back(std::move(d));
  }
  ChainComplex<GroupRingElement> out(std::move(labels), std::move(ds));
  if (auto v = validate(out)) throw InvariantViolation("mapping torus is not a complex: " + v->message);
  return out;
}

}  // namespace novikov
