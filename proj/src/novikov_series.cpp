#include "novikov/novikov_series.hpp"

#include <algorithm>
#include <sstream>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

bool same_class(const ClassPtr& a, const ClassPtr& b) { return a == b || *a == *b; }

std::optional<Rational> max_cutoff(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return *a > *b ? a : b;
}

}  // namespace

NovikovElement::NovikovElement(GroupRingElement terms, ClassPtr xi, std::optional<Rational> cutoff)
    : terms_(std::move(terms)), xi_(std::move(xi)), cutoff_(std::move(cutoff)) {
  if (!xi_) throw PreconditionError("a Novikov element needs a cohomology class");
  terms_.bind_rank(xi_->rank());
  apply_cutoff();
}

void NovikovElement::apply_cutoff() {
  if (xi_ && cutoff_) terms_ = truncate_below(*xi_, terms_, *cutoff_);
}

NovikovElement NovikovElement::truncated(const Rational& cutoff) const {
  NovikovElement r = *this;
  r.cutoff_ = max_cutoff(cutoff_, cutoff);
  if (!r.xi_) throw PreconditionError("cannot truncate an element without a class");
  r.apply_cutoff();
  return r;
}

std::optional<Rational> NovikovElement::join(const NovikovElement& o) {
  if (xi_ && o.xi_ && !same_class(xi_, o.xi_)) {
    throw DimensionError("Novikov elements over different cohomology classes");
  }
  if (!xi_ && o.xi_) {
    xi_ = o.xi_;
    terms_.bind_rank(xi_->rank());
  }
  return max_cutoff(cutoff_, o.cutoff_);
}

NovikovElement& NovikovElement::operator+=(const NovikovElement& o) {
  cutoff_ = join(o);
  terms_ += o.terms_;
  apply_cutoff();
  return *this;
}

NovikovElement& NovikovElement::operator*=(const NovikovElement& o) {
  cutoff_ = join(o);
  terms_ = terms_ * o.terms_;
  apply_cutoff();
  return *this;
}

NovikovElement NovikovElement::operator-() const {
  NovikovElement r = *this;
  r.terms_ = -r.terms_;
  return r;
}

bool operator==(const NovikovElement& a, const NovikovElement& b) {
  if (a.xi_ && b.xi_ && !same_class(a.xi_, b.xi_)) return false;
  const ClassPtr& xi = a.xi_ ? a.xi_ : b.xi_;
  auto c = max_cutoff(a.cutoff_, b.cutoff_);
  GroupRingElement diff = a.terms_ - b.terms_;
  if (xi && c) diff = truncate_below(*xi, diff, *c);
  return diff.is_zero();
}

std::string NovikovElement::str() const {
  std::ostringstream os;
  os << terms_;
  if (cutoff_) os << " + O(w<" << to_string(*cutoff_) << ")";
  return os.str();
}

NovikovElement rho_novikov(const GroupRingElement& p, const ClassPtr& xi, const Rational& cutoff) {
  return NovikovElement(p, xi, cutoff);
}

Matrix<NovikovElement> neumann_inverse(const Matrix<GroupRingElement>& a, const ClassPtr& xi,
                                       const Rational& cutoff) {
  if (a.rows() != a.cols()) throw ShapeError("neumann_inverse needs a square matrix");
  if (!is_xi_negative_matrix(*xi, a)) {
    throw PreconditionError("neumann_inverse: matrix is not xi-negative");
  }
  const Eigen::Index n = a.rows();
  std::optional<Rational> top;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      auto w = max_weight(*xi, a(i, j));
      if (w && (!top || *w > *top)) top = w;
    }

  auto lift = [&](const GroupRingElement& p) { return NovikovElement(p, xi, cutoff); };
  const std::size_t r = xi->rank();
  Matrix<NovikovElement> result(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      result(i, j) = lift(i == j ? GroupRingElement::constant(r, 1) : GroupRingElement(r));
  if (!top) return result;

  // Every entry of (-A)^k has weight <= k * top, so powers beyond K vanish.
  Integer steps = novikov::ceil(cutoff / *top);
  if (steps <= 0) return result;
  Matrix<NovikovElement> negated = map_entries(a, [&](const GroupRingElement& p) { return lift(-p); });
  Matrix<NovikovElement> term = result;
  for (Integer k = 1; k <= steps; ++k) {
    term = (term * negated).eval();
    result += term;
  }
  return result;
}

Matrix<NovikovElement> invert_unit_plus_negative(const Matrix<NovikovElement>& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  ClassPtr xi;
  std::optional<Rational> cutoff;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& x = m(i, j);
      if (x.xi()) xi = x.xi();
      if (x.cutoff() && (!cutoff || *x.cutoff() > *cutoff)) cutoff = x.cutoff();
    }
  if (n == 0) return m;
  if (!xi || !cutoff) {
    throw RepresentationError("inverting over the truncated completion needs a class and a cutoff");
  }
  const std::size_t r = xi->rank();

  // Split into the weight >= 0 part (must be a signed permutation) and the rest.
  Matrix<int> perm = Matrix<int>::Zero(n, n);
  Matrix<GroupRingElement> negative(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      GroupRingElement low(r);
      const GroupRingElement entry = m(i, j).terms().bound_to(r);
      for (const auto& [e, c] : entry.terms()) {
        if (weight(*xi, e) < 0) {
          low.add_term(e, c);
          continue;
        }
        bool unit_constant = (c == 1 || c == -1) &&
                             std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
        if (!unit_constant) {
          throw RepresentationError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                    m(i, j).str() + " is not a unit constant plus a xi-negative part");
        }
        perm(i, j) = c.get_si();
      }
      negative(i, j) = low;
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (perm.row(i).cwiseAbs().sum() != 1 || perm.col(i).cwiseAbs().sum() != 1) {
      throw RepresentationError("weight-zero part is not a signed permutation matrix");
    }
  }
  // S^T N, exact over Z[H].
  Matrix<GroupRingElement> twisted(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      GroupRingElement acc(r);
      for (Eigen::Index k = 0; k < n; ++k)
        if (perm(k, i) != 0) acc += GroupRingElement::constant(r, perm(k, i)) * negative(k, j);
      twisted(i, j) = acc;
    }
  Matrix<NovikovElement> inv = neumann_inverse(twisted, xi, *cutoff);
  Matrix<NovikovElement> st(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      st(i, j) = NovikovElement(GroupRingElement::constant(r, perm(j, i)), xi, *cutoff);
  return (inv * st).eval();
}

}  // namespace novikov
