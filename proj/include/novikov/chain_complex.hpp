#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/matrix.hpp"

namespace novikov {

// Free based chain complex C_0 <- C_1 <- ... <- C_n over Ring. Basis
// elements carry string labels; d(i) maps degree-i chains to degree-(i-1)
// chains, columns indexed by the degree-i basis.
template <class Ring>
class ChainComplex {
 public:
  ChainComplex() = default;

  // differentials[k] is d_{k+1}; there must be exactly basis.size() - 1 of them.
  ChainComplex(std::vector<std::vector<std::string>> basis, std::vector<Matrix<Ring>> differentials)
      : basis_(std::move(basis)), differentials_(std::move(differentials)) {
    if (basis_.empty() && !differentials_.empty()) {
      throw ShapeError("differentials given for an empty complex");
    }
    if (!basis_.empty() && differentials_.size() + 1 != basis_.size()) {
      throw ShapeError("complex with " + std::to_string(basis_.size()) + " degrees needs " +
                       std::to_string(basis_.size() - 1) + " differentials, got " +
                       std::to_string(differentials_.size()));
    }
    for (std::size_t k = 0; k < differentials_.size(); ++k) {
      const auto& d = differentials_[k];
      if (static_cast<std::size_t>(d.rows()) != basis_[k].size() ||
          static_cast<std::size_t>(d.cols()) != basis_[k + 1].size()) {
        throw ShapeError("d_" + std::to_string(k + 1) + " is " + std::to_string(d.rows()) + "x" +
                         std::to_string(d.cols()) + " but the bases have sizes " +
                         std::to_string(basis_[k].size()) + " and " + std::to_string(basis_[k + 1].size()));
      }
    }
  }

  // Highest degree n; -1 for the empty complex.
  int top_degree() const { return static_cast<int>(basis_.size()) - 1; }
  std::size_t degree_count() const { return basis_.size(); }

  std::size_t size(int degree) const {
    if (degree < 0 || degree > top_degree()) return 0;
    return basis_[static_cast<std::size_t>(degree)].size();
  }

  const std::vector<std::vector<std::string>>& basis() const { return basis_; }
  const std::vector<std::string>& basis(int degree) const {
    static const std::vector<std::string> kEmpty;
    if (degree < 0 || degree > top_degree()) return kEmpty;
    return basis_[static_cast<std::size_t>(degree)];
  }

  // d_i : C_i -> C_{i-1}; a zero matrix of the right shape outside 1..n.
  Matrix<Ring> d(int i) const {
    if (i >= 1 && i <= top_degree()) return differentials_[static_cast<std::size_t>(i - 1)];
    return zero_matrix<Ring>(static_cast<Eigen::Index>(size(i - 1)), static_cast<Eigen::Index>(size(i)));
  }
  const std::vector<Matrix<Ring>>& differentials() const { return differentials_; }

 private:
  std::vector<std::vector<std::string>> basis_;
  std::vector<Matrix<Ring>> differentials_;
};

struct Violation {
  std::string message;
  int degree_from = 0;  // source degree of the offending composite or map
  int degree_to = 0;
  std::string row_label;
  std::string column_label;
};

// ok when every d_{i-1} d_i vanishes; otherwise the first offending pair of
// degrees (i, i-2) and entry labels.
template <class Ring>
std::optional<Violation> validate(const ChainComplex<Ring>& x) {
  for (int i = 2; i <= x.top_degree(); ++i) {
    Matrix<Ring> dd = (x.d(i - 1) * x.d(i)).eval();
    for (Eigen::Index r = 0; r < dd.rows(); ++r)
      for (Eigen::Index c = 0; c < dd.cols(); ++c)
        if (!is_zero(dd(r, c))) {
          Violation v;
          v.degree_from = i;
          v.degree_to = i - 2;
          v.row_label = x.basis(i - 2)[static_cast<std::size_t>(r)];
          v.column_label = x.basis(i)[static_cast<std::size_t>(c)];
          v.message = "d_" + std::to_string(i - 1) + " d_" + std::to_string(i) + " != 0 at (" + v.row_label +
                      ", " + v.column_label + ")";
          return v;
        }
  }
  return std::nullopt;
}

// dim H_i = dim C_i - rank d_i - rank d_{i+1}, ranks over the (fraction)
// field of Ring.
template <class Ring>
std::vector<std::size_t> homology_over_field(const ChainComplex<Ring>& x) {
  std::vector<std::size_t> ranks(x.degree_count() + 1, 0);
  for (int i = 1; i <= x.top_degree(); ++i) ranks[static_cast<std::size_t>(i)] = matrix_rank(x.d(i));
  std::vector<std::size_t> dims;
  for (int i = 0; i <= x.top_degree(); ++i) {
    dims.push_back(x.size(i) - ranks[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i + 1)]);
  }
  return dims;
}

template <class Ring>
long euler_characteristic(const ChainComplex<Ring>& x) {
  long chi = 0;
  for (int i = 0; i <= x.top_degree(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(x.size(i));
  return chi;
}

}  // namespace novikov
