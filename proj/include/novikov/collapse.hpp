#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novikov/chain_complex.hpp"

namespace novikov {

// Three-way splitting B_i = D'_i + D_i + C_i of every degree.
enum class Block { DPrime, D, C };

struct BlockPartition {
  // Aligned with the basis of each degree.
  std::vector<std::vector<Block>> blocks;
};

// Mutually inverse chain homotopy equivalences f: B -> C, g: C -> B and the
// homotopy h: B -> B of degree +1 with g f = 1 - d h - h d.
template <class Ring>
struct CollapseWitness {
  std::vector<Matrix<Ring>> f;  // f[i] : B_i -> C_i
  std::vector<Matrix<Ring>> g;  // g[i] : C_i -> B_i
  std::vector<Matrix<Ring>> h;  // h[i] : B_i -> B_{i+1}
};

template <class Ring>
struct CollapseResult {
  ChainComplex<Ring> complex;
  CollapseWitness<Ring> witness;
  // True when alpha = 0, so the deformed differential is the restriction.
  bool simple = true;
};

namespace detail {

using Index = Eigen::Index;

struct BlockIndices {
  std::vector<Index> dprime, d, c;
};

inline std::vector<BlockIndices> split_blocks(const BlockPartition& p) {
  std::vector<BlockIndices> out;
  for (const auto& degree : p.blocks) {
    BlockIndices b;
    for (std::size_t k = 0; k < degree.size(); ++k) {
      auto idx = static_cast<Index>(k);
      switch (degree[k]) {
        case Block::DPrime: b.dprime.push_back(idx); break;
        case Block::D: b.d.push_back(idx); break;
        case Block::C: b.c.push_back(idx); break;
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

// Embeds `block` into a rows x cols zero matrix at the given index lists.
template <class Ring>
void place(Matrix<Ring>& target, const std::vector<Index>& rows, const std::vector<Index>& cols,
           const Matrix<Ring>& block) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      target(rows[i], cols[j]) = block(static_cast<Index>(i), static_cast<Index>(j));
}

template <class Ring>
std::optional<Violation> compare(const Matrix<Ring>& lhs, const Matrix<Ring>& rhs, const std::string& what,
                                 int from, int to, const std::vector<std::string>& row_labels,
                                 const std::vector<std::string>& col_labels) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    return Violation{what + ": shape mismatch", from, to, "", ""};
  }
  for (Index r = 0; r < lhs.rows(); ++r)
    for (Index c = 0; c < lhs.cols(); ++c)
      if (!(lhs(r, c) == rhs(r, c))) {
        Violation v{what + " fails", from, to, "", ""};
        if (static_cast<std::size_t>(r) < row_labels.size()) v.row_label = row_labels[static_cast<std::size_t>(r)];
        if (static_cast<std::size_t>(c) < col_labels.size()) v.column_label = col_labels[static_cast<std::size_t>(c)];
        v.message += " at (" + v.row_label + ", " + v.column_label + ")";
        return v;
      }
  return std::nullopt;
}

}  // namespace detail

// Checks f d_B = d_C f, d_B g = g d_C, f g = 1 and g f = 1 - d_B h - h d_B
// in every degree.
template <class Ring>
std::optional<Violation> verify_witness(const ChainComplex<Ring>& b, const ChainComplex<Ring>& c,
                                        const CollapseWitness<Ring>& w) {
  const int n = b.top_degree();
  const auto count = static_cast<std::size_t>(n + 1);
  if (c.top_degree() != n || w.f.size() != count || w.g.size() != count || w.h.size() != count) {
    return Violation{"witness does not cover every degree", 0, 0, "", ""};
  }
  auto f = [&](int i) -> Matrix<Ring> {
    if (i < 0 || i > n) return zero_matrix<Ring>(static_cast<Eigen::Index>(c.size(i)), static_cast<Eigen::Index>(b.size(i)));
    return w.f[static_cast<std::size_t>(i)];
  };
  auto g = [&](int i) -> Matrix<Ring> {
    if (i < 0 || i > n) return zero_matrix<Ring>(static_cast<Eigen::Index>(b.size(i)), static_cast<Eigen::Index>(c.size(i)));
    return w.g[static_cast<std::size_t>(i)];
  };
  auto h = [&](int i) -> Matrix<Ring> {
    if (i < 0 || i > n) return zero_matrix<Ring>(static_cast<Eigen::Index>(b.size(i + 1)), static_cast<Eigen::Index>(b.size(i)));
    return w.h[static_cast<std::size_t>(i)];
  };
  for (int i = 0; i <= n; ++i) {
    const auto bi = static_cast<Eigen::Index>(b.size(i));
    const auto ci = static_cast<Eigen::Index>(c.size(i));
    if (f(i).rows() != ci || f(i).cols() != bi || g(i).rows() != bi || g(i).cols() != ci ||
        h(i).rows() != static_cast<Eigen::Index>(b.size(i + 1)) || h(i).cols() != bi) {
      return Violation{"witness map has the wrong shape in degree " + std::to_string(i), i, i, "", ""};
    }
  }
  for (int i = 1; i <= n; ++i) {
    Matrix<Ring> lhs = (f(i - 1) * b.d(i)).eval();
    Matrix<Ring> rhs = (c.d(i) * f(i)).eval();
    if (auto v = detail::compare(lhs, rhs, "f d_B = d_C f", i, i - 1, c.basis(i - 1), b.basis(i))) return v;
    lhs = (b.d(i) * g(i)).eval();
    rhs = (g(i - 1) * c.d(i)).eval();
    if (auto v = detail::compare(lhs, rhs, "d_B g = g d_C", i, i - 1, b.basis(i - 1), c.basis(i))) return v;
  }
  for (int i = 0; i <= n; ++i) {
    Matrix<Ring> fg = (f(i) * g(i)).eval();
    if (auto v = detail::compare(fg, identity_matrix<Ring>(fg.rows()), "f g = 1", i, i, c.basis(i), c.basis(i)))
      return v;
    Matrix<Ring> gf = (g(i) * f(i)).eval();
    Matrix<Ring> rhs = identity_matrix<Ring>(static_cast<Eigen::Index>(b.size(i)));
    rhs -= (b.d(i + 1) * h(i)).eval();
    rhs -= (h(i - 1) * b.d(i)).eval();
    if (auto v = detail::compare(gf, rhs, "g f = 1 - d h - h d", i, i, b.basis(i), b.basis(i))) return v;
  }
  return std::nullopt;
}

// Cancels D' against D: the complex on C with d_C - beta gamma^{-1} alpha,
// together with a verified witness. gamma^{-1} comes from exact_inverse for
// Ring, so over the truncated completion gamma must be unit-plus-negative.
template <class Ring>
CollapseResult<Ring> collapse(const ChainComplex<Ring>& b, const BlockPartition& partition) {
  using detail::Index;
  const int n = b.top_degree();
  if (partition.blocks.size() != b.degree_count()) {
    throw ShapeError("partition has " + std::to_string(partition.blocks.size()) + " degrees, complex has " +
                     std::to_string(b.degree_count()));
  }
  for (int i = 0; i <= n; ++i) {
    if (partition.blocks[static_cast<std::size_t>(i)].size() != b.size(i)) {
      throw ShapeError("partition of degree " + std::to_string(i) + " does not match the basis");
    }
  }
  const auto idx = detail::split_blocks(partition);
  auto blocks = [&](int i) -> const detail::BlockIndices& {
    static const detail::BlockIndices kEmpty;
    if (i < 0 || i > n) return kEmpty;
    return idx[static_cast<std::size_t>(i)];
  };

  // First block row of (7.1): nothing outside D' hits D'.
  for (int i = 1; i <= n; ++i) {
    const Matrix<Ring> di = b.d(i);
    for (Index r : blocks(i - 1).dprime) {
      for (Index c = 0; c < di.cols(); ++c) {
        if (partition.blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] == Block::DPrime) continue;
        if (!is_zero(di(r, c))) {
          throw StructureError("collapse: d_" + std::to_string(i) + " has a nonzero entry from " +
                               b.basis(i)[static_cast<std::size_t>(c)] + " into D' element " +
                               b.basis(i - 1)[static_cast<std::size_t>(r)]);
        }
      }
    }
  }

  // gamma_i : D'_i -> D_{i-1} and its inverse, for i = 0..n+1.
  std::vector<Matrix<Ring>> gamma_inv(static_cast<std::size_t>(n + 2));
  for (int i = 0; i <= n + 1; ++i) {
    const auto& dp = blocks(i).dprime;
    const auto& dd = blocks(i - 1).d;
    if (dp.size() != dd.size()) {
      throw ShapeError("collapse: |D'_" + std::to_string(i) + "| = " + std::to_string(dp.size()) + " but |D_" +
                       std::to_string(i - 1) + "| = " + std::to_string(dd.size()));
    }
    if (dp.empty()) {
      gamma_inv[static_cast<std::size_t>(i)] = Matrix<Ring>(0, 0);
      continue;
    }
    Matrix<Ring> gamma = submatrix(b.d(i), dd, dp);
    try {
      gamma_inv[static_cast<std::size_t>(i)] = exact_inverse(gamma);
    } catch (const NotInvertibleError& e) {
      throw NotInvertibleError("collapse: gamma_" + std::to_string(i) + " is not invertible: " + e.what());
    }
  }
  auto ginv = [&](int i) -> const Matrix<Ring>& { return gamma_inv[static_cast<std::size_t>(i)]; };

  CollapseResult<Ring> out;
  std::vector<std::vector<std::string>> labels;
  for (int i = 0; i <= n; ++i) {
    std::vector<std::string> l;
    for (Index c : blocks(i).c) l.push_back(b.basis(i)[static_cast<std::size_t>(c)]);
    labels.push_back(std::move(l));
  }
  auto alpha = [&](int i) { return submatrix(b.d(i), blocks(i - 1).d, blocks(i).c); };
  auto beta = [&](int i) { return submatrix(b.d(i), blocks(i - 1).c, blocks(i).dprime); };

  std::vector<Matrix<Ring>> dhat;
  for (int i = 1; i <= n; ++i) {
    Matrix<Ring> a = alpha(i);
    if (!is_zero_matrix(a)) out.simple = false;
    Matrix<Ring> dc = submatrix(b.d(i), blocks(i - 1).c, blocks(i).c);
    if (!blocks(i).dprime.empty()) dc -= (beta(i) * ginv(i) * a).eval();
    dhat.push_back(std::move(dc));
  }
  out.complex = ChainComplex<Ring>(labels, std::move(dhat));

  for (int i = 0; i <= n; ++i) {
    const auto bi = static_cast<Index>(b.size(i));
    const auto ci = static_cast<Index>(blocks(i).c.size());
    const auto& bl = blocks(i);

    Matrix<Ring> f = zero_matrix<Ring>(ci, bi);
    std::vector<Index> c_local(bl.c.size());
    for (std::size_t k = 0; k < c_local.size(); ++k) c_local[k] = static_cast<Index>(k);
    detail::place(f, c_local, bl.c, identity_matrix<Ring>(ci));
    if (!bl.d.empty() && i + 1 <= n) {
      Matrix<Ring> part = (beta(i + 1) * ginv(i + 1)).eval();
      detail::place(f, c_local, bl.d, Matrix<Ring>(-part));
    }

    Matrix<Ring> g = zero_matrix<Ring>(bi, ci);
    detail::place(g, bl.c, c_local, identity_matrix<Ring>(ci));
    if (!bl.dprime.empty()) {
      Matrix<Ring> part = (ginv(i) * alpha(i)).eval();
      detail::place(g, bl.dprime, c_local, Matrix<Ring>(-part));
    }

    Matrix<Ring> h = zero_matrix<Ring>(static_cast<Index>(b.size(i + 1)), bi);
    if (!bl.d.empty()) detail::place(h, blocks(i + 1).dprime, bl.d, ginv(i + 1));

    out.witness.f.push_back(std::move(f));
    out.witness.g.push_back(std::move(g));
    out.witness.h.push_back(std::move(h));
  }

  if (auto v = validate(out.complex)) {
    throw InvariantViolation("collapse produced a deformed differential with d^2 != 0: " + v->message);
  }
  if (auto v = verify_witness(b, out.complex, out.witness)) {
    throw InvariantViolation("collapse witness failed verification: " + v->message);
  }
  return out;
}

}  // namespace novikov
