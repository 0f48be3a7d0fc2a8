#include "novikov/cut_system.hpp"

#include <algorithm>
#include <set>

namespace novikov {

namespace {

struct CellInfo {
  bool internal = false;
  int dim = 0;
  std::vector<int> alpha;
};

std::map<std::string, CellInfo> cell_table(const CutSystem& cs) {
  std::map<std::string, CellInfo> t;
  for (const auto& c : cs.strata_cells) {
    if (!t.emplace(c.label, CellInfo{false, c.dim, c.alpha}).second) {
      throw StructureError("duplicate cell label " + c.label);
    }
  }
  for (const auto& c : cs.internal_cells) {
    if (!t.emplace(c.label, CellInfo{true, c.dim, {}}).second) {
      throw StructureError("duplicate cell label " + c.label);
    }
  }
  return t;
}

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<int> without(const std::vector<int>& v, int x) {
  std::vector<int> r;
  for (int y : v)
    if (y != x) r.push_back(y);
  return r;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s;
}

// Subsets of a sorted set, ordered by size then lexicographically.
std::vector<std::vector<int>> subsets(const std::vector<int>& alpha) {
  std::vector<std::vector<int>> all;
  const std::size_t n = alpha.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> s;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) s.push_back(alpha[k]);
    all.push_back(std::move(s));
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return all;
}

void check_rank(const CutSystem& cs, const GroupRingElement& p, const std::string& where) {
  if (p.has_rank() && !p.is_zero() && p.rank() != cs.xi.rank()) {
    throw DimensionError(where + ": coefficient of rank " + std::to_string(p.rank()) + ", class of rank " +
                         std::to_string(cs.xi.rank()));
  }
}

}  // namespace

std::string GeneratorId::label() const {
  if (internal) return cell;
  return "P{" + join(beta) + "}(" + cell + ")";
}

void validate_cut_system(const CutSystem& cs) {
  auto cells = cell_table(cs);
  for (const auto& c : cs.strata_cells) {
    if (c.dim < 0) throw StructureError("cell " + c.label + " has negative dimension");
    if (c.alpha.empty()) throw StructureError("strata cell " + c.label + " has an empty multi-index");
    for (std::size_t k = 0; k < c.alpha.size(); ++k) {
      if (c.alpha[k] < 1 || static_cast<std::size_t>(c.alpha[k]) > cs.r) {
        throw StructureError("strata cell " + c.label + " has index " + std::to_string(c.alpha[k]) +
                             " outside 1.." + std::to_string(cs.r));
      }
      if (k > 0 && c.alpha[k] <= c.alpha[k - 1]) {
        throw StructureError("multi-index of " + c.label + " must be strictly increasing");
      }
    }
  }
  for (const auto& c : cs.internal_cells)
    if (c.dim < 0) throw StructureError("cell " + c.label + " has negative dimension");

  for (const auto& [src, terms] : cs.boundary) {
    auto it = cells.find(src);
    if (it == cells.end()) throw StructureError("boundary given for unknown cell " + src);
    for (const auto& [dst, coef] : terms) {
      check_rank(cs, coef, "boundary of " + src);
      auto jt = cells.find(dst);
      if (jt == cells.end()) throw StructureError("boundary of " + src + " names unknown cell " + dst);
      if (jt->second.dim != it->second.dim - 1) {
        throw StructureError("boundary of " + src + " reaches " + dst + " of the wrong dimension");
      }
      if (!it->second.internal && !coef.is_zero() &&
          (jt->second.internal || !contains_all(jt->second.alpha, it->second.alpha))) {
        throw StructureError("closure violation: boundary of " + src + " reaches " + dst +
                             " whose multi-index does not contain {" + join(it->second.alpha) + "}");
      }
    }
  }

  std::set<std::pair<std::string, int>> seen;
  for (const auto& inc : cs.incidence) {
    auto it = cells.find(inc.cell);
    if (it == cells.end() || it->second.internal) {
      throw StructureError("incidence data for " + inc.cell + ", which is not a strata cell");
    }
    const auto& alpha = it->second.alpha;
    if (!std::binary_search(alpha.begin(), alpha.end(), inc.i)) {
      throw StructureError("incidence of " + inc.cell + " along " + std::to_string(inc.i) +
                           ", which is not in its multi-index");
    }
    if (!seen.emplace(inc.cell, inc.i).second) {
      throw StructureError("incidence of " + inc.cell + " along " + std::to_string(inc.i) + " given twice");
    }
    const auto rest = without(alpha, inc.i);
    for (const auto& [dst, coef] : inc.targets) {
      check_rank(cs, coef, "incidence of " + inc.cell);
      auto jt = cells.find(dst);
      if (jt == cells.end() || jt->second.internal) {
        throw StructureError("incidence of " + inc.cell + " names " + dst + ", which is not a strata cell");
      }
      if (jt->second.dim != it->second.dim) {
        throw StructureError("incidence of " + inc.cell + " reaches " + dst + " of another dimension");
      }
      if (!contains_all(jt->second.alpha, rest)) {
        throw StructureError("incidence of " + inc.cell + " along " + std::to_string(inc.i) + " reaches " + dst +
                             " whose multi-index does not contain {" + join(rest) + "}");
      }
      if (!is_xi_negative(cs.xi, coef.bound_to(cs.xi.rank()))) {
        throw PreconditionError("incidence <" + inc.cell + ":" + dst + ">_" + std::to_string(inc.i) + " = " +
                                coef.str() + " is not xi-negative");
      }
    }
  }
}

CutComplex build_complex(const CutSystem& cs) {
  validate_cut_system(cs);
  auto cells = cell_table(cs);
  const std::size_t rank = cs.xi.rank();

  CutComplex out;
  out.r = cs.r;
  out.xi = cs.xi;

  int top = -1;
  for (const auto& c : cs.strata_cells) top = std::max(top, c.dim + static_cast<int>(c.alpha.size()));
  for (const auto& c : cs.internal_cells) top = std::max(top, c.dim);
  if (top < 0) {
    out.complex = ChainComplex<GroupRingElement>();
    return out;
  }

  out.generators.assign(static_cast<std::size_t>(top + 1), {});
  out.internal_counts.assign(static_cast<std::size_t>(top + 1), 0);
  for (const auto& c : cs.strata_cells) {
    for (auto& beta : subsets(c.alpha)) {
      GeneratorId g;
      g.cell = c.label;
      g.degree = c.dim + static_cast<int>(beta.size());
      g.beta = std::move(beta);
      g.pivot = c.alpha.front();
      auto& slot = out.generators[static_cast<std::size_t>(g.degree)];
      g.position = slot.size();
      slot.push_back(std::move(g));
    }
  }
  for (const auto& c : cs.internal_cells) {
    GeneratorId g;
    g.cell = c.label;
    g.degree = c.dim;
    g.internal = true;
    auto& slot = out.generators[static_cast<std::size_t>(g.degree)];
    g.position = slot.size();
    slot.push_back(std::move(g));
    ++out.internal_counts[static_cast<std::size_t>(c.dim)];
  }

  // (cell, beta) -> position in its degree.
  std::map<std::pair<std::string, std::vector<int>>, std::size_t> where;
  for (const auto& degree : out.generators)
    for (const auto& g : degree) where[{g.cell, g.beta}] = g.position;

  std::map<std::pair<std::string, int>, const IncidenceData*> incidence;
  for (const auto& inc : cs.incidence) incidence[{inc.cell, inc.i}] = &inc;

  std::vector<std::vector<std::string>> labels;
  for (const auto& degree : out.generators) {
    std::vector<std::string> l;
    for (const auto& g : degree) l.push_back(g.label());
    labels.push_back(std::move(l));
  }

  std::vector<Matrix<GroupRingElement>> ds;
  for (int i = 1; i <= top; ++i) {
    const auto& src = out.generators[static_cast<std::size_t>(i)];
    const auto& dst = out.generators[static_cast<std::size_t>(i - 1)];
    Matrix<GroupRingElement> d = zero_matrix<GroupRingElement>(static_cast<Eigen::Index>(dst.size()),
                                                               static_cast<Eigen::Index>(src.size()));
    for (const auto& g : src) {
      const auto col = static_cast<Eigen::Index>(g.position);
      auto add = [&](const std::string& cell, const std::vector<int>& beta, const GroupRingElement& coef) {
        if (coef.is_zero()) return;
        auto it = where.find({cell, beta});
        if (it == where.end()) {
          throw StructureError("closure violation: " + g.label() + " reaches P{" + join(beta) + "}(" + cell +
                               "), which does not exist");
        }
        d(static_cast<Eigen::Index>(it->second), col) += coef.bound_to(rank);
      };
      // P_beta(de).
      if (auto b = cs.boundary.find(g.cell); b != cs.boundary.end()) {
        for (const auto& [target, coef] : b->second) add(target, g.beta, coef);
      }
      if (g.internal) continue;
      const int dim = cells.at(g.cell).dim;
      for (std::size_t s0 = 0; s0 < g.beta.size(); ++s0) {
        const int s = static_cast<int>(s0) + 1;
        const int i_s = g.beta[s0];
        const auto face = without(g.beta, i_s);
        const GroupRingElement sign = ((dim + s) % 2 == 0) ? GroupRingElement(1) : GroupRingElement(-1);
        GroupRingElement self = GroupRingElement::constant(rank, Integer(1));
        auto inc = incidence.find({g.cell, i_s});
        if (inc != incidence.end()) {
          for (const auto& [target, coef] : inc->second->targets) {
            if (target == g.cell) {
              self -= coef.bound_to(rank);
            } else {
              add(target, face, sign * coef.bound_to(rank));
            }
          }
        }
        add(g.cell, face, -sign * self);
      }
    }
    ds.push_back(std::move(d));
  }
  out.complex = ChainComplex<GroupRingElement>(std::move(labels), std::move(ds));
  if (auto v = validate(out.complex)) {
    throw StructureError("cut system does not give a complex: d_" + std::to_string(v->degree_from - 1) + " d_" +
                         std::to_string(v->degree_from) + " != 0 from " + v->column_label + " to " + v->row_label);
  }
  return out;
}

BlockPartition cascade_partition(const CutComplex& y, const std::vector<std::vector<GeneratorId>>& current,
                                 std::size_t j) {
  if (j < 1 || j > y.r) throw PreconditionError("cascade step out of range");
  const std::size_t dprime_size = y.r - j + 1;
  const std::size_t d_size = y.r - j;
  BlockPartition p;
  for (const auto& degree : current) {
    std::vector<Block> b;
    for (const auto& g : degree) {
      bool has_pivot = !g.internal && std::binary_search(g.beta.begin(), g.beta.end(), g.pivot);
      if (!g.internal && g.beta.size() == dprime_size && has_pivot) {
        b.push_back(Block::DPrime);
      } else if (!g.internal && g.beta.size() == d_size && !has_pivot) {
        b.push_back(Block::D);
      } else {
        b.push_back(Block::C);
      }
    }
    p.blocks.push_back(std::move(b));
  }
  return p;
}

void check_cascade_gamma(const CutComplex& y, const std::vector<std::vector<GeneratorId>>& current, std::size_t j) {
  BlockPartition p = cascade_partition(y, current, j);
  const int top = static_cast<int>(current.size()) - 1;
  for (int i = 1; i <= top + 1; ++i) {
    std::vector<const GeneratorId*> dprime, d;
    if (i <= top) {
      for (std::size_t c = 0; c < current[static_cast<std::size_t>(i)].size(); ++c)
        if (p.blocks[static_cast<std::size_t>(i)][c] == Block::DPrime) dprime.push_back(&current[static_cast<std::size_t>(i)][c]);
    }
    for (std::size_t c = 0; c < current[static_cast<std::size_t>(i - 1)].size(); ++c)
      if (p.blocks[static_cast<std::size_t>(i - 1)][c] == Block::D) d.push_back(&current[static_cast<std::size_t>(i - 1)][c]);
    if (dprime.size() != d.size()) {
      throw StructureError("cascade step " + std::to_string(j) + ": |D'_" + std::to_string(i) + "| = " +
                           std::to_string(dprime.size()) + " but |D_" + std::to_string(i - 1) + "| = " +
                           std::to_string(d.size()));
    }
    if (dprime.empty()) continue;
    const Matrix<GroupRingElement> dy = y.complex.d(i);
    for (const GeneratorId* col : dprime) {
      const auto partner_beta = without(col->beta, col->pivot);
      bool paired = false;
      for (const GeneratorId* row : d) {
        const GroupRingElement entry =
            dy(static_cast<Eigen::Index>(row->position), static_cast<Eigen::Index>(col->position)).bound_to(y.xi.rank());
        GroupRingElement rest = entry;
        if (row->cell == col->cell && row->beta == partner_beta) {
          paired = true;
          Integer c = entry.coefficient(Exponent(y.xi.rank(), 0));
          if (c != 1 && c != -1) {
            throw RepresentationError("cascade step " + std::to_string(j) + ": gamma entry " + entry.str() + " at (" +
                                      row->label() + ", " + col->label() + ") is not +-1 plus xi-negative");
          }
          rest -= GroupRingElement::constant(y.xi.rank(), c);
        }
        if (!is_xi_negative(y.xi, rest)) {
          throw RepresentationError("cascade step " + std::to_string(j) + ": gamma entry " + entry.str() + " at (" +
                                    row->label() + ", " + col->label() + ") breaks the unit-plus-negative shape");
        }
      }
      if (!paired) {
        throw StructureError("cascade step " + std::to_string(j) + ": " + col->label() + " has no partner");
      }
    }
  }
}

}  // namespace novikov
