#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "novikov/chain_complex.hpp"
#include "novikov/cohomology.hpp"
#include "novikov/collapse.hpp"

namespace novikov {

// A proper cell e of the cut manifold with its stratum multi-index, a
// nonempty subset of {1..r}.
struct StrataCell {
  std::string label;
  int dim = 0;
  std::vector<int> alpha;
};

// A zero of the form: a cell of F.
struct InternalCell {
  std::string label;
  int dim = 0;
};

using ChainTerm = std::pair<std::string, GroupRingElement>;

// <e : e'>_i for the targets e'.
struct IncidenceData {
  std::string cell;
  int i = 0;
  std::vector<ChainTerm> targets;
};

struct CutSystem {
  std::size_t r = 0;
  CohomologyClass xi;
  std::vector<StrataCell> strata_cells;
  std::vector<InternalCell> internal_cells;
  // Boundaries in N'; cells without an entry have zero boundary.
  std::map<std::string, std::vector<ChainTerm>> boundary;
  std::vector<IncidenceData> incidence;
};

// P_beta(e); beta is empty for internal cells.
struct GeneratorId {
  std::string cell;
  std::vector<int> beta;
  int degree = 0;
  bool internal = false;
  int pivot = 0;              // i(e) = min alpha(e); 0 for internal cells
  std::size_t position = 0;   // index in its degree of the built complex

  std::string label() const;
  friend bool operator==(const GeneratorId& a, const GeneratorId& b) {
    return a.cell == b.cell && a.beta == b.beta && a.internal == b.internal;
  }
};

struct CutComplex {
  std::size_t r = 0;
  CohomologyClass xi;
  ChainComplex<GroupRingElement> complex;
  std::vector<std::vector<GeneratorId>> generators;  // aligned with complex.basis()
  std::vector<std::size_t> internal_counts;          // c_j per degree
};

// Throws StructureError (or PreconditionError for a non-negative incidence
// coefficient) naming the first broken contract.
void validate_cut_system(const CutSystem& cs);

// Generators P_beta(e) of degree dim e + |beta| with the boundary
// d P_beta(e) = P_beta(de)
//   + sum_s (-1)^{dim e + s + 1} (1 - <e:e>_{i_s}) P_{beta - i_s}(e)
//   + sum_s sum_{e' != e} (-1)^{dim e + s} <e:e'>_{i_s} P_{beta - i_s}(e'),
// s the 1-based position of i_s in beta. The result is checked for d^2 = 0.
CutComplex build_complex(const CutSystem& cs);

// Step j of the cascade on the current generators: D'_j = {|beta| = r-j+1,
// i(e) in beta}, D_j = {|beta| = r-j, i(e) not in beta}, the rest C.
BlockPartition cascade_partition(const CutComplex& y, const std::vector<std::vector<GeneratorId>>& current,
                                 std::size_t j);

// gamma of step j must be +-1 on the pairing P_beta(e) -> P_{beta - i(e)}(e)
// plus a xi-negative matrix, read on the Z[H] complex. Throws
// RepresentationError otherwise and StructureError when |D'| != |D|.
void check_cascade_gamma(const CutComplex& y, const std::vector<std::vector<GeneratorId>>& current, std::size_t j);

template <class Ring>
struct CascadeResult {
  ChainComplex<Ring> complex;
  std::vector<std::vector<GeneratorId>> generators;
  std::vector<CollapseWitness<Ring>> witnesses;
  std::vector<bool> simple;  // one flag per step
  std::vector<std::size_t> counts;
};

// Runs the r collapses on `based`, the base change of y.complex along some
// Sigma_xi-inverting representation (same bases). Steps 1..r-1 must be
// simple; the final complex is supported on the internal cells.
template <class Ring>
CascadeResult<Ring> cascade_collapse(const CutComplex& y, const ChainComplex<Ring>& based) {
  if (based.degree_count() != y.complex.degree_count()) {
    throw ShapeError("cascade: base-changed complex does not match the cut complex");
  }
  for (int i = 0; i <= based.top_degree(); ++i) {
    if (based.size(i) != y.complex.size(i)) {
      throw ShapeError("cascade: degree " + std::to_string(i) + " sizes differ after base change");
    }
  }
  CascadeResult<Ring> out;
  out.complex = based;
  out.generators = y.generators;
  for (std::size_t j = 1; j <= y.r; ++j) {
    check_cascade_gamma(y, out.generators, j);
    BlockPartition p = cascade_partition(y, out.generators, j);
    CollapseResult<Ring> step = collapse(out.complex, p);
    out.simple.push_back(step.simple);
    if (!step.simple && j < y.r) {
      throw InvariantViolation("cascade: collapse " + std::to_string(j) + " of " + std::to_string(y.r) +
                               " is not simple");
    }
    std::vector<std::vector<GeneratorId>> kept;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      std::vector<GeneratorId> k;
      for (std::size_t c = 0; c < p.blocks[i].size(); ++c)
        if (p.blocks[i][c] == Block::C) k.push_back(out.generators[i][c]);
      kept.push_back(std::move(k));
    }
    out.generators = std::move(kept);
    out.complex = std::move(step.complex);
    out.witnesses.push_back(std::move(step.witness));
  }
  for (int i = 0; i <= out.complex.top_degree(); ++i) out.counts.push_back(out.complex.size(i));
  if (out.counts != y.internal_counts) {
    throw InvariantViolation("cascade: final generator counts differ from the internal cell counts");
  }
  return out;
}

}  // namespace novikov
