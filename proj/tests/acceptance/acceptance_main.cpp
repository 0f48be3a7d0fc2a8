// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "novikov/collapse.hpp"
#include "novikov/cut_system.hpp"
#include "novikov/dirichlet.hpp"
#include "novikov/invariants.hpp"
#include "novikov/laurent_algebra.hpp"
#include "novikov/matrix.hpp"
#include "novikov/novikov_series.hpp"
#include "novikov/rational_function.hpp"
#include "novikov/representation.hpp"

namespace {

using namespace novikov;
using Clock = std::chrono::steady_clock;
using RF = RationalFunction<Rational>;
using LQ = Laurent<Rational>;
using Index = Eigen::Index;

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine); }
  bool coin(double p) { return std::bernoulli_distribution(p)(engine); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))]; }
};

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

// Euler characteristic checks gathered from every criterion.
Tally euler;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool report(int n, const std::string& name, const Tally& t, double seconds, double budget, const std::string& extra = "") {
  bool pass = t.failures == 0 && t.checks > 0 && seconds < budget;
  std::printf("criterion %d: %s %s (%zu checks, %zu failures, %.2f s of %.0f s%s%s)\n", n, pass ? "PASS" : "FAIL",
              name.c_str(), t.checks, t.failures, seconds, budget, extra.empty() ? "" : ", ", extra.c_str());
  if (!t.first_failure.empty()) std::printf("  first failure: %s\n", t.first_failure.c_str());
  return pass;
}

GroupRingElement lp(std::initializer_list<long> ascending, long low = 0) {
  GroupRingElement p(std::size_t{1});
  long k = low;
  for (long c : ascending) p.add_term(Exponent{k++}, Integer(c));
  return p;
}

GroupRingElement zero_element(std::size_t r) { return GroupRingElement(r); }

template <class Ring>
Matrix<Ring> product(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  return (a * b).eval();
}

// ---------------------------------------------------------------- criterion 1

LQ random_laurent(Rng& rng) {
  LQ p(std::size_t{1});
  while (p.is_zero()) {
    long terms = rng.uniform(1, 2);
    for (long k = 0; k < terms; ++k) p.add_term({rng.uniform(-2, 2)}, Rational(rng.uniform(-3, 3)));
  }
  return p;
}

RF random_rf(Rng& rng) {
  if (rng.coin(0.2)) return RF(random_laurent(rng), random_laurent(rng));
  return RF(random_laurent(rng));
}

RF rf_one() { return RF(LQ::constant(1, Rational(1))); }
RF rf_zero() { return RF(LQ(std::size_t{1})); }

Matrix<RF> rf_identity(Index n) {
  Matrix<RF> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = i == j ? rf_one() : rf_zero();
  return m;
}

Matrix<RF> rf_zeros(Index r, Index c) {
  Matrix<RF> m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = rf_zero();
  return m;
}

bool rf_equal(const Matrix<RF>& a, const Matrix<RF>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

bool rf_is_zero(const Matrix<RF>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

struct BlockCase {
  ChainComplex<RF> complex;
  BlockPartition partition;
};

// D'_i -> D_{i-1} by an invertible gamma, C a split complex, then a change
// of basis P = L U per degree (L unit lower triangular in the order D', D, C
// and U = 1 + (D <- C block)) so that alpha, beta and d_C are all generic
// while nothing outside D' reaches D'. Finally the basis is shuffled.
BlockCase random_block_case(Rng& rng) {
  int n = 0;
  std::vector<long> k, pairs, free;
  auto size = [&](int i) { return k[i] + k[i + 1] + pairs[i] + pairs[i + 1] + free[i]; };
  while (true) {
    n = static_cast<int>(rng.uniform(1, 3));
    k.assign(static_cast<std::size_t>(n + 2), 0);
    pairs.assign(static_cast<std::size_t>(n + 2), 0);
    free.assign(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i <= n; ++i) {
      k[i] = rng.uniform(0, 2);
      pairs[i] = rng.uniform(0, 1);
    }
    for (int i = 0; i <= n; ++i) free[i] = rng.uniform(0, 1);
    bool ok = true;
    long total_k = 0;
    for (int i = 0; i <= n; ++i) ok &= size(i) <= 6;
    for (int i = 1; i <= n; ++i) total_k += k[i];
    if (ok && total_k > 0) break;
  }
  // Offsets inside degree i: D' | D | C sources | C targets | C free.
  auto off_d = [&](int i) { return k[i]; };
  auto off_src = [&](int i) { return k[i] + k[i + 1]; };
  auto off_tgt = [&](int i) { return k[i] + k[i + 1] + pairs[i]; };
  auto c_begin = [&](int i) { return k[i] + k[i + 1]; };

  std::vector<Matrix<RF>> d(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n; ++i) {
    Matrix<RF> m = rf_zeros(size(i - 1), size(i));
    // gamma_i, retried until invertible.
    while (k[i] > 0) {
      Matrix<RF> g(k[i], k[i]);
      for (Index r = 0; r < k[i]; ++r)
        for (Index c = 0; c < k[i]; ++c) g(r, c) = rng.coin(0.7) ? random_rf(rng) : rf_zero();
      try {
        (void)exact_inverse(g);
      } catch (const NotInvertibleError&) {
        continue;
      }
      m.block(off_d(i - 1), 0, k[i], k[i]) = g;
      break;
    }
    for (long p = 0; p < pairs[i]; ++p) m(off_tgt(i - 1) + p, off_src(i) + p) = random_rf(rng);
    d[static_cast<std::size_t>(i)] = m;
  }

  std::vector<Matrix<RF>> basis_change, inverse_change;
  for (int i = 0; i <= n; ++i) {
    const Index s = size(i);
    Matrix<RF> lower = rf_identity(s);
    for (Index r = 0; r < s; ++r)
      for (Index c = 0; c < r; ++c)
        if (rng.coin(0.4)) lower(r, c) = random_rf(rng);
    Matrix<RF> upper = rf_identity(s);
    Matrix<RF> upper_inv = rf_identity(s);
    for (Index r = off_d(i); r < c_begin(i); ++r)
      for (Index c = c_begin(i); c < s; ++c)
        if (rng.coin(0.6)) {
          upper(r, c) = random_rf(rng);
          upper_inv(r, c) = -upper(r, c);
        }
    Matrix<RF> p = product(lower, upper);
    Matrix<RF> p_inv = product(upper_inv, exact_inverse(lower));
    if (!rf_equal(product(p, p_inv), rf_identity(s))) throw std::logic_error("basis change is not invertible");
    basis_change.push_back(p);
    inverse_change.push_back(p_inv);
  }

  std::vector<std::vector<Block>> blocks;
  std::vector<std::vector<Index>> perm;
  for (int i = 0; i <= n; ++i) {
    std::vector<Block> b;
    for (long x = 0; x < k[i]; ++x) b.push_back(Block::DPrime);
    for (long x = 0; x < k[i + 1]; ++x) b.push_back(Block::D);
    for (long x = c_begin(i); x < size(i); ++x) b.push_back(Block::C);
    std::vector<Index> order(b.size());
    for (std::size_t x = 0; x < order.size(); ++x) order[x] = static_cast<Index>(x);
    std::shuffle(order.begin(), order.end(), rng.engine);
    std::vector<Block> shuffled;
    for (Index x : order) shuffled.push_back(b[static_cast<std::size_t>(x)]);
    blocks.push_back(std::move(shuffled));
    perm.push_back(std::move(order));
  }

  std::vector<std::vector<std::string>> labels;
  for (int i = 0; i <= n; ++i) {
    std::vector<std::string> l;
    for (Index x = 0; x < size(i); ++x) l.push_back("g" + std::to_string(i) + "_" + std::to_string(x));
    labels.push_back(std::move(l));
  }
  std::vector<Matrix<RF>> ds;
  for (int i = 1; i <= n; ++i) {
    Matrix<RF> conj = product(product(basis_change[static_cast<std::size_t>(i - 1)], d[static_cast<std::size_t>(i)]),
                              inverse_change[static_cast<std::size_t>(i)]);
    const auto& rp = perm[static_cast<std::size_t>(i - 1)];
    const auto& cp = perm[static_cast<std::size_t>(i)];
    Matrix<RF> shuffled(conj.rows(), conj.cols());
    for (Index r = 0; r < conj.rows(); ++r)
      for (Index c = 0; c < conj.cols(); ++c) shuffled(r, c) = conj(rp[static_cast<std::size_t>(r)], cp[static_cast<std::size_t>(c)]);
    ds.push_back(std::move(shuffled));
  }
  return BlockCase{ChainComplex<RF>(std::move(labels), std::move(ds)), BlockPartition{std::move(blocks)}};
}

template <class Ring>
Matrix<Ring> map_or_zero(const std::vector<Matrix<Ring>>& maps, int i, Index rows, Index cols) {
  if (i >= 0 && static_cast<std::size_t>(i) < maps.size()) return maps[static_cast<std::size_t>(i)];
  return rf_zeros(rows, cols);
}

// Witness identities, checked directly.
void check_witness(const ChainComplex<RF>& b, const CollapseResult<RF>& res, Tally& t, std::size_t id) {
  const auto& c = res.complex;
  const auto& w = res.witness;
  const std::string tag = "case " + std::to_string(id);
  const int n = b.top_degree();
  for (int i = 2; i <= n; ++i) t.expect(rf_is_zero(product(c.d(i - 1), c.d(i))), tag + ": dhat^2 != 0");
  for (int i = 0; i <= n; ++i) {
    const auto bs = static_cast<Index>(b.size(i));
    const auto cs = static_cast<Index>(c.size(i));
    Matrix<RF> f = map_or_zero(w.f, i, cs, bs);
    Matrix<RF> g = map_or_zero(w.g, i, bs, cs);
    Matrix<RF> f_prev = map_or_zero(w.f, i - 1, static_cast<Index>(c.size(i - 1)), static_cast<Index>(b.size(i - 1)));
    Matrix<RF> g_prev = map_or_zero(w.g, i - 1, static_cast<Index>(b.size(i - 1)), static_cast<Index>(c.size(i - 1)));
    Matrix<RF> h = map_or_zero(w.h, i, static_cast<Index>(b.size(i + 1)), bs);
    Matrix<RF> h_prev = map_or_zero(w.h, i - 1, bs, static_cast<Index>(b.size(i - 1)));
    if (i >= 1) {
      t.expect(rf_equal(product(f_prev, b.d(i)), product(c.d(i), f)), tag + ": f is not a chain map");
      t.expect(rf_equal(product(b.d(i), g), product(g_prev, c.d(i))), tag + ": g is not a chain map");
    }
    t.expect(rf_equal(product(f, g), rf_identity(cs)), tag + ": f g != 1");
    Matrix<RF> rhs = rf_identity(bs);
    rhs -= product(b.d(i + 1), h);
    rhs -= product(h_prev, b.d(i));
    t.expect(rf_equal(product(g, f), rhs), tag + ": g f != 1 - dh - hd");
  }
  t.expect(homology_over_field(b) == homology_over_field(c), tag + ": homology changed");
  euler.expect(euler_characteristic(b) == euler_characteristic(c), tag + ": collapse changed chi");
}

bool criterion_collapse(Rng& rng) {
  auto start = Clock::now();
  Tally t;
  std::size_t non_simple = 0;
  const std::size_t cases = 200;
  for (std::size_t id = 0; id < cases; ++id) {
    BlockCase bc = random_block_case(rng);
    t.expect(!validate(bc.complex), "case " + std::to_string(id) + ": generated complex has d^2 != 0");
    try {
      CollapseResult<RF> res = collapse(bc.complex, bc.partition);
      non_simple += !res.simple;
      check_witness(bc.complex, res, t, id);
    } catch (const Error& e) {
      t.expect(false, "case " + std::to_string(id) + ": " + e.what());
    }
  }
  return report(1, "collapse certificates over Q(t)", t, seconds_since(start), 10,
                std::to_string(cases) + " complexes, " + std::to_string(non_simple) + " non-simple");
}

// ---------------------------------------------------------------- criterion 2

GroupRingElement random_negative(Rng& rng, const CohomologyClass& xi) {
  const std::size_t r = xi.rank();
  GroupRingElement p(r);
  long terms = rng.uniform(1, 2);
  while (static_cast<long>(p.size()) < terms) {
    Exponent e(r);
    for (auto& x : e) x = rng.uniform(-3, 1);
    Rational w = weight(xi, e);
    if (w >= 0 || w < -3) continue;
    p.add_term(e, Integer(rng.uniform(1, 2) * (rng.coin(0.5) ? 1 : -1)));
  }
  return p;
}

bool criterion_neumann(Rng& rng) {
  auto start = Clock::now();
  Tally t;
  const std::vector<CohomologyClass> classes{
      CohomologyClass({Rational(1)}), CohomologyClass({Rational(1, 2)}),
      CohomologyClass({Rational(1), Rational(2)}), CohomologyClass({Rational(3, 2), Rational(1)})};
  const std::size_t cases = 200;
  for (std::size_t id = 0; id < cases; ++id) {
    const auto xi = std::make_shared<const CohomologyClass>(rng.pick(classes));
    const std::size_t r = xi->rank();
    const Index n = rng.uniform(1, 4);
    const Rational cutoff(-rng.uniform(1, 10));
    Matrix<GroupRingElement> a(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) a(i, j) = rng.coin(0.5) ? random_negative(rng, *xi) : zero_element(r);
    const std::string tag = "case " + std::to_string(id);

    // Brute-force series: sum of (-A)^k, truncated at every step, until the
    // next power vanishes above the cutoff.
    auto trunc = [&](const GroupRingElement& p) { return truncate_below(*xi, p, cutoff); };
    Matrix<GroupRingElement> minus_a = map_entries(a, [](const GroupRingElement& p) { return GroupRingElement(-p); });
    Matrix<GroupRingElement> one(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) one(i, j) = i == j ? GroupRingElement::constant(r, Integer(1)) : zero_element(r);
    Matrix<GroupRingElement> power = one, series = one;
    for (int step = 0; step < 1000; ++step) {
      power = map_entries(product(power, minus_a), trunc);
      bool vanished = true;
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) vanished &= power(i, j).is_zero();
      if (vanished) break;
      series += power;
    }

    Matrix<NovikovElement> inv = neumann_inverse(a, xi, cutoff);
    Matrix<GroupRingElement> inv_terms = map_entries(inv, [](const NovikovElement& x) { return x.terms(); });
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        t.expect(trunc(inv_terms(i, j) - series(i, j)).is_zero(), tag + ": inverse differs from the series");

    Matrix<GroupRingElement> i_plus_a = one + a;
    Matrix<GroupRingElement> left = map_entries(product(i_plus_a, inv_terms), trunc);
    Matrix<GroupRingElement> right = map_entries(product(inv_terms, i_plus_a), trunc);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        t.expect(left(i, j) == one(i, j), tag + ": (I+A) inv != I");
        t.expect(right(i, j) == one(i, j), tag + ": inv (I+A) != I");
      }
  }
  return report(2, "Neumann inversion above the cutoff", t, seconds_since(start), 5,
                std::to_string(cases) + " matrices up to 4x4, cutoffs -1..-10");
}

// ---------------------------------------------------------------- criterion 3

IntPoly ascending(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

// Exact division in Q[t], used only by the association oracle.
RatPoly rat(const IntPoly& p) {
  return p.map_coefficients<Rational>([](const Integer& c) { return Rational(c); });
}

IntPoly primitive_integer(const RatPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> v;
  for (const auto& c : p.coeffs()) v.emplace_back(Rational(c * den).get_num());
  IntPoly q(std::move(v));
  Integer g = 0;
  for (const auto& c : q.coeffs()) g = gcd(g, Integer(abs(c)));
  std::vector<Integer> w;
  for (const auto& c : q.coeffs()) w.emplace_back(c / g);
  return IntPoly(std::move(w));
}

Integer content_of(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, Integer(abs(c)));
  return g;
}

// f ~ g in R: equal contents and, after removing the common factor over Q,
// both cofactors have leading coefficient +-1.
bool associated_oracle(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (content_of(f) != content_of(g)) return false;
  RatPoly common = gcd(rat(f), rat(g));
  IntPoly fc = primitive_integer(divmod(rat(f), common).first);
  IntPoly gc = primitive_integer(divmod(rat(g), common).first);
  return abs(fc.lead()) == 1 && abs(gc.lead()) == 1;
}

bool criterion_invariant_factors(Rng& rng) {
  auto start = Clock::now();
  Tally t;
  const std::vector<IntPoly> units{ascending({1}), ascending({-1}), ascending({0, 1}), ascending({1, -1}),
                                   ascending({1, 1}), ascending({-2, 1})};
  const std::vector<IntPoly> non_units{ascending({1, -2}), ascending({1, 3}), ascending({3, 2}), ascending({1, 0, 2}),
                                       ascending({-2, 3})};
  auto element = [](const IntPoly& p) { return from_upoly(p); };
  const std::size_t cases = 120;
  for (std::size_t id = 0; id < cases; ++id) {
    const Index rows = rng.uniform(1, 4), cols = rng.uniform(1, 4);
    const Index diag = std::min(rows, cols);
    // Smith chain d_1 | d_2 | ...; zeros close it.
    std::vector<IntPoly> d;
    IntPoly current(1);
    for (Index k = 0; k < diag; ++k) {
      if (rng.coin(0.15)) break;
      current = current * (rng.coin(0.5) ? rng.pick(units) : rng.pick(non_units));
      d.push_back(current);
    }
    Matrix<GroupRingElement> m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j)
        m(i, j) = (i == j && static_cast<std::size_t>(i) < d.size()) ? element(d[static_cast<std::size_t>(i)]) : zero_element(1);
    // Elementary R-unit operations on both sides.
    auto random_lambda = [&]() {
      GroupRingElement p(std::size_t{1});
      p.add_term({rng.uniform(-1, 1)}, Integer(rng.uniform(-2, 2)));
      return p;
    };
    for (int op = 0; op < 6; ++op) {
      const bool on_rows = rng.coin(0.5);
      const Index span = on_rows ? rows : cols;
      const Index a = rng.uniform(0, span - 1), b = rng.uniform(0, span - 1);
      const long kind = rng.uniform(0, 2);
      if (kind == 0 && a != b) {
        GroupRingElement lambda = random_lambda();
        if (on_rows) {
          for (Index j = 0; j < cols; ++j) m(a, j) += lambda * m(b, j);
        } else {
          for (Index i = 0; i < rows; ++i) m(i, a) += lambda * m(i, b);
        }
      } else if (kind == 1) {
        GroupRingElement u = element(rng.pick(units));
        if (on_rows) {
          for (Index j = 0; j < cols; ++j) m(a, j) = u * m(a, j);
        } else {
          for (Index i = 0; i < rows; ++i) m(i, a) = u * m(i, a);
        }
      } else if (a != b) {
        if (on_rows) {
          m.row(a).swap(m.row(b));
        } else {
          m.col(a).swap(m.col(b));
        }
      }
    }
    const std::string tag = "case " + std::to_string(id);
    InvariantFactorProfile p = invariant_factors_over_R(m);
    std::size_t expected_units = 0;
    std::vector<IntPoly> expected_torsion;
    for (const auto& x : d) {
      if (abs(x.lead()) == 1) {
        ++expected_units;
      } else {
        expected_torsion.push_back(x);
      }
    }
    t.expect(p.rank == d.size(), tag + ": rank");
    t.expect(p.unit_count == expected_units, tag + ": unit count");
    t.expect(p.torsion_factors.size() == expected_torsion.size(), tag + ": torsion count");
    for (std::size_t k = 0; k < std::min(p.torsion_factors.size(), expected_torsion.size()); ++k)
      t.expect(associated_oracle(p.torsion_factors[k], expected_torsion[k]),
               tag + ": torsion class " + p.torsion_factors[k].str() + " vs " + expected_torsion[k].str());
  }
  return report(3, "invariant factors of U D V over R", t, seconds_since(start), 30,
                std::to_string(cases) + " matrices");
}

// ---------------------------------------------------------------- criteria 4, 5

CutSystem circle_system() {
  CutSystem cs;
  cs.r = 1;
  cs.xi = CohomologyClass({Rational(1)});
  cs.strata_cells = {{"v", 0, {1}}};
  cs.incidence = {{"v", 1, {{"v", lp({1}, -1)}}}};
  return cs;
}

CutSystem torus_system() {
  auto m = [](std::int64_t a, std::int64_t b) { return GroupRingElement::monomial({a, b}, Integer(1)); };
  CutSystem cs;
  cs.r = 2;
  cs.xi = CohomologyClass({Rational(1), Rational(1)});
  cs.strata_cells = {{"p", 0, {1, 2}}, {"e1", 1, {1}}, {"e2", 1, {2}}};
  cs.incidence = {{"p", 1, {{"p", m(-1, 0)}}},
                  {"p", 2, {{"p", m(0, -1)}}},
                  {"e1", 1, {{"e1", m(-1, 0)}}},
                  {"e2", 2, {{"e2", m(0, -1)}}}};
  return cs;
}

template <class Ring>
bool all_empty(const ChainComplex<Ring>& x) {
  for (int i = 0; i <= x.top_degree(); ++i)
    if (x.size(i) != 0) return false;
  return true;
}

bool criterion_circle() {
  auto start = Clock::now();
  Tally t;
  CutComplex y = build_complex(circle_system());
  t.expect(!validate(y.complex), "circle complex has d^2 != 0");
  auto over_r = base_change(y.complex, RationalFnRRepresentation{y.xi});
  euler.expect(euler_characteristic(over_r) == euler_characteristic(y.complex), "circle: base change to R");
  auto res_r = cascade_collapse(y, over_r);
  t.expect(all_empty(res_r.complex), "cascade over R is not the zero complex");
  euler.expect(euler_characteristic(res_r.complex) == euler_characteristic(y.complex), "circle: cascade over R");

  auto xi = std::make_shared<const CohomologyClass>(y.xi);
  auto over_nov = base_change(y.complex, NovikovRepresentation{xi, Rational(-10)});
  euler.expect(euler_characteristic(over_nov) == euler_characteristic(y.complex), "circle: base change to Novikov");
  auto res_nov = cascade_collapse(y, over_nov);
  t.expect(all_empty(res_nov.complex), "cascade over the truncated completion is not the zero complex");

  ChainComplex<GroupRingElement> circle({{"x"}, {"y"}}, {Matrix<GroupRingElement>::Constant(1, 1, lp({1, -1}))});
  NovikovNumbers n = novikov_numbers(circle);
  t.expect(n.b == std::vector<std::size_t>{0, 0}, "circle b != 0");
  t.expect(n.q && *n.q == std::vector<std::size_t>{0, 0}, "circle q != 0");
  NovikovNumbers built = novikov_numbers(y.complex, y.xi);
  t.expect(built.b == std::vector<std::size_t>{0, 0} && built.q == std::vector<std::size_t>{0, 0},
           "cut complex Novikov numbers != 0");
  return report(4, "circle fixture end to end", t, seconds_since(start), 1);
}

bool criterion_torus() {
  auto start = Clock::now();
  Tally t;
  CutComplex y = build_complex(torus_system());
  std::size_t generators = 0;
  for (int i = 0; i <= y.complex.top_degree(); ++i) generators += y.complex.size(i);
  t.expect(generators == 8, "torus has " + std::to_string(generators) + " generators");
  t.expect(!validate(y.complex), "torus complex has d^2 != 0");
  t.expect(euler_characteristic(y.complex) == 0, "torus chi != 0");
  std::vector<CohomologyClass> basis{CohomologyClass({Rational(1), Rational(0)}),
                                     CohomologyClass({Rational(0), Rational(1)})};
  AnyComplex any = base_change(y.complex, RationalFieldRepresentation{basis, FieldSpec{}});
  const auto& f = std::get<ChainComplex<RF>>(any);
  euler.expect(euler_characteristic(f) == euler_characteristic(y.complex), "torus: base change to Q(t1, t2)");
  // Direct oracle: dims of the base-changed complex.
  auto direct = homology_over_field(f);
  t.expect(direct == std::vector<std::size_t>{0, 0, 0}, "direct homology over Q(t1, t2) is not zero");
  auto res = cascade_collapse(y, f);
  t.expect(res.simple.size() == 2 && res.simple[0], "first torus collapse is not simple");
  t.expect(all_empty(res.complex), "torus cascade is not the zero complex");
  t.expect(homology_over_field(res.complex) == direct, "cascade disagrees with the direct homology");
  euler.expect(euler_characteristic(res.complex) == euler_characteristic(y.complex), "torus: cascade");
  return report(5, "torus fixture end to end", t, seconds_since(start), 2);
}

// ---------------------------------------------------------------- criterion 6

bool criterion_mapping_torus() {
  auto start = Clock::now();
  Tally t;
  ChainComplex<Integer> point({{"pt"}}, {});
  Matrix<Integer> two = Matrix<Integer>::Constant(1, 1, Integer(2));
  auto torus = mapping_torus(point, {two});
  t.expect(torus.d(1)(0, 0) == lp({1, -2}), "mapping torus differential is " + torus.d(1)(0, 0).str());
  t.expect(!validate(torus), "mapping torus has d^2 != 0");
  euler.expect(euler_characteristic(torus) == 0, "mapping torus chi");
  NovikovNumbers n = novikov_numbers(torus, CohomologyClass({Rational(1)}));
  t.expect(n.b == std::vector<std::size_t>{0, 0}, "b != (0, 0)");
  t.expect(n.q && *n.q == std::vector<std::size_t>{1, 0}, "q != (1, 0)");
  t.expect(all_pass(check_novikov_inequalities({1, 1}, n)), "c = (1, 1) should pass");
  auto zero = check_novikov_inequalities({0, 0}, n);
  t.expect(!all_pass(zero) && zero[0].verdict == Verdict::fail, "c = (0, 0) should fail in degree 0");
  return report(6, "degree-2 mapping torus", t, seconds_since(start), 1);
}

// ---------------------------------------------------------------- criterion 7

struct TwistCase {
  ChainComplex<GroupRingElement> complex;
  MonodromyRep bundle;
  CohomologyClass xi;
};

// d_1 = U D_1 V and d_2 = V^-1 D_2 W with D_1 D_2 = 0, V unimodular over
// Z[t, 1/t]; the diagonal entries are products of b t - a factors.
TwistCase random_twist_case(Rng& rng) {
  const std::vector<IntPoly> factors{ascending({-1, 2}), ascending({1, 2}), ascending({-2, 1}), ascending({-3, 1}),
                                     ascending({-1, 3}), ascending({1, 1}),  ascending({-2, 3}), ascending({-2, 0, 1}),
                                     ascending({0, 1})};
  auto diagonal_entry = [&]() {
    IntPoly p(1);
    long count = rng.uniform(1, 2);
    for (long k = 0; k < count; ++k) p = p * rng.pick(factors);
    return from_upoly(p);
  };
  const Index c0 = rng.uniform(1, 3), c1 = rng.uniform(1, 3), c2 = rng.uniform(0, 2);
  const Index r1 = rng.uniform(0, std::min(c0, c1));
  const Index r2 = rng.uniform(0, std::min(c2, c1 - r1));
  Matrix<GroupRingElement> d1(c0, c1), d2(c1, c2);
  for (Index i = 0; i < c0; ++i)
    for (Index j = 0; j < c1; ++j) d1(i, j) = (i == j && i < r1) ? diagonal_entry() : zero_element(1);
  for (Index i = 0; i < c1; ++i)
    for (Index j = 0; j < c2; ++j) d2(i, j) = (i - r1 == j && j < r2) ? diagonal_entry() : zero_element(1);
  // Row ops on d1 (U), column ops on d2 (W), and V between them.
  auto lambda = [&]() {
    GroupRingElement p(std::size_t{1});
    p.add_term({rng.uniform(-1, 1)}, Integer(rng.uniform(-1, 1)));
    return p;
  };
  for (int op = 0; op < 3; ++op) {
    if (c0 > 1) {
      Index a = rng.uniform(0, c0 - 1), b = rng.uniform(0, c0 - 1);
      if (a != b) {
        GroupRingElement l = lambda();
        for (Index j = 0; j < c1; ++j) d1(a, j) += l * d1(b, j);
      }
    }
    if (c2 > 1) {
      Index a = rng.uniform(0, c2 - 1), b = rng.uniform(0, c2 - 1);
      if (a != b) {
        GroupRingElement l = lambda();
        for (Index i = 0; i < c1; ++i) d2(i, a) += l * d2(i, b);
      }
    }
    if (c1 > 1) {
      // Column a += l column b on d1 and row b -= l row a on d2.
      Index a = rng.uniform(0, c1 - 1), b = rng.uniform(0, c1 - 1);
      if (a != b) {
        GroupRingElement l = lambda();
        for (Index i = 0; i < c0; ++i) d1(i, a) += l * d1(i, b);
        for (Index j = 0; j < c2; ++j) d2(b, j) -= l * d2(a, j);
      }
    }
  }
  std::vector<std::vector<std::string>> basis(3);
  for (Index i = 0; i < c0; ++i) basis[0].push_back("a" + std::to_string(i));
  for (Index i = 0; i < c1; ++i) basis[1].push_back("b" + std::to_string(i));
  for (Index i = 0; i < c2; ++i) basis[2].push_back("c" + std::to_string(i));
  ChainComplex<GroupRingElement> x(std::move(basis), {d1, d2});

  MonodromyRep e;
  switch (rng.uniform(0, 3)) {
    case 0: e = MonodromyRep::trivial(1); break;
    case 1: e = MonodromyRep::line({rng.pick(std::vector<Rational>{Rational(2), Rational(1, 2), Rational(-1)})}); break;
    case 2: {
      Matrix<Rational> swap(2, 2);
      swap << 0, 1, 1, 0;
      e = MonodromyRep::from_rational_matrices({swap}, 2);
      break;
    }
    default: {
      Matrix<Rational> shear(2, 2);
      shear << 1, 1, 0, 1;
      e = MonodromyRep::from_rational_matrices({shear}, 2);
      break;
    }
  }
  return TwistCase{std::move(x), std::move(e), CohomologyClass({Rational(1)})};
}

bool criterion_jumps(Rng& rng) {
  auto start = Clock::now();
  Tally t;
  std::size_t roots_checked = 0;
  const std::size_t cases = 60;
  for (std::size_t id = 0; id < cases; ++id) {
    TwistCase tc = random_twist_case(rng);
    const std::string tag = "case " + std::to_string(id);
    t.expect(!validate(tc.complex), tag + ": d^2 != 0");
    JumpReport rep = generic_betti_and_jumps(tc.complex, tc.bundle, tc.xi);
    std::set<Rational> all_roots;
    for (std::size_t i = 0; i < rep.jump_polynomials.size(); ++i) {
      const IntPoly& p = rep.jump_polynomials[i];
      if (p.degree() < 1) continue;
      for (const auto& a : rational_roots(p)) {
        all_roots.insert(a);
        auto dims = bundle_homology_dims(tc.complex, a, tc.bundle, tc.xi);
        ++roots_checked;
        t.expect(dims[i] > rep.generic_b[i], tag + ": no jump at " + to_string(a) + " in degree " + std::to_string(i));
      }
    }
    for (int k = 0; k < 3;) {
      Rational a(rng.uniform(-9, 9), rng.uniform(1, 9));
      a.canonicalize();
      if (a == 0 || all_roots.count(a)) continue;
      bool root = false;
      for (const auto& p : rep.jump_polynomials) root |= p.evaluate<Rational>(a) == 0;
      if (root) continue;
      ++k;
      t.expect(bundle_homology_dims(tc.complex, a, tc.bundle, tc.xi) == rep.generic_b,
               tag + ": dims at non-root " + to_string(a) + " differ from the generic value");
    }
    auto twisted = base_change(tc.complex, ScalarBundleRepresentation{Rational(3), tc.xi, tc.bundle});
    euler.expect(euler_characteristic(twisted) == static_cast<long>(tc.bundle.dim()) * euler_characteristic(tc.complex),
                 tag + ": bundle base change chi");
  }
  return report(7, "jump positivity", t, seconds_since(start), 20,
                std::to_string(cases) + " complexes, " + std::to_string(roots_checked) + " rational jump roots");
}

// ---------------------------------------------------------------- criterion 8

bool has_rational_root(const std::vector<long>& desc) {
  // Brute force over p | a_0, q | a_n.
  const long lead = desc.front(), constant = desc.back();
  for (long p = 1; p <= std::abs(constant); ++p) {
    if (constant % p != 0) continue;
    for (long q = 1; q <= std::abs(lead); ++q) {
      if (lead % q != 0) continue;
      for (long s : {1L, -1L}) {
        Rational x(s * p, q);
        x.canonicalize();
        Rational acc = 0;
        for (long c : desc) acc = acc * x + c;
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

bool criterion_dirichlet() {
  auto start = Clock::now();
  Tally t;
  std::size_t valid = 0, units = 0;
  for (int degree = 1; degree <= 3; ++degree) {
    std::vector<long> desc(static_cast<std::size_t>(degree + 1), -3);
    while (true) {
      if (desc.front() != 0 && desc.back() != 0) {
        long g = 0;
        for (long c : desc) g = std::gcd(g, std::abs(c));
        // Up to degree 3 reducible means a rational root.
        const bool candidate_ok = g == 1 && (degree == 1 || !has_rational_root(desc));
        MinimalPolynomialCandidate c;
        for (long x : desc) c.coefficients.emplace_back(x);
        MinimalPolynomialCandidate rev;
        for (auto it = desc.rbegin(); it != desc.rend(); ++it) rev.coefficients.emplace_back(*it);
        const std::string tag = c.polynomial().str();
        if (!candidate_ok) {
          bool threw = false;
          try {
            (void)is_dirichlet_unit(c);
          } catch (const PreconditionError&) {
            threw = true;
          }
          t.expect(threw, tag + ": invalid candidate accepted");
        } else {
          ++valid;
          const bool lead_unit = std::abs(desc.front()) == 1;
          const bool const_unit = std::abs(desc.back()) == 1;
          const bool unit = is_dirichlet_unit(c);
          const bool integer = is_algebraic_integer(c);
          units += unit;
          t.expect(integer == lead_unit, tag + ": algebraic integer test");
          t.expect(unit == (lead_unit && const_unit), tag + ": beta_k = +-1 characterization");
          t.expect(!unit || integer, tag + ": unit but not integer");
          // a unit iff a and 1/a are algebraic integers; 1/a has the reversed polynomial.
          t.expect(unit == (integer && is_algebraic_integer(rev)), tag + ": inverse integrality");
          t.expect(unit == is_dirichlet_unit(rev), tag + ": reversal symmetry");
        }
      }
      std::size_t k = 0;
      while (k < desc.size() && desc[k] == 3) desc[k++] = -3;
      if (k == desc.size()) break;
      ++desc[k];
    }
  }
  for (long num = -3; num <= 3; ++num)
    for (long den = 1; den <= 3; ++den) {
      if (num == 0) continue;
      Rational x(num, den);
      x.canonicalize();
      t.expect(is_algebraic_integer(x) == (x.get_den() == 1), to_string(x) + ": rational integrality");
      t.expect(is_dirichlet_unit(x) == (x == 1 || x == -1), to_string(x) + ": rational unit");
    }
  return report(8, "Dirichlet table", t, seconds_since(start), 5,
                std::to_string(valid) + " irreducible candidates, " + std::to_string(units) + " units");
}

}  // namespace

int main() {
  const auto start = Clock::now();
  Rng rng(20261018);
  bool ok = true;
  auto guard = [&](const std::function<bool()>& f, int n) {
    try {
      return f();
    } catch (const std::exception& e) {
      std::printf("criterion %d: FAIL (exception: %s)\n", n, e.what());
      return false;
    }
  };
  ok &= guard([&] { return criterion_collapse(rng); }, 1);
  ok &= guard([&] { return criterion_neumann(rng); }, 2);
  ok &= guard([&] { return criterion_invariant_factors(rng); }, 3);
  ok &= guard(criterion_circle, 4);
  ok &= guard(criterion_torus, 5);
  ok &= guard(criterion_mapping_torus, 6);
  ok &= guard([&] { return criterion_jumps(rng); }, 7);
  ok &= guard(criterion_dirichlet, 8);
  ok &= report(9, "Euler characteristic conservation", euler, 0, 1);
  Tally wall;
  const double total = seconds_since(start);
  wall.expect(total < 60, "suite took " + std::to_string(total) + " s");
  ok &= report(10, "full suite wall clock, exact arithmetic", wall, total, 60);
  return ok ? 0 : 1;
}
