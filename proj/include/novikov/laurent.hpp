#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/numbers.hpp"
#include "novikov/prime_field.hpp"

namespace novikov {

// Exponents of a monomial h in H = Z^r on the fixed basis.
using Exponent = std::vector<std::int64_t>;

inline Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Exponent negate_exponent(Exponent a) {
  for (auto& x : a) x = -x;
  return a;
}

// Sparse Laurent polynomial in r commuting variables t_1..t_r with
// coefficients in Coef (Integer for the group ring Z[H], Rational or Fp for
// k[H]). Terms are kept in lexicographic exponent order and no stored
// coefficient is zero.
//
// An element constructed from an int literal has no rank yet; it adopts the
// rank of the first ranked element it is combined with. This is what lets
// generic matrix code write Ring(0) and Ring(1).
template <class Coef>
class Laurent {
 public:
  using coefficient_type = Coef;
  using term_map = std::map<Exponent, Coef>;

  Laurent() = default;
  Laurent(int c) {  // NOLINT: literal conversion
    if (c != 0) terms_.emplace(Exponent{}, Coef(c));
  }
  explicit Laurent(std::size_t rank) : rank_(static_cast<std::ptrdiff_t>(rank)) {}

  static Laurent constant(std::size_t rank, const Coef& c) {
    Laurent p(rank);
    p.add_term(Exponent(rank, 0), c);
    return p;
  }

  static Laurent monomial(const Exponent& e, const Coef& c) {
    Laurent p(e.size());
    p.add_term(e, c);
    return p;
  }

  // t_i^power in rank r.
  static Laurent variable(std::size_t rank, std::size_t i, std::int64_t power = 1) {
    Exponent e(rank, 0);
    e.at(i) = power;
    return monomial(e, Coef(1));
  }

  bool has_rank() const { return rank_ >= 0; }
  std::size_t rank() const { return rank_ < 0 ? 0 : static_cast<std::size_t>(rank_); }

  // Fixes the rank of a rank-free element; checks agreement otherwise.
  Laurent& bind_rank(std::size_t r) {
    if (has_rank()) {
      if (rank() != r) {
        throw DimensionError("rank mismatch: " + std::to_string(rank()) + " vs " +
                             std::to_string(r));
      }
      return *this;
    }
    rank_ = static_cast<std::ptrdiff_t>(r);
    auto it = terms_.find(Exponent{});
    if (it != terms_.end() && r != 0) {
      Coef c = it->second;
      terms_.erase(it);
      terms_.emplace(Exponent(r, 0), c);
    }
    return *this;
  }

  Laurent bound_to(std::size_t r) const {
    Laurent p = *this;
    p.bind_rank(r);
    return p;
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coef coefficient(const Exponent& e) const {
    if (!has_rank() && !e.empty()) return bound_to(e.size()).coefficient(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  // Adds c * t^e, merging with an existing term.
  void add_term(const Exponent& e, const Coef& c) {
    if (is_zero_coef(c)) return;
    if (!has_rank()) bind_rank(e.size());
    if (e.size() != rank()) {
      throw DimensionError("exponent of length " + std::to_string(e.size()) +
                           " in rank " + std::to_string(rank()));
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coef(it->second)) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) { return accumulate(o, false); }
  Laurent& operator-=(const Laurent& o) { return accumulate(o, true); }

  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    std::ptrdiff_t r = common_rank(a, b);
    Laurent x = r >= 0 ? a.bound_to(static_cast<std::size_t>(r)) : a;
    Laurent y = r >= 0 ? b.bound_to(static_cast<std::size_t>(r)) : b;
    Laurent result;
    result.rank_ = r;
    for (const auto& [ea, ca] : x.terms_) {
      for (const auto& [eb, cb] : y.terms_) {
        result.add_raw(add_exponents(ea, eb), ca * cb);
      }
    }
    return result;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    std::ptrdiff_t r = common_rank(a, b);
    if (r < 0) return a.terms_ == b.terms_;
    auto x = a.bound_to(static_cast<std::size_t>(r));
    auto y = b.bound_to(static_cast<std::size_t>(r));
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // Multiplication by the unit t^e.
  Laurent shifted(const Exponent& e) const {
    Laurent r = bound_to(e.size());
    term_map moved;
    for (auto& [k, c] : r.terms_) moved.emplace(add_exponents(k, e), c);
    r.terms_ = std::move(moved);
    return r;
  }

  // Componentwise minimum exponent over all terms (zero vector for 0).
  Exponent min_exponents() const {
    Exponent m(rank(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }

  Exponent max_exponents() const {
    Exponent m(rank(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
      first = false;
    }
    return m;
  }

  template <class To, class F>
  Laurent<To> map_coefficients(F&& f) const {
    if (!has_rank()) {
      Laurent<To> r;
      for (const auto& [e, c] : terms_) r.add_raw(e, f(c));
      return r;
    }
    Laurent<To> r(rank());
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    // Highest terms first reads more naturally.
    for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) os << " + ";
      first = false;
      bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
      if (constant || !(c == Coef(1))) {
        os << c;
        if (!constant) os << "*";
      }
      bool first_factor = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first_factor) os << "*";
        first_factor = false;
        os << "t";
        if (e.size() > 1) os << (i + 1);
        if (e[i] != 1) os << "^" << e[i];
      }
    }
    return os;
  }

 private:
  template <class>
  friend class Laurent;

  static bool is_zero_coef(const Coef& c) { return ::novikov::is_zero(c); }

  static std::ptrdiff_t common_rank(const Laurent& a, const Laurent& b) {
    if (a.has_rank() && b.has_rank() && a.rank_ != b.rank_) {
      throw DimensionError("rank mismatch: " + std::to_string(a.rank_) + " vs " +
                           std::to_string(b.rank_));
    }
    return a.has_rank() ? a.rank_ : b.rank_;
  }

  void add_raw(const Exponent& e, const Coef& c) {
    if (is_zero_coef(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coef(it->second)) terms_.erase(it);
    }
  }

  Laurent& accumulate(const Laurent& o, bool subtract) {
    std::ptrdiff_t r = common_rank(*this, o);
    if (r >= 0) bind_rank(static_cast<std::size_t>(r));
    const Laurent& other = (r >= 0 && !o.has_rank()) ? o.bound_to(static_cast<std::size_t>(r)) : o;
    Laurent tmp;
    const Laurent* src = &other;
    if (&other == this) {
      tmp = other;
      src = &tmp;
    }
    for (const auto& [e, c] : src->terms_) add_raw(e, subtract ? Coef(-c) : c);
    return *this;
  }

  std::ptrdiff_t rank_ = -1;
  term_map terms_;
};

template <class Coef>
bool is_zero(const Laurent<Coef>& p) {
  return p.is_zero();
}

// Element of the group ring Z[H].
using GroupRingElement = Laurent<Integer>;

}  // namespace novikov
