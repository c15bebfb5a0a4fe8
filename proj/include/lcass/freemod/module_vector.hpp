#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "lcass/errors.hpp"
#include "lcass/exactalg/polynomial.hpp"

namespace lcass {

/// A module monomial m*e_pos of a free module (positions are 1-based).
struct ModuleMonomial {
  Monomial mono;
  std::size_t pos = 1;

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;

  bool divides(const ModuleMonomial& other) const {
    return pos == other.pos && mono.divides(other.mono);
  }
};

/// Term-over-position: m1 e_j1 > m2 e_j2 iff m1 > m2, or m1 = m2 and j1 < j2.
inline std::strong_ordering top_cmp(const ModuleMonomial& a, const ModuleMonomial& b) {
  if (auto c = a.mono <=> b.mono; c != 0) return c;
  return b.pos <=> a.pos;
}

/// An element of the free module R0^rank.
///
/// Stored as a list of module terms sorted by strictly descending
/// term-over-position order, so the leading term is the first entry.
template <Coefficient C>
class ModuleVector {
 public:
  struct Term {
    Monomial mono;
    std::size_t pos;
    C coeff;

    ModuleMonomial module_monomial() const { return {mono, pos}; }
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit ModuleVector(std::size_t rank = 1) : rank_(rank) {
    if (rank == 0) throw ArgumentError("module rank must be positive");
  }

  /// e_pos
  static ModuleVector basis(std::size_t rank, std::size_t pos) {
    return monomial(rank, pos, Monomial::one(), C(1));
  }

  /// c * m * e_pos
  static ModuleVector monomial(std::size_t rank, std::size_t pos, const Monomial& m,
                               const C& c = C(1)) {
    ModuleVector v(rank);
    v.check_pos(pos);
    if (c != 0) v.terms_.push_back({m, pos, c});
    return v;
  }

  /// entries[0] is the entry at position 1.
  static ModuleVector from_entries(const std::vector<Polynomial<C>>& entries) {
    ModuleVector v(entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) {
      for (const auto& t : entries[j].terms()) v.terms_.push_back({t.mono, j + 1, t.coeff});
    }
    v.sort();
    return v;
  }

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const {
    if (terms_.empty()) throw ZeroLeadingTermError("zero vector has no leading term");
    return terms_.front();
  }
  ModuleMonomial leading_module_monomial() const { return leading_term().module_monomial(); }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  std::size_t leading_position() const { return leading_term().pos; }
  const C& leading_coeff() const { return leading_term().coeff; }

  Polynomial<C> entry(std::size_t pos) const {
    check_pos(pos);
    std::vector<typename Polynomial<C>::Term> ts;
    for (const auto& t : terms_) {
      if (t.pos == pos) ts.push_back({t.mono, t.coeff});
    }
    return Polynomial<C>::from_terms(std::move(ts));
  }

  std::vector<Polynomial<C>> entries() const {
    std::vector<std::vector<typename Polynomial<C>::Term>> buckets(rank_);
    for (const auto& t : terms_) buckets[t.pos - 1].push_back({t.mono, t.coeff});
    std::vector<Polynomial<C>> out;
    out.reserve(rank_);
    for (auto& b : buckets) out.push_back(Polynomial<C>::from_terms(std::move(b)));
    return out;
  }

  bool involves_x() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.mono.involves_x(); });
  }

  /// c * m * this
  ModuleVector mul_term(const Monomial& m, const C& c) const {
    ModuleVector out(rank_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.pos, t.coeff * c});
    return out;
  }

  /// p * this
  ModuleVector mul_poly(const Polynomial<C>& p) const {
    ModuleVector out(rank_);
    for (const auto& t : p.terms()) out = out + mul_term(t.mono, t.coeff);
    return out;
  }

  /// this - c*m*other, the elementary reduction step.
  ModuleVector sub_mul(const C& c, const Monomial& m, const ModuleVector& other) const {
    return combine(*this, C(1), other, -c, m);
  }

  ModuleVector operator-() const { return mul_term(Monomial::one(), C(-1)); }

  friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
    return combine(a, C(1), b, C(1), Monomial::one());
  }
  friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) {
    return combine(a, C(1), b, C(-1), Monomial::one());
  }
  friend ModuleVector operator*(const C& c, const ModuleVector& v) {
    return v.mul_term(Monomial::one(), c);
  }

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  /// Drops the leading term.
  ModuleVector tail() const {
    ModuleVector out(rank_);
    if (!terms_.empty()) out.terms_.assign(terms_.begin() + 1, terms_.end());
    return out;
  }

  /// Appends a term that is strictly smaller than every stored term.
  void push_smallest(Term t) {
    if (!terms_.empty() && top_cmp(t.module_monomial(), terms_.back().module_monomial()) >= 0) {
      throw ArgumentError("push_smallest: term out of order");
    }
    if (t.coeff != 0) terms_.push_back(std::move(t));
  }

 private:
  void check_pos(std::size_t pos) const {
    if (pos < 1 || pos > rank_) {
      throw ShapeError("position " + std::to_string(pos) + " outside rank " +
                       std::to_string(rank_));
    }
  }

  void sort() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      return top_cmp(a.module_monomial(), b.module_monomial()) > 0;
    });
  }

  // a_scale * a + b_scale * shift * b
  static ModuleVector combine(const ModuleVector& a, const C& a_scale, const ModuleVector& b,
                              const C& b_scale, const Monomial& shift) {
    if (a.rank_ != b.rank_) {
      throw ShapeError("rank mismatch: " + std::to_string(a.rank_) + " vs " +
                       std::to_string(b.rank_));
    }
    ModuleVector out(a.rank_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    const bool a_unit = a_scale == 1;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      std::strong_ordering ord = std::strong_ordering::equal;
      if (i == a.terms_.end()) {
        ord = std::strong_ordering::less;
      } else if (j == b.terms_.end()) {
        ord = std::strong_ordering::greater;
      } else {
        ord = top_cmp(i->module_monomial(), {j->mono * shift, j->pos});
      }
      if (ord > 0) {
        out.terms_.push_back(a_unit ? *i : Term{i->mono, i->pos, a_scale * i->coeff});
        ++i;
      } else if (ord < 0) {
        out.terms_.push_back({j->mono * shift, j->pos, b_scale * j->coeff});
        ++j;
      } else {
        C c = a_scale * i->coeff + b_scale * j->coeff;
        if (c != 0) out.terms_.push_back({i->mono, i->pos, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::size_t rank_;
  std::vector<Term> terms_;
};

}  // namespace lcass
