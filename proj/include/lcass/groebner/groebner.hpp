#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcass/errors.hpp"
#include "lcass/freemod/module_vector.hpp"

// Buchberger machinery for submodules of free modules over L[X,Y,Z],
// L = Z or Q, under the term-over-position extension of lex X > Y > Z.
//
// Over Z the bases are strong Groebner bases: every nonzero element of the
// submodule has a leading term c*m*e_j divisible (monomial and coefficient)
// by the leading term of some basis element. Reduction is Euclidean: a term
// c*m*e_j is rewritten with g when lm(g) | m*e_j and the canonical remainder
// of c modulo lc(g), taken in [0, |lc(g)|), differs from c.

namespace lcass {

template <Coefficient C>
class GroebnerEngine;

template <Coefficient C>
class GroebnerBasis {
 public:
  using Vector = ModuleVector<C>;

  static constexpr CoefficientDomain domain() { return coefficient_traits<C>::domain; }

  /// Wraps generators without any check. Operations that rely on the
  /// Groebner property (eliminate_x) refuse such a basis.
  static GroebnerBasis uncertified(std::size_t rank, std::vector<Vector> gens) {
    return GroebnerBasis(rank, std::move(gens), false);
  }

  std::size_t rank() const { return rank_; }
  const std::vector<Vector>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool certified() const { return certified_; }

  /// Elements appended by the completion loop (before interreduction).
  std::size_t added() const { return added_; }
  std::size_t pairs_processed() const { return pairs_processed_; }

 private:
  template <Coefficient D>
  friend class GroebnerEngine;

  GroebnerBasis(std::size_t rank, std::vector<Vector> gens, bool certified)
      : rank_(rank), gens_(std::move(gens)), certified_(certified) {}

  std::size_t rank_;
  std::vector<Vector> gens_;
  bool certified_ = false;
  std::size_t added_ = 0;
  std::size_t pairs_processed_ = 0;
};

namespace detail {

template <Coefficient C>
void check_rank(const ModuleVector<C>& v, std::size_t rank) {
  if (v.rank() != rank) {
    throw ShapeError("rank mismatch: " + std::to_string(v.rank()) + " vs " +
                     std::to_string(rank));
  }
}

/// Multiplier q for the step c -> c - q*lc, or nullopt when the term is not
/// reducible by that coefficient.
template <Coefficient C>
std::optional<C> reduction_quotient(const C& c, const C& lc) {
  if constexpr (is_field_v<C>) {
    return C(c / lc);
  } else {
    DivRem qr = euclid_divrem(c, lc);
    if (qr.quot == 0) return std::nullopt;
    return std::move(qr.quot);
  }
}

/// Unit normalization: positive leading coefficient over Z, monic over Q.
template <Coefficient C>
ModuleVector<C> normalize(const ModuleVector<C>& v) {
  if (v.is_zero()) return v;
  if constexpr (is_field_v<C>) {
    if (v.leading_coeff() == 1) return v;
    return C(C(1) / v.leading_coeff()) * v;
  } else {
    return v.leading_coeff() < 0 ? -v : v;
  }
}

/// lt(a) | lt(b) including the coefficient.
template <Coefficient C>
bool leading_term_divides(const ModuleVector<C>& a, const ModuleVector<C>& b) {
  if (!a.leading_module_monomial().divides(b.leading_module_monomial())) return false;
  if constexpr (is_field_v<C>) {
    return true;
  } else {
    return b.leading_coeff() % a.leading_coeff() == 0;
  }
}

}  // namespace detail

/// Normal form of f modulo G. With keep_leading the leading term of f is
/// left untouched and only the tail is reduced.
template <Coefficient C>
ModuleVector<C> reduce(const ModuleVector<C>& f, std::span<const ModuleVector<C>> G,
                       bool keep_leading = false) {
  for (const auto& g : G) detail::check_rank(g, f.rank());
  ModuleVector<C> remainder(f.rank());
  ModuleVector<C> p = f;
  if (keep_leading && !p.is_zero()) {
    remainder.push_smallest(p.leading_term());
    p = p.tail();
  }
  while (!p.is_zero()) {
    bool eliminated = false;
    bool progressed = true;
    while (progressed && !eliminated) {
      progressed = false;
      for (const auto& g : G) {
        if (g.is_zero()) continue;
        const auto& lt = p.leading_term();
        if (g.leading_position() != lt.pos || !g.leading_monomial().divides(lt.mono)) continue;
        auto q = detail::reduction_quotient(lt.coeff, g.leading_coeff());
        if (!q) continue;
        const ModuleMonomial head = lt.module_monomial();
        const Monomial shift = lt.mono / g.leading_monomial();
        p = p.sub_mul(*q, shift, g);
        if (p.is_zero() || p.leading_module_monomial() != head) {
          eliminated = true;
          break;
        }
        progressed = true;
      }
    }
    if (!eliminated) {
      remainder.push_smallest(p.leading_term());
      p = p.tail();
    }
  }
  return remainder;
}

template <Coefficient C>
ModuleVector<C> reduce(const ModuleVector<C>& f, const GroebnerBasis<C>& G) {
  return reduce<C>(f, std::span<const ModuleVector<C>>(G.generators()));
}

/// S-polynomial. Zero when the leading terms sit in different positions.
/// Over Z the leading coefficients are brought to their lcm.
template <Coefficient C>
ModuleVector<C> s_poly(const ModuleVector<C>& f, const ModuleVector<C>& g) {
  detail::check_rank(g, f.rank());
  if (f.is_zero() || g.is_zero()) throw ZeroLeadingTermError("s_poly of a zero vector");
  if (f.leading_position() != g.leading_position()) return ModuleVector<C>(f.rank());
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Monomial sf = l / f.leading_monomial();
  const Monomial sg = l / g.leading_monomial();
  if constexpr (is_field_v<C>) {
    return f.mul_term(sf, C(C(1) / f.leading_coeff())) -
           g.mul_term(sg, C(C(1) / g.leading_coeff()));
  } else {
    const Integer c = lcm(f.leading_coeff(), g.leading_coeff());
    return f.mul_term(sf, Integer(c / f.leading_coeff())) -
           g.mul_term(sg, Integer(c / g.leading_coeff()));
  }
}

/// G-polynomial u*(L/lm f)*f + v*(L/lm g)*g with u*lc(f) + v*lc(g) =
/// gcd(lc(f), lc(g)); its leading term is gcd * L. Only meaningful over Z.
inline ModuleVector<Integer> g_poly(const ModuleVector<Integer>& f,
                                    const ModuleVector<Integer>& g) {
  detail::check_rank(g, f.rank());
  if (f.is_zero() || g.is_zero()) throw ZeroLeadingTermError("g_poly of a zero vector");
  if (f.leading_position() != g.leading_position()) return ModuleVector<Integer>(f.rank());
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Bezout b = ext_gcd(f.leading_coeff(), g.leading_coeff());
  return f.mul_term(l / f.leading_monomial(), b.u) + g.mul_term(l / g.leading_monomial(), b.v);
}

namespace detail {

/// Whether the G-polynomial of the pair carries information; when one leading
/// coefficient divides the other its leading term is already a multiple of
/// an existing leading term.
inline bool needs_g_pair(const ModuleVector<Integer>& f, const ModuleVector<Integer>& g) {
  const Integer& a = f.leading_coeff();
  const Integer& b = g.leading_coeff();
  return b % a != 0 && a % b != 0;
}

}  // namespace detail

/// True iff every S-pair (and over Z every G-pair) of G reduces to zero
/// modulo G.
template <Coefficient C>
bool satisfies_buchberger_criterion(std::span<const ModuleVector<C>> G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (G[j].is_zero() || G[i].leading_position() != G[j].leading_position()) continue;
      if (!reduce<C>(s_poly(G[i], G[j]), G).is_zero()) return false;
      if constexpr (!is_field_v<C>) {
        if (detail::needs_g_pair(G[i], G[j]) && !reduce<C>(g_poly(G[i], G[j]), G).is_zero()) {
          return false;
        }
      }
    }
  }
  return true;
}

struct BuchbergerOptions {
  /// Drop redundant elements and tail-reduce once completion has finished.
  bool interreduce = true;
};

template <Coefficient C>
class GroebnerEngine {
 public:
  using Vector = ModuleVector<C>;

  static GroebnerBasis<C> run(const std::vector<Vector>& gens, const BuchbergerOptions& opts) {
    if (gens.empty()) throw ArgumentError("buchberger: empty generator list");
    const std::size_t rank = gens.front().rank();
    for (const auto& g : gens) detail::check_rank(g, rank);

    GroebnerEngine engine(rank);
    for (const auto& g : gens) {
      if (!g.is_zero()) engine.add(detail::normalize(g), true);
    }
    std::size_t processed = 0;
    while (!engine.pairs_.empty() || !engine.pending_.empty()) {
      if (!engine.pending_.empty()) {
        const Vector f = std::move(engine.pending_.front());
        engine.pending_.pop_front();
        engine.consider(f);
        continue;
      }
      const Pair pair = *engine.pairs_.begin();
      engine.pairs_.erase(engine.pairs_.begin());
      ++processed;
      engine.process(pair);
    }

    std::vector<Vector> live;
    std::size_t added = 0;
    for (std::size_t k = 0; k < engine.basis_.size(); ++k) {
      if (engine.basis_[k].is_zero()) continue;
      if (!engine.input_[k]) ++added;
      live.push_back(std::move(engine.basis_[k]));
    }
    GroebnerBasis<C> out(rank, std::move(live), true);
    out.added_ = added;
    out.pairs_processed_ = processed;
    if (opts.interreduce) out.gens_ = interreduce(std::move(out.gens_));
    return out;
  }

  static GroebnerBasis<C> certify(std::size_t rank, std::vector<Vector> gens) {
    for (const auto& g : gens) detail::check_rank(g, rank);
    if (!satisfies_buchberger_criterion<C>(gens)) {
      throw OrderError("generators are not a Groebner basis for the lex term-over-position order");
    }
    return GroebnerBasis<C>(rank, std::move(gens), true);
  }

  static std::vector<Vector> interreduce(std::vector<Vector> basis) {
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (l == k || !keep[l]) continue;
        if (detail::leading_term_divides(basis[l], basis[k])) {
          keep[k] = false;
          break;
        }
      }
    }
    std::vector<Vector> kept;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (keep[k]) kept.push_back(std::move(basis[k]));
    }
    for (std::size_t k = 0; k < kept.size(); ++k) {
      std::vector<Vector> others;
      others.reserve(kept.size() - 1);
      for (std::size_t l = 0; l < kept.size(); ++l) {
        if (l != k) others.push_back(kept[l]);
      }
      kept[k] = reduce<C>(kept[k], others, /*keep_leading=*/true);
    }
    return kept;
  }

 private:
  struct Pair {
    ModuleMonomial lcm;
    std::size_t i;
    std::size_t j;
  };

  // Normal strategy: smallest lcm first, ties broken by the newer index and
  // then the older one.
  struct PairOrder {
    bool operator()(const Pair& a, const Pair& b) const {
      if (auto c = top_cmp(a.lcm, b.lcm); c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  explicit GroebnerEngine(std::size_t rank) : rank_(rank) {}

  // Over Z, elements found during completion whose leading term is a
  // multiple of the new one are retired (slot zeroed, pairs dropped) and
  // queued again.
  void add(Vector v, bool input = false) {
    const std::size_t idx = basis_.size();
    if constexpr (!is_field_v<C>) {
      for (std::size_t k = 0; k < idx; ++k) {
        if (basis_[k].is_zero() || input_[k] || !detail::leading_term_divides(v, basis_[k])) continue;
        pending_.push_back(std::move(basis_[k]));
        basis_[k] = Vector(rank_);
        std::erase_if(pairs_, [k](const Pair& p) { return p.i == k || p.j == k; });
      }
    }
    for (std::size_t k = 0; k < idx; ++k) {
      if (basis_[k].is_zero() || basis_[k].leading_position() != v.leading_position()) continue;
      pairs_.insert(
          {ModuleMonomial{lcm(basis_[k].leading_monomial(), v.leading_monomial()),
                          v.leading_position()},
           k, idx});
    }
    basis_.push_back(std::move(v));
    input_.push_back(input);
  }

  void consider(const Vector& candidate) {
    Vector h = reduce<C>(candidate, basis_);
    if (!h.is_zero()) add(detail::normalize(h));
  }

  bool pending_pair(std::size_t a, std::size_t b) const {
    const auto [lo, hi] = std::minmax(a, b);
    for (const auto& p : pairs_) {
      if (p.i == lo && p.j == hi) return true;
    }
    return false;
  }

  // Chain criterion: some other live element's leading term divides the term
  // lcm of the pair and both of its pairs with the pair are already done.
  bool chain_criterion(const Pair& pair) const {
    const Vector& f = basis_[pair.i];
    const Vector& g = basis_[pair.j];
    C lc = C(1);
    if constexpr (!is_field_v<C>) lc = lcm(f.leading_coeff(), g.leading_coeff());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pair.i || k == pair.j || basis_[k].is_zero()) continue;
      if (!basis_[k].leading_module_monomial().divides(pair.lcm)) continue;
      if constexpr (!is_field_v<C>) {
        if (lc % basis_[k].leading_coeff() != 0) continue;
      }
      if (!pending_pair(pair.i, k) && !pending_pair(pair.j, k)) return true;
    }
    return false;
  }

  void process(const Pair& pair) {
    // Copies: add() may reallocate basis_.
    const Vector f = basis_[pair.i];
    const Vector g = basis_[pair.j];
    if (!chain_criterion(pair)) consider(s_poly(f, g));
    if constexpr (!is_field_v<C>) {
      if (detail::needs_g_pair(f, g)) consider(g_poly(f, g));
    }
  }

  std::size_t rank_;
  std::vector<Vector> basis_;  // zero slots are retired elements
  std::vector<bool> input_;
  std::set<Pair, PairOrder> pairs_;
  std::deque<Vector> pending_;
};

template <Coefficient C>
GroebnerBasis<C> buchberger(const std::vector<ModuleVector<C>>& gens,
                            const BuchbergerOptions& opts = {}) {
  return GroebnerEngine<C>::run(gens, opts);
}

/// Checks the Buchberger criterion and wraps gens as a certified basis;
/// throws OrderError otherwise.
template <Coefficient C>
GroebnerBasis<C> certify_groebner(std::size_t rank, std::vector<ModuleVector<C>> gens) {
  return GroebnerEngine<C>::certify(rank, std::move(gens));
}

template <Coefficient C>
bool membership(const ModuleVector<C>& v, const GroebnerBasis<C>& G) {
  detail::check_rank(v, G.rank());
  return reduce(v, G).is_zero();
}

/// Basis elements free of X. For a certified basis under lex with X largest
/// these generate the intersection of the submodule with L[Y,Z]^rank.
template <Coefficient C>
std::vector<ModuleVector<C>> eliminate_x(const GroebnerBasis<C>& G) {
  if (!G.certified()) {
    throw OrderError("eliminate_x needs a certified Groebner basis for the lex elimination order");
  }
  std::vector<ModuleVector<C>> out;
  for (const auto& g : G.generators()) {
    if (!g.involves_x()) out.push_back(g);
  }
  return out;
}

/// Every vector of vs lies in the span of G.
template <Coefficient C>
bool contains_all(const GroebnerBasis<C>& G, const std::vector<ModuleVector<C>>& vs) {
  for (const auto& v : vs) {
    if (!membership(v, G)) return false;
  }
  return true;
}

/// Mutual membership of the spans of two generator lists of the same rank.
template <Coefficient C>
bool same_span(const std::vector<ModuleVector<C>>& a, const std::vector<ModuleVector<C>>& b) {
  if (a.empty() || b.empty()) {
    auto all_zero = [](const auto& vs) {
      for (const auto& v : vs) {
        if (!v.is_zero()) return false;
      }
      return true;
    };
    return all_zero(a) && all_zero(b);
  }
  return contains_all(buchberger(a), b) && contains_all(buchberger(b), a);
}

}  // namespace lcass
