#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "lcass/errors.hpp"
#include "lcass/exactalg/coefficient.hpp"
#include "lcass/exactalg/monomial.hpp"

namespace lcass {

/// Sparse polynomial in X, Y, Z over an exact coefficient type.
///
/// Terms are kept sorted by strictly descending monomial with no zero
/// coefficients, so the leading term is always terms().front().
template <Coefficient C>
class Polynomial {
 public:
  using coefficient_type = C;

  struct Term {
    Monomial mono;
    C coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  Polynomial(const C& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({Monomial::one(), c});
  }
  Polynomial(int c) : Polynomial(C(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const C& c = C(1)) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({m, c});
  }

  static Polynomial X(Monomial::Exponent e = 1) { return Polynomial(Monomial::X(e)); }
  static Polynomial Y(Monomial::Exponent e = 1) { return Polynomial(Monomial::Y(e)); }
  static Polynomial Z(Monomial::Exponent e = 1) { return Polynomial(Monomial::Z(e)); }

  /// Builds a polynomial from arbitrary terms: sorts, merges equal monomials
  /// and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::map<Monomial, C, std::greater<>> acc;
    for (auto& t : terms) acc[t.mono] += t.coeff;
    Polynomial p;
    for (auto& [m, c] : acc) {
      if (c != 0) p.terms_.push_back({m, std::move(c)});
    }
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Monomial& leading_monomial() const { return leading_term().mono; }
  const C& leading_coeff() const { return leading_term().coeff; }
  const Term& leading_term() const {
    if (terms_.empty()) throw ZeroLeadingTermError("zero polynomial has no leading term");
    return terms_.front();
  }

  C coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return C(0);
  }

  bool involves_x() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.mono.involves_x(); });
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  C evaluate(const C& x, const C& y, const C& z) const {
    C total = 0;
    for (const auto& t : terms_) {
      C v = t.coeff;
      for (Monomial::Exponent e = 0; e < t.mono.x(); ++e) v *= x;
      for (Monomial::Exponent e = 0; e < t.mono.y(); ++e) v *= y;
      for (Monomial::Exponent e = 0; e < t.mono.z(); ++e) v *= z;
      total += v;
    }
    return total;
  }

  /// c * m * this
  Polynomial mul_term(const Monomial& m, const C& c) const {
    Polynomial out;
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
    return out;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, C(1));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, C(-1));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<Monomial, C, std::greater<>> acc;
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
    }
    Polynomial out;
    for (auto& [m, c] : acc) {
      if (c != 0) out.terms_.push_back({m, std::move(c)});
    }
    return out;
  }
  friend Polynomial operator*(const C& c, const Polynomial& p) {
    return p.mul_term(Monomial::one(), c);
  }
  friend Polynomial operator*(const Polynomial& p, const C& c) {
    return p.mul_term(Monomial::one(), c);
  }
  friend Polynomial operator*(int c, const Polynomial& p) { return p.mul_term(Monomial::one(), C(c)); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, const C& sign) {
    Polynomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->mono > j->mono)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->mono > i->mono) {
        out.terms_.push_back({j->mono, sign * j->coeff});
        ++j;
      } else {
        C c = i->coeff + sign * j->coeff;
        if (c != 0) out.terms_.push_back({i->mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

using PolyZ = Polynomial<Integer>;
using PolyQ = Polynomial<Rational>;

/// Lifts a polynomial over Z to one over Q.
inline PolyQ to_rational(const PolyZ& p) {
  std::vector<PolyQ::Term> terms;
  for (const auto& t : p.terms()) terms.push_back({t.mono, Rational(t.coeff)});
  return PolyQ::from_terms(std::move(terms));
}

}  // namespace lcass
