#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "lcass/errors.hpp"
#include "lcass/exactalg/polynomial.hpp"

namespace lcass {

/// Canonical rendering: terms in descending lex order joined by " + " / " - ",
/// coefficient separated from the monomial by '*', unit coefficients omitted.
///
///   2*Y^3 + 5*Z^4      Y^2 - Z^2      -X*Y + 1/2*Z      0
template <Coefficient C>
std::string to_string(const Polynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    const C magnitude = negative ? C(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = magnitude == 1;
    if (t.mono.is_one()) {
      out += to_string(magnitude);
    } else if (unit) {
      out += t.mono.str();
    } else {
      out += to_string(magnitude) + "*" + t.mono.str();
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  std::vector<std::pair<Monomial, Rational>> parse() {
    std::vector<std::pair<Monomial, Rational>> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(term(negative));
    skip_ws();
    while (!at_end()) {
      const char op = get();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', got '") + op + "'");
      skip_ws();
      terms.push_back(term(op == '-'));
      skip_ws();
    }
    return terms;
  }

 private:
  std::pair<Monomial, Rational> term(bool negative) {
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_coeff = true;
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        const Integer den = integer();
        if (den == 0) fail("zero denominator");
        coeff /= Rational(den);
        skip_ws();
      }
    }
    Monomial mono;
    bool have_var = false;
    for (;;) {
      std::size_t save = pos_;
      if (have_coeff || have_var) {
        if (peek() == '*') {
          get();
          skip_ws();
        }
      }
      const char c = peek();
      if (c != 'X' && c != 'Y' && c != 'Z') {
        pos_ = save;
        break;
      }
      get();
      skip_ws();
      Monomial::Exponent e = 1;
      if (peek() == '^') {
        get();
        skip_ws();
        const Integer v = integer();
        if (v > 1000000) fail("exponent too large");
        e = static_cast<Monomial::Exponent>(v);
        skip_ws();
      }
      const Monomial factor = c == 'X' ? Monomial::X(e) : c == 'Y' ? Monomial::Y(e) : Monomial::Z(e);
      mono = mono * factor;
      have_var = true;
    }
    if (!have_coeff && !have_var) fail("expected a term");
    if (negative) coeff = -coeff;
    return {mono, coeff};
  }

  Rational number() { return Rational(integer()); }

  Integer integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return parse_integer(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the grammar produced by to_string; '*' between factors is optional.
/// Rational coefficients are rejected with DomainError when C = Integer.
template <Coefficient C>
Polynomial<C> parse_polynomial(std::string_view text) {
  std::vector<typename Polynomial<C>::Term> terms;
  for (auto& [m, q] : detail::PolyParser(text).parse()) {
    terms.push_back({m, coefficient_from_rational<C>(q)});
  }
  return Polynomial<C>::from_terms(std::move(terms));
}

}  // namespace lcass
