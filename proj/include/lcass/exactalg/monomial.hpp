#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "lcass/errors.hpp"

namespace lcass {

enum class Var : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Var, 3> kVariables = {Var::X, Var::Y, Var::Z};

inline constexpr char var_name(Var v) { return "XYZ"[static_cast<int>(v)]; }

/// A power product X^a Y^b Z^c of the coefficient ring's base variables.
///
/// The built-in comparison is the lexicographic order with X > Y > Z:
/// exponents are compared X first, then Y, then Z. Because std::array
/// compares lexicographically this falls out of the defaulted operator<=>.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  constexpr Monomial() = default;
  constexpr Monomial(Exponent x, Exponent y, Exponent z) : exp_{x, y, z} {}

  static constexpr Monomial one() { return {}; }
  static constexpr Monomial X(Exponent e = 1) { return {e, 0, 0}; }
  static constexpr Monomial Y(Exponent e = 1) { return {0, e, 0}; }
  static constexpr Monomial Z(Exponent e = 1) { return {0, 0, e}; }

  constexpr Exponent exponent(Var v) const { return exp_[static_cast<int>(v)]; }
  constexpr Exponent x() const { return exp_[0]; }
  constexpr Exponent y() const { return exp_[1]; }
  constexpr Exponent z() const { return exp_[2]; }

  constexpr std::uint64_t degree() const {
    return std::uint64_t{exp_[0]} + exp_[1] + exp_[2];
  }
  constexpr bool is_one() const { return exp_[0] == 0 && exp_[1] == 0 && exp_[2] == 0; }
  constexpr bool involves_x() const { return exp_[0] != 0; }

  constexpr bool divides(const Monomial& other) const {
    return exp_[0] <= other.exp_[0] && exp_[1] <= other.exp_[1] && exp_[2] <= other.exp_[2];
  }

  friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.exp_[0] + b.exp_[0], a.exp_[1] + b.exp_[1], a.exp_[2] + b.exp_[2]};
  }

  /// Exact quotient; throws unless b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw ArgumentError("monomial quotient is not exact");
    return {a.exp_[0] - b.exp_[0], a.exp_[1] - b.exp_[1], a.exp_[2] - b.exp_[2]};
  }

  friend constexpr Monomial lcm(const Monomial& a, const Monomial& b) {
    return {std::max(a.exp_[0], b.exp_[0]), std::max(a.exp_[1], b.exp_[1]),
            std::max(a.exp_[2], b.exp_[2])};
  }

  friend constexpr Monomial gcd(const Monomial& a, const Monomial& b) {
    return {std::min(a.exp_[0], b.exp_[0]), std::min(a.exp_[1], b.exp_[1]),
            std::min(a.exp_[2], b.exp_[2])};
  }

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  /// Renders as e.g. "X*Y^2"; the unit monomial renders as "1".
  std::string str() const {
    if (is_one()) return "1";
    std::string out;
    for (Var v : kVariables) {
      const Exponent e = exponent(v);
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += var_name(v);
      if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
  }

 private:
  std::array<Exponent, 3> exp_{0, 0, 0};
};

/// Lexicographic comparison with X > Y > Z.
constexpr std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b) {
  return a <=> b;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = m.x();
    h = h * 1000003u ^ m.y();
    h = h * 1000003u ^ m.z();
    return h;
  }
};

}  // namespace lcass
