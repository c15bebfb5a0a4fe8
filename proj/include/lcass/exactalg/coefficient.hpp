#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <string>
#include <string_view>

#include "lcass/errors.hpp"

namespace lcass {

using Integer = boost::multiprecision::cpp_int;
// cpp_rational keeps numerator/denominator in lowest terms with a positive
// denominator after every operation.
using Rational = boost::multiprecision::cpp_rational;

enum class CoefficientDomain { Integers, Rationals };

template <class C>
struct coefficient_traits;

template <>
struct coefficient_traits<Integer> {
  static constexpr bool is_field = false;
  static constexpr CoefficientDomain domain = CoefficientDomain::Integers;
  static constexpr std::string_view name = "Z";
};

template <>
struct coefficient_traits<Rational> {
  static constexpr bool is_field = true;
  static constexpr CoefficientDomain domain = CoefficientDomain::Rationals;
  static constexpr std::string_view name = "Q";
};

template <class C>
concept Coefficient = requires {
  { coefficient_traits<C>::is_field } -> std::convertible_to<bool>;
};

template <Coefficient C>
inline constexpr bool is_field_v = coefficient_traits<C>::is_field;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

struct DivRem {
  Integer quot;
  Integer rem;
};

/// Euclidean division a = q*b + r with 0 <= r < |b|.
inline DivRem euclid_divrem(const Integer& a, const Integer& b) {
  if (b == 0) throw ArgumentError("euclid_divrem: division by zero");
  Integer q = a / b;  // truncates toward zero
  Integer r = a - q * b;
  if (r < 0) {
    if (b > 0) {
      q -= 1;
      r += b;
    } else {
      q += 1;
      r -= b;
    }
  }
  return {std::move(q), std::move(r)};
}

/// Non-negative gcd.
inline Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

/// Non-negative lcm; lcm(0, x) = 0.
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

struct Bezout {
  Integer g;  // gcd(a, b) >= 0
  Integer u;  // g = u*a + v*b
  Integer v;
};

/// Extended Euclid. The multipliers are the ones produced by the classical
/// recurrence, which satisfy |u| <= |b/g| and |v| <= |a/g|.
inline Bezout ext_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {std::move(old_r), std::move(old_s), std::move(old_t)};
}

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  const Integer num = boost::multiprecision::numerator(v);
  const Integer den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses an optionally signed decimal integer.
inline Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected integer, got '" + std::string(text) + "'");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw ParseError("invalid digit in '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

/// Converts a rational to the coefficient type C. Non-integral values are
/// rejected for C = Integer.
template <Coefficient C>
C coefficient_from_rational(const Rational& q) {
  if constexpr (is_field_v<C>) {
    return q;
  } else {
    if (boost::multiprecision::denominator(q) != 1) {
      throw DomainError("value " + to_string(q) + " is not an integer");
    }
    return boost::multiprecision::numerator(q);
  }
}

}  // namespace lcass
