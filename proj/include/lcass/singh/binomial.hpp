#pragma once

#include <cstdint>

#include "lcass/errors.hpp"
#include "lcass/exactalg/coefficient.hpp"
#include "lcass/intlat/int_matrix.hpp"
#include "lcass/intlat/primes.hpp"
#include "lcass/intlat/smith.hpp"

namespace lcass::singh {

/// Binomial coefficient with C(xi, eta) = 0 whenever eta < 0 or eta > xi.
inline Integer binomial(std::int64_t xi, std::int64_t eta) {
  if (eta < 0 || xi < 0 || eta > xi) return 0;
  if (eta > xi - eta) eta = xi - eta;
  Integer out = 1;
  for (std::int64_t t = 1; t <= eta; ++t) {
    out *= xi - eta + t;
    out /= t;
  }
  return out;
}

/// Pi(n): primes dividing C(n, i) for some 0 <= i <= n.
inline PrimeSet pi_set(std::int64_t n) {
  if (n < 1) throw ArgumentError("pi_set: n must be at least 1");
  PrimeSet out;
  for (std::int64_t i = 0; i <= n / 2; ++i) {
    for (Prime p : prime_factors(binomial(n, i))) out.insert(p);
  }
  return out;
}

/// The s x s banded binomial matrix with (a, b) entry C(k, i + b - a).
inline IntMatrix omega(std::int64_t k, std::int64_t i, std::int64_t s) {
  if (k < 1 || i < 0 || s < 1) throw ArgumentError("omega: need k >= 1, i >= 0, s >= 1");
  IntMatrix m(static_cast<std::size_t>(s), static_cast<std::size_t>(s));
  for (std::int64_t a = 0; a < s; ++a) {
    for (std::int64_t b = 0; b < s; ++b) m(a, b) = binomial(k, i + b - a);
  }
  return m;
}

/// Product formula prod_{j<s} C(k+s-1-j, i) / C(i+j, i) for det omega(k,i,s).
/// The value is always a non-negative integer; anything else throws.
inline Rational van_zeipel_det(std::int64_t k, std::int64_t i, std::int64_t s) {
  if (k < 1 || i < 0 || s < 1) throw ArgumentError("van_zeipel_det: need k >= 1, i >= 0, s >= 1");
  Rational out = 1;
  for (std::int64_t j = 0; j < s; ++j) {
    out *= Rational(binomial(k + s - 1 - j, i), binomial(i + j, i));
  }
  if (boost::multiprecision::denominator(out) != 1 || out < 0) {
    throw VerificationError("van Zeipel product is not a non-negative integer: " + to_string(out));
  }
  return out;
}

/// prod_{j<s} C(k+s-1, i+j) / prod_{j<s} C(k+s-1, j).
inline Rational van_zeipel_det_ratio_form(std::int64_t k, std::int64_t i, std::int64_t s) {
  if (k < 1 || i < 0 || s < 1) throw ArgumentError("ratio form: need k >= 1, i >= 0, s >= 1");
  Integer num = 1, den = 1;
  for (std::int64_t j = 0; j < s; ++j) {
    num *= binomial(k + s - 1, i + j);
    den *= binomial(k + s - 1, j);
  }
  return Rational(num, den);
}

/// Exact determinant of a square integer matrix (fraction-free elimination).
inline Integer det_direct(const IntMatrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeError("det_direct: matrix is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()));
  }
  return determinant(a);
}

}  // namespace lcass::singh
