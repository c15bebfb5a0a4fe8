#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "lcass/exactalg/polynomial.hpp"
#include "lcass/freemod/module_vector.hpp"
#include "lcass/intlat/int_matrix.hpp"

namespace lcass::testing {

using Rng = std::mt19937_64;

inline Monomial random_monomial(Rng& rng, unsigned max_exp, bool with_x = true) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  return Monomial(with_x ? e(rng) : 0, e(rng), e(rng));
}

template <Coefficient C>
Polynomial<C> random_poly(Rng& rng, int terms, unsigned max_exp, int coeff_bound = 5, bool with_x = true) {
  std::uniform_int_distribution<int> c(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> n(0, terms);
  Polynomial<C> p;
  const int count = n(rng);
  for (int t = 0; t < count; ++t) p += Polynomial<C>(random_monomial(rng, max_exp, with_x), C(c(rng)));
  return p;
}

template <Coefficient C>
ModuleVector<C> random_vector(Rng& rng, std::size_t rank, int terms, unsigned max_exp, bool with_x = true) {
  std::vector<Polynomial<C>> entries;
  for (std::size_t i = 0; i < rank; ++i) entries.push_back(random_poly<C>(rng, terms, max_exp, 5, with_x));
  return ModuleVector<C>::from_entries(entries);
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = e(rng);
  }
  return m;
}

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    const Integer term = a(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

/// Rows 0..n of Pascal's triangle.
inline std::vector<std::vector<Integer>> pascal(std::size_t n) {
  std::vector<std::vector<Integer>> rows(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return rows;
}

/// Primes dividing some entry of row n of Pascal's triangle, by naive trial.
inline std::set<std::uint64_t> naive_pi(std::size_t n) {
  const auto rows = pascal(n);
  std::set<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::uint64_t q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (!prime) continue;
    for (const auto& v : rows[n]) {
      if (v % p == 0) {
        out.insert(p);
        break;
      }
    }
  }
  return out;
}

}  // namespace lcass::testing
