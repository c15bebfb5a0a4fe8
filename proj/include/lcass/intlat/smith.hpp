#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lcass/errors.hpp"
#include "lcass/intlat/int_matrix.hpp"
#include "lcass/intlat/primes.hpp"

namespace lcass {

/// U * A * V = diag(divisors) padded with zeros, U and V unimodular,
/// divisors[i] | divisors[i+1], all positive; divisors.size() is the rank.
struct SnfResult {
  IntMatrix U;
  IntMatrix V;
  std::vector<Integer> divisors;

  std::size_t rank() const { return divisors.size(); }
};

namespace detail {

/// Row/column reduction with smallest-absolute-value pivoting. When Track
/// is false the transforms are not accumulated.
template <bool Track>
class SmithReducer {
 public:
  explicit SmithReducer(IntMatrix a) : a_(std::move(a)) {
    if constexpr (Track) {
      u_ = IntMatrix::identity(a_.rows());
      v_ = IntMatrix::identity(a_.cols());
    }
  }

  void run() {
    const std::size_t m = a_.rows(), n = a_.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      auto pivot = smallest_in_block(t);
      if (!pivot) break;
      move_to(t, pivot->first, pivot->second);
      for (;;) {
        if (!clear_row_and_column(t)) {
          // A smaller remainder showed up in row/column t; re-pivot on it.
          auto p = smallest_in_cross(t);
          move_to(t, p.first, p.second);
          continue;
        }
        // Pivot must divide the remaining block.
        auto bad = non_multiple(t);
        if (!bad) break;
        row_add(t, bad->first, Integer(1));
      }
      if (a_(t, t) < 0) {
        a_.negate_row(t);
        if constexpr (Track) u_.negate_row(t);
      }
      divisors_.push_back(a_(t, t));
    }
  }

  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }
  std::vector<Integer>& divisors() { return divisors_; }

 private:
  // Smallest nonzero |entry| in the block [t.., t..]; ties resolved row-major.
  std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        Integer v = abs(a_(i, j));
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = std::move(v);
        }
      }
    }
    return best;
  }

  std::pair<std::size_t, std::size_t> smallest_in_cross(std::size_t t) const {
    std::pair<std::size_t, std::size_t> best{t, t};
    Integer best_abs = abs(a_(t, t));
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) != 0 && (best_abs == 0 || abs(a_(i, t)) < best_abs)) {
        best = {i, t};
        best_abs = abs(a_(i, t));
      }
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) != 0 && (best_abs == 0 || abs(a_(t, j)) < best_abs)) {
        best = {t, j};
        best_abs = abs(a_(t, j));
      }
    }
    return best;
  }

  void move_to(std::size_t t, std::size_t i, std::size_t j) {
    a_.swap_rows(t, i);
    a_.swap_cols(t, j);
    if constexpr (Track) {
      u_.swap_rows(t, i);
      v_.swap_cols(t, j);
    }
  }

  void row_add(std::size_t dst, std::size_t src, const Integer& f) {
    a_.add_row(dst, src, f);
    if constexpr (Track) u_.add_row(dst, src, f);
  }

  void col_add(std::size_t dst, std::size_t src, const Integer& f) {
    a_.add_col(dst, src, f);
    if constexpr (Track) v_.add_col(dst, src, f);
  }

  // Returns true when row t and column t are zero apart from the pivot.
  bool clear_row_and_column(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) == 0) continue;
      const Integer q = a_(i, t) / a_(t, t);
      if (q != 0) row_add(i, t, Integer(-q));
      if (a_(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) == 0) continue;
      const Integer q = a_(t, j) / a_(t, t);
      if (q != 0) col_add(j, t, Integer(-q));
      if (a_(t, j) != 0) clean = false;
    }
    return clean;
  }

  std::optional<std::pair<std::size_t, std::size_t>> non_multiple(std::size_t t) const {
    const Integer& p = a_(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(i, j) % p != 0) return std::pair{i, j};
      }
    }
    return std::nullopt;
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  std::vector<Integer> divisors_;
};

}  // namespace detail

/// Smith normal form with unimodular transforms.
inline SnfResult smith(const IntMatrix& a) {
  detail::SmithReducer<true> r(a);
  r.run();
  return {std::move(r.u()), std::move(r.v()), std::move(r.divisors())};
}

/// Elementary divisors only; same reduction as smith() without tracking U, V.
inline std::vector<Integer> elementary_divisors(const IntMatrix& a) {
  detail::SmithReducer<false> r(a);
  r.run();
  return std::move(r.divisors());
}

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Rank over Q by fraction-free elimination.
inline std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

namespace detail {

template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void check_minor_size(const IntMatrix& a, std::size_t s) {
  if (s < 1 || s > std::min(a.rows(), a.cols())) {
    throw ArgumentError("minor size " + std::to_string(s) + " outside 1.." +
                        std::to_string(std::min(a.rows(), a.cols())));
  }
}

}  // namespace detail

/// gcd of all s x s minors by explicit enumeration.
inline Integer minor_gcd_by_enumeration(const IntMatrix& a, std::size_t s) {
  detail::check_minor_size(a, s);
  Integer g = 0;
  detail::for_each_combination(a.rows(), s, [&](const std::vector<std::size_t>& rs) {
    if (g == 1) return;
    detail::for_each_combination(a.cols(), s, [&](const std::vector<std::size_t>& cs) {
      if (g == 1) return;
      g = gcd(g, determinant(a.select(rs, cs)));
    });
  });
  return g;
}

/// gcd of all s x s minors as d_1 * ... * d_s of the Smith form.
inline Integer minor_gcd_by_snf(const IntMatrix& a, std::size_t s) {
  detail::check_minor_size(a, s);
  const auto d = elementary_divisors(a);
  if (s > d.size()) return 0;
  Integer prod = 1;
  for (std::size_t i = 0; i < s; ++i) prod *= d[i];
  return prod;
}

/// Matrices up to this size in both dimensions use minor enumeration.
inline constexpr std::size_t kMinorEnumerationLimit = 8;

inline Integer minor_gcd(const IntMatrix& a, std::size_t s) {
  if (a.rows() <= kMinorEnumerationLimit && a.cols() <= kMinorEnumerationLimit) {
    return minor_gcd_by_enumeration(a, s);
  }
  return minor_gcd_by_snf(a, s);
}

/// Primes p with pZ associated to Coker A: primes dividing an elementary
/// divisor.
inline PrimeSet torsion_primes_via_divisors(const IntMatrix& a) {
  PrimeSet out;
  for (const auto& d : elementary_divisors(a)) {
    for (Prime p : prime_factors(d)) out.insert(p);
  }
  return out;
}

/// Primes dividing the gcd of the maximal non-vanishing minors.
inline PrimeSet torsion_primes_via_minors(const IntMatrix& a) {
  const std::size_t r = rank(a);
  if (r == 0) return {};
  PrimeSet out;
  for (Prime p : prime_factors(minor_gcd(a, r))) out.insert(p);
  return out;
}

/// Both routes, required to agree.
inline PrimeSet torsion_primes(const IntMatrix& a) {
  PrimeSet via_divisors = torsion_primes_via_divisors(a);
  PrimeSet via_minors = torsion_primes_via_minors(a);
  if (via_divisors != via_minors) {
    throw VerificationError("torsion primes disagree: divisors give " + to_string(via_divisors) +
                            ", minors give " + to_string(via_minors));
  }
  return via_divisors;
}

/// Re-checks every SnfResult invariant against A.
inline bool verify_smith(const IntMatrix& a, const SnfResult& r) {
  if (r.U.rows() != a.rows() || r.U.cols() != a.rows()) return false;
  if (r.V.rows() != a.cols() || r.V.cols() != a.cols()) return false;
  const IntMatrix d = r.U * a * r.V;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      const Integer expected = (i == j && i < r.divisors.size()) ? r.divisors[i] : Integer(0);
      if (d(i, j) != expected) return false;
    }
  }
  for (std::size_t i = 0; i < r.divisors.size(); ++i) {
    if (r.divisors[i] <= 0) return false;
    if (i + 1 < r.divisors.size() && r.divisors[i + 1] % r.divisors[i] != 0) return false;
  }
  if (abs(determinant(r.U)) != 1 || abs(determinant(r.V)) != 1) return false;
  return true;
}

}  // namespace lcass
