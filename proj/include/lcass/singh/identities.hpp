#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcass/errors.hpp"
#include "lcass/intlat/smith.hpp"
#include "lcass/singh/ass.hpp"
#include "lcass/singh/binomial.hpp"
#include "lcass/singh/matrices.hpp"

namespace lcass::singh {

struct PrimeSplit {
  std::vector<std::int64_t> with_p;     // j with p in Pi(j-2)
  std::vector<std::int64_t> without_p;  // j with p not in Pi(j-2)
};

/// Splits {3..jmax} by whether p lies in Pi(j-2). Throws VerificationError if
/// p | j-2 but p is missing from Pi(j-2), or if j-2 = p^k-1 and p is present.
inline PrimeSplit lemma_216_sets(Prime p, std::int64_t jmax) {
  if (jmax < 3) throw ArgumentError("lemma_216_sets: jmax must be at least 3");
  if (!is_prime(p)) throw ArgumentError("lemma_216_sets: " + std::to_string(p) + " is not prime");
  const auto P = static_cast<std::int64_t>(p);
  PrimeSplit out;
  for (std::int64_t j = 3; j <= jmax; ++j) {
    const std::int64_t n = j - 2;
    const bool in = pi_set(n).count(p) != 0;
    (in ? out.with_p : out.without_p).push_back(j);
    if (n % P == 0 && !in) {
      throw VerificationError("p divides " + std::to_string(n) + " but is not in Pi");
    }
    std::int64_t pk = P;
    while (pk - 1 < n) pk *= P;
    if (pk - 1 == n && in) {
      throw VerificationError(std::to_string(p) + " lies in Pi(" + std::to_string(n) + ")");
    }
  }
  return out;
}

/// p not in Pi(p^k - 1).
inline bool prime_power_gap(Prime p, unsigned k) {
  if (!is_prime(p) || k < 1) throw ArgumentError("prime_power_gap: need p prime and k >= 1");
  std::int64_t n = 1;
  for (unsigned t = 0; t < k; ++t) n *= static_cast<std::int64_t>(p);
  return pi_set(n - 1).count(p) == 0;
}

/// Every listed prime lies in Pi(p_1 ... p_n), since C(N, 1) = N.
inline bool pi_unbounded_witness(const std::vector<Prime>& primes) {
  if (primes.empty()) throw ArgumentError("pi_unbounded_witness: empty prime list");
  PrimeSet seen;
  std::int64_t n = 1;
  for (Prime p : primes) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) throw ArgumentError("pi_unbounded_witness: repeated prime");
    n *= static_cast<std::int64_t>(p);
  }
  const PrimeSet pi = pi_set(n);
  for (Prime p : primes) {
    if (pi.count(p) == 0) return false;
  }
  return true;
}

/// For every block Delta of consecutive columns of Q~_{r,r+k}, with c columns
/// and s = min(c, r): rank Delta = s, and if p divides every s x s minor then
/// p is in Pi(r+k-1).
inline bool minor_divisibility_check(std::size_t r, std::size_t k, Prime p) {
  if (r < 1 || k < 1) throw ArgumentError("minor_divisibility_check: r and k must be positive");
  if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
  const IntMatrix qt = q_tilde(r, k);
  const bool p_in_pi = pi_set(static_cast<std::int64_t>(r + k - 1)).count(p) != 0;
  const std::size_t ncols = qt.cols();
  for (std::size_t a = 0; a < ncols; ++a) {
    for (std::size_t b = a + 1; b <= ncols; ++b) {
      const IntMatrix delta = qt.submatrix(0, r, a, b);
      const std::size_t s = std::min(b - a, r);
      if (rank(delta) != s) return false;
      if (!p_in_pi && minor_gcd(delta, s) % p == 0) return false;
    }
  }
  return true;
}

/// A_{i+1} ... A_n equals the closed form for every 0 <= i < n <= nmax.
inline bool a_product_closed_form_check(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(a_product<Integer>(i + 1, n) == a_product_closed_form<Integer>(i, n))) return false;
    }
  }
  return true;
}

/// Q_{r-1,r} Q_{r,r+k} = Q_{r-1,r+k} for 2 <= r <= rmax, 1 <= k <= kmax.
inline bool q_product_check(std::size_t rmax, std::size_t kmax) {
  for (std::size_t r = 2; r <= rmax; ++r) {
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (!(build_Q<Integer>(r - 1, 1) * build_Q<Integer>(r, k) == build_Q<Integer>(r - 1, k + 1))) {
        return false;
      }
    }
  }
  return true;
}

/// j in 3..jmax split by whether (p,X,Y,Z) is associated in degree -j,
/// read off the graded Smith pipeline. Stops once `want` values of each kind
/// are found. Candidates are tried in increasing order of j, those predicted
/// absent first so the search ends early.
struct AssWitnesses {
  std::vector<std::int64_t> with_p;
  std::vector<std::int64_t> without_p;
};

inline AssWitnesses ass_witnesses(Prime p, std::int64_t jmax, std::size_t want) {
  if (jmax < 3) throw ArgumentError("ass_witnesses: jmax must be at least 3");
  AssWitnesses out;
  std::vector<std::int64_t> order;
  for (std::int64_t j = 3; j <= jmax; ++j) {
    if (pi_set(j - 2).count(p) == 0) order.push_back(j);
  }
  for (std::int64_t j = 3; j <= jmax; ++j) {
    if (pi_set(j - 2).count(p) != 0) order.push_back(j);
  }
  for (std::int64_t j : order) {
    const bool need_with = out.with_p.size() < want;
    const bool need_without = out.without_p.size() < want;
    if (!need_with && !need_without) break;
    const bool predicted = pi_set(j - 2).count(p) != 0;
    if ((predicted && !need_with) || (!predicted && !need_without)) continue;
    const bool observed = ass_bruteforce(j, true).primes.count(p) != 0;
    (observed ? out.with_p : out.without_p).push_back(j);
  }
  std::sort(out.with_p.begin(), out.with_p.end());
  std::sort(out.without_p.begin(), out.without_p.end());
  return out;
}

}  // namespace lcass::singh
