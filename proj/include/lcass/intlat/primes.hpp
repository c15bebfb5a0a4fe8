#pragma once

#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "lcass/errors.hpp"
#include "lcass/exactalg/coefficient.hpp"

namespace lcass {

using Prime = std::uint64_t;
using PrimeSet = std::set<Prime>;

/// Distinct prime divisors of |n| in increasing order, by trial division
/// over 2, 3 and the 6k +/- 1 wheel. prime_factors(0) and prime_factors(+-1)
/// are empty.
inline std::vector<Prime> prime_factors(const Integer& n) {
  std::vector<Prime> out;
  Integer m = abs(n);
  if (m <= 1) return out;
  auto strip = [&](Prime p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  };
  strip(2);
  strip(3);
  for (Prime p = 5; Integer(p) * p <= m; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (m > 1) {
    if (m > Integer(std::numeric_limits<Prime>::max())) {
      throw ArgumentError("prime factor " + m.str() + " exceeds 64 bits");
    }
    out.push_back(static_cast<Prime>(m));
  }
  return out;
}

inline bool is_prime(Prime p) {
  if (p < 2) return false;
  const auto f = prime_factors(Integer(p));
  return f.size() == 1 && f.front() == p;
}

inline std::string to_string(const PrimeSet& s) {
  std::string out = "{";
  bool first = true;
  for (Prime p : s) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

}  // namespace lcass
