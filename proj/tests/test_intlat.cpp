#include <gtest/gtest.h>

#include "lcass/intlat/smith.hpp"
#include "support.hpp"

using namespace lcass;
using lcass::testing::cofactor_det;
using lcass::testing::random_int_matrix;
using lcass::testing::Rng;

TEST(IntMatrix, BasicsAndErrors) {
  const IntMatrix a{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(a.rows(), 2u);
  EXPECT_EQ(a.at(1, 2), 6);
  EXPECT_THROW(a.at(2, 0), ShapeError);
  EXPECT_EQ(a.submatrix(0, 2, 1, 3), (IntMatrix{{2, 3}, {5, 6}}));
  EXPECT_EQ(a.select({1}, {0, 2}), (IntMatrix{{4, 6}}));
  EXPECT_THROW(a * a, ShapeError);
  EXPECT_THROW((IntMatrix{{1, 2}, {3}}), ShapeError);
  EXPECT_TRUE(IntMatrix(0, 3).is_zero());
}

TEST(IntMatrix, JsonUsesDecimalStrings) {
  IntMatrix a{{1, -2}};
  a(0, 0) = Integer("123456789012345678901234567890");
  const auto j = int_matrix_to_json(a);
  EXPECT_EQ(j.dump(), R"({"cols":2,"entries":[["123456789012345678901234567890","-2"]],"rows":1})");
  EXPECT_EQ(int_matrix_from_json(nlohmann::json::parse(j.dump())), a);
  EXPECT_EQ(int_matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":2,"entries":[[3,"4"]]})")),
            (IntMatrix{{3, 4}}));
  EXPECT_THROW(int_matrix_from_json(nlohmann::json::parse(R"({"rows":2,"cols":1,"entries":[["1"]]})")),
               ShapeError);
  EXPECT_THROW(int_matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":1,"entries":[["x"]]})")),
               ParseError);
}

TEST(Primes, FactorsAgainstTrialDivision) {
  for (int n = -200; n <= 2000; ++n) {
    std::vector<Prime> naive;
    for (int p = 2; p <= std::abs(n); ++p) {
      bool prime = true;
      for (int q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
      if (prime && n % p == 0) naive.push_back(static_cast<Prime>(p));
    }
    EXPECT_EQ(prime_factors(n), naive) << n;
  }
  EXPECT_EQ(prime_factors(Integer("155117520")), (std::vector<Prime>{2, 3, 5, 17, 19, 23, 29}));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_FALSE(is_prime(1));
  EXPECT_EQ(to_string(PrimeSet{3, 2}), "{2,3}");
  EXPECT_EQ(to_string(PrimeSet{}), "{}");
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith(IntMatrix{{2, 0}, {0, 3}}).divisors, (std::vector<Integer>{1, 6}));
  EXPECT_TRUE(smith(IntMatrix(3, 2)).divisors.empty());
  EXPECT_EQ(smith(IntMatrix::identity(3)).divisors, (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(smith(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).divisors, (std::vector<Integer>{2, 6, 12}));
  EXPECT_TRUE(smith(IntMatrix(0, 0)).divisors.empty());
}

TEST(Smith, RandomMatricesSatisfyInvariants) {
  Rng rng(101);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int t = 0; t < 300; ++t) {
    const IntMatrix a = random_int_matrix(rng, dim(rng), dim(rng), 20);
    const SnfResult r = smith(a);
    EXPECT_TRUE(verify_smith(a, r));
    EXPECT_EQ(elementary_divisors(a), r.divisors);
    EXPECT_EQ(r.rank(), rank(a));
  }
}

TEST(Smith, VerifyRejectsBrokenResults) {
  const IntMatrix a{{2, 0}, {0, 3}};
  SnfResult r = smith(a);
  r.divisors = {2, 3};
  EXPECT_FALSE(verify_smith(a, r));
  r = smith(a);
  r.U = IntMatrix{{2, 0}, {0, 1}};
  EXPECT_FALSE(verify_smith(a, r));
}

TEST(Determinant, MatchesCofactorExpansion) {
  Rng rng(103);
  std::uniform_int_distribution<int> dim(0, 6);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = dim(rng);
    const IntMatrix a = random_int_matrix(rng, n, n, 9);
    EXPECT_EQ(determinant(a), cofactor_det(a));
  }
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), ShapeError);
}

TEST(Rank, SingularCases) {
  EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(IntMatrix{{0, 0, 1}, {0, 0, 2}}), 1u);
  EXPECT_EQ(rank(IntMatrix(2, 2)), 0u);
  EXPECT_EQ(rank(IntMatrix{{0, 1, 2}, {1, 2, 3}, {1, 3, 5}}), 2u);
}

TEST(MinorGcd, Examples) {
  EXPECT_EQ(minor_gcd(IntMatrix::identity(3), 3), 1);
  EXPECT_EQ(minor_gcd(IntMatrix{{2, 0}, {0, 3}}, 2), 6);
  EXPECT_EQ(minor_gcd(IntMatrix{{1, 2}, {2, 4}}, 2), 0);
  EXPECT_THROW(minor_gcd(IntMatrix{{1, 2}}, 2), ArgumentError);
  EXPECT_THROW(minor_gcd(IntMatrix{{1, 2}}, 0), ArgumentError);
}

TEST(MinorGcd, EnumerationEqualsDivisorProduct) {
  Rng rng(107);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix a = random_int_matrix(rng, dim(rng), dim(rng), 6);
    const auto d = elementary_divisors(a);
    for (std::size_t s = 1; s <= std::min(a.rows(), a.cols()); ++s) {
      Integer prod = s <= d.size() ? Integer(1) : Integer(0);
      for (std::size_t i = 0; i < s && i < d.size(); ++i) prod *= d[i];
      EXPECT_EQ(minor_gcd_by_enumeration(a, s), prod);
      EXPECT_EQ(minor_gcd_by_snf(a, s), prod);
    }
  }
}

TEST(MinorGcd, LargeMatricesUseTheSmithRoute) {
  IntMatrix a = IntMatrix::identity(9);
  a(8, 8) = 4;
  EXPECT_EQ(minor_gcd(a, 9), 4);
  EXPECT_EQ(minor_gcd(a, 1), 1);
}

TEST(TorsionPrimes, Examples) {
  EXPECT_EQ(torsion_primes(IntMatrix{{2, 0}, {0, 3}}), (PrimeSet{2, 3}));
  EXPECT_TRUE(torsion_primes(IntMatrix::identity(4)).empty());
  EXPECT_EQ(torsion_primes(IntMatrix{{2, 1}, {1, 2}}), (PrimeSet{3}));
  EXPECT_TRUE(torsion_primes(IntMatrix(2, 2)).empty());
  // Free part does not contribute: Coker [2 0]^T = Z/2 + Z.
  EXPECT_EQ(torsion_primes(IntMatrix{{2}, {0}}), (PrimeSet{2}));
}

TEST(TorsionPrimes, RoutesAgreeOnRandomMatrices) {
  Rng rng(109);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix a = random_int_matrix(rng, dim(rng), dim(rng), 12);
    EXPECT_EQ(torsion_primes_via_divisors(a), torsion_primes_via_minors(a));
  }
}
