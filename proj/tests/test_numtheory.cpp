#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zmcenter/errors.hpp"
#include "zmcenter/numtheory.hpp"

namespace nt = zmcenter::nt;
using zmcenter::BudgetExceeded;
using zmcenter::DomainError;

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(nt::multiplicative_order(2, 5), 4u);
  EXPECT_EQ(nt::multiplicative_order(1, 7), 1u);
  EXPECT_EQ(nt::multiplicative_order(2, 7), 3u);
  EXPECT_EQ(nt::multiplicative_order(5, 1), 1u);
}

TEST(MultiplicativeOrder, RejectsNonUnits) {
  EXPECT_THROW(nt::multiplicative_order(2, 4), DomainError);
  EXPECT_THROW(nt::multiplicative_order(0, 9), DomainError);
}

TEST(MultiplicativeOrder, MatchesScanAndIsMinimal) {
  for (nt::u64 m = 1; m <= 400; ++m)
    for (nt::u64 r = 1; r < std::max<nt::u64>(m, 2); ++r) {
      if (std::gcd(r, m) != 1) continue;
      const auto k = nt::multiplicative_order(r, m);
      ASSERT_EQ(k, oracle::order_by_scan(r, m)) << r << " mod " << m;
      ASSERT_EQ(nt::powmod(r, k, m), 1 % m);
    }
}

TEST(MultiplicativeOrder, SampledUpTo10000) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    const nt::u64 m = 2 + rng() % 9999;
    const nt::u64 r = 1 + rng() % (m - 1);
    if (std::gcd(r, m) != 1) continue;
    ASSERT_EQ(nt::multiplicative_order(r, m), oracle::order_by_scan(r, m));
  }
}

TEST(GeometricSum, Examples) {
  EXPECT_EQ(nt::geometric_sum_mod(2, 0, 5), 0u);
  EXPECT_EQ(nt::geometric_sum_mod(1, 9, 4), 1u);
  EXPECT_EQ(nt::geometric_sum_mod(2, 4, 5), 0u);
}

TEST(GeometricSum, MatchesDirectSummation) {
  for (nt::u64 m = 1; m <= 200; m += 3)
    for (nt::u64 r = 0; r <= 200; r += 7)
      for (nt::u64 u = 0; u <= 200; ++u)
        ASSERT_EQ(nt::geometric_sum_mod(r, u, m), oracle::geometric_sum(r, u, m))
            << "r=" << r << " u=" << u << " m=" << m;
}

TEST(GeometricSum, TelescopingIdentity) {
  // (r - 1)[u]_r = r^u - 1 (mod m)
  for (nt::u64 m = 1; m <= 200; ++m)
    for (nt::u64 r = 0; r <= 60; ++r)
      for (nt::u64 u = 0; u <= 60; u += 5) {
        const nt::u64 lhs = nt::mulmod((r + m - 1) % m, nt::geometric_sum_mod(r, u, m), m);
        const nt::u64 rhs = (nt::powmod(r, u, m) + m - 1 % m) % m;
        ASSERT_EQ(lhs, rhs) << "r=" << r << " u=" << u << " m=" << m;
      }
}

TEST(GeometricSum, HugeExponentStaysFast) {
  // r = 1 gives u mod m regardless of size.
  EXPECT_EQ(nt::geometric_sum_mod(1, 1'000'000'000'000ULL, 97), 1'000'000'000'000ULL % 97);
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(nt::euler_phi(1), 1u);
  EXPECT_EQ(nt::euler_phi(5), 4u);
  EXPECT_EQ(nt::euler_phi(16), 8u);
  for (nt::u64 m = 1; m <= 2000; ++m) ASSERT_EQ(nt::euler_phi(m), oracle::phi_by_count(m));
}

TEST(Factorize, Examples) {
  EXPECT_TRUE(nt::factorize(1).empty());
  EXPECT_EQ(nt::factorize(12), nt::Factorization({{2, 2}, {3, 1}}));
  EXPECT_EQ(nt::factorize(5040), nt::Factorization({{2, 4}, {3, 2}, {5, 1}, {7, 1}}));
}

TEST(Factorize, ProductAndOrdering) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const nt::u64 n = 1 + rng() % 5'000'000'000ULL;
    const auto f = nt::factorize(n);
    ASSERT_EQ(f.value(), n);
    std::map<nt::u64, unsigned> got;
    for (const auto& pp : f) got[pp.prime] = pp.exponent;
    if (n < 100'000'000) ASSERT_EQ(got, oracle::factor_by_trial(n));
  }
  EXPECT_THROW(nt::factorize(0), DomainError);
}

TEST(Factorization, RejectsBadParts) {
  EXPECT_THROW(nt::Factorization({{4, 1}}), DomainError);
  EXPECT_THROW(nt::Factorization({{3, 1}, {2, 1}}), DomainError);
  EXPECT_THROW(nt::Factorization({{3, 0}}), DomainError);
}

TEST(IsPrime, MatchesTrialDivision) {
  for (nt::u64 n = 0; n < 100000; ++n) ASSERT_EQ(nt::is_prime(n), oracle::prime_by_trial(n)) << n;
}

TEST(IsPrime, LargeKnownValues) {
  EXPECT_TRUE(nt::is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(nt::is_prime(18446744073709551559ULL));
  EXPECT_TRUE(nt::is_prime(1'000'000'007ULL));
  EXPECT_FALSE(nt::is_prime(3215031751ULL));           // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(nt::is_prime(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
  EXPECT_FALSE(nt::is_prime(4294967297ULL));           // F5 = 641 * 6700417
}

TEST(PrimeInProgression, Examples) {
  EXPECT_EQ(nt::find_prime_in_progression(4, {2}), 5u);
  EXPECT_EQ(nt::find_prime_in_progression(3, {3}), 7u);
  EXPECT_EQ(nt::find_prime_in_progression(2, {2, 3, 5}), 7u);
}

TEST(PrimeInProgression, PostconditionAndMinimality) {
  for (nt::u64 q_pow : {2ULL, 3ULL, 4ULL, 5ULL, 7ULL, 8ULL, 9ULL, 16ULL, 25ULL, 27ULL, 32ULL, 121ULL}) {
    const std::set<nt::u64> excl{2, 3, 5, 7, 11, 13};
    const auto p = nt::find_prime_in_progression(q_pow, excl);
    EXPECT_TRUE(oracle::prime_by_trial(p));
    EXPECT_EQ((p - 1) % q_pow, 0u);
    EXPECT_FALSE(excl.contains(p));
    for (nt::u64 c = 1 + q_pow; c < p; c += q_pow)
      EXPECT_TRUE(!oracle::prime_by_trial(c) || excl.contains(c)) << "missed " << c;
  }
}

TEST(PrimeInProgression, Errors) {
  EXPECT_THROW(nt::find_prime_in_progression(6, {}), DomainError);
  EXPECT_THROW(nt::find_prime_in_progression(1, {}), DomainError);
  // 1 + 2t for t <= 1 is only 3.
  EXPECT_THROW(nt::find_prime_in_progression(2, {3}, 1), BudgetExceeded);
}

TEST(ElementOfOrder, Examples) {
  EXPECT_EQ(nt::find_element_of_order(5, 4), 2u);
  const auto r = nt::find_element_of_order(7, 3);
  EXPECT_TRUE(r == 2 || r == 4);
  EXPECT_EQ(r, 4u);  // g = 2 gives 2^2 = 4 first
  EXPECT_EQ(nt::find_element_of_order(5, 1), 1u);
}

TEST(ElementOfOrder, ExactOrderOverManyPrimes) {
  for (nt::u64 p = 3; p < 3000; ++p) {
    if (!oracle::prime_by_trial(p)) continue;
    for (const auto& [q, e] : oracle::factor_by_trial(p - 1)) {
      nt::u64 qa = 1;
      for (unsigned i = 1; i <= e; ++i) {
        qa *= q;
        const auto r = nt::find_element_of_order(p, qa);
        ASSERT_EQ(oracle::order_by_scan(r, p), qa) << "p=" << p << " q^a=" << qa;
      }
    }
  }
}

TEST(ElementOfOrder, Errors) {
  EXPECT_THROW(nt::find_element_of_order(9, 2), DomainError);
  EXPECT_THROW(nt::find_element_of_order(7, 4), DomainError);
  EXPECT_THROW(nt::find_element_of_order(13, 6), DomainError);
}

TEST(Divisors, SortedComplete) {
  EXPECT_EQ(nt::divisors(1), std::vector<nt::u64>{1});
  EXPECT_EQ(nt::divisors(12), (std::vector<nt::u64>{1, 2, 3, 4, 6, 12}));
  for (nt::u64 n = 1; n <= 500; ++n) {
    std::vector<nt::u64> expect;
    for (nt::u64 d = 1; d <= n; ++d)
      if (n % d == 0) expect.push_back(d);
    ASSERT_EQ(nt::divisors(n), expect);
  }
}

TEST(Radical, Basics) {
  EXPECT_EQ(nt::radical(1), 1u);
  EXPECT_EQ(nt::radical(48), 6u);
  EXPECT_EQ(nt::prime_power_base(27), 3u);
  EXPECT_EQ(nt::prime_power_base(12), 0u);
  EXPECT_EQ(nt::prime_power_base(1), 0u);
}
