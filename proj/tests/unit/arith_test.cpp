#include <gtest/gtest.h>

#include <numeric>

#include "zk/arith.hpp"
#include "zk/errors.hpp"

namespace zk {
namespace {

std::vector<u64> direct_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 i = 1; i <= n; ++i) {
    if (n % i == 0) out.push_back(i);
  }
  return out;
}

TEST(Factorize, KnownValues) {
  EXPECT_EQ(factorize(945).factors().size(), 3U);
  const std::vector<PrimePower> f945{{3, 3}, {5, 1}, {7, 1}};
  EXPECT_TRUE(std::equal(f945.begin(), f945.end(), factorize(945).factors().begin()));
  EXPECT_TRUE(factorize(1).factors().empty());
  const std::vector<PrimePower> f2450{{2, 1}, {5, 2}, {7, 2}};
  const auto g = factorize(2450);
  EXPECT_TRUE(std::equal(f2450.begin(), f2450.end(), g.factors().begin(), g.factors().end()));
}

TEST(Factorize, ZeroIsDomainError) { EXPECT_THROW(factorize(0), DomainError); }

TEST(Factorize, LargeValues) {
  const auto f = factorize(7'233'498'900ULL);
  const std::vector<PrimePower> expected{{2, 2}, {3, 2}, {5, 2}, {2833, 1}, {2837, 1}};
  EXPECT_TRUE(std::equal(expected.begin(), expected.end(), f.factors().begin(), f.factors().end()));
  const u64 big_prime = 9'223'372'036'854'775'783ULL;  // largest prime below 2^63
  EXPECT_TRUE(is_prime(big_prime));
  EXPECT_EQ(factorize(big_prime).size(), 1U);
  const auto semi = factorize(1'000'003ULL * 1'000'033ULL);
  ASSERT_EQ(semi.size(), 2U);
  EXPECT_EQ(semi.factors()[0].prime, 1'000'003ULL);
}

TEST(Factorize, RemultiplyReproducesN) {
  for (u64 n = 1; n <= 100'000; ++n) {
    const auto f = factorize(n);
    u64 m = 1;
    u64 prev = 1;
    for (const auto& pp : f.factors()) {
      ASSERT_GT(pp.prime, prev);
      ASSERT_TRUE(is_prime(pp.prime));
      ASSERT_GE(pp.exponent, 1U);
      prev = pp.prime;
      m *= checked_pow(pp.prime, pp.exponent);
    }
    ASSERT_EQ(m, n);
  }
}

TEST(Factorization, ConstructorValidates) {
  EXPECT_NO_THROW(Factorization(12, {{2, 2}, {3, 1}}));
  EXPECT_THROW(Factorization(12, {{3, 1}, {2, 2}}), DomainError);
  EXPECT_THROW(Factorization(12, {{2, 1}, {3, 1}}), DomainError);
  EXPECT_THROW(Factorization(16, {{4, 2}}), DomainError);
  EXPECT_THROW(Factorization(8, {{2, 0}, {2, 3}}), DomainError);
}

TEST(Factorization, TimesPrimePower) {
  const auto f = factorize(70).times_prime_power(3, 2);
  EXPECT_EQ(f.n(), 630U);
  EXPECT_EQ(f, factorize(630));
  EXPECT_EQ(factorize(6).times_prime_power(3, 2), factorize(54));
  EXPECT_EQ(factorize(6).exponent_of(3), 1U);
  EXPECT_EQ(factorize(6).exponent_of(5), 0U);
  EXPECT_THROW((void)factorize(u64{1} << 62).times_prime_power(2, 2), RangeError);
}

TEST(Sigma, KnownValues) {
  EXPECT_EQ(sigma(factorize(70)), 144U);
  EXPECT_EQ(sigma(factorize(945)), 1920U);
  EXPECT_EQ(sigma(factorize(1)), 1U);
  EXPECT_EQ(prime_power_sigma(3, 3), 40U);
}

TEST(Sigma, OverflowIsRangeError) {
  // 15 * 2^59 fits, sigma = 24 * (2^60 - 1) does not.
  EXPECT_THROW(sigma(factorize(15 * (u64{1} << 59))), RangeError);
  EXPECT_THROW(checked_mul(u64{1} << 40, u64{1} << 30), RangeError);
  EXPECT_THROW(checked_add(~u64{0}, 1), RangeError);
  EXPECT_THROW(checked_pow(10, 20), RangeError);
  EXPECT_EQ(checked_pow(10, 19), 10'000'000'000'000'000'000ULL);
}

TEST(Divisors, KnownValues) {
  const auto d6 = divisors(factorize(6));
  EXPECT_EQ(d6.values, (std::vector<u64>{1, 2, 3, 6}));
  EXPECT_EQ(d6.sigma, 12U);
  const auto d70 = divisors(factorize(70));
  EXPECT_EQ(d70.values, (std::vector<u64>{1, 2, 5, 7, 10, 14, 35, 70}));
  EXPECT_EQ(d70.sigma, 144U);
  const auto d1 = divisors(factorize(1));
  EXPECT_EQ(d1.values, (std::vector<u64>{1}));
  EXPECT_EQ(d1.sigma, 1U);
  EXPECT_TRUE(d70.contains(35));
  EXPECT_FALSE(d70.contains(3));
  EXPECT_EQ(d70.proper().size(), 7U);
}

TEST(Divisors, CapIsCapacityError) {
  try {
    (void)divisors(factorize(720720), 100);
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.cap(), 100U);
  }
}

TEST(Divisors, MatchDirectEnumeration) {
  for (u64 n = 1; n <= 3000; ++n) {
    ASSERT_EQ(divisors(factorize(n)).values, direct_divisors(n)) << n;
  }
}

TEST(Divisors, SumAndCountMatchProductFormulas) {
  for (u64 n = 1; n <= 100'000; ++n) {
    const auto f = factorize(n);
    const auto d = divisors(f);
    ASSERT_EQ(std::accumulate(d.values.begin(), d.values.end(), u64{0}), sigma(f)) << n;
    ASSERT_EQ(d.sigma, sigma(f));
    ASSERT_EQ(d.size(), f.divisor_count());
  }
}

TEST(Sigma, ParityFollowsOddDivisorCount) {
  for (u64 n = 1; n <= 100'000; ++n) {
    const auto d = divisors(factorize(n));
    const auto odd = std::count_if(d.values.begin(), d.values.end(), [](u64 x) { return x % 2 == 1; });
    ASSERT_EQ(odd % 2 == 1, d.sigma % 2 == 1) << n;
  }
}

TEST(Abundance, Classes) {
  EXPECT_EQ(abundance_class(factorize(6)), Abundance::perfect);
  EXPECT_EQ(abundance_class(factorize(70)), Abundance::abundant);
  EXPECT_EQ(abundance_class(factorize(10)), Abundance::deficient);
  EXPECT_EQ(to_string(Abundance::perfect), "perfect");
}

TEST(Primes, SmallValues) {
  const std::vector<u64> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (u64 n = 0; n <= 31; ++n) {
    EXPECT_EQ(is_prime(n), std::find(primes.begin(), primes.end(), n) != primes.end()) << n;
  }
  EXPECT_FALSE(is_prime(3'215'031'751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  const PrimeSieve sieve(100);
  EXPECT_EQ(sieve.primes().size(), 25U);
}

TEST(Arith, Helpers) {
  EXPECT_EQ(gcd(12, 18), 6U);
  EXPECT_EQ(gcd(0, 7), 7U);
  EXPECT_TRUE(is_perfect_square(225));
  EXPECT_FALSE(is_perfect_square(945));
  EXPECT_TRUE(is_perfect_square(0));
  EXPECT_TRUE(is_perfect_square(3'037'000'499ULL * 3'037'000'499ULL));
}

}  // namespace
}  // namespace zk
