#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "zk/errors.hpp"
#include "zk/oracle.hpp"
#include "zk/partition.hpp"

namespace zk {
namespace {

u64 sum(std::span<const u64> v) { return std::accumulate(v.begin(), v.end(), u64{0}); }

DivisorSet divs(u64 n) { return divisors(factorize(n)); }

TEST(VerifyWitness, AcceptsAndRejects) {
  EXPECT_TRUE(verify_witness({6, WitnessKind::zumkeller, {6}, {1, 2, 3}}));
  EXPECT_TRUE(verify_witness({225, WitnessKind::half_zumkeller, {75, 9, 5}, {45, 25, 15, 3, 1}}));
  // 8 does not divide 225.
  EXPECT_FALSE(verify_witness({225, WitnessKind::half_zumkeller, {75, 9, 5, 15, 8}, {45, 25, 3, 1}}));
  // Unequal sums.
  EXPECT_FALSE(verify_witness({6, WitnessKind::zumkeller, {6, 1}, {2, 3}}));
  // Missing divisor.
  EXPECT_FALSE(verify_witness({6, WitnessKind::zumkeller, {6}, {2, 3}}));
  // Duplicate divisor.
  EXPECT_FALSE(verify_witness({6, WitnessKind::zumkeller, {6}, {1, 2, 3, 3}}));
  // n itself is not allowed in a half partition.
  EXPECT_FALSE(verify_witness({6, WitnessKind::half_zumkeller, {6}, {1, 2, 3}}));
  EXPECT_FALSE(verify_witness({0, WitnessKind::zumkeller, {}, {}}));
  EXPECT_FALSE(verify_witness({1, WitnessKind::half_zumkeller, {}, {}}));
  EXPECT_FALSE(verify_witness({~u64{0}, WitnessKind::zumkeller, {1}, {1}}));
}

TEST(WitnessKind, Parsing) {
  EXPECT_EQ(parse_witness_kind("half"), WitnessKind::half_zumkeller);
  EXPECT_EQ(parse_witness_kind("half_zumkeller"), WitnessKind::half_zumkeller);
  EXPECT_EQ(parse_witness_kind("zumkeller"), WitnessKind::zumkeller);
  EXPECT_FALSE(parse_witness_kind("odd").has_value());
  EXPECT_EQ(to_string(WitnessKind::half_zumkeller), "half_zumkeller");
}

TEST(SignedChain, TraceForSix) {
  const auto c = signed_chain(divs(6));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->divisors, (std::vector<u64>{1, 2, 3, 6}));
  EXPECT_EQ(c->signs, (std::vector<int>{-1, -1, -1, 1}));
  EXPECT_EQ(c->sums, (std::vector<std::int64_t>{0, 1, 3, 6}));
  const auto w = chain_sign_partition(divs(6));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->part_a, (std::vector<u64>{6}));
  EXPECT_EQ(w->part_b, (std::vector<u64>{1, 2, 3}));
}

TEST(SignedChain, GapBreaksChain) {
  EXPECT_FALSE(signed_chain(divs(70)).has_value());
  EXPECT_FALSE(chain_sign_partition(divs(70)).has_value());
  // Chain holds but sigma(4) = 7 is odd.
  EXPECT_TRUE(signed_chain(divs(4)).has_value());
  EXPECT_FALSE(chain_sign_partition(divs(4)).has_value());
}

TEST(SignedChain, TwentyFour) {
  const auto w = chain_sign_partition(divs(24));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(sum(w->part_a), 30U);
  EXPECT_EQ(sum(w->part_b), 30U);
  EXPECT_TRUE(verify_witness(*w));
}

TEST(SignedChain, RunningSumStaysBelowCurrentDivisor) {
  for (u64 n = 1; n <= 5000; ++n) {
    const auto d = divs(n);
    const auto c = signed_chain(d);
    if (!c) continue;
    for (std::size_t i = 0; i < c->divisors.size(); ++i) {
      ASSERT_LE(std::llabs(c->sums[i]), static_cast<long long>(c->divisors[i])) << n;
    }
    if (d.sigma % 2 == 0) {
      ASSERT_EQ(c->sums[0], 0) << n;
      ASSERT_TRUE(verify_witness(*chain_sign_partition(d))) << n;
    }
  }
}

TEST(SubsetSum, KnownTargets) {
  const auto d945 = divs(945);
  const auto s = subset_with_sum(d945.proper(), 15);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(sum(*s), 15U);
  const auto d70 = divs(70);
  const auto t = subset_with_sum(d70.proper(), 2);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, (std::vector<u64>{2}));
  const std::vector<u64> small{1, 2, 4};
  EXPECT_FALSE(subset_with_sum(small, 8).has_value());
  EXPECT_EQ(subset_with_sum(small, 0), std::vector<u64>{});
  const std::vector<u64> excl{2};
  EXPECT_FALSE(subset_with_sum(small, 2, excl).has_value());
  EXPECT_EQ(subset_with_sum(small, 5, excl), (std::vector<u64>{1, 4}));
}

TEST(SubsetSum, EnginesAgreeWithSetOracle) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    std::vector<u64> items;
    const auto count = 1 + rng() % 18;
    while (items.size() < count) {
      const u64 v = 1 + rng() % 200;
      if (std::find(items.begin(), items.end(), v) == items.end()) items.push_back(v);
    }
    std::sort(items.begin(), items.end());
    const auto sums = oracle::all_subset_sums(items);
    const u64 total = sum(items);
    for (u64 target = 0; target <= total; target += 1 + rng() % 7) {
      const bool exists = std::binary_search(sums.begin(), sums.end(), target);
      const auto dp = bitset_dp_subset(items, target);
      const auto mitm = meet_in_middle_subset(items, target);
      const auto cascade = solve_subset_sum(items, target);
      ASSERT_EQ(dp.has_value(), exists);
      ASSERT_EQ(mitm.has_value(), exists);
      ASSERT_EQ(cascade.subset.has_value(), exists);
      for (const auto* s : {&dp, &mitm, &cascade.subset}) {
        if (*s) ASSERT_EQ(sum(**s), target);
      }
      const auto greedy = randomized_greedy_subset(items, target, 16, 0xC0FFEE);
      if (greedy) ASSERT_EQ(sum(*greedy), target);
    }
  }
}

TEST(SubsetSum, RandomizedEngineIsSeeded) {
  const auto d = divs(720720);
  const std::vector<u64> items(d.values.begin(), d.values.end() - 1);
  const u64 target = (d.sigma - 2 * d.n) / 2;
  const auto a = randomized_greedy_subset(items, target, 64, 0xC0FFEE);
  const auto b = randomized_greedy_subset(items, target, 64, 0xC0FFEE);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a, b);
  EXPECT_EQ(sum(*a), target);
}

TEST(SubsetSum, OutOfRegimeIsCapacityError) {
  // Powers of 3 have no subset summing to a non-ternary-digit value; with DP
  // and MITM disabled only the incomplete engine runs.
  std::vector<u64> items;
  for (u64 p = 1; items.size() < 30; p *= 3) items.push_back(p);
  EngineOptions opts;
  opts.dp_target_limit = 0;
  opts.mitm_max_items = 0;
  opts.restarts = 4;
  EXPECT_THROW(solve_subset_sum(items, 2, {}, opts), CapacityError);
  EXPECT_FALSE(solve_subset_sum(items, 2).subset.has_value());
}

TEST(SubsetSum, MeetInMiddleItemLimit) {
  const std::vector<u64> many(kMitmItemLimit + 1, 1);
  EXPECT_THROW(meet_in_middle_subset(many, kMitmItemLimit), CapacityError);
  const std::vector<u64> edge(kMitmItemLimit, 1);
  EXPECT_EQ(sum(*meet_in_middle_subset(edge, kMitmItemLimit)), kMitmItemLimit);
}

TEST(ZumkellerSearch, Examples) {
  const auto w6 = find_zumkeller_witness(divs(6));
  ASSERT_TRUE(w6.has_value());
  EXPECT_EQ(w6->part_a, (std::vector<u64>{6}));
  EXPECT_TRUE(verify_witness(*w6));

  const auto w945 = find_zumkeller_witness(divs(945));
  ASSERT_TRUE(w945.has_value());
  EXPECT_TRUE(verify_witness(*w945));
  const auto& with_n = std::find(w945->part_a.begin(), w945->part_a.end(), 945) != w945->part_a.end()
                           ? w945->part_a
                           : w945->part_b;
  // sigma(945) = 1920, so the divisors joining 945 sum to 15.
  EXPECT_EQ(sum(with_n) - 945, 15U);

  EXPECT_FALSE(find_zumkeller_witness(divs(9)).has_value());
  EXPECT_FALSE(find_zumkeller_witness(divs(10)).has_value());
  EXPECT_FALSE(find_zumkeller_witness(divs(1)).has_value());
}

TEST(HalfSearch, Examples) {
  for (u64 n : {70, 350, 490}) {
    const auto w = find_half_zumkeller_witness(divs(n));
    ASSERT_TRUE(w.has_value()) << n;
    EXPECT_TRUE(verify_witness(*w)) << n;
    EXPECT_EQ(w->kind, WitnessKind::half_zumkeller);
  }
  const auto d350 = divs(350);
  EXPECT_EQ((d350.sigma - 2 * 350) / 2, 22U);
  const std::vector<u64> excl350{175, 350};
  const auto s350 = subset_with_sum(d350.values, 22, excl350);
  ASSERT_TRUE(s350.has_value());
  EXPECT_EQ(sum(*s350), 22U);
  const auto d490 = divs(490);
  EXPECT_EQ((d490.sigma - 2 * 490) / 2, 23U);

  const auto w225 = find_half_zumkeller_witness(divs(225));
  ASSERT_TRUE(w225.has_value());
  EXPECT_TRUE(verify_witness(*w225));
  EXPECT_FALSE(find_half_zumkeller_witness(divs(1575)).has_value());
  EXPECT_FALSE(find_half_zumkeller_witness(divs(945)).has_value());
  EXPECT_FALSE(find_half_zumkeller_witness(divs(1)).has_value());
}

TEST(Search, AgreesWithBruteForceAndWitnessesVerify) {
  for (u64 n = 1; n <= 2000; ++n) {
    const auto d = divs(n);
    const auto z = search_zumkeller(d);
    const auto h = search_half_zumkeller(d);
    ASSERT_EQ(z.witness.has_value(), oracle::zumkeller(n)) << n;
    ASSERT_EQ(h.witness.has_value(), n > 1 && oracle::half_zumkeller(n)) << n;
    if (z.witness) ASSERT_TRUE(verify_witness(*z.witness)) << n;
    if (h.witness) ASSERT_TRUE(verify_witness(*h.witness)) << n;
    if (n % 2 == 0) {
      if (h.witness) ASSERT_TRUE(z.witness.has_value()) << n;
      ASSERT_EQ(h.witness.has_value(), oracle::has_separating_partition(n)) << n;
    }
  }
}

TEST(Search, Engines) {
  EXPECT_EQ(search_zumkeller(divs(24)).decided_by, Engine::chain);
  EXPECT_EQ(search_zumkeller(divs(9)).decided_by, Engine::trivial);
  EXPECT_EQ(to_string(Engine::meet_in_middle), "meet_in_middle");
}

}  // namespace
}  // namespace zk
