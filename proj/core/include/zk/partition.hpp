#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zk/arith.hpp"

namespace zk {

enum class WitnessKind { zumkeller, half_zumkeller };

std::string_view to_string(WitnessKind k);
std::optional<WitnessKind> parse_witness_kind(std::string_view s);

/// Two disjoint divisor sets with equal sums. For `zumkeller` they cover every
/// divisor of n; for `half_zumkeller` every divisor except n itself.
/// Parts are kept sorted ascending.
struct PartitionWitness {
  u64 n = 0;
  WitnessKind kind = WitnessKind::zumkeller;
  std::vector<u64> part_a;
  std::vector<u64> part_b;

  friend bool operator==(const PartitionWitness&, const PartitionWitness&) = default;
};

// Recomputes divisors and sums from scratch. Never throws.
bool verify_witness(const PartitionWitness& w);

/// Signs assigned top-down to an increasing divisor chain by the rule
/// "next sign is opposite to the sign of the running sum".
struct SignedChain {
  std::vector<u64> divisors;       // a_1 < ... < a_k
  std::vector<int> signs;          // +1 / -1, aligned with `divisors`
  std::vector<std::int64_t> sums;  // sums[i] = signed sum of divisors[i..k-1]
};

// Present iff a_{i+1} <= 2 a_i for every consecutive pair.
std::optional<SignedChain> signed_chain(const DivisorSet& d);

// Present iff the chain condition holds and sigma(n) is even; part_a holds the
// positively signed divisors (including n).
std::optional<PartitionWitness> chain_sign_partition(const DivisorSet& d);

inline constexpr std::size_t kMitmItemLimit = 44;

/// Knobs for the subset-sum cascade.
struct EngineOptions {
  u64 dp_target_limit = u64{1} << 26;      // bitset DP regime
  std::size_t mitm_max_items = kMitmItemLimit;  // meet-in-the-middle regime
  std::size_t dp_memory_budget = std::size_t{768} << 20;  // bytes for DP checkpoints
  unsigned restarts = 64;                   // randomized greedy restarts
  u64 seed = 0xC0FFEE;
  std::size_t divisor_cap = kDefaultDivisorCap;
};

enum class Engine { trivial, chain, greedy_probe, bitset_dp, meet_in_middle, randomized_greedy };

std::string_view to_string(Engine e);

struct SubsetSearch {
  std::optional<std::vector<u64>> subset;  // ascending; absent means "no subset exists"
  Engine decided_by = Engine::trivial;
};

// Finds a subset of (values \ excluded) summing to `target`. `values` must be
// ascending and distinct. Returns absent only when a complete engine proves no
// subset exists; throws CapacityError when only the incomplete engine could
// run and it found nothing.
SubsetSearch solve_subset_sum(std::span<const u64> values, u64 target,
                              std::span<const u64> excluded = {}, const EngineOptions& opts = {});

std::optional<std::vector<u64>> subset_with_sum(std::span<const u64> values, u64 target,
                                                std::span<const u64> excluded = {},
                                                const EngineOptions& opts = {});

// Individual engines, exposed for tests and benchmarks. Inputs are the
// candidate items only (no exclusions), any order.
std::optional<std::vector<u64>> bitset_dp_subset(std::span<const u64> items, u64 target,
                                                 std::size_t memory_budget = std::size_t{768} << 20);
// At most kMitmItemLimit items of value <= target; more raise CapacityError.
std::optional<std::vector<u64>> meet_in_middle_subset(std::span<const u64> items, u64 target);
// Incomplete: absent means "not found", not "does not exist".
std::optional<std::vector<u64>> randomized_greedy_subset(std::span<const u64> items, u64 target,
                                                         unsigned restarts, u64 seed);

// Builds a witness from a subset solution. Both are certificates; callers
// still run verify_witness in tests.
PartitionWitness zumkeller_witness_from_subset(const DivisorSet& d, std::span<const u64> subset);
PartitionWitness half_witness_from_subset(const DivisorSet& d, std::span<const u64> subset);

std::optional<PartitionWitness> find_zumkeller_witness(const DivisorSet& d,
                                                       const EngineOptions& opts = {});
std::optional<PartitionWitness> find_half_zumkeller_witness(const DivisorSet& d,
                                                            const EngineOptions& opts = {});

// Same searches, also reporting which engine settled the question.
struct WitnessSearch {
  std::optional<PartitionWitness> witness;
  Engine decided_by = Engine::trivial;
};
WitnessSearch search_zumkeller(const DivisorSet& d, const EngineOptions& opts = {});
WitnessSearch search_half_zumkeller(const DivisorSet& d, const EngineOptions& opts = {});

}  // namespace zk
