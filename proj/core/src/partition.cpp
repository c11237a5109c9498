#include "zk/partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <string>

#include "zk/errors.hpp"
#include "zk/reach_bits.hpp"

namespace zk {

std::string_view to_string(WitnessKind k) {
  return k == WitnessKind::zumkeller ? "zumkeller" : "half_zumkeller";
}

std::optional<WitnessKind> parse_witness_kind(std::string_view s) {
  if (s == "zumkeller" || s == "z" || s == "full") return WitnessKind::zumkeller;
  if (s == "half_zumkeller" || s == "half" || s == "h") return WitnessKind::half_zumkeller;
  return std::nullopt;
}

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::trivial: return "trivial";
    case Engine::chain: return "chain";
    case Engine::greedy_probe: return "greedy_probe";
    case Engine::bitset_dp: return "bitset_dp";
    case Engine::meet_in_middle: return "meet_in_middle";
    case Engine::randomized_greedy: return "randomized_greedy";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Witness checking

bool verify_witness(const PartitionWitness& w) {
  try {
    if (w.n == 0 || w.n > kMaxN) return false;
    if (w.part_a.empty() && w.part_b.empty()) return false;
    const DivisorSet d = divisors(factorize(w.n));
    std::vector<u64> expected = d.values;
    if (w.kind == WitnessKind::half_zumkeller) expected.pop_back();

    std::vector<u64> a = w.part_a;
    std::vector<u64> b = w.part_b;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<u64> all;
    all.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all));
    // Equality with the sorted divisor list rules out duplicates, overlap,
    // non-divisors, and missing divisors in one comparison.
    if (all != expected) return false;

    u64 sum_a = 0;
    u64 sum_b = 0;
    for (u64 x : a) sum_a = checked_add(sum_a, x);
    for (u64 x : b) sum_b = checked_add(sum_b, x);
    return sum_a == sum_b;
  } catch (const std::exception&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Chain-condition fast path

std::optional<SignedChain> signed_chain(const DivisorSet& d) {
  const auto& a = d.values;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i + 1] > 2 * a[i]) return std::nullopt;
  }
  SignedChain chain;
  chain.divisors = a;
  chain.signs.assign(a.size(), 0);
  chain.sums.assign(a.size(), 0);
  std::int64_t s = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    const int sign = (i + 1 == a.size() || s < 0) ? +1 : -1;
    s += sign * static_cast<std::int64_t>(a[i]);
    chain.signs[i] = sign;
    chain.sums[i] = s;
    assert((s < 0 ? static_cast<u64>(-s) : static_cast<u64>(s)) <= a[i]);
  }
  return chain;
}

std::optional<PartitionWitness> chain_sign_partition(const DivisorSet& d) {
  if (d.sigma % 2 != 0) return std::nullopt;
  auto chain = signed_chain(d);
  if (!chain || chain->sums.front() != 0) return std::nullopt;
  PartitionWitness w{d.n, WitnessKind::zumkeller, {}, {}};
  for (std::size_t i = 0; i < chain->divisors.size(); ++i) {
    (chain->signs[i] > 0 ? w.part_a : w.part_b).push_back(chain->divisors[i]);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Bitset DP

namespace {

std::size_t isqrt_ceil(std::size_t k) {
  std::size_t b = 1;
  while (b * b < k) ++b;
  return b;
}

std::size_t dp_bytes_needed(std::size_t k, u64 target) {
  const std::size_t per = ((target + 64) / 64) * sizeof(u64);
  const std::size_t block = isqrt_ceil(std::max<std::size_t>(k, 1));
  return per * (k / block + 2 + block);
}

}  // namespace

std::optional<std::vector<u64>> bitset_dp_subset(std::span<const u64> items_in, u64 target,
                                                 std::size_t memory_budget) {
  if (target == 0) return std::vector<u64>{};
  std::vector<u64> items;
  for (u64 v : items_in) {
    if (v <= target) items.push_back(v);
  }
  const std::size_t k = items.size();
  if (dp_bytes_needed(k, target) > memory_budget) {
    throw CapacityError("bitset DP memory for target " + std::to_string(target), memory_budget);
  }
  const std::size_t block = isqrt_ceil(std::max<std::size_t>(k, 1));

  // Forward pass with a checkpoint at the start of every block; stop as soon
  // as the target becomes reachable.
  std::vector<ReachBits> checkpoints;
  ReachBits reach(target);
  std::size_t used = 0;
  for (; used < k && !reach.test(target); ++used) {
    if (used % block == 0) checkpoints.push_back(reach);
    reach.shift_or(items[used]);
  }
  if (!reach.test(target)) return std::nullopt;

  // Backward pass: rebuild the in-block states from each checkpoint and peel
  // items whose removal makes the remaining target unreachable.
  std::vector<u64> chosen;
  u64 t = target;
  for (std::size_t b = checkpoints.size(); b-- > 0 && t > 0;) {
    const std::size_t start = b * block;
    const std::size_t end = std::min(used, start + block);
    std::vector<ReachBits> states;
    states.reserve(end - start);
    states.push_back(checkpoints[b]);
    for (std::size_t i = start; i + 1 < end; ++i) {
      states.push_back(states.back());
      states.back().shift_or(items[i]);
    }
    for (std::size_t i = end; i-- > start && t > 0;) {
      if (!states[i - start].test(t)) {
        chosen.push_back(items[i]);
        t -= items[i];
      }
    }
  }
  assert(t == 0);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// ---------------------------------------------------------------------------
// Meet in the middle

namespace {

struct HalfSum {
  u64 sum;
  std::uint32_t mask;
};

std::vector<HalfSum> enumerate_sums(std::span<const u64> items, u64 cap) {
  std::vector<HalfSum> sums{{0, 0}};
  sums.reserve(std::size_t{1} << items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t n = sums.size();
    for (std::size_t j = 0; j < n; ++j) {
      if (sums[j].sum <= cap - items[i]) {
        sums.push_back({sums[j].sum + items[i], sums[j].mask | (std::uint32_t{1} << i)});
      }
    }
  }
  return sums;
}

void append_mask(std::span<const u64> items, std::uint32_t mask, std::vector<u64>& out) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (mask & (std::uint32_t{1} << i)) out.push_back(items[i]);
  }
}

}  // namespace

std::optional<std::vector<u64>> meet_in_middle_subset(std::span<const u64> items_in, u64 target) {
  std::vector<u64> items;
  for (u64 v : items_in) {
    if (v <= target) items.push_back(v);
  }
  if (items.size() > kMitmItemLimit) throw CapacityError("meet-in-the-middle item count", kMitmItemLimit);
  const std::size_t half = items.size() / 2;
  const std::span<const u64> left(items.data(), half);
  const std::span<const u64> right(items.data() + half, items.size() - half);

  auto left_sums = enumerate_sums(left, target);
  std::sort(left_sums.begin(), left_sums.end(),
            [](const HalfSum& x, const HalfSum& y) { return x.sum < y.sum; });
  const auto right_sums = enumerate_sums(right, target);
  for (const auto& r : right_sums) {
    const u64 need = target - r.sum;
    auto it = std::lower_bound(left_sums.begin(), left_sums.end(), need,
                               [](const HalfSum& x, u64 v) { return x.sum < v; });
    if (it != left_sums.end() && it->sum == need) {
      std::vector<u64> out;
      append_mask(left, it->mask, out);
      append_mask(right, r.mask, out);
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Randomized greedy with exact completion over the small tail

namespace {

constexpr u64 kTailSumBudget = u64{1} << 20;
constexpr u64 kProbeTailBudget = u64{1} << 12;

std::optional<std::vector<u64>> greedy_with_tail(std::span<const u64> items_in, u64 target,
                                                 unsigned restarts, u64 seed, u64 tail_budget) {
  std::vector<u64> items;
  for (u64 v : items_in) {
    if (v <= target) items.push_back(v);
  }
  std::sort(items.begin(), items.end(), std::greater<>());

  // Smallest items whose total stays within the budget are solved exactly.
  std::size_t head_end = items.size();
  u64 tail_sum = 0;
  while (head_end > 0 && tail_sum + items[head_end - 1] <= tail_budget) {
    tail_sum += items[--head_end];
  }
  const std::span<const u64> head(items.data(), head_end);
  const std::span<const u64> tail(items.data() + head_end, items.size() - head_end);

  // prefix[j] = reachable sums using tail[j..]; prefix[tail.size()] = {0}.
  std::vector<ReachBits> suffix_reach;
  suffix_reach.reserve(tail.size() + 1);
  suffix_reach.emplace_back(tail_sum);
  for (std::size_t j = tail.size(); j-- > 0;) {
    suffix_reach.push_back(suffix_reach.back());
    suffix_reach.back().shift_or(tail[j]);
  }
  std::reverse(suffix_reach.begin(), suffix_reach.end());

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (unsigned attempt = 0; attempt < restarts; ++attempt) {
    const double skip = attempt == 0 ? 0.0 : 0.5 * unit(rng);
    std::vector<u64> chosen;
    u64 remaining = target;
    for (u64 v : head) {
      if (v <= remaining && (skip == 0.0 || unit(rng) >= skip)) {
        chosen.push_back(v);
        remaining -= v;
      }
    }
    if (remaining > tail_sum || !suffix_reach.front().test(remaining)) continue;
    for (std::size_t j = 0; j < tail.size() && remaining > 0; ++j) {
      if (!suffix_reach[j + 1].test(remaining)) {
        chosen.push_back(tail[j]);
        remaining -= tail[j];
      }
    }
    assert(remaining == 0);
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<u64>> randomized_greedy_subset(std::span<const u64> items, u64 target,
                                                         unsigned restarts, u64 seed) {
  if (target == 0) return std::vector<u64>{};
  return greedy_with_tail(items, target, restarts, seed, kTailSumBudget);
}

// ---------------------------------------------------------------------------
// Cascade

SubsetSearch solve_subset_sum(std::span<const u64> values, u64 target, std::span<const u64> excluded,
                              const EngineOptions& opts) {
  std::vector<u64> avail;
  avail.reserve(values.size());
  u128 total = 0;
  for (u64 v : values) {
    if (std::find(excluded.begin(), excluded.end(), v) != excluded.end()) continue;
    avail.push_back(v);
    total += v;
  }
  if (target == 0) return {std::vector<u64>{}, Engine::trivial};
  if (target > total) return {std::nullopt, Engine::trivial};
  if (target == total) return {avail, Engine::trivial};

  // Search for the smaller of target and its complement.
  const bool flip = static_cast<u128>(target) * 2 > total;
  const u64 t = flip ? static_cast<u64>(total - target) : target;
  auto finish = [&](std::vector<u64> subset, Engine e) -> SubsetSearch {
    if (!flip) return {std::move(subset), e};
    std::vector<u64> complement;
    std::set_difference(avail.begin(), avail.end(), subset.begin(), subset.end(),
                        std::back_inserter(complement));
    return {std::move(complement), e};
  };

  std::vector<u64> items;
  for (u64 v : avail) {
    if (v <= t) items.push_back(v);
  }
  if (auto s = greedy_with_tail(items, t, 1, opts.seed, kProbeTailBudget)) {
    return finish(std::move(*s), Engine::greedy_probe);
  }
  if (t <= opts.dp_target_limit && dp_bytes_needed(items.size(), t) <= opts.dp_memory_budget) {
    auto s = bitset_dp_subset(items, t, opts.dp_memory_budget);
    if (!s) return {std::nullopt, Engine::bitset_dp};
    return finish(std::move(*s), Engine::bitset_dp);
  }
  if (items.size() <= opts.mitm_max_items) {
    auto s = meet_in_middle_subset(items, t);
    if (!s) return {std::nullopt, Engine::meet_in_middle};
    return finish(std::move(*s), Engine::meet_in_middle);
  }
  if (auto s = randomized_greedy_subset(items, t, opts.restarts, opts.seed)) {
    return finish(std::move(*s), Engine::randomized_greedy);
  }
  throw CapacityError("subset sum undecided: target " + std::to_string(t) + " over " +
                          std::to_string(items.size()) + " items is outside the DP and "
                          "meet-in-the-middle regimes and " + std::to_string(opts.restarts) +
                          " randomized restarts failed",
                      opts.dp_target_limit);
}

std::optional<std::vector<u64>> subset_with_sum(std::span<const u64> values, u64 target,
                                                std::span<const u64> excluded,
                                                const EngineOptions& opts) {
  return solve_subset_sum(values, target, excluded, opts).subset;
}

// ---------------------------------------------------------------------------
// Witness construction

namespace {

PartitionWitness witness_from_part(const DivisorSet& d, WitnessKind kind, std::vector<u64> part_a) {
  std::sort(part_a.begin(), part_a.end());
  std::span<const u64> universe = kind == WitnessKind::zumkeller
                                      ? std::span<const u64>(d.values)
                                      : d.proper();
  PartitionWitness w{d.n, kind, std::move(part_a), {}};
  std::set_difference(universe.begin(), universe.end(), w.part_a.begin(), w.part_a.end(),
                      std::back_inserter(w.part_b));
  return w;
}

}  // namespace

PartitionWitness zumkeller_witness_from_subset(const DivisorSet& d, std::span<const u64> subset) {
  std::vector<u64> part(subset.begin(), subset.end());
  part.push_back(d.n);
  return witness_from_part(d, WitnessKind::zumkeller, std::move(part));
}

PartitionWitness half_witness_from_subset(const DivisorSet& d, std::span<const u64> subset) {
  std::vector<u64> part(subset.begin(), subset.end());
  if (d.n % 2 == 0) part.push_back(d.n / 2);
  return witness_from_part(d, WitnessKind::half_zumkeller, std::move(part));
}

WitnessSearch search_zumkeller(const DivisorSet& d, const EngineOptions& opts) {
  const u64 n = d.n;
  if (d.sigma % 2 != 0 || abundance_class(n, d.sigma) == Abundance::deficient) {
    return {std::nullopt, Engine::trivial};
  }
  if (auto w = chain_sign_partition(d)) return {std::move(w), Engine::chain};
  const u64 target = (d.sigma - 2 * n) / 2;
  const u64 self[] = {n};
  auto found = solve_subset_sum(d.values, target, self, opts);
  if (!found.subset) return {std::nullopt, found.decided_by};
  return {zumkeller_witness_from_subset(d, *found.subset), found.decided_by};
}

WitnessSearch search_half_zumkeller(const DivisorSet& d, const EngineOptions& opts) {
  const u64 n = d.n;
  if (n == 1) return {std::nullopt, Engine::trivial};
  if (n % 2 == 0) {
    if (d.sigma % 2 != 0 || abundance_class(n, d.sigma) == Abundance::deficient) {
      return {std::nullopt, Engine::trivial};
    }
    if (auto z = chain_sign_partition(d)) {
      // n carries +, n/2 carries -; swapping n for n/2 keeps the halves equal.
      std::vector<u64> part = z->part_a;
      part.pop_back();  // n is the largest element
      part.push_back(n / 2);
      return {witness_from_part(d, WitnessKind::half_zumkeller, std::move(part)), Engine::chain};
    }
    const u64 target = (d.sigma - 2 * n) / 2;
    const u64 skip[] = {n / 2, n};
    auto found = solve_subset_sum(d.values, target, skip, opts);
    if (!found.subset) return {std::nullopt, found.decided_by};
    return {half_witness_from_subset(d, *found.subset), found.decided_by};
  }
  // Odd n needs sigma(n) - n even, which forces a perfect square.
  if (!is_perfect_square(n)) return {std::nullopt, Engine::trivial};
  const u64 target = (d.sigma - n) / 2;
  const u64 self[] = {n};
  auto found = solve_subset_sum(d.values, target, self, opts);
  if (!found.subset) return {std::nullopt, found.decided_by};
  return {half_witness_from_subset(d, *found.subset), found.decided_by};
}

std::optional<PartitionWitness> find_zumkeller_witness(const DivisorSet& d, const EngineOptions& opts) {
  return search_zumkeller(d, opts).witness;
}

std::optional<PartitionWitness> find_half_zumkeller_witness(const DivisorSet& d,
                                                            const EngineOptions& opts) {
  return search_half_zumkeller(d, opts).witness;
}

}  // namespace zk
