#include "zk/oracle.hpp"

#include <algorithm>
#include <bit>

#include "zk/errors.hpp"

namespace zk::oracle {

namespace {

constexpr std::size_t kLiteralLimit = 20;

std::vector<u64> divisors_by_trial(u64 n) {
  std::vector<u64> small;
  std::vector<u64> large;
  for (u64 i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i != n / i) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool contains(const std::vector<u64>& sorted, u64 x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

u64 total(std::span<const u64> v) {
  u64 t = 0;
  for (u64 x : v) t = checked_add(t, x);
  return t;
}

}  // namespace

std::vector<u64> all_subset_sums(std::span<const u64> values) {
  std::vector<u64> sums;
  if (values.size() <= kLiteralLimit) {
    const std::size_t count = std::size_t{1} << values.size();
    sums.assign(count, 0);
    for (std::size_t mask = 1; mask < count; ++mask) {
      sums[mask] = sums[mask & (mask - 1)] + values[static_cast<std::size_t>(std::countr_zero(mask))];
    }
  } else {
    sums = {0};
    for (u64 v : values) {
      std::vector<u64> shifted(sums.size());
      std::transform(sums.begin(), sums.end(), shifted.begin(), [v](u64 s) { return s + v; });
      std::vector<u64> merged;
      merged.reserve(sums.size() * 2);
      std::merge(sums.begin(), sums.end(), shifted.begin(), shifted.end(), std::back_inserter(merged));
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      sums.swap(merged);
    }
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

bool zumkeller(u64 n) {
  const auto d = divisors_by_trial(n);
  const u64 s = total(d);
  return s % 2 == 0 && contains(all_subset_sums(d), s / 2);
}

bool half_zumkeller(u64 n) {
  auto d = divisors_by_trial(n);
  d.pop_back();
  if (d.empty()) return false;
  const u64 s = total(d);
  return s % 2 == 0 && contains(all_subset_sums(d), s / 2);
}

bool has_separating_partition(u64 n) {
  if (n % 2 != 0) throw DomainError("separating partition needs even n");
  const auto d = divisors_by_trial(n);
  const u64 s = total(d);
  if (s % 2 != 0 || s / 2 < n) return false;
  std::vector<u64> rest;
  for (u64 x : d) {
    if (x != n && x != n / 2) rest.push_back(x);
  }
  return contains(all_subset_sums(rest), s / 2 - n);
}

bool represents_all_up_to(std::span<const u64> values, u64 limit) {
  // Plain 0/1 knapsack table truncated at `limit`.
  std::vector<char> reach(limit + 1, 0);
  reach[0] = 1;
  for (u64 v : values) {
    if (v > limit) continue;
    for (u64 s = limit; s >= v; --s) {
      if (reach[s - v]) reach[s] = 1;
    }
  }
  return std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
}

bool digits_cover_all(u64 p, std::span<const u64> caps) {
  // Enumerate every digit vector C <= A and mark the value it produces.
  std::vector<u64> powers(caps.size(), 1);
  for (std::size_t i = 1; i < caps.size(); ++i) powers[i] = checked_mul(powers[i - 1], p);
  u64 max_value = 0;
  for (std::size_t i = 0; i < caps.size(); ++i) max_value = checked_add(max_value, caps[i] * powers[i]);
  std::vector<bool> hit(max_value + 1, false);
  std::vector<u64> digit(caps.size(), 0);
  for (;;) {
    u64 v = 0;
    for (std::size_t i = 0; i < caps.size(); ++i) v += digit[i] * powers[i];
    hit[v] = true;
    std::size_t i = 0;
    while (i < caps.size() && digit[i] == caps[i]) digit[i++] = 0;
    if (i == caps.size()) break;
    ++digit[i];
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace zk::oracle
