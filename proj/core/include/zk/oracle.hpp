#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zk/arith.hpp"

namespace zk::oracle {

// Reference deciders built straight from the definitions. They share no code
// with the engine cascade and are meant for cross-checking it, not for speed.

// Every subset sum of `values`: literal 2^k mask enumeration for k <= 22,
// a set-based sweep above that.
std::vector<u64> all_subset_sums(std::span<const u64> values);

bool zumkeller(u64 n);
bool half_zumkeller(u64 n);

// Even n: some Zumkeller partition puts n and n/2 on opposite sides.
bool has_separating_partition(u64 n);

// Every 1 <= m <= limit is a sum of distinct elements of `values`.
bool represents_all_up_to(std::span<const u64> values, u64 limit);

// Every 0 <= M <= sum A_i p^i is some sum C_i p^i with C_i <= A_i.
bool digits_cover_all(u64 p, std::span<const u64> caps);

}  // namespace zk::oracle
