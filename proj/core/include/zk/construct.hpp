#pragma once

#include <cstddef>

#include "zk/arith.hpp"
#include "zk/partition.hpp"

namespace zk {

// Witness-lifting constructions. Each one rebuilds a certificate for a larger
// number from an existing certificate, group by group, with no search.
// Inputs must verify; a witness that does not verify is a DomainError.

// n -> n * p^l with gcd(n, p) = 1. Half-Zumkeller witnesses need even n.
PartitionWitness lift_coprime_prime_power(const PartitionWitness& w, u64 p, unsigned l);

// n -> n * p_i^(l (k_i + 1)) where p_i^k_i is the prime at `index` (0-based,
// ascending primes) in the factorization of n.
PartitionWitness lift_same_prime(const PartitionWitness& w, std::size_t index, unsigned l);

// Zumkeller witness for n -> half-Zumkeller witness for 2n.
PartitionWitness double_to_half(const PartitionWitness& w);

// Zumkeller witness for m! via the signed chain over its divisors, 3 <= m <= 20.
PartitionWitness factorial_witness(unsigned m, std::size_t divisor_cap = kDefaultDivisorCap);

u64 factorial(unsigned m);

// Zumkeller partition of every divisor of even n with n and n/2 on opposite
// sides, and back. These two views of a half-Zumkeller certificate are
// interchangeable.
PartitionWitness separated_from_half(const PartitionWitness& half);
PartitionWitness half_from_separated(const PartitionWitness& separated);

}  // namespace zk
