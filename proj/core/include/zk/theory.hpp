#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zk/arith.hpp"
#include "zk/classify.hpp"

namespace zk {

/// Per-digit caps A_0..A_l for base-p representations sum C_i p^i with C_i <= A_i.
struct DigitBounds {
  u64 p = 2;
  std::vector<u64> caps;

  [[nodiscard]] std::size_t top() const noexcept { return caps.empty() ? 0 : caps.size() - 1; }
  // sum A_i p^i, checked.
  [[nodiscard]] u64 max_value() const;
};

// A_0 + ... + A_i p^i + 1 >= p^(i+1) for every 0 <= i < l.
bool digit_conditions_hold(const DigitBounds& b);

// Greedy from the top digit down: C_l = min(A_l, M / p^l), and so on.
// Absent when the greedy leaves a remainder. DomainError if M > max_value().
std::optional<std::vector<u64>> digit_decompose(u64 m, const DigitBounds& b);

/// The four characterizations of "n p is Zumkeller" for gcd(n, p) = 1, each
/// evaluated by its own exhaustive search over the divisors of n.
struct MultiplyReport {
  bool product_zumkeller = false;  // (i)   n p is Zumkeller
  bool signed_sum = false;         // (ii)  p(S(D2) - S(D1)) = -(S(D3) - S(D4))
  bool half_difference = false;    // (iii) (p+1)(S(D2) - S(D1))/2 = S(X) - S(Y), X in D2, Y in D1
  bool four_part = false;          // (iv)  (p+1)S(A1) + (p-1)S(A2) = (p+1)S(A3) + (p-1)S(A4)

  [[nodiscard]] bool agree() const noexcept {
    return product_zumkeller == signed_sum && signed_sum == half_difference &&
           half_difference == four_part;
  }
};

inline constexpr std::size_t kMultiplyDivisorCap = 16;

MultiplyReport multiplyz_equivalence(u64 n, u64 p, std::size_t divisor_cap = kMultiplyDivisorCap);

// Checks one explicit certificate for condition (iii): d1/d2 partition the
// divisors of n and x in d2, y in d1 satisfy (p+1)(S(d2) - S(d1)) = 2(S(x) - S(y)).
bool check_half_difference_witness(u64 n, u64 p, std::span<const u64> d1, std::span<const u64> d2,
                                   std::span<const u64> x, std::span<const u64> y);

/// Predicted status of n p^l for practical n and gcd(n, p) = 1.
struct PracticalLiftPrediction {
  bool zumkeller = false;
  bool half_zumkeller = false;
};

PracticalLiftPrediction practical_times_prime_power(const Factorization& f, u64 p, unsigned l);

/// Even n = 2^k p_1^k_1 ... p_m^k_m viewed as a possible even Zumkeller
/// number that is not half-Zumkeller.
struct CounterexampleCandidate {
  Factorization factorization;
  // sigma(2^k p_1^k_1 ... p_{i-1}^k_{i-1}) + 1 for i = 1..m (odd primes only).
  std::vector<u64> prefix_bounds;
  // Smallest 1-based i with p_i > prefix_bounds[i-1], if any.
  std::optional<std::size_t> j;
};

CounterexampleCandidate make_candidate(const Factorization& f);

// true: still a candidate (not ruled out as a counterexample). Odd n is a DomainError.
bool znoth_prefilter(const CounterexampleCandidate& c);

}  // namespace zk
