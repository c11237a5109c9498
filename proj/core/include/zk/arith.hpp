#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace zk {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

inline constexpr u64 kMaxN = (u64{1} << 63) - 1;
inline constexpr std::size_t kDefaultDivisorCap = std::size_t{1} << 20;

// Checked arithmetic. Throw RangeError instead of wrapping.
u64 checked_mul(u64 a, u64 b);
u64 checked_add(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exponent);

u64 gcd(u64 a, u64 b);
bool is_perfect_square(u64 n);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

/// Read-only table of primes up to a fixed limit. Built once; safe to share.
class PrimeSieve {
 public:
  explicit PrimeSieve(u64 limit);

  [[nodiscard]] u64 limit() const noexcept { return limit_; }
  [[nodiscard]] std::span<const u64> primes() const noexcept { return primes_; }

 private:
  u64 limit_;
  std::vector<u64> primes_;
};

// Shared sieve covering sqrt(n) for every n below 2^36. Trial division falls
// back to a 6k+-1 wheel above the sieve limit.
const PrimeSieve& default_sieve();

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization: primes strictly increasing, exponents >= 1,
/// product equal to n. Immutable once built.
class Factorization {
 public:
  // Validates every invariant; throws DomainError on violation.
  Factorization(u64 n, std::vector<PrimePower> factors);

  [[nodiscard]] u64 n() const noexcept { return n_; }
  [[nodiscard]] std::span<const PrimePower> factors() const noexcept { return factors_; }
  [[nodiscard]] std::size_t size() const noexcept { return factors_.size(); }
  [[nodiscard]] bool is_even() const noexcept { return (n_ & 1U) == 0; }

  // Exponent of p in n (0 when p does not divide n).
  [[nodiscard]] unsigned exponent_of(u64 p) const noexcept;
  [[nodiscard]] u64 divisor_count() const;

  // Factorization of n * p^e (p prime). Throws RangeError on overflow.
  [[nodiscard]] Factorization times_prime_power(u64 p, unsigned e) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  Factorization(u64 n, std::vector<PrimePower> factors, bool /*trusted*/)
      : n_(n), factors_(std::move(factors)) {}
  friend Factorization factorize(u64 n, const PrimeSieve& sieve);

  u64 n_;
  std::vector<PrimePower> factors_;
};

Factorization factorize(u64 n, const PrimeSieve& sieve);
inline Factorization factorize(u64 n) { return factorize(n, default_sieve()); }

// 1 + p + ... + p^k, checked.
u64 prime_power_sigma(u64 p, unsigned k);

u64 sigma(const Factorization& f);

/// All positive divisors of n in increasing order, with their sum.
struct DivisorSet {
  u64 n = 0;
  std::vector<u64> values;
  u64 sigma = 0;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] bool contains(u64 d) const;
  // Divisors strictly below n.
  [[nodiscard]] std::span<const u64> proper() const noexcept {
    return std::span<const u64>(values).first(values.size() - 1);
  }
};

DivisorSet divisors(const Factorization& f, std::size_t cap = kDefaultDivisorCap);

enum class Abundance { deficient, perfect, abundant };

Abundance abundance_class(const Factorization& f);
Abundance abundance_class(u64 n, u64 sigma_n);
std::string_view to_string(Abundance a);

}  // namespace zk
