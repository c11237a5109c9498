#include "zk/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zk/errors.hpp"

namespace zk {

namespace {

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

u64 checked_mul(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw RangeError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

u64 checked_add(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw RangeError("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

u64 checked_pow(u64 base, unsigned exponent) {
  u64 out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool is_perfect_square(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return static_cast<u128>(r) * r == n;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This base set is exact for all n < 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

PrimeSieve::PrimeSieve(u64 limit) : limit_(limit) {
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes_.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
}

const PrimeSieve& default_sieve() {
  static const PrimeSieve sieve(u64{1} << 18);
  return sieve;
}

Factorization::Factorization(u64 n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n_ == 0 || n_ > kMaxN) throw DomainError("factorization of out-of-range n");
  u64 product = 1;
  u64 previous = 0;
  for (const auto& [p, k] : factors_) {
    if (k == 0) throw DomainError("zero exponent in factorization");
    if (p <= previous) throw DomainError("primes must be strictly increasing");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    product = checked_mul(product, checked_pow(p, k));
    previous = p;
  }
  if (product != n_) throw DomainError("factor product does not equal n");
}

unsigned Factorization::exponent_of(u64 p) const noexcept {
  for (const auto& pp : factors_) {
    if (pp.prime == p) return pp.exponent;
  }
  return 0;
}

u64 Factorization::divisor_count() const {
  u64 count = 1;
  for (const auto& pp : factors_) count = checked_mul(count, pp.exponent + 1);
  return count;
}

Factorization Factorization::times_prime_power(u64 p, unsigned e) const {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const u64 m = checked_mul(n_, checked_pow(p, e));
  if (m > kMaxN) throw RangeError("product exceeds 2^63-1");
  std::vector<PrimePower> out(factors_.begin(), factors_.end());
  if (e > 0) {
    auto it = std::lower_bound(out.begin(), out.end(), p,
                               [](const PrimePower& pp, u64 q) { return pp.prime < q; });
    if (it != out.end() && it->prime == p) {
      it->exponent += e;
    } else {
      out.insert(it, PrimePower{p, e});
    }
  }
  return Factorization(m, std::move(out), true);
}

Factorization factorize(u64 n, const PrimeSieve& sieve) {
  if (n == 0) throw DomainError("cannot factorize 0");
  if (n > kMaxN) throw DomainError("n exceeds 2^63-1");
  std::vector<PrimePower> out;
  u64 rest = n;
  auto strip = [&](u64 p) {
    if (rest % p != 0) return;
    unsigned k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    out.push_back({p, k});
  };

  u64 next_candidate = 2;
  bool finished = false;
  for (u64 p : sieve.primes()) {
    if (p * p > rest) {
      finished = true;
      break;
    }
    strip(p);
    next_candidate = p + 1;
  }
  if (!finished && rest > 1 && !is_prime(rest)) {
    // Wheel over 6k+-1 beyond the sieve.
    u64 c = std::max<u64>(next_candidate, 5);
    c += (6 - c % 6) % 6;  // round up to a multiple of 6
    for (; static_cast<u128>(c - 1) * (c - 1) <= rest; c += 6) {
      strip(c - 1);
      strip(c + 1);
    }
  }
  if (rest > 1) out.push_back({rest, 1});
  return Factorization(n, std::move(out), true);
}

u64 prime_power_sigma(u64 p, unsigned k) {
  u64 sum = 1;
  u64 term = 1;
  for (unsigned j = 0; j < k; ++j) {
    term = checked_mul(term, p);
    sum = checked_add(sum, term);
  }
  return sum;
}

u64 sigma(const Factorization& f) {
  u64 out = 1;
  for (const auto& [p, k] : f.factors()) out = checked_mul(out, prime_power_sigma(p, k));
  return out;
}

bool DivisorSet::contains(u64 d) const { return std::binary_search(values.begin(), values.end(), d); }

DivisorSet divisors(const Factorization& f, std::size_t cap) {
  const u64 count = f.divisor_count();
  if (count > cap) {
    throw CapacityError("divisor count " + std::to_string(count) + " of " + std::to_string(f.n()) +
                            " exceeds the divisor cap",
                        cap);
  }
  DivisorSet out;
  out.n = f.n();
  out.values.reserve(count);
  out.values.push_back(1);
  // Mixed-radix expansion: extend the current list by each prime power in turn.
  for (const auto& [p, k] : f.factors()) {
    const std::size_t base = out.values.size();
    u64 pk = 1;
    for (unsigned j = 1; j <= k; ++j) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.values.push_back(out.values[i] * pk);
    }
  }
  std::sort(out.values.begin(), out.values.end());
  out.sigma = sigma(f);
  return out;
}

Abundance abundance_class(u64 n, u64 sigma_n) {
  const u128 twice = static_cast<u128>(n) * 2;
  if (sigma_n < twice) return Abundance::deficient;
  if (sigma_n == twice) return Abundance::perfect;
  return Abundance::abundant;
}

Abundance abundance_class(const Factorization& f) { return abundance_class(f.n(), sigma(f)); }

std::string_view to_string(Abundance a) {
  switch (a) {
    case Abundance::deficient: return "deficient";
    case Abundance::perfect: return "perfect";
    case Abundance::abundant: return "abundant";
  }
  return "?";
}

}  // namespace zk
