#include "zk/theory.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "zk/errors.hpp"
#include "zk/reach_bits.hpp"

namespace zk {

__extension__ using i128 = __int128;

u64 DigitBounds::max_value() const {
  u64 total = 0;
  u64 power = 1;
  for (std::size_t i = 0; i < caps.size(); ++i) {
    total = checked_add(total, checked_mul(caps[i], power));
    if (i + 1 < caps.size()) power = checked_mul(power, p);
  }
  return total;
}

bool digit_conditions_hold(const DigitBounds& b) {
  if (b.p < 2) throw DomainError("digit base must be at least 2");
  u64 partial = 0;
  u64 power = 1;
  for (std::size_t i = 0; i + 1 < b.caps.size(); ++i) {
    partial = checked_add(partial, checked_mul(b.caps[i], power));
    power = checked_mul(power, b.p);
    if (checked_add(partial, 1) < power) return false;
  }
  return true;
}

std::optional<std::vector<u64>> digit_decompose(u64 m, const DigitBounds& b) {
  if (b.p < 2) throw DomainError("digit base must be at least 2");
  if (m > b.max_value()) throw DomainError("M exceeds sum A_i p^i");
  std::vector<u64> digits(b.caps.size(), 0);
  std::vector<u64> powers(b.caps.size(), 1);
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = checked_mul(powers[i - 1], b.p);
  u64 rest = m;
  for (std::size_t i = b.caps.size(); i-- > 0;) {
    digits[i] = std::min(b.caps[i], rest / powers[i]);
    rest -= digits[i] * powers[i];
  }
  if (rest != 0) return std::nullopt;
  return digits;
}

namespace {

ReachBits subset_sums(std::span<const u64> values, u64 total) {
  ReachBits reach(total);
  for (u64 v : values) reach.shift_or(v);
  return reach;
}

bool test_signed(const ReachBits& r, i128 v) {
  return v >= 0 && v <= static_cast<i128>(r.max_value()) && r.test(static_cast<u64>(v));
}

}  // namespace

MultiplyReport multiplyz_equivalence(u64 n, u64 p, std::size_t divisor_cap) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (gcd(n, p) != 1) throw DomainError("n and p must be coprime");
  const Factorization f = factorize(n);
  if (f.divisor_count() > divisor_cap) {
    throw CapacityError("divisor count of " + std::to_string(n) + " too large for exhaustive search", divisor_cap);
  }
  const DivisorSet d0 = divisors(f);
  const u64 sigma_n = d0.sigma;
  const std::size_t k = d0.size();
  const ReachBits sums = subset_sums(d0.values, sigma_n);
  MultiplyReport report;

  // (i) directly on the divisors of n p.
  {
    const DivisorSet dp = divisors(f.times_prime_power(p, 1));
    report.product_zumkeller = dp.sigma % 2 == 0 && subset_sums(dp.values, dp.sigma / 2).test(dp.sigma / 2);
  }

  // (ii) D2 - D1 ranges over sigma - 2 t1 and D3 - D4 over sigma - 2 t2, for
  // subset sums t1 = S(D1), t2 = S(D4).
  {
    const i128 s = sigma_n;
    for (u64 t1 = 0; t1 <= sigma_n && !report.signed_sum; ++t1) {
      if (!sums.test(t1)) continue;
      const i128 twice_t2 = s + static_cast<i128>(p) * (s - 2 * static_cast<i128>(t1));
      if (twice_t2 % 2 == 0) report.signed_sum = test_signed(sums, twice_t2 / 2);
    }
  }

  // (iii) every split D1 | D2. S(X) - S(Y) + S(D1) = S(X) + S(D1 \ Y), which
  // is a subset sum of the divisors; that is the membership test below.
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k) && !report.half_difference; ++mask) {
    i128 sum_d2 = 0;
    i128 sum_d1 = 0;
    for (std::size_t i = 0; i < k; ++i) {
      ((mask >> i) & 1U ? sum_d2 : sum_d1) += d0.values[i];
    }
    const i128 scaled = static_cast<i128>(p + 1) * (sum_d2 - sum_d1);
    if (scaled % 2 != 0) continue;
    report.half_difference = test_signed(sums, scaled / 2 + sum_d1);
  }

  // (iv) reachable values of sum c_d d with c_d in {+-(p+1), +-(p-1)}.
  {
    const i128 reach_max = static_cast<i128>(p + 1) * sigma_n;
    if (reach_max > (i128{1} << 32)) throw CapacityError("four-part search range", u64{1} << 32);
    const auto offset = static_cast<std::size_t>(reach_max);
    std::vector<std::uint8_t> cur(2 * offset + 1, 0);
    std::vector<std::uint8_t> next(cur.size(), 0);
    cur[offset] = 1;
    for (u64 dv : d0.values) {
      std::fill(next.begin(), next.end(), 0);
      const std::size_t steps[] = {static_cast<std::size_t>((p + 1) * dv), static_cast<std::size_t>((p - 1) * dv)};
      for (std::size_t v = 0; v < cur.size(); ++v) {
        if (!cur[v]) continue;
        for (std::size_t step : steps) {
          if (v + step < next.size()) next[v + step] = 1;
          if (v >= step) next[v - step] = 1;
        }
      }
      cur.swap(next);
    }
    report.four_part = cur[offset] != 0;
  }
  return report;
}

bool check_half_difference_witness(u64 n, u64 p, std::span<const u64> d1, std::span<const u64> d2,
                                   std::span<const u64> x, std::span<const u64> y) {
  auto sorted = [](std::span<const u64> s) {
    std::vector<u64> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto s1 = sorted(d1);
  const auto s2 = sorted(d2);
  const auto sx = sorted(x);
  const auto sy = sorted(y);
  std::vector<u64> all;
  std::merge(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(all));
  if (all != divisors(factorize(n)).values) return false;
  if (std::adjacent_find(sx.begin(), sx.end()) != sx.end()) return false;
  if (std::adjacent_find(sy.begin(), sy.end()) != sy.end()) return false;
  if (!std::includes(s2.begin(), s2.end(), sx.begin(), sx.end())) return false;
  if (!std::includes(s1.begin(), s1.end(), sy.begin(), sy.end())) return false;
  auto total = [](const std::vector<u64>& v) {
    i128 t = 0;
    for (u64 e : v) t += e;
    return t;
  };
  return static_cast<i128>(p + 1) * (total(s2) - total(s1)) == 2 * (total(sx) - total(sy));
}

PracticalLiftPrediction practical_times_prime_power(const Factorization& f, u64 p, unsigned l) {
  if (!is_practical(f)) throw DomainError(std::to_string(f.n()) + " is not practical");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (gcd(f.n(), p) != 1) throw DomainError("n and p must be coprime");
  if (l == 0) throw DomainError("exponent must be positive");
  const u64 s = sigma(f);
  const bool yes = s % 2 == 0 || (p <= s && l % 2 == 1);
  return {yes, yes};
}

CounterexampleCandidate make_candidate(const Factorization& f) {
  if (!f.is_even()) throw DomainError("counterexample candidates are even");
  CounterexampleCandidate c{f, {}, std::nullopt};
  const auto factors = f.factors();
  constexpr u128 kSaturate = std::numeric_limits<u64>::max();
  u128 prefix = prime_power_sigma(2, factors.front().exponent);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const u128 bound = std::min<u128>(prefix + 1, kSaturate);
    c.prefix_bounds.push_back(static_cast<u64>(bound));
    if (!c.j && factors[i].prime > bound) c.j = i;  // 1-based among odd primes
    prefix = std::min<u128>(prefix * prime_power_sigma(factors[i].prime, factors[i].exponent), kSaturate);
  }
  return c;
}

bool znoth_prefilter(const CounterexampleCandidate& c) {
  const Factorization& f = c.factorization;
  if (!f.is_even()) throw DomainError("prefilter applies to even n only");
  if (static_cast<u128>(sigma(f)) < 3 * static_cast<u128>(f.n())) return false;
  if (!c.j) return false;
  const auto odd = f.factors().subspan(1);
  const std::size_t m = odd.size();
  const std::size_t j = *c.j;
  for (std::size_t i = 0; i + 1 < j; ++i) {
    if (odd[i].exponent % 2 != 0) return false;
  }
  return j <= m - 1;
}

}  // namespace zk
