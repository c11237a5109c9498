#include "zk/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "zk/errors.hpp"

namespace zk {

namespace {

void require_valid(const PartitionWitness& w) {
  if (!verify_witness(w)) throw DomainError("input witness for " + std::to_string(w.n) + " does not verify");
}

void sort_parts(PartitionWitness& w) {
  std::sort(w.part_a.begin(), w.part_a.end());
  std::sort(w.part_b.begin(), w.part_b.end());
}

bool contains(const std::vector<u64>& sorted, u64 x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Copies the base partition once per multiplier: group j is base * multipliers[j].
PartitionWitness replicate(const PartitionWitness& base, const std::vector<u64>& multipliers, u64 new_n) {
  PartitionWitness out{new_n, WitnessKind::zumkeller, {}, {}};
  out.part_a.reserve(base.part_a.size() * multipliers.size());
  out.part_b.reserve(base.part_b.size() * multipliers.size());
  for (u64 m : multipliers) {
    for (u64 x : base.part_a) out.part_a.push_back(checked_mul(x, m));
    for (u64 x : base.part_b) out.part_b.push_back(checked_mul(x, m));
  }
  sort_parts(out);
  return out;
}

// Runs a Zumkeller-level lift, routing half witnesses through the separated view.
template <typename Lift>
PartitionWitness lift_either(const PartitionWitness& w, Lift&& lift) {
  if (w.kind == WitnessKind::zumkeller) return lift(w);
  if (w.n % 2 != 0) throw DomainError("half-Zumkeller lifting needs even n");
  return half_from_separated(lift(separated_from_half(w)));
}

}  // namespace

PartitionWitness separated_from_half(const PartitionWitness& half) {
  if (half.kind != WitnessKind::half_zumkeller || half.n % 2 != 0) {
    throw DomainError("separated view needs a half-Zumkeller witness of an even number");
  }
  const u64 n = half.n;
  PartitionWitness out{n, WitnessKind::zumkeller, half.part_a, half.part_b};
  if (!contains(out.part_a, n / 2)) std::swap(out.part_a, out.part_b);
  // part_a holds n/2; trade it for n and hand n/2 to the other side.
  out.part_a.erase(std::find(out.part_a.begin(), out.part_a.end(), n / 2));
  out.part_a.push_back(n);
  out.part_b.push_back(n / 2);
  sort_parts(out);
  return out;
}

PartitionWitness half_from_separated(const PartitionWitness& separated) {
  const u64 n = separated.n;
  if (separated.kind != WitnessKind::zumkeller || n % 2 != 0) {
    throw DomainError("half view needs a Zumkeller witness of an even number");
  }
  PartitionWitness out{n, WitnessKind::half_zumkeller, separated.part_a, separated.part_b};
  if (!contains(out.part_a, n)) std::swap(out.part_a, out.part_b);
  if (contains(out.part_a, n / 2) || !contains(out.part_b, n / 2)) {
    throw DomainError("n and n/2 are on the same side of the partition");
  }
  out.part_a.pop_back();  // n is the largest divisor
  out.part_a.push_back(n / 2);
  out.part_b.erase(std::find(out.part_b.begin(), out.part_b.end(), n / 2));
  sort_parts(out);
  return out;
}

PartitionWitness lift_coprime_prime_power(const PartitionWitness& w, u64 p, unsigned l) {
  if (l == 0) throw DomainError("lift exponent must be positive");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (gcd(w.n, p) != 1) throw DomainError("gcd(" + std::to_string(w.n) + ", " + std::to_string(p) + ") != 1");
  require_valid(w);
  const u64 new_n = checked_mul(w.n, checked_pow(p, l));
  if (new_n > kMaxN) throw RangeError("lifted n exceeds 2^63-1");
  std::vector<u64> multipliers{1};
  for (unsigned i = 1; i <= l; ++i) multipliers.push_back(multipliers.back() * p);
  return lift_either(w, [&](const PartitionWitness& base) { return replicate(base, multipliers, new_n); });
}

PartitionWitness lift_same_prime(const PartitionWitness& w, std::size_t index, unsigned l) {
  if (l == 0) throw DomainError("lift exponent must be positive");
  const Factorization f = factorize(w.n);
  if (index >= f.size()) {
    throw DomainError("prime index " + std::to_string(index) + " out of range for " + std::to_string(w.n));
  }
  require_valid(w);
  const auto [p, k] = f.factors()[index];
  const u64 block = checked_pow(p, k + 1);
  std::vector<u64> multipliers{1};
  for (unsigned j = 1; j <= l; ++j) multipliers.push_back(checked_mul(multipliers.back(), block));
  const u64 new_n = checked_mul(w.n, multipliers.back());
  if (new_n > kMaxN) throw RangeError("lifted n exceeds 2^63-1");
  return lift_either(w, [&](const PartitionWitness& base) { return replicate(base, multipliers, new_n); });
}

PartitionWitness double_to_half(const PartitionWitness& w) {
  if (w.kind != WitnessKind::zumkeller) throw DomainError("doubling needs a Zumkeller witness");
  require_valid(w);
  const u64 n = w.n;
  const u64 doubled = checked_mul(n, 2);
  if (doubled > kMaxN) throw RangeError("2n exceeds 2^63-1");
  u64 two_k = 1;
  while ((n / two_k) % 2 == 0) two_k *= 2;
  const u64 odd_part = n / two_k;

  std::unordered_set<u64> side_a(w.part_a.begin(), w.part_a.end());
  PartitionWitness out{doubled, WitnessKind::half_zumkeller, w.part_a, w.part_b};
  for (u64 l : divisors(factorize(odd_part)).values) {
    if (l == odd_part) continue;  // 2^(k+1) * odd_part is 2n itself
    const u64 x = two_k * l;
    auto& own = side_a.count(x) ? out.part_a : out.part_b;
    auto& other = side_a.count(x) ? out.part_b : out.part_a;
    own.erase(std::find(own.begin(), own.end(), x));
    other.push_back(x);
    own.push_back(2 * x);
  }
  sort_parts(out);
  return out;
}

u64 factorial(unsigned m) {
  u64 out = 1;
  for (unsigned i = 2; i <= m; ++i) out = checked_mul(out, i);
  return out;
}

PartitionWitness factorial_witness(unsigned m, std::size_t divisor_cap) {
  if (m < 3 || m > 20) throw DomainError("factorial witness needs 3 <= m <= 20");
  const DivisorSet d = divisors(factorize(factorial(m)), divisor_cap);
  auto w = chain_sign_partition(d);
  if (!w) throw std::logic_error("signed chain failed on " + std::to_string(m) + "!");
  return *std::move(w);
}

}  // namespace zk
