#include "zk/classify.hpp"

#include <algorithm>
#include <string>

#include "zk/errors.hpp"
#include "zk/reach_bits.hpp"

namespace zk {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

bool is_practical(const Factorization& f) {
  if (f.n() == 1) return true;
  const auto factors = f.factors();
  if (factors.front().prime != 2) return false;
  // sigma of the prefix, saturated: once it passes 2^64 every later prime fits.
  u128 prefix_sigma = 1;
  constexpr u128 kSaturate = static_cast<u128>(1) << 64;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0 && factors[i].prime > prefix_sigma + 1) return false;
    prefix_sigma *= prime_power_sigma(factors[i].prime, factors[i].exponent);
    prefix_sigma = std::min(prefix_sigma, kSaturate);
  }
  return true;
}

bool sigma_reachability_check(const Factorization& f, u64 bitset_cap) {
  const u64 s = sigma(f);
  if (s > bitset_cap) throw CapacityError("sigma(n) = " + std::to_string(s) + " above bitset cap", bitset_cap);
  const DivisorSet d = divisors(f);
  ReachBits reach(s);
  for (u64 v : d.values) reach.shift_or(v);
  return reach.all();
}

bool is_quasi_practical(const Factorization& f, std::size_t divisor_cap) {
  const DivisorSet d = divisors(f, divisor_cap);
  // Ascending a_1..a_j represent every integer up to their total iff each
  // a_{i+1} is at most one more than the sum of its predecessors.
  u64 covered = 0;
  for (u64 a : d.proper()) {
    if (a > covered + 1) return false;
    covered += a;
  }
  return true;
}

bool odd_zumkeller_signature_filter(const Factorization& f) {
  if (f.is_even()) throw DomainError("signature filter applies to odd n only");
  const auto ps = f.factors();
  const std::size_t m = ps.size();
  if (m < 3) return false;
  // prod p/(p-1) >= 2. Distinct primes of n multiply to at most n < 2^63.
  u128 num = 1;
  u128 den = 1;
  for (const auto& pp : ps) {
    num *= pp.prime;
    den *= pp.prime - 1;
  }
  if (num < 2 * den) return false;
  const u64 p1 = ps[0].prime;
  const u64 p2 = ps[1].prime;
  if (m <= 6 && (p1 != 3 || (p2 != 5 && p2 != 7 && p2 != 11))) return false;
  if (m <= 4 && p2 != 5 && p2 != 7) return false;
  if (m == 3) {
    const u64 p3 = ps[2].prime;
    if (p2 != 5 || (p3 != 7 && p3 != 11 && p3 != 13)) return false;
  }
  return true;
}

namespace {

Verdict decided(Tri value, std::string_view tag) {
  Verdict v;
  v.value = value;
  v.shortcut = tag;
  return v;
}

Verdict from_search(WitnessSearch&& s) {
  Verdict v;
  v.value = s.witness ? Tri::yes : Tri::no;
  v.engine = s.decided_by;
  v.witness = std::move(s.witness);
  return v;
}

Verdict unknown(const CapacityError& e) {
  Verdict v;
  v.value = Tri::unknown;
  v.cause = e.what();
  return v;
}

bool odd_part_exponents_all_even(const Factorization& f) {
  return std::all_of(f.factors().begin(), f.factors().end(),
                     [](const PrimePower& pp) { return pp.prime == 2 || pp.exponent % 2 == 0; });
}

}  // namespace

Verdict is_zumkeller(const Factorization& f, const EngineOptions& opts) {
  const u64 n = f.n();
  if (f.is_even() && odd_part_exponents_all_even(f)) return decided(Tri::no, shortcut::kOddExponentsEven);
  const u64 s = sigma(f);
  if (s % 2 != 0) return decided(Tri::no, shortcut::kSigmaOdd);
  if (abundance_class(n, s) == Abundance::deficient) return decided(Tri::no, shortcut::kDeficient);
  if (is_practical(f)) return decided(Tri::yes, shortcut::kPracticalSigmaEven);
  try {
    return from_search(search_zumkeller(divisors(f, opts.divisor_cap), opts));
  } catch (const CapacityError& e) {
    return unknown(e);
  }
}

Verdict is_half_zumkeller(const Factorization& f, const EngineOptions& opts, const Verdict* zumkeller) {
  const u64 n = f.n();
  if (n == 1) return decided(Tri::no, shortcut::kOne);
  const u64 s = sigma(f);
  if (!f.is_even()) {
    if (!is_perfect_square(n)) return decided(Tri::no, shortcut::kOddNonSquare);
  } else {
    if (s % 2 != 0) return decided(Tri::no, shortcut::kSigmaOdd);
    if (abundance_class(n, s) == Abundance::deficient) return decided(Tri::no, shortcut::kDeficient);

    Verdict computed;
    if (zumkeller == nullptr) {
      computed = is_zumkeller(f, opts);
      zumkeller = &computed;
    }
    const u128 n128 = n;
    if (zumkeller->value == Tri::no) return decided(Tri::no, shortcut::kNotZumkeller);
    if (zumkeller->value == Tri::yes) {
      if (s < 3 * n128) return decided(Tri::yes, shortcut::kSigmaBelow3n);
      if (n % 3 == 0 && 3 * static_cast<u128>(s) < 10 * n128) {
        return decided(Tri::yes, shortcut::kSigmaBelow10nOver3);
      }
    }
    if (is_practical(f)) return decided(Tri::yes, shortcut::kPracticalSigmaEven);
    const Factorization half = factorize(n / 2);
    if (is_zumkeller(half, opts).value == Tri::yes) return decided(Tri::yes, shortcut::kDoubleOfZumkeller);
  }
  try {
    return from_search(search_half_zumkeller(divisors(f, opts.divisor_cap), opts));
  } catch (const CapacityError& e) {
    return unknown(e);
  }
}

std::optional<std::string> ClassificationRecord::shortcut() const {
  if (!zumkeller_shortcut && !half_shortcut) return std::nullopt;
  std::string out;
  if (zumkeller_shortcut) out += *zumkeller_shortcut;
  if (half_shortcut && half_shortcut != zumkeller_shortcut) {
    if (!out.empty()) out += '+';
    out += *half_shortcut;
  }
  return out;
}

ClassificationRecord classify(const Factorization& f, const ClassifyOptions& opts) {
  ClassificationRecord r;
  r.n = f.n();
  r.sigma = sigma(f);
  r.abundance = abundance_class(r.n, r.sigma);
  r.practical = is_practical(f);
  r.quasi_practical = is_quasi_practical(f);

  Verdict z = is_zumkeller(f, opts.engine);
  Verdict h = is_half_zumkeller(f, opts.engine, &z);
  r.zumkeller = z.value;
  r.half_zumkeller = h.value;
  r.zumkeller_shortcut = z.shortcut;
  r.half_shortcut = h.shortcut;
  if (!z.cause.empty()) r.cause = z.cause;
  if (!h.cause.empty()) r.cause += (r.cause.empty() ? "" : "; ") + h.cause;

  if (opts.with_witnesses) {
    try {
      if (z.is_yes()) {
        r.zumkeller_witness = z.witness ? std::move(z.witness)
                                        : find_zumkeller_witness(divisors(f, opts.engine.divisor_cap), opts.engine);
      }
      if (h.is_yes()) {
        r.half_witness = h.witness ? std::move(h.witness)
                                   : find_half_zumkeller_witness(divisors(f, opts.engine.divisor_cap), opts.engine);
      }
    } catch (const CapacityError& e) {
      r.cause += (r.cause.empty() ? "" : "; ") + std::string("witness: ") + e.what();
    }
  }
  return r;
}

ClassificationRecord classify(u64 n, const ClassifyOptions& opts) { return classify(factorize(n), opts); }

}  // namespace zk
