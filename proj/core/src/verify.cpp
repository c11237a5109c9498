#include "zk/verify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include <json.hpp>

#include "zk/construct.hpp"
#include "zk/errors.hpp"
#include "zk/oracle.hpp"
#include "zk/theory.hpp"

namespace zk {

namespace {

struct Tally {
  u64 checked = 0;
  std::vector<std::string> failures;
  std::vector<u64> unknowns;
};

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string tri(Tri t) { return std::string(to_string(t)); }

unsigned resolve(unsigned w) { return w == 0 ? default_workers() : w; }

// Runs check(n, tally) over [from, to] on the scan workers. A CapacityError
// thrown by the check marks n as unknown.
template <typename Check>
PropertyResult sweep(std::string name, u64 from, u64 to, const ScanOptions& scan, Check check) {
  PropertyResult r;
  r.name = std::move(name);
  if (from > to) return r;
  detail::ordered_chunks<Tally>(
      from, to, scan.chunk, resolve(scan.workers),
      [&](u64 lo, u64 hi) {
        Tally t;
        for (u64 n = lo; n <= hi; ++n) {
          try {
            check(n, t);
          } catch (const CapacityError&) {
            t.unknowns.push_back(n);
          }
        }
        return t;
      },
      [&](Tally t) {
        r.checked += t.checked;
        for (auto& f : t.failures) r.failures.push_back(std::move(f));
        r.unknowns.insert(r.unknowns.end(), t.unknowns.begin(), t.unknowns.end());
      });
  return r;
}

bool search_yes(const WitnessSearch& s) { return s.witness.has_value(); }

constexpr std::array<u64, 15> kSmallPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  for (u64 p = 2; p <= limit; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<std::string_view> property_names() {
  return {"conjecture2", "lemma1",    "practical",         "quasi_practical", "oracle",       "theorem",
          "multiplyz",   "prefilter", "nonzumkeller_base", "signature",       "constructions"};
}

PropertyResult run_property(std::string_view name, const PropertyOptions& opts) {
  auto to_or = [&](u64 fallback) { return opts.to.value_or(fallback); };
  if (name == "conjecture2") return check_conjecture2(to_or(1'000'000), opts.scan, opts.desk_cap);
  if (name == "lemma1") return check_lemma1();
  if (name == "practical") return check_practical(to_or(100'000), opts.scan);
  if (name == "quasi_practical") return check_quasi_practical(to_or(10'000), opts.scan);
  if (name == "oracle") return check_oracle(to_or(2000), opts.scan);
  if (name == "theorem") return check_practical_lift(to_or(500), 50, 3, opts.scan.engine);
  if (name == "multiplyz") return check_multiplyz(to_or(200));
  if (name == "prefilter") return check_prefilter(to_or(1'000'000), opts.scan);
  if (name == "nonzumkeller_base") return check_nonzumkeller_base(to_or(300), 30, opts.scan.engine);
  if (name == "signature") return check_odd_signature(to_or(1'000'000), opts.scan);
  if (name == "constructions") return check_constructions(opts.chains, opts.seed);
  throw DomainError("unknown property: " + std::string(name));
}

PropertyResult check_conjecture2(u64 to, const ScanOptions& scan, u64 desk_cap) {
  const auto c = verify_conjecture2(to, scan, desk_cap);
  PropertyResult r;
  r.name = "conjecture2";
  r.checked = c.even_zumkeller;
  for (u64 n : c.counterexamples) {
    r.failures.push_back("n=" + std::to_string(n) + ": even Zumkeller but not half-Zumkeller");
  }
  r.unknowns = c.unknowns;
  return r;
}

PropertyResult check_lemma1() {
  PropertyResult r;
  r.name = "lemma1";
  constexpr u64 kCapMax = 4;
  for (u64 p : {2, 3, 5}) {
    for (std::size_t len = 1; len <= 4; ++len) {
      DigitBounds b{p, std::vector<u64>(len, 0)};
      for (;;) {
        ++r.checked;
        auto label = [&] {
          std::string s = "p=" + std::to_string(p) + " caps=(";
          for (std::size_t i = 0; i < len; ++i) s += (i ? "," : "") + std::to_string(b.caps[i]);
          return s + ")";
        };
        const bool cond = digit_conditions_hold(b);
        const bool brute = oracle::digits_cover_all(p, b.caps);
        // Zero top caps make l larger than the representation needs; the
        // equivalence is about the trimmed list.
        DigitBounds trimmed = b;
        while (trimmed.caps.size() > 1 && trimmed.caps.back() == 0) trimmed.caps.pop_back();
        if (digit_conditions_hold(trimmed) != brute || (b.caps.back() != 0 && cond != brute)) {
          r.failures.push_back(label() + ": conditions " + yn(cond) + ", brute force " + yn(brute));
        }
        if (cond) {
          const u64 max = b.max_value();
          for (u64 m = 0; m <= max; ++m) {
            const auto c = digit_decompose(m, b);
            bool ok = c.has_value() && c->size() == len;
            if (ok) {
              u64 v = 0;
              u64 pw = 1;
              for (std::size_t i = 0; i < len; ++i) {
                ok = ok && (*c)[i] <= b.caps[i];
                v += (*c)[i] * pw;
                pw *= p;
              }
              ok = ok && v == m;
            }
            if (!ok) r.failures.push_back(label() + ": greedy fails at M=" + std::to_string(m));
          }
        }
        std::size_t i = 0;
        while (i < len && b.caps[i] == kCapMax) b.caps[i++] = 0;
        if (i == len) break;
        ++b.caps[i];
      }
    }
  }
  return r;
}

PropertyResult check_practical(u64 to, const ScanOptions& scan) {
  return sweep("practical", 1, to, scan, [&](u64 n, Tally& t) {
    const auto f = factorize(n);
    const bool stewart = is_practical(f);
    const bool reach = sigma_reachability_check(f);
    ++t.checked;
    if (stewart != reach) {
      t.failures.push_back("n=" + std::to_string(n) + ": stewart " + yn(stewart) + ", reachability " + yn(reach));
    }
    if (!stewart) return;
    // Decide both predicates by search alone so the practical shortcut is not
    // checking itself.
    const bool even = sigma(f) % 2 == 0;
    const auto d = divisors(f, scan.engine.divisor_cap);
    const auto z = search_zumkeller(d, scan.engine);
    const auto h = search_half_zumkeller(d, scan.engine);
    if (search_yes(z) != even || search_yes(h) != even) {
      t.failures.push_back("n=" + std::to_string(n) + ": practical, sigma " + (even ? "even" : "odd") +
                           ", zumkeller " + yn(search_yes(z)) + ", half " + yn(search_yes(h)));
    }
    for (const auto* w : {&z.witness, &h.witness}) {
      if (*w && !verify_witness(**w)) t.failures.push_back("n=" + std::to_string(n) + ": witness rejected");
    }
  });
}

PropertyResult check_quasi_practical(u64 to, const ScanOptions& scan) {
  return sweep("quasi_practical", 1, to, scan, [&](u64 n, Tally& t) {
    const auto f = factorize(n);
    const bool quasi = is_quasi_practical(f, scan.engine.divisor_cap);
    const auto d = divisors(f, scan.engine.divisor_cap);
    const bool brute = oracle::represents_all_up_to(d.proper(), sigma(f) - n);
    const bool remark = n == 1 || is_prime(n) || is_practical(f);
    ++t.checked;
    if (quasi != brute || quasi != remark) {
      t.failures.push_back("n=" + std::to_string(n) + ": quasi " + yn(quasi) + ", definition " + yn(brute) +
                           ", practical-or-prime " + yn(remark));
    }
  });
}

PropertyResult check_oracle(u64 to, const ScanOptions& scan) {
  return sweep("oracle", 1, to, scan, [&](u64 n, Tally& t) {
    const auto f = factorize(n);
    const auto z = is_zumkeller(f, scan.engine);
    const auto h = is_half_zumkeller(f, scan.engine, &z);
    if (z.value == Tri::unknown || h.value == Tri::unknown) {
      t.unknowns.push_back(n);
      return;
    }
    ++t.checked;
    const bool oz = oracle::zumkeller(n);
    const bool oh = n > 1 && oracle::half_zumkeller(n);
    if (z.is_yes() != oz || h.is_yes() != oh) {
      t.failures.push_back("n=" + std::to_string(n) + ": zumkeller " + tri(z.value) + " vs " + yn(oz) +
                           ", half " + tri(h.value) + " vs " + yn(oh));
    }
    if (n % 2 == 0 && oracle::has_separating_partition(n) != oh) {
      t.failures.push_back("n=" + std::to_string(n) + ": separated partition disagrees with half-Zumkeller");
    }
    for (const auto* w : {&z.witness, &h.witness}) {
      if (*w && !verify_witness(**w)) t.failures.push_back("n=" + std::to_string(n) + ": witness rejected");
    }
  });
}

PropertyResult check_practical_lift(u64 n_max, u64 p_max, unsigned l_max, const EngineOptions& engine) {
  PropertyResult r;
  r.name = "theorem";
  const auto primes = primes_up_to(p_max);
  for (u64 n = 1; n <= n_max; ++n) {
    const auto f = factorize(n);
    if (!is_practical(f)) continue;
    for (u64 p : primes) {
      if (n % p == 0) continue;
      for (unsigned l = 1; l <= l_max; ++l) {
        const auto pred = practical_times_prime_power(f, p, l);
        const auto g = f.times_prime_power(p, l);
        const auto z = is_zumkeller(g, engine);
        const auto h = is_half_zumkeller(g, engine, &z);
        if (z.value == Tri::unknown || h.value == Tri::unknown) {
          r.unknowns.push_back(g.n());
          continue;
        }
        ++r.checked;
        if (z.is_yes() != pred.zumkeller || h.is_yes() != pred.half_zumkeller) {
          r.failures.push_back("n=" + std::to_string(n) + " p=" + std::to_string(p) + " l=" + std::to_string(l) +
                               ": predicted " + yn(pred.zumkeller) + "/" + yn(pred.half_zumkeller) + ", found " +
                               yn(z.is_yes()) + "/" + yn(h.is_yes()));
        }
      }
    }
  }
  return r;
}

PropertyResult check_nonzumkeller_base(u64 n_max, u64 p_max, const EngineOptions& engine) {
  PropertyResult r;
  r.name = "nonzumkeller_base";
  const auto primes = primes_up_to(p_max);
  for (u64 n = 1; n <= n_max; ++n) {
    const auto f = factorize(n);
    const auto base = is_zumkeller(f, engine);
    if (base.value != Tri::no) {
      if (base.value == Tri::unknown) r.unknowns.push_back(n);
      continue;
    }
    const u64 s = sigma(f);
    for (u64 p : primes) {
      if (n % p == 0) continue;
      for (unsigned l = 1; l <= 2; ++l) {
        const auto g = f.times_prime_power(p, l);
        const auto z = is_zumkeller(g, engine);
        if (z.value == Tri::unknown) {
          r.unknowns.push_back(g.n());
          continue;
        }
        ++r.checked;
        if (!z.is_yes()) continue;
        if (p > s || (s % 2 == 1 && l % 2 == 0)) {
          r.failures.push_back("n=" + std::to_string(n) + " p=" + std::to_string(p) + " l=" + std::to_string(l) +
                               ": product Zumkeller with sigma(n)=" + std::to_string(s));
        }
      }
    }
  }
  return r;
}

PropertyResult check_multiplyz(u64 n_max) {
  PropertyResult r;
  r.name = "multiplyz";
  for (u64 n = 1; n <= n_max; ++n) {
    const auto f = factorize(n);
    if (f.divisor_count() > 12) continue;
    for (u64 p : {3, 5, 7, 11, 13}) {
      if (n % p == 0) continue;
      const auto m = multiplyz_equivalence(n, p);
      ++r.checked;
      if (!m.agree()) {
        r.failures.push_back("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": (i)-(iv) = " +
                             yn(m.product_zumkeller) + "," + yn(m.signed_sum) + "," + yn(m.half_difference) + "," +
                             yn(m.four_part));
      }
    }
  }
  const std::vector<u64> d1{2, 5, 10, 35, 50, 98, 2450};
  const std::vector<u64> d2{1, 7, 14, 25, 49, 70, 175, 245, 350, 490, 1225};
  const std::vector<u64> x{1, 7};
  const std::vector<u64> y{2};
  ++r.checked;
  if (!check_half_difference_witness(2450, 11, d1, d2, x, y)) {
    r.failures.push_back("n=2450 p=11: 6=(7+1)-2 rejected");
  }
  return r;
}

PropertyResult check_prefilter(u64 to, const ScanOptions& scan) {
  const auto c = make_candidate(factorize(7'233'498'900ULL));
  const std::vector<u64> expected_prefix{8, 92, 2822};
  const bool prefix_ok = c.prefix_bounds.size() >= 3 &&
                         std::equal(expected_prefix.begin(), expected_prefix.end(), c.prefix_bounds.begin());
  auto r = sweep("prefilter", 2, to, scan, [&](u64 n, Tally& t) {
    if (n % 2 != 0) return;
    const auto f = factorize(n);
    const u64 s = sigma(f);
    if (s < 2 * n || s >= 3 * n) return;
    const auto z = is_zumkeller(f, scan.engine);
    if (z.value == Tri::unknown) {
      t.unknowns.push_back(n);
      return;
    }
    if (!z.is_yes()) return;
    ++t.checked;
    if (znoth_prefilter(make_candidate(f))) {
      t.failures.push_back("n=" + std::to_string(n) + ": sigma < 3n yet still a candidate");
    }
  });
  ++r.checked;
  if (!prefix_ok || !c.j || *c.j != 3 || !znoth_prefilter(c)) {
    r.failures.insert(r.failures.begin(), "n=7233498900: prefix constants or candidate status wrong");
  }
  return r;
}

PropertyResult check_odd_signature(u64 to, const ScanOptions& scan) {
  return sweep("signature", 1, to, scan, [&](u64 n, Tally& t) {
    if (n % 2 == 0) return;
    const auto f = factorize(n);
    if (abundance_class(f) == Abundance::deficient) return;
    const auto z = is_zumkeller(f, scan.engine);
    if (z.value == Tri::unknown) {
      t.unknowns.push_back(n);
      return;
    }
    ++t.checked;
    if (z.is_yes() && !odd_zumkeller_signature_filter(f)) {
      t.failures.push_back("n=" + std::to_string(n) + ": odd Zumkeller rejected by the signature filter");
    }
  });
}

PropertyResult check_constructions(std::size_t chains, u64 seed) {
  PropertyResult r;
  r.name = "constructions";
  constexpr u64 kMaxLifted = 1'000'000'000'000'000ULL;
  constexpr u64 kMaxDivisors = 4096;
  std::mt19937_64 rng(seed);
  const std::array<u64, 3> bases{6, 20, 945};

  auto fits = [&](u64 n) { return n <= kMaxLifted && factorize(n).divisor_count() <= kMaxDivisors; };

  for (std::size_t c = 0; c < chains; ++c) {
    const u64 start = bases[rng() % bases.size()];
    std::string trail = std::to_string(start);
    try {
      auto w = *find_zumkeller_witness(divisors(factorize(start)));
      const int steps = 1 + static_cast<int>(rng() % 4);
      for (int s = 0; s < steps; ++s) {
        const auto f = factorize(w.n);
        std::optional<PartitionWitness> next;
        for (int attempt = 0; attempt < 8 && !next; ++attempt) {
          const auto op = rng() % 3;
          try {
            if (op == 0) {
              const u64 p = kSmallPrimes[1 + rng() % 8];
              const auto l = static_cast<unsigned>(1 + rng() % 2);
              if (w.n % p == 0 || !fits(checked_mul(w.n, checked_pow(p, l)))) continue;
              next = lift_coprime_prime_power(w, p, l);
              trail += " *" + std::to_string(p) + "^" + std::to_string(l);
            } else if (op == 1) {
              const auto idx = static_cast<std::size_t>(rng() % f.size());
              const auto& pp = f.factors()[idx];
              if (!fits(checked_mul(w.n, checked_pow(pp.prime, pp.exponent + 1)))) continue;
              next = lift_same_prime(w, idx, 1);
              trail += " same[" + std::to_string(idx) + "]";
            } else {
              if (!fits(checked_mul(w.n, 2))) continue;
              const auto z = w.kind == WitnessKind::zumkeller ? w : separated_from_half(w);
              next = double_to_half(z);
              trail += " double";
            }
          } catch (const RangeError&) {
            continue;
          }
        }
        if (!next) break;
        ++r.checked;
        if (!verify_witness(*next)) {
          r.failures.push_back("chain " + trail + ": witness for n=" + std::to_string(next->n) + " rejected");
          break;
        }
        w = std::move(*next);
      }
    } catch (const std::exception& e) {
      r.failures.push_back("chain " + trail + ": " + e.what());
    }
  }
  for (unsigned m = 3; m <= 12; ++m) {
    ++r.checked;
    try {
      if (!verify_witness(factorial_witness(m))) r.failures.push_back(std::to_string(m) + "!: witness rejected");
    } catch (const std::exception& e) {
      r.failures.push_back(std::to_string(m) + "!: " + e.what());
    }
  }
  return r;
}

std::string property_to_json(const PropertyResult& r) {
  return nlohmann::json{{"property", r.name},
                        {"pass", r.pass()},
                        {"checked", r.checked},
                        {"failures", r.failures},
                        {"unknowns", r.unknowns}}
      .dump();
}

}  // namespace zk
