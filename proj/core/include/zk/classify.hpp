#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "zk/arith.hpp"
#include "zk/partition.hpp"

namespace zk {

enum class Tri { no, yes, unknown };

std::string_view to_string(Tri t);

// Names of the short-circuit rules. Stable strings: they appear in JSON output
// and tests assert on them.
namespace shortcut {
inline constexpr std::string_view kOddExponentsEven = "even_all_odd_exponents_even";
inline constexpr std::string_view kSigmaOdd = "sigma_odd";
inline constexpr std::string_view kDeficient = "deficient";
inline constexpr std::string_view kPracticalSigmaEven = "practical_sigma_even";
inline constexpr std::string_view kOne = "n_is_one";
inline constexpr std::string_view kOddNonSquare = "odd_non_square";
inline constexpr std::string_view kNotZumkeller = "even_not_zumkeller";
inline constexpr std::string_view kSigmaBelow3n = "sigma_below_3n";
inline constexpr std::string_view kSigmaBelow10nOver3 = "sigma_below_10n_over_3";
inline constexpr std::string_view kDoubleOfZumkeller = "double_of_zumkeller";
}  // namespace shortcut

/// Outcome of one predicate. `shortcut` is set when a rule decided it without
/// a witness search; `cause` carries the capacity error text for `unknown`.
struct Verdict {
  Tri value = Tri::unknown;
  std::optional<std::string_view> shortcut;
  std::optional<Engine> engine;  // set when a search decided it
  std::optional<PartitionWitness> witness;  // set when a search answered yes
  std::string cause;

  [[nodiscard]] bool is_yes() const noexcept { return value == Tri::yes; }
};

bool is_practical(const Factorization& f);

// Test oracle for is_practical: every m <= sigma(n) is a sum of distinct
// divisors, decided with a reachable-sum bitset. Throws CapacityError when
// sigma(n) exceeds the bitset cap.
bool sigma_reachability_check(const Factorization& f, u64 bitset_cap = u64{1} << 26);

// Every m <= sigma(n) - n is a sum of distinct proper divisors.
bool is_quasi_practical(const Factorization& f, std::size_t divisor_cap = kDefaultDivisorCap);

// Necessary condition for odd Zumkeller numbers from the prime signature.
// false means "certainly not Zumkeller". Requires odd n.
bool odd_zumkeller_signature_filter(const Factorization& f);

Verdict is_zumkeller(const Factorization& f, const EngineOptions& opts = {});

// `zumkeller` may pass an already computed Zumkeller verdict for the same n.
Verdict is_half_zumkeller(const Factorization& f, const EngineOptions& opts = {},
                          const Verdict* zumkeller = nullptr);

/// Everything the scanner reports about one integer.
struct ClassificationRecord {
  u64 n = 0;
  u64 sigma = 0;
  Abundance abundance = Abundance::deficient;
  Tri zumkeller = Tri::unknown;
  Tri half_zumkeller = Tri::unknown;
  bool practical = false;
  bool quasi_practical = false;
  std::optional<std::string_view> zumkeller_shortcut;
  std::optional<std::string_view> half_shortcut;
  std::optional<PartitionWitness> zumkeller_witness;
  std::optional<PartitionWitness> half_witness;
  std::string cause;

  // Joined shortcut tags ("a+b"), or absent when both predicates were searched.
  [[nodiscard]] std::optional<std::string> shortcut() const;
};

struct ClassifyOptions {
  EngineOptions engine;
  bool with_witnesses = false;
};

ClassificationRecord classify(u64 n, const ClassifyOptions& opts = {});
ClassificationRecord classify(const Factorization& f, const ClassifyOptions& opts = {});

}  // namespace zk
