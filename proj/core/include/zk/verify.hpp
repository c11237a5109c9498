#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zk/scan.hpp"

namespace zk {

/// Outcome of one empirical property sweep.
struct PropertyResult {
  std::string name;
  u64 checked = 0;
  std::vector<std::string> failures;  // human-readable counterexample payloads
  std::vector<u64> unknowns;

  [[nodiscard]] bool pass() const noexcept { return failures.empty() && unknowns.empty(); }
};

struct PropertyOptions {
  std::optional<u64> to;  // property-specific default when absent
  ScanOptions scan;
  std::size_t chains = 100;
  u64 seed = 0xC0FFEE;
  u64 desk_cap = kConjecture2DeskCap;
};

// Names accepted by run_property.
std::vector<std::string_view> property_names();

// Throws DomainError for an unknown name.
PropertyResult run_property(std::string_view name, const PropertyOptions& opts = {});

PropertyResult check_conjecture2(u64 to, const ScanOptions& scan, u64 desk_cap = kConjecture2DeskCap);
PropertyResult check_lemma1();
PropertyResult check_practical(u64 to, const ScanOptions& scan);
PropertyResult check_quasi_practical(u64 to, const ScanOptions& scan);
PropertyResult check_oracle(u64 to, const ScanOptions& scan);
PropertyResult check_practical_lift(u64 n_max, u64 p_max, unsigned l_max, const EngineOptions& engine);
PropertyResult check_multiplyz(u64 n_max);
PropertyResult check_prefilter(u64 to, const ScanOptions& scan);
PropertyResult check_odd_signature(u64 to, const ScanOptions& scan);
PropertyResult check_nonzumkeller_base(u64 n_max, u64 p_max, const EngineOptions& engine);
PropertyResult check_constructions(std::size_t chains, u64 seed);

std::string property_to_json(const PropertyResult& r);

}  // namespace zk
