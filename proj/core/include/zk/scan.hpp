#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "zk/arith.hpp"
#include "zk/classify.hpp"
#include "zk/detail/parallel.hpp"

namespace zk {

enum class Predicate { zumkeller, half_zumkeller, practical, quasi_practical, odd_zumkeller, abundant };

std::string_view to_string(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view s);

inline constexpr std::size_t kDefaultChunk = 4096;
inline constexpr u64 kConjecture2DeskCap = 1'000'000;
inline constexpr u64 kConjecture2HardCap = 100'000'000;

unsigned default_workers();

struct ScanOptions {
  unsigned workers = 0;  // 0: available parallelism
  std::size_t chunk = kDefaultChunk;
  EngineOptions engine;
  bool with_witnesses = false;  // attach witnesses to streamed records
};

/// Per-chunk counters. Shortcut and search counts are deterministic; the
/// elapsed time is not.
struct ChunkStats {
  u64 from = 0;
  u64 to = 0;
  std::size_t matches = 0;
  std::size_t shortcut_decisions = 0;
  std::size_t searches = 0;
  std::chrono::microseconds elapsed{0};
};

struct ScanReport {
  u64 from = 0;
  u64 to = 0;
  Predicate predicate = Predicate::zumkeller;
  std::size_t match_count = 0;
  std::size_t non_match_count = 0;
  std::vector<u64> matches;
  std::vector<u64> unknowns;
  std::chrono::milliseconds elapsed{0};
  std::size_t chunk = kDefaultChunk;
  unsigned workers = 1;
  std::vector<ChunkStats> chunks;

  [[nodiscard]] bool complete() const noexcept { return unknowns.empty(); }
};

// Called once per match, in ascending n, from the calling thread.
using RecordSink = std::function<void(const ClassificationRecord&)>;

// Evaluates `pred` on every n in [from, to]. Output order and contents do not
// depend on the worker count.
ScanReport scan_range(Predicate pred, u64 from, u64 to, const ScanOptions& opts = {},
                      const RecordSink& sink = {});

struct Conjecture2Result {
  u64 to = 0;
  std::vector<u64> counterexamples;  // even, Zumkeller, not half-Zumkeller
  std::vector<u64> unknowns;
  std::size_t even_zumkeller = 0;
  std::chrono::milliseconds elapsed{0};
};

Conjecture2Result verify_conjecture2(u64 to, const ScanOptions& opts = {},
                                     u64 desk_cap = kConjecture2DeskCap);

struct DensityBucket {
  u64 from = 0;
  u64 to = 0;
  std::size_t abundant = 0;  // sigma(n) > 2n
  std::size_t zumkeller = 0;
  std::size_t half_zumkeller = 0;
  std::size_t unknown = 0;
  double cumulative_abundant = 0;
  double cumulative_zumkeller = 0;
  double cumulative_half_zumkeller = 0;
};

struct DensityReport {
  u64 to = 0;
  u64 bucket = 0;
  std::vector<DensityBucket> buckets;
};

DensityReport density_report(u64 to, u64 bucket, const ScanOptions& opts = {});

}  // namespace zk
