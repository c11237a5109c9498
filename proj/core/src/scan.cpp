#include "zk/scan.hpp"

#include <string>
#include <thread>

#include "zk/errors.hpp"

namespace zk {

std::string_view to_string(Predicate p) {
  switch (p) {
    case Predicate::zumkeller: return "zumkeller";
    case Predicate::half_zumkeller: return "half_zumkeller";
    case Predicate::practical: return "practical";
    case Predicate::quasi_practical: return "quasi_practical";
    case Predicate::odd_zumkeller: return "odd_zumkeller";
    case Predicate::abundant: return "abundant";
  }
  return "?";
}

std::optional<Predicate> parse_predicate(std::string_view s) {
  for (auto p : {Predicate::zumkeller, Predicate::half_zumkeller, Predicate::practical,
                 Predicate::quasi_practical, Predicate::odd_zumkeller, Predicate::abundant}) {
    if (s == to_string(p)) return p;
  }
  if (s == "half") return Predicate::half_zumkeller;
  return std::nullopt;
}

unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  Tri value = Tri::no;
  bool shortcut = true;
};

Outcome evaluate(Predicate pred, const Factorization& f, const EngineOptions& engine) {
  auto from_verdict = [](const Verdict& v) { return Outcome{v.value, v.shortcut.has_value()}; };
  switch (pred) {
    case Predicate::zumkeller: return from_verdict(is_zumkeller(f, engine));
    case Predicate::half_zumkeller: return from_verdict(is_half_zumkeller(f, engine));
    case Predicate::practical: return {is_practical(f) ? Tri::yes : Tri::no, true};
    case Predicate::quasi_practical:
      return {is_quasi_practical(f, engine.divisor_cap) ? Tri::yes : Tri::no, true};
    case Predicate::odd_zumkeller:
      if (f.is_even()) return {Tri::no, true};
      return from_verdict(is_zumkeller(f, engine));
    case Predicate::abundant:
      return {abundance_class(f) == Abundance::abundant ? Tri::yes : Tri::no, true};
  }
  return {};
}

struct ChunkResult {
  std::vector<u64> matches;
  std::vector<u64> unknowns;
  std::size_t non_matches = 0;
  ChunkStats stats;
  std::vector<ClassificationRecord> records;
};

unsigned resolve_workers(unsigned w) { return w == 0 ? default_workers() : w; }

}  // namespace

ScanReport scan_range(Predicate pred, u64 from, u64 to, const ScanOptions& opts, const RecordSink& sink) {
  if (from < 1 || from > to) throw DomainError("scan range must satisfy 1 <= from <= to");
  const auto start = Clock::now();
  ScanReport report;
  report.from = from;
  report.to = to;
  report.predicate = pred;
  report.chunk = opts.chunk;
  report.workers = resolve_workers(opts.workers);
  const ClassifyOptions record_opts{opts.engine, opts.with_witnesses};

  auto run = [&](u64 lo, u64 hi) {
    const auto t0 = Clock::now();
    ChunkResult r;
    r.stats.from = lo;
    r.stats.to = hi;
    for (u64 n = lo; n <= hi; ++n) {
      const Factorization f = factorize(n);
      const Outcome o = evaluate(pred, f, opts.engine);
      (o.shortcut ? r.stats.shortcut_decisions : r.stats.searches) += 1;
      switch (o.value) {
        case Tri::yes:
          r.matches.push_back(n);
          if (sink) r.records.push_back(classify(f, record_opts));
          break;
        case Tri::no: ++r.non_matches; break;
        case Tri::unknown: r.unknowns.push_back(n); break;
      }
    }
    r.stats.matches = r.matches.size();
    r.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
    return r;
  };
  auto consume = [&](ChunkResult&& r) {
    report.match_count += r.matches.size();
    report.non_match_count += r.non_matches;
    report.matches.insert(report.matches.end(), r.matches.begin(), r.matches.end());
    report.unknowns.insert(report.unknowns.end(), r.unknowns.begin(), r.unknowns.end());
    report.chunks.push_back(r.stats);
    if (sink) {
      for (const auto& rec : r.records) sink(rec);
    }
  };
  detail::ordered_chunks<ChunkResult>(from, to, opts.chunk, report.workers, run, consume);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

Conjecture2Result verify_conjecture2(u64 to, const ScanOptions& opts, u64 desk_cap) {
  if (to > kConjecture2HardCap) {
    throw DomainError("conjecture check limited to " + std::to_string(kConjecture2HardCap));
  }
  if (to > desk_cap) {
    throw DomainError("bound " + std::to_string(to) + " above the configured desk cap " + std::to_string(desk_cap));
  }
  const auto start = Clock::now();
  Conjecture2Result out;
  out.to = to;
  if (to < 2) return out;

  struct Partial {
    std::vector<u64> counterexamples;
    std::vector<u64> unknowns;
    std::size_t even_zumkeller = 0;
  };
  auto run = [&](u64 lo, u64 hi) {
    Partial p;
    for (u64 n = lo + (lo & 1U); n <= hi; n += 2) {
      const Factorization f = factorize(n);
      const Verdict z = is_zumkeller(f, opts.engine);
      if (z.value == Tri::unknown) {
        p.unknowns.push_back(n);
        continue;
      }
      if (z.value == Tri::no) continue;
      ++p.even_zumkeller;
      const Verdict h = is_half_zumkeller(f, opts.engine, &z);
      if (h.value == Tri::no) p.counterexamples.push_back(n);
      if (h.value == Tri::unknown) p.unknowns.push_back(n);
    }
    return p;
  };
  auto consume = [&](Partial&& p) {
    out.even_zumkeller += p.even_zumkeller;
    out.counterexamples.insert(out.counterexamples.end(), p.counterexamples.begin(), p.counterexamples.end());
    out.unknowns.insert(out.unknowns.end(), p.unknowns.begin(), p.unknowns.end());
  };
  detail::ordered_chunks<Partial>(2, to, opts.chunk, resolve_workers(opts.workers), run, consume);
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return out;
}

DensityReport density_report(u64 to, u64 bucket, const ScanOptions& opts) {
  if (bucket < 1 || to < bucket) throw DomainError("density report needs to >= bucket >= 1");
  enum : std::uint8_t { kAbundant = 1, kZumkeller = 2, kHalf = 4, kUnknown = 8 };
  auto run = [&](u64 lo, u64 hi) {
    std::vector<std::uint8_t> flags;
    flags.reserve(hi - lo + 1);
    for (u64 n = lo; n <= hi; ++n) {
      const Factorization f = factorize(n);
      std::uint8_t bits = 0;
      if (abundance_class(f) == Abundance::abundant) bits |= kAbundant;
      const Verdict z = is_zumkeller(f, opts.engine);
      const Verdict h = is_half_zumkeller(f, opts.engine, &z);
      if (z.value == Tri::yes) bits |= kZumkeller;
      if (h.value == Tri::yes) bits |= kHalf;
      if (z.value == Tri::unknown || h.value == Tri::unknown) bits |= kUnknown;
      flags.push_back(bits);
    }
    return flags;
  };

  DensityReport report;
  report.to = to;
  report.bucket = bucket;
  DensityBucket current;
  current.from = 1;
  std::size_t total_abundant = 0;
  std::size_t total_z = 0;
  std::size_t total_h = 0;
  u64 n = 1;
  auto consume = [&](std::vector<std::uint8_t>&& flags) {
    for (std::uint8_t bits : flags) {
      current.abundant += (bits & kAbundant) ? 1 : 0;
      current.zumkeller += (bits & kZumkeller) ? 1 : 0;
      current.half_zumkeller += (bits & kHalf) ? 1 : 0;
      current.unknown += (bits & kUnknown) ? 1 : 0;
      if (n % bucket == 0 || n == to) {
        current.to = n;
        total_abundant += current.abundant;
        total_z += current.zumkeller;
        total_h += current.half_zumkeller;
        const auto denom = static_cast<double>(n);
        current.cumulative_abundant = static_cast<double>(total_abundant) / denom;
        current.cumulative_zumkeller = static_cast<double>(total_z) / denom;
        current.cumulative_half_zumkeller = static_cast<double>(total_h) / denom;
        report.buckets.push_back(current);
        current = DensityBucket{};
        current.from = n + 1;
      }
      ++n;
    }
  };
  detail::ordered_chunks<std::vector<std::uint8_t>>(1, to, opts.chunk, resolve_workers(opts.workers), run,
                                                    consume);
  return report;
}

}  // namespace zk
