#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zk/arith.hpp"
#include "zk/classify.hpp"
#include "zk/construct.hpp"
#include "zk/errors.hpp"
#include "zk/io.hpp"
#include "zk/partition.hpp"
#include "zk/scan.hpp"
#include "zk/verify.hpp"

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kUnknown = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string seed = "C0FFEE";
  unsigned restarts = 64;
  std::size_t max_divisors = zk::kDefaultDivisorCap;
  unsigned jobs = 0;
};

zk::u64 parse_positive(const std::string& text, const char* what) {
  zk::u64 v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || v == 0 || v > zk::kMaxN) {
    throw UsageError(std::string(what) + " must be an integer in [1, 2^63-1], got '" + text + "'");
  }
  return v;
}

zk::u64 parse_hex(std::string text) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) text = text.substr(2);
  zk::u64 v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v, 16);
  if (text.empty() || ec != std::errc{} || ptr != end) throw UsageError("--seed expects a hex value");
  return v;
}

zk::EngineOptions engine_options(const Globals& g) {
  zk::EngineOptions e;
  e.seed = parse_hex(g.seed);
  e.restarts = g.restarts;
  e.divisor_cap = g.max_divisors;
  return e;
}

zk::ScanOptions scan_options(const Globals& g) {
  zk::ScanOptions s;
  s.engine = engine_options(g);
  s.workers = g.jobs;
  return s;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_table(const zk::ClassificationRecord& r) {
  auto row = [](std::string_view key, const std::string& value) {
    std::cout << std::left << std::setw(16) << key << value << '\n';
  };
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  row("n", std::to_string(r.n));
  row("sigma", std::to_string(r.sigma));
  row("abundance", std::string(zk::to_string(r.abundance)));
  row("zumkeller", std::string(zk::to_string(r.zumkeller)));
  row("half_zumkeller", std::string(zk::to_string(r.half_zumkeller)));
  row("practical", yn(r.practical));
  row("quasi_practical", yn(r.quasi_practical));
  row("shortcut", r.shortcut().value_or("-"));
  if (r.zumkeller_witness) row("witness", zk::witness_to_json(*r.zumkeller_witness));
  if (r.half_witness) row("half_witness", zk::witness_to_json(*r.half_witness));
  if (!r.cause.empty()) row("cause", r.cause);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zumkeller, half-Zumkeller, practical and quasi-practical numbers"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for the randomized engine (hex)")->capture_default_str();
  app.add_option("--restarts", g.restarts, "Restarts for the randomized engine")->capture_default_str();
  app.add_option("--max-divisors", g.max_divisors, "Divisor count cap")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads (0: available parallelism)")->capture_default_str();

  int code = kOk;

  auto* classify = app.add_subcommand("classify", "Classify one integer");
  std::string classify_n;
  bool classify_witness = false;
  bool classify_table = false;
  classify->add_option("n", classify_n, "Positive integer")->required();
  classify->add_flag("--witness", classify_witness, "Embed partition witnesses");
  auto* json_flag = classify->add_flag("--json", "JSON output (default)");
  classify->add_flag("--table", classify_table, "Human-readable table")->excludes(json_flag);
  classify->callback([&] {
    const auto n = parse_positive(classify_n, "n");
    const auto r = zk::classify(n, {engine_options(g), classify_witness});
    if (classify_table) {
      print_table(r);
    } else {
      std::cout << zk::record_to_json(r) << '\n';
    }
    if (r.zumkeller == zk::Tri::unknown || r.half_zumkeller == zk::Tri::unknown) code = kUnknown;
  });

  auto* witness = app.add_subcommand("witness", "Print a partition witness");
  std::string witness_n;
  std::string witness_kind = "zumkeller";
  witness->add_option("n", witness_n, "Positive integer")->required();
  witness->add_option("--kind", witness_kind, "zumkeller or half")->capture_default_str();
  witness->callback([&] {
    const auto n = parse_positive(witness_n, "n");
    const auto kind = zk::parse_witness_kind(witness_kind);
    if (!kind) throw UsageError("unknown witness kind '" + witness_kind + "'");
    const auto f = zk::factorize(n);
    const auto opts = engine_options(g);
    const auto v = *kind == zk::WitnessKind::zumkeller ? zk::is_zumkeller(f, opts) : zk::is_half_zumkeller(f, opts);
    if (v.value == zk::Tri::unknown) {
      std::cerr << "undecided: " << v.cause << '\n';
      code = kUnknown;
      return;
    }
    if (v.value == zk::Tri::no) {
      std::cerr << "no witness exists for " << n << '\n';
      code = kFailed;
      return;
    }
    auto w = v.witness;
    if (!w) {
      // Decided by a rule; run the search to produce the certificate.
      const auto d = zk::divisors(f, opts.divisor_cap);
      w = *kind == zk::WitnessKind::zumkeller ? zk::search_zumkeller(d, opts).witness
                                               : zk::search_half_zumkeller(d, opts).witness;
    }
    if (!w) {
      std::cerr << "search found no witness for " << n << '\n';
      code = kFailed;
      return;
    }
    std::cout << zk::witness_to_json(*w) << '\n';
  });

  auto* check = app.add_subcommand("verify-witness", "Check a witness JSON file ('-' for stdin)");
  std::string check_path;
  check->add_option("file", check_path, "Witness file or -")->required();
  check->callback([&] {
    const auto w = zk::witness_from_json(read_input(check_path));
    const bool ok = zk::verify_witness(w);
    std::cout << R"({"n":)" << w.n << R"(,"valid":)" << (ok ? "true" : "false") << "}\n";
    if (!ok) code = kFailed;
  });

  auto* lift = app.add_subcommand("lift", "Lift a witness to a larger number");
  std::string lift_path;
  std::string lift_op;
  zk::u64 lift_prime = 0;
  std::size_t lift_index = 0;
  unsigned lift_power = 1;
  lift->add_option("file", lift_path, "Witness file or -")->required();
  lift->add_option("--op", lift_op, "coprime, same-prime or double")
      ->required()
      ->check(CLI::IsMember({"coprime", "same-prime", "double"}));
  lift->add_option("--prime", lift_prime, "Prime for the coprime lift");
  lift->add_option("--index", lift_index, "0-based prime index for the same-prime lift");
  lift->add_option("--power", lift_power, "Exponent l")->capture_default_str();
  lift->callback([&] {
    const auto w = zk::witness_from_json(read_input(lift_path));
    if (!zk::verify_witness(w)) {
      std::cerr << "input witness does not verify\n";
      code = kFailed;
      return;
    }
    zk::PartitionWitness out;
    if (lift_op == "coprime") {
      if (lift_prime == 0) throw UsageError("--prime is required for the coprime lift");
      out = zk::lift_coprime_prime_power(w, lift_prime, lift_power);
    } else if (lift_op == "same-prime") {
      out = zk::lift_same_prime(w, lift_index, lift_power);
    } else {
      out = zk::double_to_half(w);
    }
    std::cout << zk::witness_to_json(out) << '\n';
  });

  auto* fact = app.add_subcommand("factorial", "Zumkeller witness for m!");
  unsigned fact_m = 0;
  fact->add_option("m", fact_m, "3 <= m <= 20")->required();
  fact->callback([&] { std::cout << zk::witness_to_json(zk::factorial_witness(fact_m, g.max_divisors)) << '\n'; });

  auto* scan = app.add_subcommand("scan", "Scan a range for a predicate");
  std::string scan_pred = "zumkeller";
  std::string scan_from = "1";
  std::string scan_to;
  std::size_t scan_chunk = zk::kDefaultChunk;
  bool scan_csv = false;
  bool scan_witness = false;
  scan->add_option("--predicate", scan_pred, "zumkeller, half_zumkeller, practical, quasi_practical, "
                                             "odd_zumkeller or abundant")
      ->capture_default_str();
  scan->add_option("--from", scan_from, "First n")->capture_default_str();
  scan->add_option("--to", scan_to, "Last n")->required();
  scan->add_option("--chunk", scan_chunk, "Chunk size")->capture_default_str();
  auto* scan_json = scan->add_flag("--json", "JSONL output (default)");
  scan->add_flag("--csv", scan_csv, "CSV output")->excludes(scan_json);
  scan->add_flag("--witness", scan_witness, "Embed witnesses in records");
  scan->callback([&] {
    const auto pred = zk::parse_predicate(scan_pred);
    if (!pred) throw UsageError("unknown predicate '" + scan_pred + "'");
    const auto from = parse_positive(scan_from, "--from");
    const auto to = parse_positive(scan_to, "--to");
    if (from > to) throw UsageError("--from must not exceed --to");
    auto opts = scan_options(g);
    opts.chunk = scan_chunk;
    opts.with_witnesses = scan_witness;
    if (scan_csv) std::cout << zk::record_csv_header() << '\n';
    const auto report = zk::scan_range(*pred, from, to, opts, [&](const zk::ClassificationRecord& r) {
      std::cout << (scan_csv ? zk::record_to_csv(r) : zk::record_to_json(r)) << '\n';
    });
    if (scan_csv) {
      std::cerr << zk::scan_report_to_json(report) << '\n';
    } else {
      std::cout << zk::scan_report_to_json(report) << '\n';
    }
    if (!report.complete()) {
      std::cerr << report.unknowns.size() << " undecided values\n";
      code = kUnknown;
    }
  });

  auto* verify = app.add_subcommand("verify", "Check an empirical property");
  std::string verify_property;
  std::optional<zk::u64> verify_to;
  std::size_t verify_chains = 100;
  zk::u64 desk_cap = zk::kConjecture2DeskCap;
  std::string names;
  for (auto n : zk::property_names()) names += (names.empty() ? "" : ", ") + std::string(n);
  verify->add_option("--property", verify_property, "One of: " + names + ", all")->required();
  verify->add_option("--to", verify_to, "Upper bound (property default when absent)");
  verify->add_option("--chains", verify_chains, "Random lift chains")->capture_default_str();
  verify->add_option("--desk-cap", desk_cap, "Largest bound accepted for conjecture2")->capture_default_str();
  verify->callback([&] {
    zk::PropertyOptions opts;
    opts.to = verify_to;
    opts.scan = scan_options(g);
    opts.chains = verify_chains;
    opts.seed = opts.scan.engine.seed;
    opts.desk_cap = desk_cap;
    std::vector<std::string_view> selected;
    if (verify_property == "all") {
      selected = zk::property_names();
    } else {
      selected.push_back(verify_property);
    }
    bool failed = false;
    bool unknown = false;
    for (auto name : selected) {
      const auto r = zk::run_property(name, opts);
      std::cout << zk::property_to_json(r) << std::endl;
      failed = failed || !r.failures.empty();
      unknown = unknown || !r.unknowns.empty();
    }
    code = failed ? kFailed : unknown ? kUnknown : kOk;
  });

  auto* density = app.add_subcommand("density", "Per-bucket densities of abundant and Zumkeller numbers");
  std::string density_to;
  std::string density_bucket;
  density->add_option("--to", density_to, "Last n")->required();
  density->add_option("--bucket", density_bucket, "Bucket size")->required();
  density->callback([&] {
    const auto to = parse_positive(density_to, "--to");
    const auto bucket = parse_positive(density_bucket, "--bucket");
    if (bucket > to) throw UsageError("--bucket must not exceed --to");
    const auto r = zk::density_report(to, bucket, scan_options(g));
    std::cout << zk::density_to_json(r) << '\n';
    for (const auto& b : r.buckets) {
      if (b.unknown != 0) code = kUnknown;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const zk::CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return kUnknown;
  } catch (const zk::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const zk::RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}
