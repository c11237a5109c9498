#include "zk/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "zk/errors.hpp"

namespace zk {

using nlohmann::json;

namespace {

json witness_json(const PartitionWitness& w) {
  std::vector<u64> a = w.part_a;
  std::vector<u64> b = w.part_b;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return json{{"n", w.n}, {"kind", to_string(w.kind)}, {"part_a", a}, {"part_b", b}};
}

json record_json(const ClassificationRecord& r) {
  json j{{"n", r.n},
         {"sigma", r.sigma},
         {"abundance", to_string(r.abundance)},
         {"zumkeller", to_string(r.zumkeller)},
         {"half_zumkeller", to_string(r.half_zumkeller)},
         {"practical", r.practical},
         {"quasi_practical", r.quasi_practical}};
  if (auto s = r.shortcut()) {
    j["shortcut"] = *s;
  } else {
    j["shortcut"] = nullptr;
  }
  if (r.zumkeller_witness || r.half_witness) {
    json w = json::object();
    if (r.zumkeller_witness) w["zumkeller"] = witness_json(*r.zumkeller_witness);
    if (r.half_witness) w["half_zumkeller"] = witness_json(*r.half_witness);
    j["witnesses"] = std::move(w);
  }
  if (!r.cause.empty()) j["cause"] = r.cause;
  return j;
}

}  // namespace

std::string witness_to_json(const PartitionWitness& w) { return witness_json(w).dump(); }

PartitionWitness witness_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    const auto unsigned_array = [&](const char* key) {
      const auto& v = j.at(key);
      if (!v.is_array() || !std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number_unsigned(); })) {
        throw DomainError(std::string("witness field ") + key + " must hold non-negative integers");
      }
      return v.get<std::vector<u64>>();
    };
    if (!j.at("n").is_number_unsigned()) throw DomainError("witness n must be a positive integer");
    PartitionWitness w;
    w.n = j.at("n").get<u64>();
    const auto kind = parse_witness_kind(j.at("kind").get<std::string>());
    if (!kind) throw DomainError("unknown witness kind");
    w.kind = *kind;
    w.part_a = unsigned_array("part_a");
    w.part_b = unsigned_array("part_b");
    return w;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed witness JSON: ") + e.what());
  }
}

std::string record_to_json(const ClassificationRecord& r) { return record_json(r).dump(); }

std::string record_csv_header() {
  return "n,sigma,abundance,zumkeller,half_zumkeller,practical,quasi_practical,shortcut";
}

std::string record_to_csv(const ClassificationRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << r.sigma << ',' << to_string(r.abundance) << ',' << to_string(r.zumkeller) << ','
     << to_string(r.half_zumkeller) << ',' << (r.practical ? "true" : "false") << ','
     << (r.quasi_practical ? "true" : "false") << ',' << r.shortcut().value_or("");
  return os.str();
}

std::string scan_report_to_json(const ScanReport& r) {
  json chunks = json::array();
  for (const auto& c : r.chunks) {
    chunks.push_back({{"from", c.from},
                      {"to", c.to},
                      {"matches", c.matches},
                      {"shortcut_decisions", c.shortcut_decisions},
                      {"searches", c.searches},
                      {"elapsed_us", c.elapsed.count()}});
  }
  json j{{"summary", true},
         {"predicate", to_string(r.predicate)},
         {"from", r.from},
         {"to", r.to},
         {"matches", r.match_count},
         {"non_matches", r.non_match_count},
         {"unknowns", r.unknowns},
         {"complete", r.complete()},
         {"elapsed_ms", r.elapsed.count()},
         {"chunk", r.chunk},
         {"workers", r.workers},
         {"chunks", std::move(chunks)}};
  return j.dump();
}

std::string conjecture2_to_json(const Conjecture2Result& r) {
  json j{{"property", "conjecture2"},
         {"to", r.to},
         {"even_zumkeller", r.even_zumkeller},
         {"counterexamples", r.counterexamples},
         {"unknowns", r.unknowns},
         {"pass", r.counterexamples.empty() && r.unknowns.empty()},
         {"elapsed_ms", r.elapsed.count()}};
  return j.dump();
}

std::string density_to_json(const DensityReport& r) {
  json buckets = json::array();
  for (const auto& b : r.buckets) {
    buckets.push_back({{"from", b.from},
                       {"to", b.to},
                       {"abundant", b.abundant},
                       {"zumkeller", b.zumkeller},
                       {"half_zumkeller", b.half_zumkeller},
                       {"unknown", b.unknown},
                       {"cumulative_abundant", b.cumulative_abundant},
                       {"cumulative_zumkeller", b.cumulative_zumkeller},
                       {"cumulative_half_zumkeller", b.cumulative_half_zumkeller}});
  }
  return json{{"to", r.to}, {"bucket", r.bucket}, {"buckets", std::move(buckets)}}.dump();
}

}  // namespace zk
