#pragma once

#include <string>
#include <string_view>

#include "zk/classify.hpp"
#include "zk/partition.hpp"
#include "zk/scan.hpp"

namespace zk {

// Witness JSON: {"n":..,"kind":"zumkeller"|"half_zumkeller","part_a":[..],"part_b":[..]}
// with ascending arrays.
std::string witness_to_json(const PartitionWitness& w);
// Throws DomainError on malformed input. Does not verify the partition.
PartitionWitness witness_from_json(std::string_view text);

// One line of JSONL: {"n","sigma","abundance","zumkeller","half_zumkeller",
// "practical","quasi_practical","shortcut"}; witnesses are appended under
// "witnesses" when present.
std::string record_to_json(const ClassificationRecord& r);
std::string record_csv_header();
std::string record_to_csv(const ClassificationRecord& r);

std::string scan_report_to_json(const ScanReport& r);
std::string conjecture2_to_json(const Conjecture2Result& r);
std::string density_to_json(const DensityReport& r);

}  // namespace zk
