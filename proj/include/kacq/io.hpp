#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kacq/kostka.hpp"
#include "kacq/report.hpp"
#include "kacq/series.hpp"

namespace kacq {

// {"rank","maxD2","box","terms":[{"finite":[..],"d2":n,"coeff":[[t,s,"c"],..]}]}, terms in (d2, finite) order.
nlohmann::ordered_json series_to_json(const Series& x);
// Throws SpecMismatchError on anything malformed.
Series series_from_json(const nlohmann::json& j);
nlohmann::ordered_json report_to_json(const VerificationReport& r);

std::uint64_t fnv1a64(std::string_view bytes);

// On-disk store for the positive part of partition tables, one canonical JSON
// file per (algebra, maxD2, box, twoVariable).
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::filesystem::path path_for(const std::string& algebra, int maxD2, int box, bool twoVariable) const;
  // nullopt on a miss; a corrupt or mismatched file is reported through `warning`.
  std::optional<Series> load(const std::string& algebra, int maxD2, int box, bool twoVariable,
                             std::string* warning) const;
  void store(const std::string& algebra, int maxD2, int box, bool twoVariable, const Series& plus) const;

 private:
  std::filesystem::path dir_;
};

// Partition table for the basic string function to maxQ, through the cache when one is given.
PartitionTable cached_partition_table(const AffineAlgebra& g, int maxQ, int boxPadding, bool twoVariable,
                                      const TableCache* cache, std::string* warning);

}  // namespace kacq
