#pragma once

#include <vector>

#include <absl/container/flat_hash_map.h>

#include "kacq/algebras.hpp"
#include "kacq/series.hpp"

namespace kacq {

// Coefficients of a product over the positive roots of a finite root system,
// indexed by points of the positive root cone (simple-root coordinates).
//   Partition: ∏ 1/(1 − u e^β)          (finite t-Kostant partition function)
//   Cherednik: ∏ (1 − e^β)/(1 − u e^β)
// Only the down-closure of the requested targets is computed.
class ConeTable {
 public:
  enum class Kind { Partition, Cherednik };

  ConeTable(const FiniteRootSystem& f, Kind kind, const std::vector<std::vector<int>>& targets,
            const CoeffPoly& u = CoeffPoly::monomial(1));

  // Zero for points with a negative coordinate; throws for points that were
  // not inside the computed closure.
  const CoeffPoly& at(const std::vector<int>& c) const;
  bool covers(const std::vector<int>& c) const;
  std::size_t size() const { return values_.size(); }

 private:
  absl::flat_hash_map<Vec, int> index_;
  std::vector<CoeffPoly> values_;
  CoeffPoly zero_;
};

}  // namespace kacq
