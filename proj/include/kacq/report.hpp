#pragma once

#include <optional>
#include <string>

#include "kacq/series.hpp"

namespace kacq {

struct Discrepancy {
  Monomial at;
  CoeffPoly lhs;
  CoeffPoly rhs;
};

struct VerificationReport {
  std::string lhsLabel;
  std::string rhsLabel;
  TruncationSpec truncation;
  bool pass = true;
  std::optional<Discrepancy> firstDiscrepancy;  // present iff !pass
};

// Exact comparison of all coefficients with d2 ≤ maxD2 inside both windows;
// the first discrepancy is reported in canonical (d2, finite) order.
VerificationReport compare(const Series& lhs, const Series& rhs, int maxD2, std::string lhsLabel = "lhs",
                           std::string rhsLabel = "rhs");

}  // namespace kacq
