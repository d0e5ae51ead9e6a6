#pragma once

#include <map>
#include <memory>
#include <vector>

#include "kacq/cone_table.hpp"
#include "kacq/weyl.hpp"

namespace kacq {

// 𝔭_t(β) (or 𝔭_{s,t}(β)) for β = (finite, d2) in the root lattice with d2 ≤ maxD2.
//
// Factorized as 𝔭 = P₊ ⋆ p̊: P₊ is the product over positive roots with
// positive δ-part (finite support per grade, stored as a Series keyed by e^{+β}),
// p̊ the finite Kostant partition function of Δ̊₊, tabulated on demand.
class PartitionTable {
 public:
  PartitionTable(const AffineAlgebra& g, int maxD2, int box, bool twoVariable);
  // Smallest box that loses no term of P₊.
  static int lossless_box(const AffineAlgebra& g, int maxD2);
  // Rebuild from a stored P₊ (cache path); P₊ must have been built with the same parameters.
  PartitionTable(const AffineAlgebra& g, Series positivePart, bool twoVariable);

  int max_d2() const { return maxD2_; }
  int box() const { return box_; }
  bool two_variable() const { return twoVariable_; }
  const Series& positive_part() const { return plus_; }

  // Precomputes the finite table for a batch of lookups.
  void prepare(const std::vector<std::pair<Vec, int>>& queries);
  // Zero outside the positive cone; DomainError beyond maxD2.
  CoeffPoly value(const Vec& finite, int d2);

 private:
  struct Entry {
    std::vector<long long> coords;  // scaled simple coordinates of the finite part
    CoeffPoly c;
  };
  void index();
  std::vector<long long> coords_of(const Vec& v) const;
  bool difference(const std::vector<long long>& a, const std::vector<long long>& b, std::vector<int>& out) const;
  void ensure(const std::vector<std::vector<int>>& targets);

  const AffineAlgebra* g_;
  int maxD2_;
  int box_;
  bool twoVariable_;
  Series plus_;
  std::map<int, std::vector<Entry>> byGrade_;
  long long scale_ = 1;
  std::vector<std::vector<int>> targets_;
  std::unique_ptr<ConeTable> finite_;
};

PartitionTable t_kostant(const AffineAlgebra& g, int maxD2, int box, bool twoVariable);

// K_{λμ}(t) = Σ_w ε(w) 𝔭_t(w(λ+ρ) − (μ+ρ))
CoeffPoly kostka_poly(const AffineAlgebra& g, const AffineWeight& lambda, const AffineWeight& mu,
                      bool twoVariable = false);

// Σ_{k=0}^{maxQ} K_{λ,μ−kδ} q^k as a rank-0 series (q^k at d2 = 2k).
// Uses `table` when given (it must reach the required depth).
Series string_function_weylsum(const AffineAlgebra& g, const AffineWeight& lambda, const AffineWeight& mu, int maxQ,
                               bool twoVariable = false, PartitionTable* table = nullptr);

// δ-depth needed by string_function_weylsum for the basic representation.
int weylsum_depth(const AffineAlgebra& g, int maxQ);

}  // namespace kacq
