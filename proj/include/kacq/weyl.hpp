#pragma once

#include <random>
#include <vector>

#include "kacq/algebras.hpp"

namespace kacq {

// (v, level, d2): finite part in doubled coordinates, level, δ-coefficient in half-units.
struct AffineWeight {
  Vec finite;
  int level = 0;
  int d2 = 0;

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  AffineWeight operator+(const AffineWeight& o) const { return {finite + o.finite, level + o.level, d2 + o.d2}; }
  AffineWeight operator-(const AffineWeight& o) const { return {finite - o.finite, level - o.level, d2 - o.d2}; }
  std::string str() const;
};

AffineWeight rho(const AffineAlgebra& g);      // (ρ̄, h∨, 0)
AffineWeight lambda0(const AffineAlgebra& g);  // (0, 1, 0)
AffineWeight delta(const AffineAlgebra& g);    // (0, 0, 2)
AffineWeight from_root(const AffineRoot& a);

// ⟨(v,k,d),(v′,k′,d′)⟩ = ⟨v,v′⟩ + k·d′ + k′·d
Rational pairing(const AffineAlgebra& g, const AffineWeight& a, const AffineWeight& b);

// t_γ; throws DomainError if γ ∉ M.
AffineWeight translate(const AffineAlgebra& g, const Vec& gamma, const AffineWeight& x);

// Acts as Λ ↦ w̄(t_γ Λ).
struct WeylElement {
  FiniteWeylElement fin;
  Vec gamma;
  int sign = 1;
};

WeylElement identity_element(const AffineAlgebra& g);
WeylElement translation(const AffineAlgebra& g, const Vec& gamma);
// Simple reflection s_i of the affine Weyl group, i = 0 the affine node.
WeylElement simple_reflection(const AffineAlgebra& g, int i);
AffineWeight apply(const AffineAlgebra& g, const WeylElement& w, const AffineWeight& x);
// (w̄₁,γ₁)∘(w̄₂,γ₂) = (w̄₁w̄₂, w̄₂⁻¹γ₁ + γ₂)
WeylElement compose(const WeylElement& a, const WeylElement& b);
// Λ − ⟨Λ, α_i∨⟩ α_i, directly from the reflection formula.
AffineWeight reflect(const AffineAlgebra& g, int i, const AffineWeight& x);
WeylElement random_element(const AffineAlgebra& g, std::mt19937_64& rng, int maxNorm2);
int determinant(const FiniteWeylElement& w);

bool is_dominant_regular(const AffineAlgebra& g, const AffineWeight& x);

struct Contribution {
  WeylElement w;
  AffineWeight defect;  // w(λ+ρ) − (μ+ρ), level 0
};

// All w with w(λ+ρ) − (μ+ρ) in the positive root cone and δ-part ≤ maxD2/2,
// sorted by (defect d2, defect finite part).
std::vector<Contribution> enumerate_contributing(const AffineAlgebra& g, const AffineWeight& lambdaPlusRho,
                                                 const AffineWeight& muPlusRho, int maxD2);

}  // namespace kacq
