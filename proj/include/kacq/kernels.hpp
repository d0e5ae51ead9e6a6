#pragma once

#include "kacq/algebras.hpp"
#include "kacq/report.hpp"
#include "kacq/series.hpp"

namespace kacq {

// μ̂ = ∏_{α ∈ Δ₊^re} (1 − e^{−α})/(1 − t e^{−α}). Factors with zero δ-part expand
// without bound in the finite direction, so the box decides what is kept.
Series cherednik_kernel(const AffineAlgebra& g, TruncationSpec spec);
// μ̂ with t replaced by q^{tD2/2}; every denominator then has positive δ-part
// and the result is exact inside any box of size ≥ kernel_lossless_box.
Series cherednik_kernel_at(const AffineAlgebra& g, TruncationSpec spec, int tD2);
int kernel_lossless_box(const AffineAlgebra& g, int maxD2);

// μ̂^im = ∏_n ((1 − qⁿ)/(1 − t qⁿ))^{mult nδ}, rank 0.
Series imaginary_kernel(const AffineAlgebra& g, int maxD2);
// ∏_n (1 − qⁿ)^{−mult nδ}, the string function at t = 1, rank 0.
Series basic_string_function(const AffineAlgebra& g, int maxD2);
// ∏_n (1 − t qⁿ)^{−mult nδ}, rank 0.
Series imaginary_t_product(const AffineAlgebra& g, int maxD2);

// Θ_M = Σ_{γ∈M} e^γ q^{⟨γ,γ⟩/2}
Series theta_series(const AffineAlgebra& g, TruncationSpec spec);

// Box used by route B unless one is given.
int default_ct_box(const AffineAlgebra& g, int maxD2);
// ct(μ̂ Θ) to d2 ≤ maxD2 (rank 0). Terms that cannot reach the zero finite
// part within the remaining δ-budget are pruned by height.
Series ct_mu_theta(const AffineAlgebra& g, int maxD2, int box = -1);
// Recomputes ct(μ̂ Θ) at box + 2 and reports whether anything changed.
VerificationReport ct_box_stability(const AffineAlgebra& g, int maxD2, int box = -1);
// Route B: a = a(1,q) · μ̂^im · ct(μ̂ Θ), rank 0, q^k at d2 = 2k.
Series string_function_ct(const AffineAlgebra& g, int maxQ, int box = -1);

// e^{−Λ₀} ch L(Λ₀) = a(1,q) · Θ
Series basic_character_shifted(const AffineAlgebra& g, TruncationSpec spec);

// Parameters of the (C_l^∨, C_l) kernel, as q-exponents in half-units
// (k = 1 means q^{1/2}). k4Infinite drops the u₄, u′₄ factors (q^{k₄} → 0).
struct MacdonaldParams {
  int k1 = 1, k2 = 1, k3 = 2, k4 = 0, k5 = 2;
  bool k4Infinite = false;
};
Series macdonald_kernel_cc(int l, const MacdonaldParams& p, TruncationSpec spec);
int macdonald_lossless_box(int l, int maxD2);
// With k3 = k5 = 2k1 = 2k2: Δ at k4 = 0 against μ̂(A_{2l}^(2)), or Δ at k4 → ∞
// against μ̂ Θ_M (q;q)^{−l}, both at t = q^{k5}, in a lossless box.
VerificationReport macdonald_specialization_check(int l, const MacdonaldParams& p, int maxD2);

// (−q^{1/2}e^{ε}, −q^{1/2}e^{−ε}; q)∞ against (q;q)∞^{−1} Σ_n q^{n²/2} e^{nε}, rank 1
// with ε stored as 2 (doubled coordinates).
VerificationReport jacobi_triple_product_check(TruncationSpec spec);

}  // namespace kacq
