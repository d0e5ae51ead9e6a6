#pragma once

#include "kacq/algebras.hpp"
#include "kacq/report.hpp"
#include "kacq/series.hpp"

namespace kacq {

// Rank-0 closed forms; q^k sits at d2 = 2k and the window is {2·maxQ, 0}.

// ∏_{n≥1} ∏_{e∈E_n} (1 − t^{e+1} qⁿ)^{−1}, twisted algebras only.
Series product_mainthm(const AffineAlgebra& g, int maxQ);
// ∏_i ∏_n (1 − t^{e_i+1} qⁿ)^{−1}, simply-laced untwisted algebras only.
Series product_ade(const AffineAlgebra& g, int maxQ);
// Whichever of the two applies to g (route C).
Series product_route_c(const AffineAlgebra& g, int maxQ);

// ∏_{α∈Δ̊₊} ∏_{j≥1} (1 − t^{ht α} q^{⟨α,α⟩j/2}) / (1 − t^{ht α+1} q^{⟨α,α⟩j/2}); rejects A_{2l}^(2).
Series cmm_rhs_general(const AffineAlgebra& g, int maxQ);
// (tq;q)^l / [(t²q², t⁴q², …, t^{2l}q²; q²) (t³q, t⁵q, …, t^{2l+1}q; q²)]
Series cmm_rhs_a2l2(int l, int maxQ);
// ∏_{j even ≤ 2l} (t^j q²; q²)^{−1} ∏_{j odd ≤ 2l} (s² t^j q; q²)^{−1}
Series two_var_product(int l, int maxQ);

// a(q, q^h) against ∏_{ē∈𝔼(𝔤̊)} (1 − q^{ē+1}) / ∏_{e∈𝔼⁺(𝔤)} (1 − q^{e+1}) to q^maxQ.
VerificationReport specialization_check(const AffineAlgebra& g, int maxQ);

}  // namespace kacq
