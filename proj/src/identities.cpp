#include "kacq/identities.hpp"

#include <algorithm>

namespace kacq {

VerificationReport compare(const Series& lhs, const Series& rhs, int maxD2, std::string lhsLabel,
                           std::string rhsLabel) {
  if (lhs.rank() != rhs.rank()) throw SpecMismatchError("compared series have different ranks");
  VerificationReport r;
  r.lhsLabel = std::move(lhsLabel);
  r.rhsLabel = std::move(rhsLabel);
  r.truncation = {std::min({maxD2, lhs.spec().maxD2, rhs.spec().maxD2}), std::min(lhs.spec().box, rhs.spec().box)};
  auto inside = [&](const Monomial& m) { return m.d2 <= r.truncation.maxD2 && m.finite.max_abs() <= r.truncation.box; };

  std::vector<Monomial> support;
  for (const auto& [m, c] : lhs.terms())
    if (inside(m)) support.push_back(m);
  for (const auto& [m, c] : rhs.terms())
    if (inside(m) && !lhs.find(m)) support.push_back(m);
  std::sort(support.begin(), support.end());
  for (const auto& m : support) {
    CoeffPoly a = lhs.coefficient(m), b = rhs.coefficient(m);
    if (a == b) continue;
    r.pass = false;
    r.firstDiscrepancy = Discrepancy{m, a, b};
    break;
  }
  return r;
}

namespace {

void check_order(int maxQ) {
  if (maxQ < 0) throw DomainError("maxQ must be nonnegative");
}

Series exponent_product(int maxQ, const std::function<const std::vector<int>&(int)>& exps) {
  Series x = Series::one(0, {2 * maxQ, 0});
  for (int n = 1; n <= maxQ; ++n)
    for (int e : exps(n)) apply_geometric(x, q_power(2 * n), CoeffPoly::monomial(e + 1));
  return x;
}

}  // namespace

Series product_mainthm(const AffineAlgebra& g, int maxQ) {
  check_order(maxQ);
  if (!g.twisted()) throw DomainError(g.id + " is untwisted; use product_ade");
  return exponent_product(maxQ, [&](int n) -> const std::vector<int>& { return g.exponents_at(n); });
}

Series product_ade(const AffineAlgebra& g, int maxQ) {
  check_order(maxQ);
  if (!g.simply_laced_untwisted()) throw DomainError(g.id + " is not a simply-laced untwisted algebra");
  const auto e = exponents_from_heights(height_stats(g.fin));
  return exponent_product(maxQ, [&](int) -> const std::vector<int>& { return e; });
}

Series product_route_c(const AffineAlgebra& g, int maxQ) {
  return g.twisted() ? product_mainthm(g, maxQ) : product_ade(g, maxQ);
}

Series cmm_rhs_general(const AffineAlgebra& g, int maxQ) {
  check_order(maxQ);
  if (g.family == Family::A2l) throw DomainError("use cmm_rhs_a2l2 for " + g.id);
  Series x = Series::one(0, {2 * maxQ, 0});
  for (const auto& a : g.fin.positive_roots())
    for (int j = 1; a.norm * j <= 2 * maxQ; ++j) {
      apply_linear(x, q_power(a.norm * j), CoeffPoly::monomial(a.height));
      apply_geometric(x, q_power(a.norm * j), CoeffPoly::monomial(a.height + 1));
    }
  return x;
}

Series cmm_rhs_a2l2(int l, int maxQ) {
  check_order(maxQ);
  if (l < 1) throw DomainError("rank must be positive");
  const int maxD2 = 2 * maxQ;
  Series x = Series::one(0, {maxD2, 0});
  for (int i = 0; i < l; ++i)
    for (int n = 1; 2 * n <= maxD2; ++n) apply_linear(x, q_power(2 * n), CoeffPoly::monomial(1));
  for (int j = 2; j <= 2 * l; j += 2)
    for (int d = 4; d <= maxD2; d += 4) apply_geometric(x, q_power(d), CoeffPoly::monomial(j));
  for (int j = 3; j <= 2 * l + 1; j += 2)
    for (int d = 2; d <= maxD2; d += 4) apply_geometric(x, q_power(d), CoeffPoly::monomial(j));
  return x;
}

Series two_var_product(int l, int maxQ) {
  check_order(maxQ);
  if (l < 1) throw DomainError("rank must be positive");
  const int maxD2 = 2 * maxQ;
  Series x = Series::one(0, {maxD2, 0});
  for (int j = 1; j <= 2 * l; ++j) {
    const bool odd = j % 2 == 1;
    const CoeffPoly c = CoeffPoly::monomial(j, odd ? 2 : 0);
    for (int d = odd ? 2 : 4; d <= maxD2; d += 4) apply_geometric(x, q_power(d), c);
  }
  return x;
}

VerificationReport specialization_check(const AffineAlgebra& g, int maxQ) {
  check_order(maxQ);
  const int maxD2 = 2 * maxQ;
  // every term t^{e+1} qⁿ lands at q-degree ≥ h·n, so order ⌊maxQ/h⌋ is enough
  Series a = product_route_c(g, maxQ / g.h);
  Series lhs = substitute(rescale_q(retruncate(a, {maxD2, 0}), g.h), 2, 0);

  Series rhs = Series::one(0, {maxD2, 0});
  for (int e : exponents_from_heights(height_stats(g.fin))) apply_linear(rhs, q_power(2 * (e + 1)), CoeffPoly::one());
  for (int e : affine_exponents(g, maxQ)) apply_geometric(rhs, q_power(2 * (e + 1)), CoeffPoly::one());
  return compare(lhs, rhs, maxD2, "a(q, q^h) for " + g.id, "exponent product for " + g.id);
}

}  // namespace kacq
