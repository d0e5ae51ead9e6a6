#include <random>

#include "doctest.h"
#include "kacq/identities.hpp"
#include "kacq/kernels.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace kacq;
using kacq::testing::poly;
using kacq::testing::qseries;

TEST_CASE("compare") {
  Series x = qseries(4, {{0, "1"}, {2, "t"}});
  auto same = compare(x, x, 4);
  CHECK(same.pass);
  CHECK_FALSE(same.firstDiscrepancy);
  auto r = compare(Series::one(0, {4, 0}), qseries(4, {{0, "1"}, {2, "1"}, {4, "3"}}), 4, "one", "one plus q");
  CHECK_FALSE(r.pass);
  REQUIRE(r.firstDiscrepancy);
  CHECK(r.firstDiscrepancy->at == q_power(2));
  CHECK(r.firstDiscrepancy->lhs.is_zero());
  CHECK(r.firstDiscrepancy->rhs == CoeffPoly::one());
  CHECK(r.lhsLabel == "one");
  // beyond maxD2 nothing is compared
  CHECK(compare(Series::one(0, {4, 0}), qseries(4, {{0, "1"}, {2, "1"}}), 1).pass);
  CHECK_THROWS_AS(compare(Series::one(0, {4, 0}), Series::one(1, {4, 2}), 4), SpecMismatchError);
}

TEST_CASE("twisted and ADE products") {
  auto a = build("A2~2");
  CHECK(product_mainthm(a, 2) == qseries(4, {{0, "1"}, {2, "t^3"}, {4, "t^2 + t^6"}}));
  CHECK(product_mainthm(build("D3~2"), 2).q_coefficient(4) == poly("t^2 + t^4 + t^6"));
  CHECK(product_ade(build("A1~1"), 1).q_coefficient(2) == poly("t^2"));
  CHECK(product_ade(build("A2~1"), 1).q_coefficient(2) == poly("t^2 + t^3"));
  CHECK(product_ade(build("A2~1"), 0) == Series::one(0, {0, 0}));
  CHECK_THROWS_AS(product_mainthm(build("A1~1"), 2), DomainError);
  CHECK_THROWS_AS(product_ade(a, 2), DomainError);
  CHECK_THROWS_AS(product_mainthm(a, -1), DomainError);

  for (const auto& [id, c] : kacq::testing::kProductCoefficients) {
    auto g = build(id);
    CAPTURE(id);
    Series expect(0, {12, 0});
    for (int k = 0; k <= 6; ++k) expect.add_to(q_power(2 * k), poly(c[k]));
    CHECK(product_route_c(g, 6) == expect);
  }
  // t = 1 gives ∏(1 − qⁿ)^{−mult nδ}
  for (const auto& id : catalog_ids()) {
    auto g = build(id);
    CHECK(substitute(product_mainthm(g, 10), 0, 0) == basic_string_function(g, 20));
  }
}

TEST_CASE("constant term products against ct(mu theta)") {
  for (const auto& id : {"D3~2", "A5~2", "D4~3", "A3~2"}) {
    auto g = build(id);
    CAPTURE(id);
    CHECK(compare(cmm_rhs_general(g, 3), ct_mu_theta(g, 6), 6).pass);
    CHECK(substitute(cmm_rhs_general(g, 3), 0, 0) == Series::one(0, {6, 0}));
  }
  CHECK_THROWS_AS(cmm_rhs_general(build("A2~2"), 2), DomainError);
  for (int l = 1; l <= 2; ++l) {
    auto g = build("A" + std::to_string(2 * l) + "~2");
    CAPTURE(l);
    CHECK(compare(cmm_rhs_a2l2(l, 3), ct_mu_theta(g, 6), 6).pass);
  }
  // l = 1 instance written out: (tq;q) / ((t²q²;q²)(t³q;q²))
  Series x = Series::one(0, {8, 0});
  for (int n = 1; n <= 4; ++n) apply_linear(x, q_power(2 * n), poly("t"));
  for (int n = 1; n <= 2; ++n) apply_geometric(x, q_power(4 * n), poly("t^2"));
  for (int n = 0; n <= 1; ++n) apply_geometric(x, q_power(2 + 4 * n), poly("t^3"));
  CHECK(cmm_rhs_a2l2(1, 4) == x);
}

TEST_CASE("two-variable product") {
  CHECK(two_var_product(1, 1).q_coefficient(2) == poly("s^2*t"));
  Series l1 = two_var_product(1, 6), l2 = two_var_product(2, 4);
  for (int k = 0; k <= 6; ++k) CHECK(l1.q_coefficient(2 * k) == poly(kacq::testing::kTwoVariableL1[k]));
  for (int k = 0; k <= 4; ++k) CHECK(l2.q_coefficient(2 * k) == poly(kacq::testing::kTwoVariableL2[k]));
  Series l2deep = two_var_product(2, 6);
  for (const auto& [m, c] : l2deep.terms()) CHECK(c.nonnegative());
  CHECK(collapse_s_to_t(two_var_product(1, 6)) == product_mainthm(build("A2~2"), 6));
  CHECK(collapse_s_to_t(two_var_product(2, 6)) == product_mainthm(build("A4~2"), 6));
}

TEST_CASE("principal specialization") {
  CHECK(specialization_check(build("A2~2"), 12).pass);
  CHECK(specialization_check(build("D3~2"), 12).pass);
  CHECK(specialization_check(build("D4~3"), 8).pass);
  for (const auto& id : catalog_ids()) {
    CAPTURE(id);
    CHECK(specialization_check(build(id), 10).pass);
  }
  CHECK(specialization_check(build("A1~1"), 10).pass);
  CHECK(specialization_check(build("A2~1"), 10).pass);
  CHECK(specialization_check(build("A6~2"), 10).pass);
}

TEST_CASE("property: compare is symmetric and reports the least differing monomial") {
  std::mt19937 rng(11);
  for (int k = 0; k < 300; ++k) {
    TruncationSpec spec{6, 3};
    Series a = kacq::testing::random_series(rng, 2, spec, 8);
    Series b = a;
    if (rng() % 3) {
      Series noise = kacq::testing::random_series(rng, 2, spec, 2);
      b = add(a, noise);
    }
    auto ab = compare(a, b, 6), ba = compare(b, a, 6);
    CHECK(ab.pass == ba.pass);
    CHECK(ab.pass == (a == b));
    if (!ab.pass) {
      CHECK(ab.firstDiscrepancy->at == ba.firstDiscrepancy->at);
      Series diff = sub(a, b);
      for (const auto& [m, c] : diff.terms()) CHECK_FALSE(m < ab.firstDiscrepancy->at);
    }
  }
}

TEST_CASE("property: routes B and C agree on random small cases") {
  std::mt19937 rng(3);
  std::vector<std::string> ids = {"A2~2", "A3~2", "A4~2", "D3~2", "D4~2", "D4~3", "A1~1", "A2~1", "A3~1"};
  for (int k = 0; k < 10; ++k) {
    const auto& id = ids[rng() % ids.size()];
    const int maxQ = 1 + static_cast<int>(rng() % 3);
    auto g = build(id);
    CAPTURE(id);
    CAPTURE(maxQ);
    Series c = product_route_c(g, maxQ);
    CHECK(string_function_ct(g, maxQ) == c);
    for (const auto& [m, coeff] : c.terms()) CHECK(coeff.nonnegative());
  }
}
