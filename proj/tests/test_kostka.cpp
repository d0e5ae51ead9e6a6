#include "doctest.h"
#include "kacq/kostka.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace kacq;
using kacq::testing::poly;

namespace {

// ∏ 1/(1 − u e^α) over positive roots with d2 ≤ maxD2, multiplied out with
// plain series products in a wide box.
Series brute_kostant(const AffineAlgebra& g, int maxD2, int wide, bool twoVariable) {
  TruncationSpec spec{maxD2, wide};
  Series p = Series::one(g.l, spec);
  for (const auto& r : positive_real_roots_up_to(g, maxD2)) {
    CoeffPoly u = twoVariable && r.norm == 1 ? CoeffPoly::monomial(0, 1) : CoeffPoly::monomial(1);
    p = mul(p, inv_one_minus({r.finite, r.d2}, u, spec));
  }
  for (int n = 1; 2 * n <= maxD2; ++n)
    for (int j = 0; j < g.imaginary_mult(n); ++j) p = mul(p, inv_one_minus({Vec(g.l), 2 * n}, CoeffPoly::monomial(1), spec));
  return p;
}

Series expected_product(const std::string& id, int maxQ) {
  const auto& c = kacq::testing::kProductCoefficients.at(id);
  Series s(0, {2 * maxQ, 0});
  for (int k = 0; k <= maxQ; ++k) s.add_to(q_power(2 * k), poly(c[k]));
  return s;
}

AffineWeight l0_minus(const AffineAlgebra& g, int k) {
  AffineWeight m = lambda0(g);
  m.d2 -= 2 * k;
  return m;
}

}  // namespace

TEST_CASE("t-Kostant partition function: A2~2 values") {
  auto g = build("A2~2");
  auto table = t_kostant(g, 4, PartitionTable::lossless_box(g, 4), false);
  CHECK(table.value(Vec{0}, 0) == CoeffPoly::one());
  CHECK(table.value(Vec{0}, 2) == poly("t + t^2 + t^3"));
  CHECK(table.value(Vec{-2}, 1) == poly("t"));
  CHECK(table.value(Vec{4}, 2) == poly("2*t^2 + t^3 + t^4"));
  CHECK(table.value(Vec{0}, 4) == poly("t + 4*t^2 + 2*t^3 + 2*t^4 + t^5 + t^6"));
  CHECK(table.value(Vec{-4}, 2) == poly("t^2"));
  CHECK(table.value(Vec{2}, 3) == poly("t + 2*t^2 + 2*t^3 + t^4 + t^5"));
  CHECK(table.value(Vec{-4}, 0).is_zero());
  CHECK(table.value(Vec{0}, -2).is_zero());
  CHECK_THROWS_AS(table.value(Vec{0}, 6), DomainError);
  CHECK_THROWS_AS(t_kostant(g, 4, 3, false), BoxOverflowError);
}

TEST_CASE("t-Kostant partition function: simple roots and agreement with plain products") {
  for (const auto& [id, maxD2] : std::vector<std::pair<std::string, int>>{
           {"A2~2", 5}, {"D3~2", 4}, {"A4~2", 3}, {"D4~3", 4}, {"A3~2", 4}, {"A2~1", 4}}) {
    auto g = build(id);
    CAPTURE(id);
    PartitionTable table(g, maxD2, PartitionTable::lossless_box(g, maxD2), false);
    for (const auto& r : g.simple_roots()) CHECK(table.value(r.finite, r.d2) == poly("t"));
    CHECK(table.value(Vec(g.l), 0) == CoeffPoly::one());

    // a term lost to the wide box would make the brute side smaller, never equal
    const int small = 2, wide = 24;
    Series brute = retruncate(brute_kostant(g, maxD2, wide, false), {maxD2, small});
    std::size_t checked = 0;
    for (const auto& [m, c] : brute.terms()) {
      CHECK(table.value(m.finite, m.d2) == c);
      ++checked;
    }
    CHECK(checked > 0);
  }
  for (const auto& id : {"A5~2", "E6~2"}) {
    auto g = build(id);
    PartitionTable table(g, 2, PartitionTable::lossless_box(g, 2), false);
    for (const auto& r : g.simple_roots()) CHECK(table.value(r.finite, r.d2) == poly("t"));
  }
}

TEST_CASE("two-variable partition function") {
  auto g = build("A2~2");
  PartitionTable table(g, 4, PartitionTable::lossless_box(g, 4), true);
  CHECK(table.value(Vec{-2}, 1) == poly("s"));
  CHECK(table.value(Vec{0}, 2) == poly("t + s^2 + t*s^2"));
  CHECK_THROWS_AS(PartitionTable(build("D3~2"), 2, 8, true), DomainError);
  Series brute = retruncate(brute_kostant(g, 4, 40, true), {4, 4});
  for (const auto& [m, c] : brute.terms()) CHECK(table.value(m.finite, m.d2) == c);
  for (const auto& [m, c] : brute.terms()) CHECK(c.nonnegative());
}

TEST_CASE("Kostka-Foulkes polynomials") {
  auto g = build("A2~2");
  CHECK(kostka_poly(g, lambda0(g), lambda0(g)) == CoeffPoly::one());
  CHECK(kostka_poly(g, lambda0(g), l0_minus(g, 1)) == poly("t^3"));
  CHECK(kostka_poly(g, lambda0(g), l0_minus(g, 2)).sum_of_coefficients() == Integer(2));
  CHECK(kostka_poly(g, lambda0(g), l0_minus(g, 2)) == poly("t^2 + t^6"));
  // μ above λ: nothing contributes
  AffineWeight up = lambda0(g);
  up.d2 += 2;
  CHECK(kostka_poly(g, lambda0(g), up).is_zero());
  CHECK_THROWS_AS(kostka_poly(g, lambda0(g), delta(g)), LevelMismatchError);
  AffineWeight bad = lambda0(g);
  bad.finite = Vec{2};
  CHECK_THROWS_AS(kostka_poly(g, bad, bad), DomainError);
}

TEST_CASE("route A string functions match the closed products") {
  for (const auto& [id, maxQ] : std::vector<std::pair<std::string, int>>{
           {"A2~2", 4}, {"D3~2", 3}, {"A4~2", 2}, {"D4~3", 3}, {"A5~2", 2}, {"A1~1", 4}, {"A2~1", 3}}) {
    auto g = build(id);
    CAPTURE(id);
    Series a = string_function_weylsum(g, lambda0(g), lambda0(g), maxQ);
    CHECK(a == expected_product(id, maxQ));
    for (const auto& [m, c] : a.terms()) CHECK(c.nonnegative());
  }
  auto d = build("D3~2");
  CHECK(string_function_weylsum(d, lambda0(d), lambda0(d), 2).q_coefficient(4) == poly("t^2 + t^4 + t^6"));
  CHECK(string_function_weylsum(d, lambda0(d), lambda0(d), 0) == Series::one(0, {0, 0}));
}

TEST_CASE("route A at t = 1 counts partitions with multiplicities") {
  auto g = build("A4~2");  // mult(nδ) = 2 for all n
  Series a = substitute(string_function_weylsum(g, lambda0(g), lambda0(g), 3), 0, 0);
  // ∏(1 − qⁿ)^{-2}: 1, 2, 5, 10
  CHECK(a == kacq::testing::qseries(6, {{0, "1"}, {2, "2"}, {4, "5"}, {6, "10"}}));
}

TEST_CASE("string function is independent of the table padding") {
  auto g = build("D4~3");
  const int depth = weylsum_depth(g, 3);
  PartitionTable tight(g, depth, PartitionTable::lossless_box(g, depth), false);
  PartitionTable padded(g, depth, PartitionTable::lossless_box(g, depth) + 2, false);
  CHECK(string_function_weylsum(g, lambda0(g), lambda0(g), 3, false, &tight) ==
        string_function_weylsum(g, lambda0(g), lambda0(g), 3, false, &padded));
  PartitionTable shallow(g, 2, PartitionTable::lossless_box(g, 2), false);
  CHECK_THROWS_AS(string_function_weylsum(g, lambda0(g), lambda0(g), 3, false, &shallow), DomainError);
}

TEST_CASE("two-variable route A") {
  auto g = build("A2~2");
  Series a = string_function_weylsum(g, lambda0(g), lambda0(g), 4, true);
  Series expect(0, {8, 0});
  for (int k = 0; k <= 4; ++k) expect.add_to(q_power(2 * k), poly(kacq::testing::kTwoVariableL1[k]));
  CHECK(a == expect);
  CHECK(collapse_s_to_t(a) == string_function_weylsum(g, lambda0(g), lambda0(g), 4, false));
}
