#include <random>

#include "doctest.h"
#include "kacq/series.hpp"
#include "test_util.hpp"

using namespace kacq;
using kacq::testing::poly;
using kacq::testing::qseries;

namespace {

Monomial e1(int doubled, int d2) { return Monomial{Vec{doubled}, d2}; }

// Plain integer-array expansion of ∏_{n≥1}(1 − q^n) up to degree n.
std::vector<long long> euler_oracle(int n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int d = n; d >= k; --d) c[d] -= c[d - k];
  return c;
}

}  // namespace

TEST_CASE("CoeffPoly basics") {
  CHECK(poly("t^2 + t^6") == CoeffPoly::monomial(2) + CoeffPoly::monomial(6));
  CHECK((poly("1 + t") * poly("1 - t")) == poly("1 - t^2"));
  CHECK((poly("t") - poly("t")).is_zero());
  CHECK(poly("2*s^2*t").at(1, 2) == Integer(2));
  CHECK(poly("s*t + s^2").s_to_t() == poly("2*t^2"));
  CHECK(poly("t^3 - 2*t").str() == "-2*t + t^3");
  CHECK(poly("t^3 - 2*t").sum_of_coefficients() == Integer(-1));
}

TEST_CASE("add") {
  const int N = 8;
  auto one_plus_tq = qseries(N, {{0, "1"}, {2, "t"}});
  auto minus_tq = qseries(N, {{2, "-t"}});
  CHECK(add(one_plus_tq, minus_tq) == qseries(N, {{0, "1"}}));
  CHECK(add(one_plus_tq, Series(0, {N, 0})) == one_plus_tq);
  CHECK(add(qseries(N, {{2, "t^2"}}), qseries(N, {{2, "t^2"}})) == qseries(N, {{2, "2*t^2"}}));
  CHECK_THROWS_AS(add(qseries(4, {}), qseries(6, {})), SpecMismatchError);
}

TEST_CASE("mul") {
  CHECK(mul(qseries(8, {{0, "1"}, {2, "t"}}), qseries(8, {{0, "1"}, {2, "-t"}})) == qseries(8, {{0, "1"}, {4, "-t^2"}}));
  TruncationSpec spec{4, 4};
  auto a = Series::term(1, spec, e1(2, 1), CoeffPoly::one());
  auto b = Series::term(1, spec, e1(-2, 1), CoeffPoly::one());
  CHECK(mul(a, b) == Series::term(1, spec, e1(0, 2), CoeffPoly::one()));
  auto geo = qseries(6, {{0, "1"}, {2, "1"}, {4, "1"}, {6, "1"}});
  CHECK(mul(geo, qseries(6, {{0, "1"}, {2, "-1"}})) == qseries(6, {{0, "1"}}));
  CHECK_THROWS_AS(mul(qseries(4, {}), Series(1, {4, 0})), SpecMismatchError);
}

TEST_CASE("inv_one_minus") {
  CHECK(inv_one_minus(q_power(2), CoeffPoly::one(), {6, 0}) == qseries(6, {{0, "1"}, {2, "1"}, {4, "1"}, {6, "1"}}));
  CHECK(inv_one_minus(q_power(4), poly("t^2"), {6, 0}) == qseries(6, {{0, "1"}, {4, "t^2"}}));
  Series boxed(1, {0, 4});
  boxed.add_to(e1(0, 0), poly("1"));
  boxed.add_to(e1(-2, 0), poly("t"));
  boxed.add_to(e1(-4, 0), poly("t^2"));
  CHECK(inv_one_minus(e1(-2, 0), poly("t"), {0, 4}) == boxed);
  CHECK_THROWS_AS(inv_one_minus(e1(0, 0), poly("t"), {4, 4}), DivergenceError);
  CHECK_THROWS_AS(inv_one_minus(e1(2, -1), poly("t"), {4, 4}), DivergenceError);
}

TEST_CASE("poch") {
  CHECK(poch(q_power(2), poly("t"), q_power(2), {4, 0}) == qseries(4, {{0, "1"}, {2, "-t"}, {4, "-t"}}));
  auto euler = euler_oracle(4);
  Series expected(0, {8, 0});
  for (int d = 0; d <= 4; ++d) expected.add_to(q_power(2 * d), CoeffPoly::constant(euler[d]));
  CHECK(poch(q_power(2), CoeffPoly::one(), q_power(2), {8, 0}) == expected);
  CHECK(expected == qseries(8, {{0, "1"}, {2, "-1"}, {4, "-1"}}));
  CHECK(poch(q_power(2), poly("t^3"), q_power(4), {6, 0}) == qseries(6, {{0, "1"}, {2, "-t^3"}, {6, "-t^3"}}));
  CHECK_THROWS_AS(poch(q_power(2), poly("t"), q_power(0), {4, 0}), DivergenceError);
}

TEST_CASE("Euler product against the array oracle to q^30") {
  auto euler = euler_oracle(30);
  auto s = poch(q_power(2), CoeffPoly::one(), q_power(2), {60, 0});
  for (int d = 0; d <= 30; ++d) CHECK(s.q_coefficient(2 * d) == CoeffPoly::constant(euler[d]));
}

TEST_CASE("ct") {
  TruncationSpec spec{8, 8};
  Series theta(1, spec);
  for (int n = -2; n <= 2; ++n) theta.add_to(e1(2 * n, n * n), CoeffPoly::one());
  CHECK(ct(theta) == qseries(8, {{0, "1"}}));
  CHECK(ct(mul(Series::term(1, spec, e1(-2, 0), CoeffPoly::one()), theta)) == qseries(8, {{1, "1"}}));
  Series x(1, spec);
  x.add_to(e1(0, 0), poly("1"));
  x.add_to(e1(2, 2), poly("3"));
  x.add_to(e1(0, 4), poly("5"));
  CHECK(ct(x) == qseries(8, {{0, "1"}, {4, "5"}}));
}

TEST_CASE("substitute and rescale") {
  CHECK(substitute(qseries(8, {{2, "t^3"}}), 2, 0) == qseries(8, {{8, "1"}}));
  CHECK(substitute(qseries(20, {{0, "1"}, {4, "t^2"}}), 6, 0) == qseries(20, {{0, "1"}, {16, "1"}}));
  CHECK(substitute(qseries(8, {{2, "s^2*t"}}), 2, 2) == qseries(8, {{8, "1"}}));
  Series notq = Series::term(1, {4, 4}, e1(2, 0), CoeffPoly::one());
  CHECK_THROWS_AS(substitute(notq, 2, 0), NotAQSeriesError);
  CHECK(rescale_q(qseries(8, {{0, "1"}, {2, "1"}}), 2) == qseries(8, {{0, "1"}, {4, "1"}}));
  CHECK(rescale_q(qseries(8, {{1, "t"}}), 2) == qseries(8, {{2, "t"}}));
  CHECK(rescale_q(qseries(8, {{0, "1"}}), 5) == qseries(8, {{0, "1"}}));
  CHECK(rescale_q(qseries(4, {{0, "1"}, {4, "1"}}), 2) == qseries(4, {{0, "1"}}));
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(5);
  TruncationSpec spec{6, 3};
  for (int trial = 0; trial < 40; ++trial) {
    auto a = kacq::testing::random_series(rng, 2, spec, 6);
    auto b = kacq::testing::random_series(rng, 2, spec, 6);
    auto c = kacq::testing::random_series(rng, 2, spec, 6);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(add(a, b) == add(b, a));
    // box 9 holds every triple product of box-3 terms exactly
    TruncationSpec wide{6, 9};
    auto A = retruncate(a, wide), B = retruncate(b, wide), C = retruncate(c, wide);
    CHECK(mul(mul(A, B), C) == mul(A, mul(B, C)));
    CHECK(mul(A, add(B, C)) == add(mul(A, B), mul(A, C)));
  }
}

TEST_CASE("geometric inverse times its factor is one") {
  TruncationSpec spec{10, 12};
  std::vector<std::pair<Monomial, CoeffPoly>> cases = {
      {Monomial{Vec{2, -2}, 1}, poly("t")},
      {Monomial{Vec{0, 0}, 2}, poly("1")},
      {Monomial{Vec{-2, 0}, 0}, poly("t")},
      {Monomial{Vec{4, 2}, 3}, poly("s^2*t + 1")},
  };
  for (const auto& [m, c] : cases) {
    auto inv = inv_one_minus(m, c, spec);
    auto factor = Series::one(2, spec);
    factor.add_to(m, -c);
    CHECK(mul(inv, factor) == Series::one(2, spec));
  }
}

TEST_CASE("in-place factor application matches explicit products") {
  std::mt19937 rng(17);
  TruncationSpec spec{8, 6};
  TruncationSpec wide{8, 40};  // reference products are formed untruncated in the box
  for (int trial = 0; trial < 20; ++trial) {
    auto x = kacq::testing::random_series(rng, 2, spec, 8);
    auto X = retruncate(x, wide);
    Monomial e{Vec{2, 0}, 1};
    auto c = poly("t");
    auto inv = inv_one_minus(e, c, wide);
    auto g = x;
    apply_geometric(g, e, c);
    CHECK(g == retruncate(mul(X, inv), spec));
    auto r = x;
    apply_ratio(r, e, c);
    auto num = Series::one(2, wide);
    num.add_to(e, poly("-1"));
    CHECK(r == retruncate(mul(mul(X, num), inv), spec));
    auto l = x;
    apply_linear(l, e, c);
    auto lin = Series::one(2, wide);
    lin.add_to(e, -c);
    CHECK(l == retruncate(mul(X, lin), spec));
  }
}

TEST_CASE("ct is linear and idempotent") {
  std::mt19937 rng(23);
  TruncationSpec spec{6, 2};
  for (int trial = 0; trial < 20; ++trial) {
    auto a = kacq::testing::random_series(rng, 1, spec, 10);
    auto b = kacq::testing::random_series(rng, 1, spec, 10);
    CHECK(ct(add(a, b)) == add(ct(a), ct(b)));
    CHECK(ct(ct(a)) == ct(a));
  }
}
