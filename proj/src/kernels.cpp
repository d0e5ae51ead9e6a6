#include "kacq/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kacq {

namespace {

const CoeffPoly kT = CoeffPoly::monomial(1);

int max_root_abs(const AffineAlgebra& g) {
  int m = 0;
  for (const auto& r : g.fin.roots()) m = std::max(m, r.v.max_abs());
  return std::max(m, g.alpha0.max_abs());
}

int d2_of_norm(const AffineAlgebra& g, const Vec& v) {
  Rational n = g.form(v, v);
  if (n.denominator() != 1) throw DomainError("lattice vector with non-integral norm: " + v.str());
  return static_cast<int>(n.numerator());
}

// Integer height functional: ht(x) · den = Σ w_i x_i.
struct Height {
  std::vector<long long> w;
  long long den = 1;

  explicit Height(const FiniteRootSystem& f) {
    std::vector<Rational> h(f.rank());
    for (int i = 0; i < f.rank(); ++i) {
      Vec e(f.rank());
      e[i] = 1;
      h[i] = f.height(e);
      den = std::lcm(den, h[i].denominator());
    }
    for (const auto& x : h) w.push_back(x.numerator() * (den / x.denominator()));
  }
  long long operator()(const Vec& x) const {
    long long s = 0;
    for (int i = 0; i < x.size(); ++i) s += w[i] * x[i];
    return s;
  }
};

void check_spec(TruncationSpec spec) {
  if (spec.maxD2 < 0 || spec.box < 0) throw DomainError("truncation must be nonnegative");
}

}  // namespace

Series cherednik_kernel(const AffineAlgebra& g, TruncationSpec spec) {
  check_spec(spec);
  Series x = Series::one(g.l, spec);
  for (const auto& r : positive_real_roots_up_to(g, spec.maxD2)) apply_ratio(x, {-r.finite, r.d2}, kT);
  return x;
}

Series cherednik_kernel_at(const AffineAlgebra& g, TruncationSpec spec, int tD2) {
  check_spec(spec);
  if (tD2 <= 0) throw DomainError("t must specialize to a positive power of q");
  Series x = Series::one(g.l, spec);
  const CoeffPoly one = CoeffPoly::one();
  for (const auto& r : positive_real_roots_up_to(g, spec.maxD2)) {
    Monomial m{-r.finite, r.d2};
    apply_linear(x, m, one);
    apply_geometric(x, {m.finite, m.d2 + tD2}, one);
  }
  return x;
}

int kernel_lossless_box(const AffineAlgebra& g, int maxD2) {
  // linear factors with zero δ-part are free; everything else costs a half-unit
  int free = 0;
  for (const auto& r : positive_real_roots_up_to(g, 0)) free += r.d2 == 0;
  return (std::max(0, maxD2) + free) * max_root_abs(g);
}

Series imaginary_kernel(const AffineAlgebra& g, int maxD2) {
  Series x = Series::one(0, {maxD2, 0});
  for (int n = 1; 2 * n <= maxD2; ++n)
    for (int j = 0; j < g.imaginary_mult(n); ++j) apply_ratio(x, q_power(2 * n), kT);
  return x;
}

namespace {

Series imaginary_geometric(const AffineAlgebra& g, int maxD2, const CoeffPoly& c) {
  Series x = Series::one(0, {maxD2, 0});
  for (int n = 1; 2 * n <= maxD2; ++n)
    for (int j = 0; j < g.imaginary_mult(n); ++j) apply_geometric(x, q_power(2 * n), c);
  return x;
}

}  // namespace

Series basic_string_function(const AffineAlgebra& g, int maxD2) {
  return imaginary_geometric(g, maxD2, CoeffPoly::one());
}

Series imaginary_t_product(const AffineAlgebra& g, int maxD2) { return imaginary_geometric(g, maxD2, kT); }

Series theta_series(const AffineAlgebra& g, TruncationSpec spec) {
  check_spec(spec);
  Series x(g.l, spec);
  for (const auto& v : lattice_ball(g, spec.maxD2)) x.add_to({v, d2_of_norm(g, v)}, CoeffPoly::one());
  return x;
}

int default_ct_box(const AffineAlgebra& g, int maxD2) {
  int ball = 0;
  for (const auto& v : lattice_ball(g, std::max(0, maxD2))) ball = std::max(ball, v.max_abs());
  return 2 * std::max(0, maxD2) * max_root_abs(g) + ball;
}

Series ct_mu_theta(const AffineAlgebra& g, int maxD2, int box) {
  if (maxD2 < 0) throw DomainError("maxD2 must be nonnegative");
  if (box < 0) box = default_ct_box(g, maxD2);
  const auto roots = positive_real_roots_up_to(g, maxD2);
  const Height ht(g.fin);

  // κ = p/q bounds the height gained per half-unit of δ by any remaining factor
  long long p = 0, q = 1;
  for (const auto& r : roots) {
    if (r.d2 == 0) continue;
    long long h = ht(-r.finite);  // height of e^{−α}, times ht.den
    if (h * q > p * r.d2) p = h, q = r.d2;
  }
  // both heights carry the factor ht.den, so it cancels
  KeepFn keep = [&](const Monomial& m) { return q * ht(m.finite) + p * (maxD2 - m.d2) >= 0; };

  Series h(g.l, {maxD2, box});
  for (const auto& v : lattice_ball(g, maxD2)) {
    Monomial m{v, d2_of_norm(g, v)};
    if (keep(m)) h.add_to(m, CoeffPoly::one());
  }
  // larger δ-parts first keeps the support small while it grows
  std::vector<AffineRoot> order(roots.begin(), roots.end());
  std::stable_sort(order.begin(), order.end(), [](const AffineRoot& a, const AffineRoot& b) { return a.d2 > b.d2; });
  for (const auto& r : order) apply_ratio(h, {-r.finite, r.d2}, kT, keep);
  return ct(h);
}

VerificationReport ct_box_stability(const AffineAlgebra& g, int maxD2, int box) {
  if (box < 0) box = default_ct_box(g, maxD2);
  return compare(ct_mu_theta(g, maxD2, box), ct_mu_theta(g, maxD2, box + 2), maxD2, "ct(mu theta) box " + std::to_string(box),
                 "ct(mu theta) box " + std::to_string(box + 2));
}

Series string_function_ct(const AffineAlgebra& g, int maxQ, int box) {
  if (maxQ < 0) throw DomainError("maxQ must be nonnegative");
  const int maxD2 = 2 * maxQ;
  Series a = mul(basic_string_function(g, maxD2), imaginary_kernel(g, maxD2));
  return mul(a, ct_mu_theta(g, maxD2, box));
}

Series basic_character_shifted(const AffineAlgebra& g, TruncationSpec spec) {
  Series x = theta_series(g, spec);
  for (int n = 1; 2 * n <= spec.maxD2; ++n)
    for (int j = 0; j < g.imaginary_mult(n); ++j) apply_geometric(x, {Vec(g.l), 2 * n}, CoeffPoly::one());
  return x;
}

int macdonald_lossless_box(int l, int maxD2) {
  // free linear factors: (1 − e^{−2ε_i}) and (1 − e^{−α}) for α = ε_i ± ε_j
  return (std::max(0, maxD2) + l + l * (l - 1)) * 4;
}

Series macdonald_kernel_cc(int l, const MacdonaldParams& p, TruncationSpec spec) {
  check_spec(spec);
  if (l < 1) throw DomainError("rank must be positive");
  if (p.k1 <= 0 || p.k2 <= 0 || p.k5 <= 0 || p.k3 < 0 || (!p.k4Infinite && p.k4 < 0))
    throw DomainError("kernel parameters must keep every denominator in positive q-degree");
  const AffineAlgebra g = build("A" + std::to_string(2 * l) + "~2");
  const CoeffPoly one = CoeffPoly::one(), minus = CoeffPoly::constant(-1);
  const int step = 2;  // q
  Series x = Series::one(l, spec);

  auto numerator = [&](const Monomial& a) {
    for (Monomial f = a; f.d2 <= spec.maxD2; f = f + Monomial{Vec(l), step}) apply_linear(x, f, one);
  };
  auto denominator = [&](const Monomial& a, const CoeffPoly& c) {
    for (Monomial f = a; f.d2 <= spec.maxD2; f = f + Monomial{Vec(l), step}) apply_geometric(x, f, c);
  };

  // u = (q^{k1}, −q^{k2}, q^{k3+1/2}, −q^{k4+1/2}), u′ = (q u₁, q u₂, u₃, u₄)
  struct U {
    int d2;
    CoeffPoly c;
  };
  std::vector<U> u{{p.k1, one}, {p.k2, minus}, {p.k3 + 1, one}};
  std::vector<U> up{{p.k1 + 2, one}, {p.k2 + 2, minus}, {p.k3 + 1, one}};
  if (!p.k4Infinite) {
    u.push_back({p.k4 + 1, minus});
    up.push_back({p.k4 + 1, minus});
  }

  for (const auto& e : g.fin.r1_plus()) {
    numerator({-(2 * e), 0});
    numerator({2 * e, step});
    for (const auto& v : u) denominator({-e, v.d2}, v.c);
    for (const auto& v : up) denominator({e, v.d2}, v.c);
  }
  for (const auto& a : g.fin.r2_plus()) {
    numerator({-a, 0});
    numerator({a, step});
    denominator({-a, p.k5}, one);
    denominator({a, p.k5 + step}, one);
  }
  return x;
}

VerificationReport macdonald_specialization_check(int l, const MacdonaldParams& p, int maxD2) {
  if (!(p.k3 == p.k5 && p.k5 == 2 * p.k1 && p.k1 == p.k2)) throw DomainError("the specializations need k3 = k5 = 2k1 = 2k2");
  if (!p.k4Infinite && p.k4 != 0) throw DomainError("the specializations cover k4 = 0 and k4 -> infinity");
  const AffineAlgebra g = build("A" + std::to_string(2 * l) + "~2");
  const int box = std::max(macdonald_lossless_box(l, maxD2), kernel_lossless_box(g, maxD2));
  Series delta = macdonald_kernel_cc(l, p, {maxD2, box});
  if (!p.k4Infinite) return compare(delta, cherednik_kernel_at(g, {maxD2, box}, p.k5), maxD2, "Delta(k4 = 0)", "mu");
  // the product is exact inside `box` once both factors are exact a ball radius further out
  int ball = 0;
  for (const auto& v : lattice_ball(g, maxD2)) ball = std::max(ball, v.max_abs());
  Series rhs = mul(cherednik_kernel_at(g, {maxD2, box + ball}, p.k5), theta_series(g, {maxD2, box + ball}));
  rhs = retruncate(rhs, {maxD2, box});
  for (int i = 0; i < l; ++i)
    for (int n = 1; 2 * n <= maxD2; ++n) apply_geometric(rhs, {Vec(l), 2 * n}, CoeffPoly::one());
  return compare(delta, rhs, maxD2, "Delta(k4 -> infinity)", "mu theta / (q;q)^l");
}

VerificationReport jacobi_triple_product_check(TruncationSpec spec) {
  check_spec(spec);
  const Monomial q{Vec{0}, 2};
  const CoeffPoly minus = CoeffPoly::constant(-1);
  // (1 + q^{1/2} e^{ε} qⁿ)(1 + q^{1/2} e^{−ε} qⁿ)
  Series lhs = mul(poch({Vec{2}, 1}, minus, q, spec), poch({Vec{-2}, 1}, minus, q, spec));
  Series rhs(1, spec);
  for (int n = 0; n * n <= spec.maxD2; ++n) {
    rhs.add_to({Vec{2 * n}, n * n}, CoeffPoly::one());
    if (n > 0) rhs.add_to({Vec{-2 * n}, n * n}, CoeffPoly::one());
  }
  for (int n = 1; 2 * n <= spec.maxD2; ++n) apply_geometric(rhs, {Vec{0}, 2 * n}, CoeffPoly::one());
  return compare(lhs, rhs, spec.maxD2, "(-q^1/2 e^eps, -q^1/2 e^-eps; q)", "(q;q)^-1 theta");
}

}  // namespace kacq
