#include "kacq/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kacq {

namespace {

int to_int(const Rational& x, const char* what) {
  if (x.denominator() != 1) throw DomainError(what);
  return static_cast<int>(x.numerator());
}

FiniteWeylElement fin_identity(const AffineAlgebra& g) { return FiniteWeylElement::identity(g.l); }

// Reflection in an arbitrary finite root.
FiniteWeylElement reflection_in(const AffineAlgebra& g, const Vec& alpha) {
  const int l = g.l;
  Rational n2 = g.form(alpha, alpha);
  std::vector<Rational> m(l * l);
  long long den = 1;
  for (int k = 0; k < l; ++k) {
    Vec e(l);
    e[k] = 1;
    Rational c = 2 * g.form(e, alpha) / n2;
    for (int j = 0; j < l; ++j) {
      m[j * l + k] = Rational(j == k ? 1 : 0) - c * alpha[j];
      den = std::lcm(den, m[j * l + k].denominator());
    }
  }
  FiniteWeylElement w;
  w.rank = l;
  w.den = static_cast<int>(den);
  w.sign = -1;
  for (const auto& x : m) w.mat.push_back(static_cast<int>((x * den).numerator()));
  w.reduce();
  return w;
}

}  // namespace

std::string AffineWeight::str() const {
  return "(" + finite.str() + ", " + std::to_string(level) + ", " + std::to_string(d2) + "/2)";
}

AffineWeight rho(const AffineAlgebra& g) { return {g.fin.rho(), g.hDual, 0}; }
AffineWeight lambda0(const AffineAlgebra& g) { return {Vec(g.l), 1, 0}; }
AffineWeight delta(const AffineAlgebra& g) { return {Vec(g.l), 0, 2}; }
AffineWeight from_root(const AffineRoot& a) { return {a.finite, 0, a.d2}; }

Rational pairing(const AffineAlgebra& g, const AffineWeight& a, const AffineWeight& b) {
  return g.form(a.finite, b.finite) + Rational(a.level * b.d2 + b.level * a.d2, 2);
}

AffineWeight translate(const AffineAlgebra& g, const Vec& gamma, const AffineWeight& x) {
  if (!g.M.contains(gamma)) throw DomainError("translation vector " + gamma.str() + " is not in M");
  if (gamma.is_zero()) return x;
  AffineWeight y = x;
  y.finite += x.level * gamma;
  Rational shift = 2 * g.form(x.finite, gamma) + x.level * g.form(gamma, gamma);
  y.d2 -= to_int(shift, "translation leaves the half-integral grading");
  return y;
}

WeylElement identity_element(const AffineAlgebra& g) { return {fin_identity(g), Vec(g.l), 1}; }

WeylElement translation(const AffineAlgebra& g, const Vec& gamma) {
  if (!g.M.contains(gamma)) throw DomainError("translation vector " + gamma.str() + " is not in M");
  return {fin_identity(g), gamma, 1};
}

WeylElement simple_reflection(const AffineAlgebra& g, int i) {
  if (i < 0 || i > g.l) throw DomainError("simple reflection index out of range");
  if (i > 0) return {g.fin.simple_reflection(i - 1), Vec(g.l), -1};
  // s₀ = (s_ᾱ, a·ᾱ∨) with α₀ = (ᾱ, a δ)
  const Vec& a = g.alpha0;
  Rational n2 = g.form(a, a);
  Vec gamma(g.l);
  for (int k = 0; k < g.l; ++k) gamma[k] = to_int(Rational(g.alpha0D2) / n2 * a[k], "s0 translation not integral");
  return {reflection_in(g, a), gamma, -1};
}

AffineWeight apply(const AffineAlgebra& g, const WeylElement& w, const AffineWeight& x) {
  AffineWeight y = translate(g, w.gamma, x);
  y.finite = w.fin.apply(y.finite);
  return y;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.fin = a.fin.compose(b.fin);
  c.gamma = b.fin.inverse().apply(a.gamma) + b.gamma;
  c.sign = a.sign * b.sign;
  return c;
}

AffineWeight reflect(const AffineAlgebra& g, int i, const AffineWeight& x) {
  auto roots = g.simple_roots();
  AffineWeight a = from_root(roots.at(i));
  Rational c = 2 * pairing(g, x, a) / pairing(g, a, a);
  int k = to_int(c, "non-integral coroot pairing");
  return {x.finite - k * a.finite, x.level, x.d2 - k * a.d2};
}

WeylElement random_element(const AffineAlgebra& g, std::mt19937_64& rng, int maxNorm2) {
  FiniteWeylElement fin;
  if (g.fin.has_weyl_group()) {
    const auto& w = g.fin.weyl_group();
    fin = w[std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng)];
  } else {
    fin = fin_identity(g);
    std::uniform_int_distribution<int> pick(0, g.l - 1);
    for (int s = 0; s < 4 * g.l * g.l; ++s) fin = g.fin.simple_reflection(pick(rng)).compose(fin);
  }
  auto ball = lattice_ball(g, maxNorm2);
  Vec gamma = ball[std::uniform_int_distribution<std::size_t>(0, ball.size() - 1)(rng)];
  return {fin, gamma, fin.sign};
}

int determinant(const FiniteWeylElement& w) {
  const int l = w.rank;
  std::vector<Rational> m(l * l);
  for (int i = 0; i < l * l; ++i) m[i] = Rational(w.mat[i], w.den);
  Rational d = 1;
  for (int c = 0; c < l; ++c) {
    int p = c;
    while (p < l && m[p * l + c] == Rational(0)) ++p;
    if (p == l) return 0;
    if (p != c) {
      for (int k = 0; k < l; ++k) std::swap(m[p * l + k], m[c * l + k]);
      d = -d;
    }
    d *= m[c * l + c];
    for (int r = c + 1; r < l; ++r) {
      Rational f = m[r * l + c] / m[c * l + c];
      for (int k = c; k < l; ++k) m[r * l + k] -= f * m[c * l + k];
    }
  }
  return to_int(d, "non-integral determinant");
}

bool is_dominant_regular(const AffineAlgebra& g, const AffineWeight& x) {
  for (const auto& r : g.simple_roots()) {
    AffineWeight a = from_root(r);
    if (pairing(g, x, a) <= Rational(0)) return false;
  }
  return true;
}

namespace {

std::vector<Contribution> enumerate_in_ball(const AffineAlgebra& g, const std::vector<FiniteWeylElement>& group,
                                            const AffineWeight& lp, const AffineWeight& mp, int maxD2,
                                            const std::vector<Vec>& ball) {
  std::vector<Contribution> out;
  for (const auto& gamma : ball) {
    AffineWeight t = translate(g, gamma, lp);
    AffineWeight base = t - mp;
    if (base.d2 < 0 || base.d2 > maxD2) continue;
    for (const auto& w : group) {
      AffineWeight d = base;
      d.finite = w.apply(t.finite) - mp.finite;
      if (!g.in_positive_cone(d.finite, d.d2)) continue;
      out.push_back({{w, gamma, w.sign}, d});
    }
  }
  std::sort(out.begin(), out.end(), [](const Contribution& a, const Contribution& b) {
    if (a.defect.d2 != b.defect.d2) return a.defect.d2 < b.defect.d2;
    if (a.defect.finite != b.defect.finite) return a.defect.finite < b.defect.finite;
    if (a.w.gamma != b.w.gamma) return a.w.gamma < b.w.gamma;
    return a.w.fin.mat < b.w.fin.mat;
  });
  return out;
}

bool same(const std::vector<Contribution>& a, const std::vector<Contribution>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].defect != b[i].defect || a[i].w.gamma != b[i].w.gamma || !(a[i].w.fin == b[i].w.fin)) return false;
  return true;
}

}  // namespace

std::vector<Contribution> enumerate_contributing(const AffineAlgebra& g, const AffineWeight& lp,
                                                 const AffineWeight& mp, int maxD2) {
  if (lp.level != mp.level) throw LevelMismatchError("λ+ρ and μ+ρ have different levels");
  if (lp.level <= 0) throw DomainError("enumeration needs positive level");
  if (!is_dominant_regular(g, lp)) throw DomainError("λ+ρ must be dominant regular");
  if (!g.fin.has_weyl_group()) throw DomainError("finite Weyl group of " + g.fin.name() + " is not materialized");
  const auto& group = g.fin.weyl_group();

  // Translation by γ lowers d2 by 2⟨v,γ⟩ + k|γ|²; the defect needs d2 ≥ 0,
  // so k|γ|² − 2|v||γ| ≤ Δ with Δ the d2 gap between λ+ρ and μ+ρ.
  const long double k = lp.level;
  const int gap = lp.d2 - mp.d2;
  if (gap < 0) return {};
  Rational vn = g.form(lp.finite, lp.finite);
  long double v = std::sqrt(static_cast<long double>(vn.numerator()) / vn.denominator());
  long double radius = (v + std::sqrt(v * v + k * gap)) / k;
  int maxNorm2 = static_cast<int>(std::ceil(radius * radius)) + 1;

  auto result = enumerate_in_ball(g, group, lp, mp, maxD2, g.M.ball(Rational(maxNorm2)));
  while (true) {
    maxNorm2 *= 4;  // doubled radius
    auto wider = enumerate_in_ball(g, group, lp, mp, maxD2, g.M.ball(Rational(maxNorm2)));
    if (same(result, wider)) return result;
    result = std::move(wider);
  }
}

}  // namespace kacq
