#include "kacq/kostka.hpp"

#include <algorithm>
#include <numeric>

namespace kacq {

int PartitionTable::lossless_box(const AffineAlgebra& g, int maxD2) {
  // every factor with positive δ-part uses at least one half-unit of d2
  int m = 0;
  for (const auto& r : g.fin.roots()) m = std::max(m, r.v.max_abs());
  if (g.family == Family::A2l) m = std::max(m, 2);
  return std::max(0, maxD2) * m;
}

PartitionTable::PartitionTable(const AffineAlgebra& g, int maxD2, int box, bool twoVariable)
    : g_(&g), maxD2_(maxD2), box_(box), twoVariable_(twoVariable), plus_(g.l, {maxD2, box}) {
  if (maxD2 < 0) throw DomainError("maxD2 must be nonnegative");
  if (twoVariable && g.family != Family::A2l) throw DomainError("two-variable tables exist only for A_{2l}^(2)");
  if (box < lossless_box(g, maxD2))
    throw BoxOverflowError("partition table box " + std::to_string(box) + " is below the complete size " +
                           std::to_string(lossless_box(g, maxD2)));
  plus_ = Series::one(g.l, {maxD2, box});
  const CoeffPoly t = CoeffPoly::monomial(1), s = CoeffPoly::monomial(0, 1);
  for (const auto& r : positive_real_roots_up_to(g, maxD2)) {
    if (r.d2 == 0) continue;
    apply_geometric(plus_, {r.finite, r.d2}, twoVariable && r.norm == 1 ? s : t);
  }
  for (int n = 1; 2 * n <= maxD2; ++n)
    for (int j = 0; j < g.imaginary_mult(n); ++j) apply_geometric(plus_, {Vec(g.l), 2 * n}, t);
  index();
}

PartitionTable::PartitionTable(const AffineAlgebra& g, Series positivePart, bool twoVariable)
    : g_(&g),
      maxD2_(positivePart.spec().maxD2),
      box_(positivePart.spec().box),
      twoVariable_(twoVariable),
      plus_(std::move(positivePart)) {
  if (plus_.rank() != g.l) throw SpecMismatchError("stored partition table has the wrong rank");
  index();
}

// Simple coordinates scaled by a common denominator, so differences stay integral.
std::vector<long long> PartitionTable::coords_of(const Vec& v) const {
  auto c = g_->fin.simple_coords(v);
  std::vector<long long> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rational x = c[i] * scale_;
    if (x.denominator() != 1) throw DomainError("finite part outside the affine root lattice: " + v.str());
    out[i] = x.numerator();
  }
  return out;
}

void PartitionTable::index() {
  scale_ = 1;
  for (const auto& [m, c] : plus_.terms())
    for (const auto& x : g_->fin.simple_coords(m.finite)) scale_ = std::lcm(scale_, x.denominator());
  byGrade_.clear();
  for (auto& [m, c] : plus_.sorted_terms()) byGrade_[m.d2].push_back({coords_of(m.finite), c});
}

bool PartitionTable::difference(const std::vector<long long>& a, const std::vector<long long>& b,
                                std::vector<int>& out) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    long long d = a[i] - b[i];
    if (d < 0 || d % scale_ != 0) return false;
    out[i] = static_cast<int>(d / scale_);
  }
  return true;
}

void PartitionTable::ensure(const std::vector<std::vector<int>>& targets) {
  bool fresh = false;
  for (const auto& t : targets) {
    if (finite_ && finite_->covers(t)) continue;
    targets_.push_back(t);
    fresh = true;
  }
  if (!fresh) return;
  finite_ = std::make_unique<ConeTable>(g_->fin, ConeTable::Kind::Partition, targets_);
}

void PartitionTable::prepare(const std::vector<std::pair<Vec, int>>& queries) {
  std::vector<std::vector<int>> targets;
  for (const auto& [v, d2] : queries) {
    if (d2 < 0 || d2 > maxD2_ || !g_->in_positive_cone(v, d2)) continue;
    auto it = byGrade_.find(d2);
    if (it == byGrade_.end()) continue;
    auto c = coords_of(v);
    std::vector<int> x(c.size());
    for (const auto& e : it->second)
      if (difference(c, e.coords, x)) targets.push_back(x);
  }
  ensure(targets);
}

CoeffPoly PartitionTable::value(const Vec& finite, int d2) {
  if (d2 > maxD2_) throw DomainError("partition value requested beyond the table depth");
  if (d2 < 0 || !g_->in_positive_cone(finite, d2)) return {};
  prepare({{finite, d2}});
  CoeffPoly out;
  auto it = byGrade_.find(d2);
  if (it == byGrade_.end()) return out;
  auto c = coords_of(finite);
  std::vector<int> x(c.size());
  for (const auto& e : it->second) {
    if (!difference(c, e.coords, x)) continue;
    const CoeffPoly& p = finite_->at(x);
    if (!p.is_zero()) out += e.c * p;
  }
  return out;
}

PartitionTable t_kostant(const AffineAlgebra& g, int maxD2, int box, bool twoVariable) {
  return PartitionTable(g, maxD2, box, twoVariable);
}

namespace {

void check_integral_dominant(const AffineAlgebra& g, const AffineWeight& lambda) {
  for (const auto& r : g.simple_roots()) {
    AffineWeight a = from_root(r);
    Rational c = 2 * pairing(g, lambda, a) / pairing(g, a, a);
    if (c.denominator() != 1 || c < Rational(0)) throw DomainError("λ must be dominant integral");
  }
}

}  // namespace

CoeffPoly kostka_poly(const AffineAlgebra& g, const AffineWeight& lambda, const AffineWeight& mu, bool twoVariable) {
  if (lambda.level != mu.level) throw LevelMismatchError("λ and μ have different levels");
  check_integral_dominant(g, lambda);
  AffineWeight lp = lambda + rho(g), mp = mu + rho(g);
  int depth = lp.d2 - mp.d2;
  if (depth < 0) return {};
  auto contributions = enumerate_contributing(g, lp, mp, depth);
  PartitionTable table(g, depth, PartitionTable::lossless_box(g, depth), twoVariable);
  std::vector<std::pair<Vec, int>> queries;
  for (const auto& c : contributions) queries.push_back({c.defect.finite, c.defect.d2});
  table.prepare(queries);
  CoeffPoly k;
  for (const auto& c : contributions) {
    CoeffPoly p = table.value(c.defect.finite, c.defect.d2);
    if (c.w.sign > 0)
      k += p;
    else
      k -= p;
  }
  return k;
}

int weylsum_depth(const AffineAlgebra&, int maxQ) { return 2 * maxQ; }

Series string_function_weylsum(const AffineAlgebra& g, const AffineWeight& lambda, const AffineWeight& mu, int maxQ,
                               bool twoVariable, PartitionTable* table) {
  if (maxQ < 0) throw DomainError("maxQ must be nonnegative");
  if (lambda.level != mu.level) throw LevelMismatchError("λ and μ have different levels");
  check_integral_dominant(g, lambda);
  AffineWeight lp = lambda + rho(g);
  AffineWeight deepest = mu + rho(g);
  deepest.d2 -= 2 * maxQ;
  const int depth = lp.d2 - deepest.d2;
  Series out(0, {2 * maxQ, 0});
  if (depth < 0) return out;

  std::unique_ptr<PartitionTable> own;
  if (!table) {
    own = std::make_unique<PartitionTable>(g, depth, PartitionTable::lossless_box(g, depth), twoVariable);
    table = own.get();
  }
  if (table->max_d2() < depth) throw DomainError("partition table is too shallow for this order");
  if (table->two_variable() != twoVariable) throw DomainError("partition table has the wrong variable set");

  // One enumeration at the deepest μ − maxQ·δ serves every k: the defect
  // against μ − kδ is the deepest defect minus (maxQ − k)δ.
  auto contributions = enumerate_contributing(g, lp, deepest, depth);
  std::vector<std::pair<Vec, int>> queries;
  for (const auto& c : contributions)
    for (int k = 0; k <= maxQ; ++k) queries.push_back({c.defect.finite, c.defect.d2 - 2 * (maxQ - k)});
  table->prepare(queries);
  std::vector<CoeffPoly> coeff(maxQ + 1);
  for (const auto& c : contributions)
    for (int k = 0; k <= maxQ; ++k) {
      int d2 = c.defect.d2 - 2 * (maxQ - k);
      if (d2 < 0) continue;
      CoeffPoly p = table->value(c.defect.finite, d2);
      if (p.is_zero()) continue;
      if (c.w.sign > 0)
        coeff[k] += p;
      else
        coeff[k] -= p;
    }
  for (int k = 0; k <= maxQ; ++k)
    if (!coeff[k].is_zero()) out.set(q_power(2 * k), coeff[k]);
  return out;
}

}  // namespace kacq
