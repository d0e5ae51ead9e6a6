#include "kacq/algebras.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include <absl/container/flat_hash_set.h>

#include "kacq/cone_table.hpp"

namespace kacq {

namespace {

using Matrix = std::vector<Rational>;  // square, row-major

// Inverse of an n×n rational matrix; throws if singular.
Matrix invert(Matrix a, int n) {
  Matrix inv(n * n, Rational(0));
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv * n + col] == Rational(0)) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    if (piv != col)
      for (int k = 0; k < n; ++k) {
        std::swap(a[piv * n + k], a[col * n + k]);
        std::swap(inv[piv * n + k], inv[col * n + k]);
      }
    Rational p = a[col * n + col];
    for (int k = 0; k < n; ++k) {
      a[col * n + k] /= p;
      inv[col * n + k] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == Rational(0)) continue;
      Rational f = a[r * n + col];
      for (int k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[col * n + k];
        inv[r * n + k] -= f * inv[col * n + k];
      }
    }
  }
  return inv;
}

std::vector<Rational> mat_vec(const Matrix& m, int n, const Vec& x) {
  std::vector<Rational> y(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += m[i * n + j] * x[j];
  return y;
}

Vec unit(int n, int i, int scale) {
  Vec v(n);
  v[i] = scale;
  return v;
}

std::vector<int> range_step(int from, int to, int step) {
  std::vector<int> out;
  for (int x = from; x <= to; x += step) out.push_back(x);
  return out;
}

}  // namespace

// ---- FiniteWeylElement ----

FiniteWeylElement FiniteWeylElement::identity(int rank) {
  FiniteWeylElement w;
  w.rank = rank;
  w.mat.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i) w.mat[i * rank + i] = 1;
  return w;
}

Vec FiniteWeylElement::apply(const Vec& x) const {
  Vec y(rank);
  for (int i = 0; i < rank; ++i) {
    long long s = 0;
    for (int j = 0; j < rank; ++j) s += static_cast<long long>(mat[i * rank + j]) * x[j];
    if (s % den != 0) throw DomainError("Weyl image leaves the doubled lattice");
    y[i] = static_cast<int>(s / den);
  }
  return y;
}

FiniteWeylElement FiniteWeylElement::compose(const FiniteWeylElement& o) const {
  FiniteWeylElement r;
  r.rank = rank;
  r.den = den * o.den;
  r.sign = sign * o.sign;
  r.mat.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      long long s = 0;
      for (int k = 0; k < rank; ++k) s += static_cast<long long>(mat[i * rank + k]) * o.mat[k * rank + j];
      r.mat[i * rank + j] = static_cast<int>(s);
    }
  r.reduce();
  return r;
}

void FiniteWeylElement::reduce() {
  int g = den;
  for (int x : mat) g = std::gcd(g, x);
  if (g <= 1) return;
  den /= g;
  for (auto& x : mat) x /= g;
}

FiniteWeylElement FiniteWeylElement::inverse() const {
  Matrix m(rank * rank);
  for (int i = 0; i < rank * rank; ++i) m[i] = Rational(mat[i], den);
  Matrix inv = invert(m, rank);
  FiniteWeylElement r;
  r.rank = rank;
  r.den = den;
  r.sign = sign;
  r.mat.resize(rank * rank);
  for (int i = 0; i < rank * rank; ++i) {
    Rational v = inv[i] * den;
    if (v.denominator() != 1) throw DomainError("Weyl inverse is not integral");
    r.mat[i] = static_cast<int>(v.numerator());
  }
  r.reduce();
  return r;
}

// ---- Cartan data ----

std::vector<std::vector<int>> cartan_matrix(FiniteType type, int l) {
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case FiniteType::A:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case FiniteType::D:
      if (l < 3) throw CatalogError("D_l needs l >= 3");
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case FiniteType::E:
      if (l < 6 || l > 8) throw CatalogError("E_l needs 6 <= l <= 8");
      // Bourbaki labels 1..l: chain 1-3-4-5-..., node 2 attached to 4.
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
      break;
    default: throw CatalogError("only simply-laced Cartan matrices are tabulated");
  }
  return a;
}

std::vector<std::vector<int>> positive_roots_from_cartan(const std::vector<std::vector<int>>& a) {
  const int l = static_cast<int>(a.size());
  std::vector<std::vector<int>> roots;
  std::set<std::vector<int>> known;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    roots.push_back(e);
    known.insert(e);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const std::vector<int> beta = roots[k];
    for (int i = 0; i < l; ++i) {
      std::vector<int> down = beta;
      int p = 0;
      while (true) {
        down[i] -= 1;
        if (!known.contains(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int j = 0; j < l; ++j) pairing += beta[j] * a[i][j];
      if (p - pairing > 0) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (known.insert(up).second) roots.push_back(up);
      }
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
  });
  return roots;
}

// ---- FiniteRootSystem ----

FiniteRootSystem FiniteRootSystem::make(FiniteType type, int l, int unitNorm) {
  if (l < 1 || l > kMaxRank) throw CatalogError("rank out of range");
  FiniteRootSystem f;
  f.type_ = type;
  f.rank_ = l;
  f.gramDen_ = 4;
  f.gram_.assign(l * l, 0);
  auto eps_gram = [&] {
    for (int i = 0; i < l; ++i) f.gram_[i * l + i] = unitNorm;
  };
  switch (type) {
    case FiniteType::A:
    case FiniteType::E: {
      auto c = cartan_matrix(type, l);
      for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) f.gram_[i * l + j] = c[i][j];
        f.simple_.push_back(unit(l, i, 2));
      }
      break;
    }
    case FiniteType::G: {
      if (l != 2) throw CatalogError("G_2 has rank 2");
      f.gram_ = {2, -3, -3, 6};
      f.simple_ = {unit(2, 0, 2), unit(2, 1, 2)};
      break;
    }
    case FiniteType::B:
    case FiniteType::C:
    case FiniteType::D: {
      eps_gram();
      if (type == FiniteType::D && l < 3) throw CatalogError("D_l needs l >= 3");
      for (int i = 0; i + 1 < l; ++i) {
        Vec v(l);
        v[i] = 2;
        v[i + 1] = -2;
        f.simple_.push_back(v);
      }
      Vec tail(l);
      if (type == FiniteType::B) tail[l - 1] = 2;
      if (type == FiniteType::C) tail[l - 1] = 4;
      if (type == FiniteType::D) tail[l - 2] = 2, tail[l - 1] = 2;
      f.simple_.push_back(tail);
      break;
    }
    case FiniteType::F: {
      if (l != 4) throw CatalogError("F_4 has rank 4");
      eps_gram();
      f.simple_ = {Vec{0, 2, -2, 0}, Vec{0, 0, 2, -2}, Vec{0, 0, 0, 2}, Vec{1, -1, -1, -1}};
      break;
    }
  }
  if (static_cast<int>(f.simple_.size()) != l) throw CatalogError("internal: wrong number of simple roots");

  f.cartan_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      long long num = 2 * f.form_numerator(f.simple_[i], f.simple_[j]);
      long long den = f.form_numerator(f.simple_[i], f.simple_[i]);
      if (num % den != 0) throw CatalogError("internal: non-integral Cartan entry");
      f.cartan_[i][j] = static_cast<int>(num / den);
    }

  Matrix s(l * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) s[i * l + j] = f.simple_[j][i];
  f.simpleInverse_ = invert(s, l);

  std::vector<Root> neg;
  for (const auto& c : positive_roots_from_cartan(f.cartan_)) {
    Root r;
    r.v = f.from_simple_coords(c);
    Rational nrm = f.form(r.v, r.v);
    if (nrm.denominator() != 1) throw CatalogError("internal: non-integral root norm");
    r.norm = static_cast<int>(nrm.numerator());
    r.height = std::accumulate(c.begin(), c.end(), 0);
    r.isLong = r.norm > 2;
    r.simple = c;
    f.roots_.push_back(r);
    Root n = r;
    n.v = -r.v;
    n.height = -r.height;
    for (auto& x : n.simple) x = -x;
    neg.push_back(n);
  }
  f.roots_.insert(f.roots_.end(), neg.begin(), neg.end());

  f.minNorm_ = 1 << 30;
  for (const auto& r : f.roots_) {
    f.maxNorm_ = std::max(f.maxNorm_, r.norm);
    f.minNorm_ = std::min(f.minNorm_, r.norm);
  }
  int bestL = -1, bestS = -1;
  Vec sum(l);
  for (const auto& r : f.roots_) {
    if (r.height <= 0) continue;
    sum += r.v;
    if (r.norm == f.maxNorm_ && r.height > bestL) bestL = r.height, f.thetaLong_ = r.v;
    if (r.norm == f.minNorm_ && r.height > bestS) bestS = r.height, f.thetaShort_ = r.v;
  }
  f.rho_ = Vec(l);
  for (int i = 0; i < l; ++i) {
    if (sum[i] % 2 != 0) throw CatalogError("internal: rho not in doubled lattice");
    f.rho_[i] = sum[i] / 2;
  }

  int den = 1;
  std::vector<Matrix> rg;
  for (int i = 0; i < l; ++i) {
    Matrix m(l * l);
    Rational n2 = f.form(f.simple_[i], f.simple_[i]);
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k) {
        Rational gk = 0;
        for (int a = 0; a < l; ++a) gk += Rational(f.gram_[k * l + a] * f.simple_[i][a], f.gramDen_);
        m[j * l + k] = Rational(j == k ? 1 : 0) - Rational(f.simple_[i][j]) * 2 * gk / n2;
        den = std::lcm(den, static_cast<int>(m[j * l + k].denominator()));
      }
    rg.push_back(m);
  }
  for (const auto& m : rg) {
    FiniteWeylElement g;
    g.rank = l;
    g.den = den;
    g.sign = -1;
    for (const auto& x : m) g.mat.push_back(static_cast<int>((x * den).numerator()));
    g.reduce();
    f.gens_.push_back(g);
  }

  if (l <= 4 || type == FiniteType::F || type == FiniteType::G) {
    FiniteWeylElement id = FiniteWeylElement::identity(l);
    std::vector<FiniteWeylElement> group{id};
    absl::flat_hash_set<std::pair<int, std::vector<int>>> seen{{id.den, id.mat}};
    for (std::size_t k = 0; k < group.size(); ++k) {
      for (const auto& g : f.gens_) {
        FiniteWeylElement w = g.compose(group[k]);
        if (seen.insert({w.den, w.mat}).second) group.push_back(std::move(w));
      }
    }
    f.weyl_ = std::make_shared<const std::vector<FiniteWeylElement>>(std::move(group));
  }
  return f;
}

std::string FiniteRootSystem::name() const {
  static const char* letters = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(type_)]) + std::to_string(rank_);
}

long long FiniteRootSystem::form_numerator(const Vec& x, const Vec& y) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += static_cast<long long>(x[i]) * gram_[i * rank_ + j] * y[j];
  }
  return s;
}

Rational FiniteRootSystem::form(const Vec& x, const Vec& y) const { return Rational(form_numerator(x, y), gramDen_); }

std::vector<Root> FiniteRootSystem::positive_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (r.height > 0) out.push_back(r);
  return out;
}

std::vector<Rational> FiniteRootSystem::simple_coords(const Vec& x) const { return mat_vec(simpleInverse_, rank_, x); }

std::optional<std::vector<int>> FiniteRootSystem::root_lattice_coords(const Vec& x) const {
  std::vector<int> out(rank_);
  auto c = simple_coords(x);
  for (int i = 0; i < rank_; ++i) {
    if (c[i].denominator() != 1) return std::nullopt;
    out[i] = static_cast<int>(c[i].numerator());
  }
  return out;
}

Vec FiniteRootSystem::from_simple_coords(const std::vector<int>& c) const {
  Vec v(rank_);
  for (int i = 0; i < rank_; ++i)
    if (c[i] != 0) v += c[i] * simple_[i];
  return v;
}

Rational FiniteRootSystem::height(const Vec& x) const {
  Rational h = 0;
  for (const auto& c : simple_coords(x)) h += c;
  return h;
}

Rational FiniteRootSystem::coroot_pairing(int i, const Vec& x) const {
  return 2 * form(x, simple_[i]) / form(simple_[i], simple_[i]);
}

Vec FiniteRootSystem::reflect(int i, const Vec& x) const {
  Rational c = coroot_pairing(i, x);
  Vec y(rank_);
  for (int k = 0; k < rank_; ++k) {
    Rational v = Rational(x[k]) - c * simple_[i][k];
    if (v.denominator() != 1) throw DomainError("reflection leaves the doubled lattice");
    y[k] = static_cast<int>(v.numerator());
  }
  return y;
}

bool FiniteRootSystem::is_dominant(const Vec& x) const {
  for (int i = 0; i < rank_; ++i)
    if (coroot_pairing(i, x) < Rational(0)) return false;
  return true;
}

const std::vector<FiniteWeylElement>& FiniteRootSystem::weyl_group() const {
  if (!weyl_) throw DomainError("Weyl group of " + name() + " is not materialized");
  return *weyl_;
}

FiniteWeylElement FiniteRootSystem::simple_reflection(int i) const { return gens_.at(i); }

std::vector<Vec> FiniteRootSystem::r1_plus() const {
  if (type_ != FiniteType::C) throw DomainError("orbit sets are defined for type C");
  std::vector<Vec> out;
  for (int i = 0; i < rank_; ++i) out.push_back(unit(rank_, i, 2));
  return out;
}

std::vector<Vec> FiniteRootSystem::r2_plus() const {
  if (type_ != FiniteType::C) throw DomainError("orbit sets are defined for type C");
  std::vector<Vec> out;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j) {
      out.push_back(unit(rank_, i, 2) - unit(rank_, j, 2));
      out.push_back(unit(rank_, i, 2) + unit(rank_, j, 2));
    }
  return out;
}

// ---- heights and exponents ----

HeightStats height_stats(const FiniteRootSystem& f) {
  HeightStats s;
  for (const auto& r : f.roots()) {
    if (r.height <= 0) continue;
    if (static_cast<int>(s.n.size()) <= r.height) s.n.resize(r.height + 1, 0);
    ++s.n[r.height];
    if (r.norm == f.min_norm()) {
      if (static_cast<int>(s.nShort.size()) <= r.height) s.nShort.resize(r.height + 1, 0);
      ++s.nShort[r.height];
    }
  }
  return s;
}

namespace {

std::vector<int> differences(const std::vector<int>& n) {
  std::vector<int> out;
  for (int p = 1; p < static_cast<int>(n.size()); ++p) {
    int next = p + 1 < static_cast<int>(n.size()) ? n[p + 1] : 0;
    for (int k = 0; k < n[p] - next; ++k) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<int> exponents_from_heights(const HeightStats& s) { return differences(s.n); }
std::vector<int> short_exponents_from_heights(const HeightStats& s) { return differences(s.nShort); }

std::vector<int> generalized_exponents(const FiniteRootSystem& f, const Vec& lambda) {
  if (!f.is_dominant(lambda)) throw DomainError("weight is not dominant");
  Vec lr = lambda + f.rho();
  std::vector<std::pair<std::vector<int>, int>> terms;
  for (const auto& w : f.weyl_group()) {
    auto c = f.root_lattice_coords(w.apply(lr) - f.rho());
    if (!c || std::any_of(c->begin(), c->end(), [](int x) { return x < 0; })) continue;
    terms.emplace_back(*c, w.sign);
  }
  std::vector<std::vector<int>> targets;
  for (const auto& t : terms) targets.push_back(t.first);
  ConeTable table(f, ConeTable::Kind::Partition, targets);
  CoeffPoly k;
  for (const auto& [c, sign] : terms) k += sign > 0 ? table.at(c) : -table.at(c);
  std::vector<int> out;
  for (const auto& t : k.terms()) {
    if (t.c.sign() < 0 || t.s != 0) throw DomainError("finite t-analog has a negative coefficient");
    for (long long i = 0; i < t.c.to_int64(); ++i) out.push_back(t.t);
  }
  return out;
}

// ---- Lattice ----

Lattice::Lattice(Kind kind, std::vector<Vec> basis, const FiniteRootSystem* form)
    : kind_(kind), basis_(std::move(basis)) {
  const int n = static_cast<int>(basis_.size());
  gramDen_ = form->form_denominator();
  gramNum_.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gramNum_[i * n + j] = form->form_numerator(basis_[i], basis_[j]);
  Matrix b(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i * n + j] = basis_[j][i];
  inverse_ = invert(b, n);
}

bool Lattice::contains(const Vec& x) const {
  const int n = static_cast<int>(basis_.size());
  if (x.size() != n) return false;
  for (const auto& c : mat_vec(inverse_, n, x))
    if (c.denominator() != 1) return false;
  return true;
}

std::vector<Vec> Lattice::ball(Rational maxNorm2) const {
  const int n = static_cast<int>(basis_.size());
  std::vector<Vec> out;
  if (maxNorm2 < Rational(0)) return out;
  // Q(z) = Σ_i q[i][i] (z_i + Σ_{j>i} q[i][j] z_j)^2 from a Cholesky-type decomposition.
  std::vector<long double> a(n * n), q(n * n, 0.0L);
  for (int i = 0; i < n * n; ++i) a[i] = static_cast<long double>(gramNum_[i]) / gramDen_;
  for (int i = 0; i < n; ++i) {
    long double d = a[i * n + i];
    for (int k = 0; k < i; ++k) d -= q[k * n + k] * q[k * n + i] * q[k * n + i];
    q[i * n + i] = d;
    for (int j = i + 1; j < n; ++j) {
      long double s = a[i * n + j];
      for (int k = 0; k < i; ++k) s -= q[k * n + k] * q[k * n + i] * q[k * n + j];
      q[i * n + j] = s / d;
    }
  }
  const long double bound = static_cast<long double>(maxNorm2.numerator()) / maxNorm2.denominator();
  std::vector<int> z(n, 0);
  auto exact_norm_ok = [&] {
    long long s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += static_cast<long long>(z[i]) * gramNum_[i * n + j] * z[j];
    return Rational(s, gramDen_) <= maxNorm2;
  };
  auto rec = [&](auto&& self, int i, long double budget) -> void {
    if (i < 0) {
      if (exact_norm_ok()) {
        Vec v(n);
        for (int k = 0; k < n; ++k)
          if (z[k]) v += z[k] * basis_[k];
        out.push_back(v);
      }
      return;
    }
    long double c = 0;
    for (int j = i + 1; j < n; ++j) c -= q[i * n + j] * z[j];
    long double r = std::sqrt(std::max(budget, 0.0L) / q[i * n + i]);
    long long lo = static_cast<long long>(std::floor(c - r)) - 1;
    long long hi = static_cast<long long>(std::ceil(c + r)) + 1;
    for (long long v = lo; v <= hi; ++v) {
      long double rest = budget - q[i * n + i] * (v - c) * (v - c);
      if (rest < -1e-9L) continue;
      z[i] = static_cast<int>(v);
      self(self, i - 1, rest);
    }
    z[i] = 0;
  };
  rec(rec, n - 1, bound);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Lattice::describe() const {
  switch (kind_) {
    case Kind::Integer: return "Z^l";
    case Kind::EvenSum: return "D_l parity lattice";
    case Kind::F4: return "F4 lattice";
    case Kind::RootLattice: return "root lattice";
  }
  return "";
}

// ---- catalog ----

const std::vector<int>& AffineAlgebra::exponents_at(int n) const {
  if (n < 0) throw DomainError("negative index");
  return E[n % r];
}

int AffineAlgebra::imaginary_mult(int n) const {
  if (n <= 0) throw DomainError("imaginary multiplicity needs n >= 1");
  if (r == 1 || family == Family::A2l || n % r == 0) return l;
  return m;
}

std::vector<AffineRoot> AffineAlgebra::simple_roots() const {
  std::vector<AffineRoot> out;
  Rational n0 = form(alpha0, alpha0);
  out.push_back({alpha0, alpha0D2, static_cast<int>(n0.numerator() / n0.denominator())});
  for (const auto& s : fin.simple_roots()) {
    Rational n = form(s, s);
    out.push_back({s, 0, static_cast<int>(n.numerator() / n.denominator())});
  }
  return out;
}

bool AffineAlgebra::in_positive_cone(const Vec& finite, int d2) const {
  if (d2 < 0 || d2 % alpha0D2 != 0) return false;
  int c0 = d2 / alpha0D2;
  Vec rest = finite - c0 * alpha0;
  auto c = fin.root_lattice_coords(rest);
  return c && std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
}

namespace {

Lattice integer_lattice(const FiniteRootSystem& f) {
  std::vector<Vec> b;
  for (int i = 0; i < f.rank(); ++i) b.push_back(unit(f.rank(), i, 2));
  return Lattice(Lattice::Kind::Integer, b, &f);
}

Lattice root_lattice(const FiniteRootSystem& f, Lattice::Kind kind) { return Lattice(kind, f.simple_roots(), &f); }

Lattice even_sum_lattice(const FiniteRootSystem& f) {
  const int l = f.rank();
  std::vector<Vec> b;
  for (int i = 0; i + 1 < l; ++i) b.push_back(unit(l, i, 2) - unit(l, i + 1, 2));
  b.push_back(unit(l, l - 2, 2) + unit(l, l - 1, 2));
  return Lattice(Lattice::Kind::EvenSum, b, &f);
}

struct ParsedId {
  char letter;
  int n;
  int r;
};

ParsedId parse_id(std::string_view id) {
  auto fail = [&] { return CatalogError("unknown algebra id '" + std::string(id) + "' (expected e.g. A2~2, D4~3, A1~1)"); };
  if (id.size() < 4) throw fail();
  char letter = id[0];
  auto tilde = id.find('~');
  if (tilde == std::string_view::npos || tilde < 2 || tilde + 2 != id.size()) throw fail();
  int n = 0;
  for (std::size_t i = 1; i < tilde; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) throw fail();
    n = n * 10 + (id[i] - '0');
  }
  if (!std::isdigit(static_cast<unsigned char>(id[tilde + 1]))) throw fail();
  return {letter, n, id[tilde + 1] - '0'};
}

}  // namespace

AffineAlgebra build(std::string_view id) {
  ParsedId p = parse_id(id);
  AffineAlgebra g;
  g.id = std::string(id);
  g.r = p.r;
  auto bad = [&](const std::string& why) { return CatalogError("unsupported algebra " + g.id + ": " + why); };
  if (p.letter == 'A' && p.r == 2) {
    if (p.n % 2 == 0) {
      g.family = Family::A2l;
      g.l = p.n / 2;
    } else {
      g.family = Family::A2lMinus1;
      g.l = (p.n + 1) / 2;
      if (g.l < 2) throw bad("A_{2l-1}^(2) needs l >= 2");
    }
  } else if (p.letter == 'D' && p.r == 2) {
    g.family = Family::DlPlus1;
    g.l = p.n - 1;
    if (g.l < 2) throw bad("D_{l+1}^(2) needs l >= 2");
  } else if (p.letter == 'E' && p.r == 2 && p.n == 6) {
    g.family = Family::E6;
    g.l = 4;
  } else if (p.letter == 'D' && p.r == 3 && p.n == 4) {
    g.family = Family::D4Triality;
    g.l = 2;
  } else if (p.letter == 'A' && p.r == 1) {
    g.family = Family::AUntwisted;
    g.l = p.n;
  } else if (p.letter == 'D' && p.r == 1) {
    g.family = Family::DUntwisted;
    g.l = p.n;
    if (g.l < 4) throw bad("D_l^(1) needs l >= 4");
  } else {
    throw bad("not in the catalog");
  }
  const int l = g.l;
  if (l < 1 || l > kMaxRank) throw bad("rank outside 1..8");

  auto odd = range_step(1, 2 * l - 1, 2);
  switch (g.family) {
    case Family::A2l:
      g.fin = FiniteRootSystem::make(FiniteType::C, l, 1);
      g.m0 = FiniteRootSystem::make(FiniteType::B, l, 2);
      g.N = 2 * l;
      g.m = l;
      g.h = g.hDual = 2 * l + 1;
      g.E = {odd, range_step(2, 2 * l, 2)};
      g.M = integer_lattice(g.fin);
      g.alpha0 = -unit(l, 0, 2);
      g.alpha0D2 = 1;
      g.ambientType = FiniteType::A;
      break;
    case Family::A2lMinus1:
      g.fin = FiniteRootSystem::make(FiniteType::C, l, 1);
      g.m0 = g.fin;
      g.N = 2 * l - 1;
      g.m = l - 1;
      g.h = 2 * l - 1;
      g.hDual = 2 * l;
      g.E = {odd, range_step(2, 2 * l - 2, 2)};
      g.M = even_sum_lattice(g.fin);
      g.alpha0 = -g.fin.theta_short();
      g.alpha0D2 = 2;
      g.ambientType = FiniteType::A;
      break;
    case Family::DlPlus1:
      g.fin = FiniteRootSystem::make(FiniteType::B, l, 2);
      g.m0 = g.fin;
      g.N = l + 1;
      g.m = 1;
      g.h = l + 1;
      g.hDual = 2 * l;
      g.E = {odd, {l}};
      g.M = integer_lattice(g.fin);
      g.alpha0 = -g.fin.theta_short();
      g.alpha0D2 = 2;
      g.ambientType = FiniteType::D;
      break;
    case Family::E6:
      g.fin = FiniteRootSystem::make(FiniteType::F, 4, 2);
      g.m0 = g.fin;
      g.N = 6;
      g.m = 2;
      g.h = 9;
      g.hDual = 12;
      g.E = {{1, 5, 7, 11}, {4, 8}};
      g.M = root_lattice(g.fin, Lattice::Kind::F4);
      g.alpha0 = -g.fin.theta_short();
      g.alpha0D2 = 2;
      g.ambientType = FiniteType::E;
      break;
    case Family::D4Triality:
      g.fin = FiniteRootSystem::make(FiniteType::G, 2);
      g.m0 = g.fin;
      g.N = 4;
      g.m = 1;
      g.h = 4;
      g.hDual = 6;
      g.E = {{1, 5}, {3}, {3}};
      g.M = root_lattice(g.fin, Lattice::Kind::RootLattice);
      g.alpha0 = -g.fin.theta_short();
      g.alpha0D2 = 2;
      g.ambientType = FiniteType::D;
      break;
    case Family::AUntwisted:
      g.fin = FiniteRootSystem::make(FiniteType::A, l);
      g.m0 = g.fin;
      g.N = l;
      g.m = l;
      g.h = g.hDual = l + 1;
      g.E = {range_step(1, l, 1)};
      g.M = root_lattice(g.fin, Lattice::Kind::RootLattice);
      g.alpha0 = -g.fin.theta_long();
      g.alpha0D2 = 2;
      g.ambientType = FiniteType::A;
      break;
    case Family::DUntwisted: {
      g.fin = FiniteRootSystem::make(FiniteType::D, l, 1);
      g.m0 = g.fin;
      g.N = l;
      g.m = l;
      g.h = g.hDual = 2 * l - 2;
      auto e = range_step(1, 2 * l - 3, 2);
      e.push_back(l - 1);
      std::sort(e.begin(), e.end());
      g.E = {e};
      g.M = root_lattice(g.fin, Lattice::Kind::RootLattice);
      g.alpha0 = -g.fin.theta_long();
      g.alpha0D2 = 2;
      g.ambientType = FiniteType::D;
      break;
    }
  }

  // ⟨ρ, α₀∨⟩ = 1 pins the level of ρ to h∨.
  Rational n0 = g.form(g.alpha0, g.alpha0);
  Rational level = (n0 / 2 - g.form(g.fin.rho(), g.alpha0)) / Rational(g.alpha0D2, 2);
  if (level != Rational(g.hDual)) throw CatalogError("internal: dual Coxeter number inconsistent for " + g.id);
  for (int n = 1; n <= g.r; ++n)
    if (static_cast<int>(g.exponents_at(n).size()) != g.imaginary_mult(n))
      throw CatalogError("internal: |E_n| != mult(n delta) for " + g.id);
  if (g.r > 1 && g.family != Family::A2l && g.m * (g.r - 1) != g.N - g.l)
    throw CatalogError("internal: orbit count mismatch for " + g.id);
  return g;
}

std::vector<std::string> catalog_ids() { return {"A2~2", "A4~2", "A5~2", "D3~2", "E6~2", "D4~3"}; }

int imaginary_mult(const AffineAlgebra& g, int n) { return g.imaginary_mult(n); }

std::vector<AffineRoot> positive_real_roots_up_to(const AffineAlgebra& g, int maxD2) {
  std::vector<AffineRoot> out;
  for (const auto& r : g.fin.roots())
    if (r.height > 0) out.push_back({r.v, 0, r.norm});
  if (g.family == Family::A2l) {
    const int l = g.l;
    for (int d2 = 1; d2 <= maxD2; d2 += 2)
      for (int i = 0; i < l; ++i) {
        out.push_back({unit(l, i, 2), d2, 1});
        out.push_back({unit(l, i, -2), d2, 1});
      }
    for (int d2 = 2; d2 <= maxD2; ++d2)
      for (const auto& r : g.fin.roots()) {
        int step = r.norm == 2 ? 2 : 4;
        if (d2 % step == 0) out.push_back({r.v, d2, r.norm});
      }
  } else {
    for (int d2 = 1; d2 <= maxD2; ++d2)
      for (const auto& r : g.fin.roots())
        if (d2 % r.norm == 0) out.push_back({r.v, d2, r.norm});
  }
  return out;
}

std::vector<Vec> lattice_ball(const AffineAlgebra& g, int maxNorm2) {
  if (maxNorm2 < 0) throw DomainError("maxNorm2 must be nonnegative");
  return g.M.ball(Rational(maxNorm2));
}

std::vector<int> affine_exponents(const AffineAlgebra& g, int bound) {
  std::vector<int> out;
  for (int n = 0; g.h * n <= bound; ++n)
    for (int e : g.exponents_at(n))
      if (e + g.h * n <= bound) out.push_back(e + g.h * n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> recomputed_exponents(const AffineAlgebra& g, int k) {
  if (k % g.r == 0) return generalized_exponents(g.m0, g.m0.theta_long());
  Vec top = g.m0.theta_short();
  if (g.family == Family::A2l) top *= 2;
  return generalized_exponents(g.m0, top);
}

std::vector<int> ambient_exponents(const AffineAlgebra& g) {
  auto f = FiniteRootSystem::make(g.ambientType, g.N, 1);
  return exponents_from_heights(height_stats(f));
}

}  // namespace kacq
