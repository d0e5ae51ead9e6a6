#include "kacq/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace kacq {

// ---- Vec ----

Vec::Vec(int n) : n_(n) {
  if (n < 0 || n > kMaxRank) throw DomainError("vector length out of range");
}

Vec::Vec(std::initializer_list<int> xs) : Vec(static_cast<int>(xs.size())) {
  std::copy(xs.begin(), xs.end(), c_.begin());
}

Vec Vec::from(const std::vector<int>& xs) {
  Vec v(static_cast<int>(xs.size()));
  std::copy(xs.begin(), xs.end(), v.c_.begin());
  return v;
}

bool Vec::is_zero() const {
  for (int i = 0; i < n_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

int Vec::max_abs() const {
  int m = 0;
  for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(c_[i]));
  return m;
}

long long Vec::dot(const Vec& o) const {
  long long s = 0;
  for (int i = 0; i < n_; ++i) s += static_cast<long long>(c_[i]) * o.c_[i];
  return s;
}

Vec& Vec::operator+=(const Vec& o) {
  if (n_ != o.n_) throw DomainError("vector length mismatch");
  for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (n_ != o.n_) throw DomainError("vector length mismatch");
  for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec& Vec::operator*=(int k) {
  for (int i = 0; i < n_; ++i) c_[i] *= k;
  return *this;
}

Vec Vec::operator-() const {
  Vec r = *this;
  r *= -1;
  return r;
}

bool operator==(const Vec& a, const Vec& b) {
  return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
}

std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string Vec::str() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

// ---- CoeffPoly ----

CoeffPoly CoeffPoly::constant(const Integer& c) { return monomial(0, 0, c); }

CoeffPoly CoeffPoly::monomial(int tExp, int sExp, const Integer& c) {
  if (tExp < 0 || sExp < 0) throw DomainError("negative exponent in CoeffPoly");
  CoeffPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(key(tExp, sExp), c);
  return p;
}

std::vector<CoeffPoly::Term> CoeffPoly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_)
    out.push_back({static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), c});
  return out;
}

Integer CoeffPoly::at(int tExp, int sExp) const {
  auto k = key(tExp, sExp);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const auto& a, std::uint64_t b) { return a.first < b; });
  return (it != terms_.end() && it->first == k) ? it->second : Integer(0);
}

bool CoeffPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& x) { return x.second.sign() > 0; });
}

Integer CoeffPoly::sum_of_coefficients() const {
  Integer s;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

int CoeffPoly::max_t() const {
  int m = -1;
  for (const auto& [k, c] : terms_) m = std::max(m, static_cast<int>(k >> 32));
  return m;
}

CoeffPoly CoeffPoly::shifted(int dt, int ds, const Integer& c) const {
  CoeffPoly r;
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  std::uint64_t add = key(dt, ds);
  for (const auto& [k, v] : terms_) r.terms_.emplace_back(k + add, v * c);
  return r;
}

CoeffPoly CoeffPoly::s_to_t() const {
  CoeffPoly r;
  for (const auto& t : terms()) r += monomial(t.t + t.s, 0, t.c);
  return r;
}

void CoeffPoly::merge(const CoeffPoly& o, int sign) {
  if (o.terms_.empty()) return;
  std::vector<std::pair<std::uint64_t, Integer>> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.emplace_back(j->first, sign > 0 ? j->second : -j->second);
      ++j;
    } else {
      Integer v = std::move(i->second);
      if (sign > 0) v += j->second; else v -= j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  merge(o, +1);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  merge(o, -1);
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1) {
    auto k = a.terms_[0].first;
    return b.shifted(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), a.terms_[0].second);
  }
  if (b.terms_.size() == 1) return b * a;
  std::vector<std::pair<std::uint64_t, Integer>> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) prod.emplace_back(ka + kb, ca * cb);
  std::sort(prod.begin(), prod.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  CoeffPoly r;
  for (auto& [k, c] : prod) {
    if (!r.terms_.empty() && r.terms_.back().first == k) {
      r.terms_.back().second += c;
    } else {
      if (!r.terms_.empty() && r.terms_.back().second.is_zero()) r.terms_.pop_back();
      r.terms_.emplace_back(k, std::move(c));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().second.is_zero()) r.terms_.pop_back();
  return r;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const CoeffPoly& a, const CoeffPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second)) return false;
  return true;
}

std::string CoeffPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms()) {
    Integer c = t.c;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = c == Integer(1);
    bool bare = t.t == 0 && t.s == 0;
    if (!unit || bare) os << c;
    auto var = [&](const char* name, int e, bool& needStar) {
      if (e == 0) return;
      if (needStar) os << "*";
      os << name;
      if (e != 1) os << "^" << e;
      needStar = true;
    };
    bool star = !unit;
    var("s", t.s, star);
    var("t", t.t, star);
  }
  return os.str();
}

// ---- Series ----

Series::Series(int rank, TruncationSpec spec) : rank_(rank), spec_(spec) {
  if (spec.maxD2 < 0 || spec.box < 0) throw DomainError("truncation bounds must be nonnegative");
  if (rank < 0 || rank > kMaxRank) throw DomainError("rank out of range");
}

Series Series::one(int rank, TruncationSpec spec) { return term(rank, spec, Monomial{Vec(rank), 0}, CoeffPoly::one()); }

Series Series::term(int rank, TruncationSpec spec, const Monomial& m, const CoeffPoly& c) {
  Series s(rank, spec);
  s.add_to(m, c);
  return s;
}

void Series::add_to(const Monomial& m, const CoeffPoly& c) {
  if (c.is_zero() || !admits(m)) return;
  if (m.finite.size() != rank_) throw DomainError("monomial rank mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Series::set(const Monomial& m, CoeffPoly c) {
  if (!admits(m)) return;
  if (c.is_zero()) {
    terms_.erase(m);
  } else {
    terms_[m] = std::move(c);
  }
}

const CoeffPoly* Series::find(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? nullptr : &it->second;
}

CoeffPoly Series::coefficient(const Monomial& m) const {
  const CoeffPoly* p = find(m);
  return p ? *p : CoeffPoly{};
}

CoeffPoly Series::q_coefficient(int d2) const { return coefficient(Monomial{Vec(rank_), d2}); }

std::vector<std::pair<Monomial, CoeffPoly>> Series::sorted_terms() const {
  std::vector<std::pair<Monomial, CoeffPoly>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool Series::is_pure() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.finite.is_zero(); });
}

bool operator==(const Series& a, const Series& b) {
  if (a.rank_ != b.rank_ || !(a.spec_ == b.spec_) || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [m, c] : a.terms_) {
    const CoeffPoly* o = b.find(m);
    if (!o || !(*o == c)) return false;
  }
  return true;
}

namespace {

void require_same(const Series& a, const Series& b) {
  if (!(a.spec() == b.spec()) || a.rank() != b.rank()) throw SpecMismatchError("series have different truncation or rank");
}

void check_factor(const Monomial& m) {
  if (m.d2 < 0) throw DivergenceError("factor monomial has negative q-degree");
  if (m.d2 == 0 && m.finite.is_zero()) throw DivergenceError("geometric series in the constant monomial diverges");
}

enum class Walk { kGeometric, kRatio };

void walk_chains(Series& x, const Monomial& e, const CoeffPoly& c, const KeepFn& keep, Walk kind) {
  check_factor(e);
  Series::Map src = x.terms();
  std::vector<Monomial> heads;
  heads.reserve(src.size());
  for (const auto& kv : src) heads.push_back(kv.first);
  std::sort(heads.begin(), heads.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.d2 != b.d2) return a.d2 < b.d2;
    long long fa = a.finite.dot(e.finite), fb = b.finite.dot(e.finite);
    if (fa != fb) return fa < fb;
    return a.finite < b.finite;
  });
  Series out(x.rank(), x.spec());
  for (const Monomial& h : heads) {
    auto first = src.find(h);
    if (first == src.end()) continue;  // consumed by an earlier chain
    CoeffPoly run;
    CoeffPoly prev;  // x at the previous chain point (ratio only)
    Monomial p = h;
    while (x.admits(p) && (!keep || keep(p))) {
      CoeffPoly here;
      if (auto it = src.find(p); it != src.end()) {
        here = std::move(it->second);
        src.erase(it);
      }
      run = c * run;
      run += here;
      if (kind == Walk::kRatio) {
        run -= prev;
        prev = std::move(here);
      }
      if (run.is_zero() && (kind == Walk::kGeometric || prev.is_zero())) {
        // Nothing propagates unless another source point lies further on.
        Monomial probe = p + e;
        bool more = false;
        for (; x.admits(probe); probe = probe + e)
          if (src.contains(probe)) {
            more = true;
            break;
          }
        if (!more) break;
        p = p + e;
        continue;
      }
      out.set(p, run);
      p = p + e;
    }
  }
  x = std::move(out);
}

}  // namespace

Series add(const Series& a, const Series& b) {
  require_same(a, b);
  Series r = a;
  for (const auto& [m, c] : b.terms()) r.add_to(m, c);
  return r;
}

Series sub(const Series& a, const Series& b) {
  require_same(a, b);
  Series r = a;
  for (const auto& [m, c] : b.terms()) r.add_to(m, -c);
  return r;
}

Series mul(const Series& a, const Series& b) {
  require_same(a, b);
  auto bs = b.sorted_terms();
  Series r(a.rank(), a.spec());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : bs) {
      if (ma.d2 + mb.d2 > a.spec().maxD2) break;
      Monomial m = ma + mb;
      if (r.admits(m)) r.add_to(m, ca * cb);
    }
  }
  return r;
}

void apply_geometric(Series& x, const Monomial& m, const CoeffPoly& c, const KeepFn& keep) {
  walk_chains(x, m, c, keep, Walk::kGeometric);
}

void apply_ratio(Series& x, const Monomial& m, const CoeffPoly& c, const KeepFn& keep) {
  walk_chains(x, m, c, keep, Walk::kRatio);
}

void apply_linear(Series& x, const Monomial& m, const CoeffPoly& c) {
  Series r = x;
  for (const auto& [p, v] : x.terms()) r.add_to(p + m, -(c * v));
  x = std::move(r);
}

Series inv_one_minus(const Monomial& m, const CoeffPoly& c, TruncationSpec spec) {
  Series s = Series::one(m.finite.size(), spec);
  apply_geometric(s, m, c);
  return s;
}

Series poch(const Monomial& a, const CoeffPoly& c, const Monomial& x, TruncationSpec spec) {
  if (x.d2 <= 0) throw DivergenceError("q-Pochhammer step must have positive q-degree");
  Series s = Series::one(a.finite.size(), spec);
  for (Monomial f = a; f.d2 <= spec.maxD2; f = f + x) apply_linear(s, f, c);
  return s;
}

Series ct(const Series& x) {
  Series r(0, TruncationSpec{x.spec().maxD2, 0});
  for (const auto& [m, c] : x.terms())
    if (m.finite.is_zero()) r.add_to(Monomial{Vec(0), m.d2}, c);
  return r;
}

namespace {

Series regrade(const Series& x, int a, int b, bool keepFinite) {
  Series r(keepFinite ? x.rank() : 0, keepFinite ? x.spec() : TruncationSpec{x.spec().maxD2, 0});
  for (const auto& [m, c] : x.terms()) {
    for (const auto& t : c.terms()) {
      Monomial n{keepFinite ? m.finite : Vec(0), m.d2 + t.t * a + t.s * b};
      r.add_to(n, CoeffPoly::constant(t.c));
    }
  }
  return r;
}

}  // namespace

Series substitute(const Series& x, int tExponentInHalfQ, int sExponentInHalfQ) {
  if (!x.is_pure()) throw NotAQSeriesError("substitution needs a series with zero finite parts");
  return regrade(x, tExponentInHalfQ, sExponentInHalfQ, false);
}

Series specialize(const Series& x, int tExponentInHalfQ, int sExponentInHalfQ) {
  return regrade(x, tExponentInHalfQ, sExponentInHalfQ, true);
}

Series collapse_s_to_t(const Series& x) {
  Series r(x.rank(), x.spec());
  for (const auto& [m, c] : x.terms()) r.add_to(m, c.s_to_t());
  return r;
}

Series rescale_q(const Series& x, int factor) {
  if (factor < 1) throw DomainError("rescale factor must be positive");
  if (!x.is_pure()) throw NotAQSeriesError("rescale needs a series with zero finite parts");
  Series r(x.rank(), x.spec());
  for (const auto& [m, c] : x.terms()) r.add_to(Monomial{m.finite, m.d2 * factor}, c);
  return r;
}

Series retruncate(const Series& x, TruncationSpec spec) {
  Series r(x.rank(), spec);
  for (const auto& [m, c] : x.terms()) r.add_to(m, c);
  return r;
}

Monomial q_power(int d2) { return Monomial{Vec(0), d2}; }

std::string to_text(const Series& x) {
  auto terms = x.sorted_terms();
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    bool bare = m.is_one();
    if (bare) {
      os << c.str();
      continue;
    }
    if (c.size() == 1 && c == CoeffPoly::one()) {
    } else {
      os << "(" << c.str() << ")";
    }
    if (!m.finite.is_zero()) os << "e" << m.finite.str();
    if (m.d2 != 0) {
      os << "q";
      if (m.d2 % 2 == 0) {
        if (m.d2 != 2) os << "^" << m.d2 / 2;
      } else {
        os << "^(" << m.d2 << "/2)";
      }
    }
  }
  return os.str();
}

}  // namespace kacq
