#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/hash/hash.h>

#include "kacq/errors.hpp"
#include "kacq/integer.hpp"

namespace kacq {

inline constexpr int kMaxRank = 8;

// Small fixed-capacity integer vector; finite parts of weights and monomials
// in doubled coordinates.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int n);
  Vec(std::initializer_list<int> xs);
  static Vec from(const std::vector<int>& xs);

  int size() const { return n_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  const int* begin() const { return c_.data(); }
  const int* end() const { return c_.data() + n_; }

  bool is_zero() const;
  int max_abs() const;
  long long dot(const Vec& o) const;  // plain Euclidean dot of the stored ints
  std::vector<int> to_vector() const { return {begin(), end()}; }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(int k);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(int k, Vec a) { return a *= k; }
  Vec operator-() const;

  friend bool operator==(const Vec& a, const Vec& b);
  friend std::strong_ordering operator<=>(const Vec& a, const Vec& b);

  template <typename H>
  friend H AbslHashValue(H h, const Vec& v) {
    return H::combine_contiguous(std::move(h), v.c_.data(), v.n_);
  }

  std::string str() const;

 private:
  std::array<int, kMaxRank> c_{};
  int n_ = 0;
};

// e^{finite} q^{d2/2}
struct Monomial {
  Vec finite;
  int d2 = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // canonical order: (d2, finite) lexicographic
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.d2 <=> b.d2; c != 0) return c;
    return a.finite <=> b.finite;
  }
  template <typename H>
  friend H AbslHashValue(H h, const Monomial& m) {
    return H::combine(std::move(h), m.finite, m.d2);
  }
  Monomial operator+(const Monomial& o) const { return {finite + o.finite, d2 + o.d2}; }
  Monomial operator-(const Monomial& o) const { return {finite - o.finite, d2 - o.d2}; }
  bool is_one() const { return d2 == 0 && finite.is_zero(); }
};

// Integer polynomial in t and s.
class CoeffPoly {
 public:
  struct Term {
    int t;
    int s;
    Integer c;
  };

  CoeffPoly() = default;
  static CoeffPoly constant(const Integer& c);
  static CoeffPoly one() { return constant(1); }
  static CoeffPoly monomial(int tExp, int sExp = 0, const Integer& c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<Term> terms() const;
  // coefficient of t^tExp s^sExp
  Integer at(int tExp, int sExp = 0) const;
  bool nonnegative() const;
  Integer sum_of_coefficients() const;  // value at t = s = 1
  int max_t() const;
  // t^dt s^ds * c * this
  CoeffPoly shifted(int dt, int ds, const Integer& c = 1) const;
  CoeffPoly s_to_t() const;

  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  CoeffPoly operator-() const;
  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b);

  std::string str() const;

 private:
  static std::uint64_t key(int t, int s) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t)) << 32) | static_cast<std::uint32_t>(s);
  }
  void merge(const CoeffPoly& o, int sign);
  std::vector<std::pair<std::uint64_t, Integer>> terms_;  // sorted by key, no zeros
};

struct TruncationSpec {
  int maxD2 = 0;
  int box = 0;
  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;
};

class Series {
 public:
  using Map = absl::flat_hash_map<Monomial, CoeffPoly>;

  Series(int rank, TruncationSpec spec);
  static Series one(int rank, TruncationSpec spec);
  static Series term(int rank, TruncationSpec spec, const Monomial& m, const CoeffPoly& c);

  int rank() const { return rank_; }
  const TruncationSpec& spec() const { return spec_; }
  bool admits(const Monomial& m) const { return m.d2 <= spec_.maxD2 && m.finite.max_abs() <= spec_.box; }

  // Adds c at m; silently ignores monomials outside the truncation window.
  void add_to(const Monomial& m, const CoeffPoly& c);
  void set(const Monomial& m, CoeffPoly c);
  const CoeffPoly* find(const Monomial& m) const;
  CoeffPoly coefficient(const Monomial& m) const;
  // coefficient of q^{d2/2} at zero finite part
  CoeffPoly q_coefficient(int d2) const;

  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  std::vector<std::pair<Monomial, CoeffPoly>> sorted_terms() const;
  bool is_pure() const;  // all finite parts zero

  friend bool operator==(const Series& a, const Series& b);

 private:
  int rank_;
  TruncationSpec spec_;
  Map terms_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);

// Σ_k c^k e^{km}
Series inv_one_minus(const Monomial& m, const CoeffPoly& c, TruncationSpec spec);
// ∏_{n≥0} (1 − a·c·x^n) where the factor's leading monomial is a with coefficient c
Series poch(const Monomial& a, const CoeffPoly& c, const Monomial& x, TruncationSpec spec);
// Zero-finite-part sub-series, returned as a rank-0 series.
Series ct(const Series& x);  // box of the result is 0
// t ↦ q^{a/2}, s ↦ q^{b/2} on a series with zero finite parts; result has rank 0.
Series substitute(const Series& x, int tExponentInHalfQ, int sExponentInHalfQ);
// Same substitution but keeping finite parts.
Series specialize(const Series& x, int tExponentInHalfQ, int sExponentInHalfQ);
Series collapse_s_to_t(const Series& x);
Series rescale_q(const Series& x, int factor);
// Same terms under another truncation window (terms outside are dropped).
Series retruncate(const Series& x, TruncationSpec spec);

// In-place factor application. `keep`, if given, further restricts the
// stored support; it must be closed under m ↦ m − e on kept monomials.
using KeepFn = std::function<bool(const Monomial&)>;
// x ← x / (1 − c·e^m)
void apply_geometric(Series& x, const Monomial& m, const CoeffPoly& c, const KeepFn& keep = {});
// x ← x · (1 − e^m) / (1 − c·e^m)
void apply_ratio(Series& x, const Monomial& m, const CoeffPoly& c, const KeepFn& keep = {});
// x ← x · (1 − c·e^m)
void apply_linear(Series& x, const Monomial& m, const CoeffPoly& c);

// Pure q-series helpers (rank 0).
Monomial q_power(int d2);
std::string to_text(const Series& x);

}  // namespace kacq
