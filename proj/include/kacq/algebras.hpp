#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "kacq/series.hpp"

namespace kacq {

using Rational = boost::rational<long long>;

enum class FiniteType { A, B, C, D, E, F, G };

struct Root {
  Vec v;                    // doubled coordinates
  int norm;                 // ⟨α,α⟩ in the normalized form
  int height;               // signed; negative for negative roots
  bool isLong;
  std::vector<int> simple;  // coordinates in the simple roots
};

// Element of the finite Weyl group: x ↦ (mat · x) / den on doubled coordinates,
// kept reduced (gcd of den and all entries is 1) so == is matrix equality.
struct FiniteWeylElement {
  int rank = 0;
  int den = 1;
  int sign = 1;
  std::vector<int> mat;  // row-major rank × rank

  static FiniteWeylElement identity(int rank);
  Vec apply(const Vec& x) const;
  FiniteWeylElement compose(const FiniteWeylElement& o) const;  // (this ∘ o)(x) = this(o(x))
  FiniteWeylElement inverse() const;
  void reduce();
  friend bool operator==(const FiniteWeylElement& a, const FiniteWeylElement& b) {
    return a.rank == b.rank && a.den == b.den && a.mat == b.mat;
  }
};

struct HeightStats {
  std::vector<int> n;       // n[p] = # positive roots of height p (n[0] unused)
  std::vector<int> nShort;  // same for short positive roots
  int at(int p) const { return p < static_cast<int>(n.size()) ? n[p] : 0; }
  int short_at(int p) const { return p < static_cast<int>(nShort.size()) ? nShort[p] : 0; }
};

class FiniteRootSystem {
 public:
  // unitNorm: ⟨ε_i,ε_i⟩ for the ε-realized types B, C, D, F; ignored for A, E, G
  // (realized in doubled simple-root coordinates, short roots of norm 2).
  static FiniteRootSystem make(FiniteType type, int rank, int unitNorm = 2);

  FiniteType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  // ⟨x,y⟩ = xᵀ G y / den
  Rational form(const Vec& x, const Vec& y) const;
  long long form_numerator(const Vec& x, const Vec& y) const;
  int form_denominator() const { return gramDen_; }
  const std::vector<long long>& gram() const { return gram_; }

  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root> positive_roots() const;
  const std::vector<Vec>& simple_roots() const { return simple_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }  // a_ij = ⟨α_i∨, α_j⟩
  const Vec& theta_long() const { return thetaLong_; }
  const Vec& theta_short() const { return thetaShort_; }
  const Vec& rho() const { return rho_; }
  int max_norm() const { return maxNorm_; }
  int min_norm() const { return minNorm_; }

  // Coordinates in the simple roots, exact.
  std::vector<Rational> simple_coords(const Vec& x) const;
  // Integral coordinates, or nullopt if x is not in the root lattice.
  std::optional<std::vector<int>> root_lattice_coords(const Vec& x) const;
  Vec from_simple_coords(const std::vector<int>& c) const;
  Rational height(const Vec& x) const;

  Vec reflect(int i, const Vec& x) const;
  // ⟨x, α_i∨⟩
  Rational coroot_pairing(int i, const Vec& x) const;
  bool is_dominant(const Vec& x) const;

  bool has_weyl_group() const { return static_cast<bool>(weyl_); }
  // Whole finite Weyl group; throws for groups that are not materialized.
  const std::vector<FiniteWeylElement>& weyl_group() const;
  FiniteWeylElement simple_reflection(int i) const;

  // Macdonald's orbit sets for type C: ε_i and ε_i ± ε_j.
  std::vector<Vec> r1_plus() const;
  std::vector<Vec> r2_plus() const;

 private:
  FiniteType type_ = FiniteType::A;
  int rank_ = 0;
  std::vector<long long> gram_;
  int gramDen_ = 4;
  std::vector<Vec> simple_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::vector<Rational> simpleInverse_;  // rank × rank, maps doubled coords to simple coords
  Vec thetaLong_, thetaShort_, rho_;
  int maxNorm_ = 0, minNorm_ = 0;
  std::vector<FiniteWeylElement> gens_;
  std::shared_ptr<const std::vector<FiniteWeylElement>> weyl_;
};

// Positive roots in simple coordinates from a Cartan matrix a_ij = ⟨α_i∨, α_j⟩.
std::vector<std::vector<int>> positive_roots_from_cartan(const std::vector<std::vector<int>>& cartan);
std::vector<std::vector<int>> cartan_matrix(FiniteType type, int rank);

HeightStats height_stats(const FiniteRootSystem& f);
// Multiset {p with multiplicity n_p − n_{p+1}} (resp. from short roots).
std::vector<int> exponents_from_heights(const HeightStats& s);
std::vector<int> short_exponents_from_heights(const HeightStats& s);
// Exponents of t in the finite Lusztig t-analog K_{λ,0}(t), sorted.
std::vector<int> generalized_exponents(const FiniteRootSystem& f, const Vec& lambda);

// Lattice generated by a basis of doubled-coordinate vectors.
class Lattice {
 public:
  enum class Kind { Integer, EvenSum, F4, RootLattice };
  Lattice() = default;
  Lattice(Kind kind, std::vector<Vec> basis, const FiniteRootSystem* form);
  Kind kind() const { return kind_; }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& x) const;
  // All γ with ⟨γ,γ⟩ ≤ maxNorm2, sorted.
  std::vector<Vec> ball(Rational maxNorm2) const;
  std::string describe() const;

 private:
  Kind kind_ = Kind::Integer;
  std::vector<Vec> basis_;
  std::vector<long long> gramNum_;  // basis Gram numerators
  int gramDen_ = 1;
  std::vector<Rational> inverse_;
};

enum class Family { A2l, A2lMinus1, DlPlus1, E6, D4Triality, AUntwisted, DUntwisted };

// A positive real root (or any root-lattice element at level 0): finite part and
// δ-coefficient in half-units.
struct AffineRoot {
  Vec finite;
  int d2 = 0;
  int norm = 0;
};

class AffineAlgebra {
 public:
  std::string id;
  Family family = Family::A2l;
  int l = 1;
  int r = 2;
  int N = 2;      // ambient rank of X_N
  int m = 1;      // mult(nδ) for n ≢ 0 mod r
  int h = 0;      // Coxeter number
  int hDual = 0;  // dual Coxeter number
  FiniteRootSystem fin;  // 𝔤̊
  FiniteRootSystem m0;   // 𝔪₀ (equal to 𝔤̊ for untwisted types)
  FiniteType ambientType = FiniteType::A;
  std::vector<std::vector<int>> E;  // E[k] is used for n ≡ k mod r
  Lattice M;
  Vec alpha0;       // finite part of α₀
  int alpha0D2 = 0; // δ-coefficient of α₀ in half-units

  bool twisted() const { return r > 1; }
  bool simply_laced_untwisted() const { return family == Family::AUntwisted || family == Family::DUntwisted; }
  const std::vector<int>& exponents_at(int n) const;
  int imaginary_mult(int n) const;
  Rational form(const Vec& x, const Vec& y) const { return fin.form(x, y); }
  // Affine simple roots (α₀ first), as level-0 elements.
  std::vector<AffineRoot> simple_roots() const;
  bool in_positive_cone(const Vec& finite, int d2) const;
};

AffineAlgebra build(std::string_view id);
std::vector<std::string> catalog_ids();  // the ids used by the acceptance checks
std::vector<AffineRoot> positive_real_roots_up_to(const AffineAlgebra& g, int maxD2);
int imaginary_mult(const AffineAlgebra& g, int n);
std::vector<Vec> lattice_ball(const AffineAlgebra& g, int maxNorm2);
// Positive exponents {e + h·n : n ≥ 0, e ∈ E_n} not exceeding bound, sorted.
std::vector<int> affine_exponents(const AffineAlgebra& g, int bound);
// Exponent multiset of the finite type X_N.
std::vector<int> ambient_exponents(const AffineAlgebra& g);
// E_k recomputed as generalized exponents of 𝔪_k: the adjoint (θ_l of 𝔪₀) for
// k ≡ 0 mod r, otherwise θ_s of 𝔪₀ (2θ_s for A_{2l}^(2)).
std::vector<int> recomputed_exponents(const AffineAlgebra& g, int k);

}  // namespace kacq
