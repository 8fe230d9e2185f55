#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ulrich/groebner.hpp"
#include "ulrich/monomial.hpp"

namespace ulrich {

/// Point of the fraction lattice Z^d (d ≤ 4).
using LatticePoint = std::array<int, 4>;

inline LatticePoint to_lattice(const ExponentVector& e) { return {e[0], e[1], e[2], e[3]}; }
inline int lattice_degree(const LatticePoint& p) { return p[0] + p[1] + p[2] + p[3]; }
inline LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline bool nonnegative(const LatticePoint& p) { return p[0] >= 0 && p[1] >= 0 && p[2] >= 0 && p[3] >= 0; }
std::string lattice_string(const LatticePoint& p, int dim);

/// Affine semigroup in N^d generated by finitely many nonzero vectors.
class AffineSemigroup {
 public:
  AffineSemigroup(int dim, std::vector<ExponentVector> generators);

  int dim() const { return dim_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  int max_generator_degree() const { return max_deg_; }
  int min_generator_degree() const { return min_deg_; }
  /// All generators share one total degree.
  bool homogeneous() const { return min_deg_ == max_deg_; }

  /// Generator sets compared as sets.
  friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b);

 private:
  int dim_;
  std::vector<ExponentVector> gens_;  // sorted, deduplicated
  int max_deg_ = 0;
  int min_deg_ = 0;
};

/// Parses `sg 2 {(2,0),(3,0)}`; the `sg` keyword and dimension are optional.
AffineSemigroup parse_semigroup(std::string_view text);
std::string to_string(const AffineSemigroup& g);

/// Generator set of k[x^n, x^{n+1}, x^n y, y^n, y^{n+1}, x y^n, x y].
AffineSemigroup no_ulrich_semigroup(int n);
/// Generator set of k[s^{n+1}, s x^n, x^{n+1}, x^n y, s y^n, y^{n+1}, x y^n, s^{n-1} x y] in (s,x,y).
AffineSemigroup veronese_face_semigroup(int n);

struct MembershipCertificate {
  bool member = false;
  /// Multiplicity of each generator in the decomposition (when member).
  std::vector<int> decomposition;
};

/// Exhaustive search over the box below v; decompositions have length ≤ deg(v).
MembershipCertificate sg_member(const AffineSemigroup& g, const ExponentVector& v);
MembershipCertificate sg_member(const AffineSemigroup& g, const std::vector<int>& v);

struct GapSet {
  bool finite = false;  // false means NOT_FINITE_WITHIN_BOUND
  std::vector<ExponentVector> gaps;
  /// Degree bound actually used for the shell test.
  int shell_top = 0;
  int max_gap_degree() const;
};

/// Gap set below a fully-populated degree shell. The shell test runs at
/// max(bound, (dim + 1) * maxgen) so that shell membership propagates upward.
GapSet gap_set(const AffineSemigroup& g, int bound);
/// gap_set with the smallest admissible bound, doubled until certified or
/// `limit` is exceeded.
GapSet find_gap_set(const AffineSemigroup& g, int limit = 512);

/// ord(s) = max k with s ∈ m^k, tabulated on the points of total degree ≤ bound.
class OrderTable {
 public:
  OrderTable(const AffineSemigroup& g, int bound);

  int bound() const { return bound_; }
  /// -1 for non-members; undefined beyond the bound (throws).
  int ord(const LatticePoint& p) const;
  bool member(const LatticePoint& p) const { return ord(p) >= 0; }
  bool in_range(const LatticePoint& p) const;

  template <class Fn>
  void for_each_point(Fn&& fn) const {
    LatticePoint p{0, 0, 0, 0};
    for_each_rec(fn, p, 0, bound_);
  }

 private:
  template <class Fn>
  void for_each_rec(Fn& fn, LatticePoint& p, int axis, int left) const {
    if (axis == dim_) {
      fn(p);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      p[axis] = a;
      for_each_rec(fn, p, axis + 1, left - a);
    }
    p[axis] = 0;
  }
  std::size_t index(const LatticePoint& p) const;

  int dim_;
  int bound_;
  std::vector<short> ord_;
};

/// ℓ(R/m_R^t) for the semigroup ring R.
long hilbert_samuel(const AffineSemigroup& g, int t);
/// ℓ(R/m_R^t) for t = 1..t_max, with the lattice bound certified.
std::vector<long> hilbert_samuel_table(const AffineSemigroup& g, int t_max);

/// e(R): stabilized dim-th difference of the Hilbert–Samuel table
/// (not stabilized by t = 40 means INCONCLUSIVE).
DifferenceCertificate multiplicity(const AffineSemigroup& g, int t_max = 40);

/// ν(m_R): number of generators of ord exactly 1.
int nu_max_ideal(const AffineSemigroup& g);

struct FaceLocalization {
  AffineSemigroup image;
  /// Generators that become units once the first variable is inverted.
  std::vector<ExponentVector> units;
};

/// Inverts the first variable of a homogeneous semigroup in (s, x, y) and
/// returns the semigroup of images in (x/s, y/s).
FaceLocalization localize_at_face(const AffineSemigroup& g, int face = 0);

/// Torsion-free rank-one monomial module M = Σ R·x^{m_i} inside the fraction
/// field of a monomial subring R with finite gap set. An empty generator list
/// is the zero module.
class MonomialModule {
 public:
  MonomialModule(AffineSemigroup ring, std::vector<LatticePoint> generators);

  const AffineSemigroup& ring() const { return ring_; }
  const std::vector<LatticePoint>& generators() const { return gens_; }
  int dim() const { return ring_.dim(); }

  bool contains(const LatticePoint& v) const;
  /// v ∈ M·S, i.e. v dominates some generator.
  bool saturation_contains(const LatticePoint& v) const;
  /// The S-saturation M·S as an R-module (generators: the lattice points
  /// needed to generate M·S over R).
  MonomialModule saturation() const;
  /// Lattice points of M·S not in M (a basis of M·S/M).
  std::vector<LatticePoint> saturation_quotient_basis() const;
  /// ν_R(M)
  int minimal_generator_count() const;
  /// ν_S(M·S): minimal generators of the monomial S-module M·S.
  int saturation_generator_count() const;
  /// e_R(M) from the Hilbert–Samuel function of M.
  DifferenceCertificate multiplicity(int t_max = 40) const;
  /// Componentwise minimum over generators.
  LatticePoint corner() const;
  int max_generator_degree() const;

  const GapSet& ring_gaps() const { return gaps_; }

 private:
  bool ring_member(const LatticePoint& v) const;

  AffineSemigroup ring_;
  std::vector<LatticePoint> gens_;
  GapSet gaps_;
};

}  // namespace ulrich
