#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latticeworks/disc_forms.hpp"
#include "latticeworks/lattice.hpp"

namespace lw {

/// (r, aH, s) in H^0 + ZH + H^4 of a K3 surface with Pic = ZH.
struct MukaiVector {
  Int r;
  Int a;
  Int s;
  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

std::string to_string(const MukaiVector& v);

/// H^2 of the polarisation. Everything downstream pins the double sextic.
inline constexpr long kDoubleSexticDegree = 2;

/// (r1, a1 H, s1).(r2, a2 H, s2) = a1 a2 H^2 - r1 s2 - r2 s1.
Int mukai_pairing(const MukaiVector& v, const MukaiVector& w, long h_square = kDoubleSexticDegree);
Int mukai_square(const MukaiVector& v, long h_square = kDoubleSexticDegree);

/// v(F) = (rank, c1, rank + ch2).
MukaiVector mukai_vector_of_sheaf(const Int& rank, const Int& c1_coeff, const Int& ch2);

/// Rank-3 lattice H^0 + ZH + H^4 with basis (1,0,0), (0,0,1), (0,H,0):
/// Gram [[0,-1,0],[-1,0,0],[0,0,h_square]].
Lattice algebraic_mukai_lattice(long h_square = kDoubleSexticDegree);
/// Coordinates in the basis above, i.e. (r, s, a).
IntVector algebraic_coords(const MukaiVector& v);
MukaiVector from_algebraic_coords(const IntVector& x);

/// Full Mukai lattice U0 + U1 + U2 + U3 + E8 + E8 (rank 24); U0 = H^0 + H^4
/// with the Mukai sign [[0,-1],[-1,0]]. The involution is +1 on U0, swaps
/// e1 <-> f1, and is -1 on U2, U3, E8, E8, so its invariant part is
/// U0 + Z(e1 + f1) with H = e1 + f1.
struct FullMukaiLattice {
  Lattice lattice;
  IntMatrix involution;
  IntVector embed(const MukaiVector& v) const;
};

const FullMukaiLattice& full_mukai_lattice();

struct InvariantLattice {
  Sublattice sublattice;
  Rank2Class name;
};

/// (v^perp)^phi computed inside the algebraic Mukai lattice. Requires v
/// primitive with v^2 > 0.
InvariantLattice ogrady_invariant_lattice(const MukaiVector& v);

struct OgradyCrossCheck {
  InvariantLattice algebraic;
  InvariantLattice full;  // saturated ker(phi - 1) cap v^perp in the rank-24 lattice
  std::optional<IntMatrix> base_change;  // T with T^T G_alg T = G_full
  bool agree = false;
};

OgradyCrossCheck ogrady_cross_check(const MukaiVector& v);

struct BeauvilleInvariants {
  Int k_squared;
  Int chi;
  Int euler;
  Int moduli_dim;
  friend bool operator==(const BeauvilleInvariants&, const BeauvilleInvariants&) = default;
};

/// t odd with -19 <= t <= 21.
BeauvilleInvariants beauville_invariants(long t);

/// t = 2r - 21, 1 <= r <= 21.
long trace_from_invariant_rank(long r);

struct U2ImpossibilityReport {
  std::size_t glue_subgroups = 0;          // isotropic subgroups of A_{U(2)+<2>} incl. {0}
  std::size_t nontrivial_glue_subgroups = 0;
  std::size_t glued_with_u2_primitive = 0; // overlattices in which U(2) stays primitive
  long bound = 0;
  std::size_t vectors_checked = 0;         // primitive v, v^2 = 2, |coords| <= bound
  std::vector<MukaiVector> counterexamples;
  std::size_t count_u = 0, count_u2 = 0, count_split = 0, count_other = 0;
  bool pass() const;
};

U2ImpossibilityReport impossibility_u2(long bound);

struct No4Pair {
  MukaiVector v;
  MukaiVector g;
  bool half_sum_integral = false;
  Int div_in_full_complement;  // div of g inside v^perp of the rank-24 lattice
};

struct No4ImpossibilityReport {
  long bound = 0;
  std::size_t vectors_checked = 0;
  std::vector<No4Pair> pairs;  // every v whose complement is <2>+<-2>
  bool pass() const;
};

No4ImpossibilityReport impossibility_no4(long bound);

/// Primitive v with v^2 = n and |r|,|a|,|s| <= bound, in (r, a, s) order.
std::vector<MukaiVector> mukai_vectors_of_square(const Int& n, long bound);

/// A class of size-3 multisets over {1..6} (each member sorted ascending).
struct WeierstrassDivisorClass {
  std::vector<std::array<int, 3>> members;
};

/// Union-find over the 56 multisets: {i,i,k} ~ {j,j,k}, and a triple of
/// distinct points ~ its complement. Sorted by smallest member.
std::vector<WeierstrassDivisorClass> jacobian_fixed_classes();

/// 2 if the class contains a multiset with a repeated point, else 1.
int r_invariant(const WeierstrassDivisorClass& c);

}  // namespace lw
