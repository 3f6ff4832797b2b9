#pragma once

#include <array>

#include "latticeworks/disc_forms.hpp"
#include "latticeworks/lattice.hpp"

namespace lw {

/// Class of v / div(v) in A_L, in the generator coordinates of
/// FiniteQuadraticForm(v.lattice()). Throws "non-primitive input".
FiniteQuadraticForm::Element residue(const LatticeVector& v);

struct EichlerInvariant {
  Int norm;
  Int divisibility;
  FiniteQuadraticForm::Element residue;
  friend bool operator==(const EichlerInvariant&, const EichlerInvariant&) = default;
};

EichlerInvariant eichler_invariant(const LatticeVector& v);

/// Two mutually orthogonal hyperbolic planes inside L, each given by a pair
/// (e, f) with e^2 = f^2 = 0 and (e, f) = 1.
struct UUWitness {
  std::array<IntVector, 2> first;
  std::array<IntVector, 2> second;
};

/// Throws "U+U hypothesis unverified" unless the witness checks out.
void verify_witness(const Lattice& l, const UUWitness& witness);

/// Equal norm and equal residue in A_L: under the U+U hypothesis this
/// certifies that v and w lie in one O(L)-orbit.
bool eichler_equivalent(const LatticeVector& v, const LatticeVector& w, const UUWitness& witness);

}  // namespace lw
