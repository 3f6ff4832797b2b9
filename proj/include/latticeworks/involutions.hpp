#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latticeworks/disc_forms.hpp"
#include "latticeworks/lattice.hpp"

namespace lw {

/// Basis indices of the K3^[2] lattice U^3 + E8^2 + <-2>.
namespace k3two {
inline constexpr std::size_t kRank = 23;
inline constexpr std::size_t e1 = 0, f1 = 1, e2 = 2, f2 = 3, e3 = 4, f3 = 5;
inline constexpr std::size_t first_e8 = 6, second_e8 = 14;
inline constexpr std::size_t delta = 22;
}  // namespace k3two

/// U^3 + E8^2 + <-2> in the order U1, U2, U3, E8, E8, delta.
Lattice k3_two_lattice();

/// Sparse helper: sum of coeff * basis vector over the given terms.
IntVector lambda_vector(std::initializer_list<std::pair<std::size_t, long>> terms);

/// Looks up e1..f3 / delta by name.
std::optional<IntVector> named_lambda_vector(const std::string& name);

class Involution {
 public:
  /// Verifies iota^2 = 1 and iota^T G iota = G, then computes the
  /// saturated (anti-)invariant sublattices and checks they are orthogonal
  /// with complementary ranks. Columns of the matrix are the images of the
  /// basis vectors.
  Involution(Lattice lattice, IntMatrix matrix);

  const Lattice& lattice() const { return lattice_; }
  const IntMatrix& matrix() const { return matrix_; }
  const Sublattice& invariant() const { return invariant_; }
  const Sublattice& anti_invariant() const { return anti_invariant_; }
  IntVector apply(const IntVector& x) const { return matrix_ * x; }

 private:
  Lattice lattice_;
  IntMatrix matrix_;
  Sublattice invariant_;
  Sublattice anti_invariant_;
};

/// The fixed sublattice chosen for class J in {1,2,3,4}:
///   1: {e1, f1}   2: {e1+e2, f1+f2}   3: {e1+f1, delta}   4: {e1+f1, e2-f2}.
Sublattice class_embedding(int j);

/// iota = 2 * proj_{M (x) Q} - 1; throws "involution does not extend
/// integrally" when that matrix is not integral.
Involution involution_from_fixed_sublattice(const Sublattice& m);

/// A norm -2 vector spanning the <-2> summand of a sublattice isometric to
/// <2> + <-2>, in ambient coordinates.
IntVector minus_two_generator(const Sublattice& s);

/// The class number a recognized involution belongs to, if it has a rank-2
/// hyperbolic invariant lattice.
std::optional<int> recognize_class(const Involution& iota);

struct WallCount {
  std::vector<IntVector> minus2_walls;          // NS coordinates, up to sign
  std::vector<IntVector> minus10_walls;         // norm -10 with div 2 in Lambda
  std::vector<IntVector> minus10_excluded;      // norm -10 with div 1 in Lambda
  std::size_t chamber_count = 0;
};

WallCount walls_and_chambers(int j);

struct ClassRow {
  int number = 0;
  Rank2Class invariant_class = Rank2Class::Other;
  std::optional<Int> g_divisibility;  // classes 3 and 4
  std::size_t fibre_size = 0;
  Signature anti_invariant_signature;
};

/// Thrown when a recomputed invariant disagrees with the classification table.
class VerificationError : public MathError {
 public:
  using MathError::MathError;
};

ClassRow verify_class(int j);

/// -1 on one hyperbolic plane of the anti-invariant part, identity elsewhere;
/// verified to commute with the class involution and to reverse the
/// orientation of a positive 2-plane in the anti-invariant part.
IntMatrix component_swap_isometry(int j);

long euler_phi(long n);

/// All N >= 1 with phi(N) dividing `transcendental_rank`.
std::set<long> admissible_hodge_orders(long transcendental_rank);

}  // namespace lw
