#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latticeworks/lattice.hpp"

namespace lw {

/// Discriminant group A_L = L^* / L with its quadratic form q (values in
/// Q/2Z, stored in [0,2)) and bilinear form b (values in Q/Z, stored in [0,1)).
///
/// Elements are coordinate tuples c with 0 <= c_i < orders()[i] relative to
/// the generator lifts; the lift of c is sum c_i * generator_lifts()[i].
class FiniteQuadraticForm {
 public:
  using Element = IntVector;

  /// Built from the SNF U G V = S: L^* = V S^{-1} Z^n, so the lifts are the
  /// columns V e_i / d_i for the nontrivial divisors d_i.
  explicit FiniteQuadraticForm(const Lattice& l);

  const std::vector<Int>& orders() const { return orders_; }
  std::size_t num_generators() const { return orders_.size(); }
  /// |A_L|.
  Int size() const;
  const std::vector<RatVector>& generator_lifts() const { return lifts_; }
  /// Pairings of the generator lifts (rational Gram of the generators).
  const RatMatrix& generator_gram() const { return gen_gram_; }

  Element zero() const { return Element(orders_.size(), Int(0)); }
  Element generator(std::size_t i) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(const Int& k, const Element& x) const;
  Int order_of(const Element& x) const;

  Rat q(const Element& x) const;
  Rat b(const Element& x, const Element& y) const;

  RatVector lift(const Element& x) const;
  /// Class of x in A_L; x must lie in L^* (else MathError "not in dual lattice").
  Element coordinates(const RatVector& x) const;

  /// All elements in lexicographic coordinate order. Throws "cap exceeded".
  std::vector<Element> elements(const Int& cap = 4096) const;
  /// Sorted q-values of the nonzero elements.
  std::vector<Rat> nonzero_q_values(const Int& cap = 4096) const;

 private:
  RatMatrix gram_;
  IntMatrix v_inv_;
  std::vector<std::size_t> source_index_;  // which SNF position each generator came from
  std::vector<Int> orders_;
  std::vector<RatVector> lifts_;
  RatMatrix gen_gram_;
};

FiniteQuadraticForm discriminant_group(const Lattice& l);

/// Reduction into [0, m).
Rat reduce_mod(const Rat& x, long m);

bool is_two_elementary(const Lattice& l);

struct TwoElementaryInvariants {
  std::size_t rank = 0;
  std::size_t a = 0;      // log2 |A_L|
  int delta_parity = 0;   // 0 iff q takes only integral values
  friend bool operator==(const TwoElementaryInvariants&, const TwoElementaryInvariants&) = default;
};

/// Throws MathError("not 2-elementary") when some generator order exceeds 2.
TwoElementaryInvariants two_elementary_invariants(const Lattice& l);

enum class Rank2Class { U, U2, TwoPlusMinusTwo, Other };

std::string to_string(Rank2Class c);

/// Names a rank-2 even lattice of signature (1,1) as U, U(2), <2>+<-2> or
/// other, using |det|, the 2-elementary invariants and the q-value multiset.
Rank2Class classify_rank2(const Lattice& l);

struct IsotropicSubgroup {
  /// Sorted lexicographically; always contains zero.
  std::vector<FiniteQuadraticForm::Element> elements;
  std::size_t size() const { return elements.size(); }
};

/// Every subgroup on which q = 0 mod 2Z and b = 0 mod Z, including {0}.
/// Sorted by size, then lexicographically by elements.
std::vector<IsotropicSubgroup> isotropic_subgroups(const FiniteQuadraticForm& a, const Int& cap = 4096);

struct Overlattice {
  Lattice lattice;
  /// Columns: the new basis, in rational coordinates of the old basis.
  RatMatrix basis;
  /// Columns: images of the old basis vectors in new coordinates.
  IntMatrix embedding;
};

Overlattice overlattice(const Lattice& l, const FiniteQuadraticForm& a, const IsotropicSubgroup& h);

/// True iff saturation does not enlarge the sublattice.
bool is_primitive_in(const Sublattice& m);

/// Brute-force isometry test of finite quadratic forms (|A| <= cap).
bool isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, const Int& cap = 256);

}  // namespace lw
