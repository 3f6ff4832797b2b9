#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latticeworks/linalg.hpp"

namespace lw {

/// An even nondegenerate integral lattice, given by its Gram matrix in a
/// fixed basis. Copies share the (immutable) Gram data.
class Lattice {
 public:
  /// Validates symmetry, even diagonal and det != 0.
  explicit Lattice(IntMatrix gram, std::string label = {});

  const IntMatrix& gram() const { return data_->gram; }
  std::size_t rank() const { return data_->gram.rows(); }
  const std::string& label() const { return data_->label; }
  const Int& determinant() const { return data_->det; }
  Signature signature() const;

  Lattice with_label(std::string label) const { return Lattice(gram(), std::move(label)); }

  Int inner(const IntVector& x, const IntVector& y) const;
  Int norm(const IntVector& x) const { return inner(x, x); }
  /// G x, the vector of pairings of x with the basis.
  IntVector pairings(const IntVector& x) const;

  /// Same Gram matrix (labels are ignored).
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.data_ == b.data_ || a.gram() == b.gram();
  }

 private:
  struct Data {
    IntMatrix gram;
    std::string label;
    Int det;
  };
  std::shared_ptr<const Data> data_;
};

class LatticeVector {
 public:
  LatticeVector(Lattice lattice, IntVector coords);

  const Lattice& lattice() const { return lattice_; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a);
  friend LatticeVector operator*(const Int& k, const LatticeVector& a);
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.lattice_ == b.lattice_ && a.coords_ == b.coords_;
  }

 private:
  Lattice lattice_;
  IntVector coords_;
};

/// Basis vector e_i of L.
LatticeVector basis_vector(const Lattice& l, std::size_t i);

// Constructors ---------------------------------------------------------------

Lattice make_U();
/// The negative definite E8 root lattice (diagonal -2, +1 per Dynkin edge).
Lattice make_E8();
/// <n>; n must be even and nonzero.
Lattice make_rank_one(const Int& n);
Lattice rescale(const Lattice& l, const Int& m);
Lattice direct_sum(const std::vector<Lattice>& parts, std::string label = {});

/// Exact Gram matrix of make_E8().
extern const IntMatrix kE8Gram;

// Pairings -------------------------------------------------------------------

Int inner(const LatticeVector& v, const LatticeVector& w);
Int norm(const LatticeVector& v);
/// Positive generator of (v, L). Throws "undefined for zero".
Int divisibility(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);
bool is_primitive(const IntVector& v);

// Sublattices ----------------------------------------------------------------

/// A subgroup of a lattice given by independent basis vectors (ambient
/// coordinates). The induced form may be degenerate.
class Sublattice {
 public:
  Sublattice(Lattice ambient, std::vector<IntVector> basis);

  const Lattice& ambient() const { return ambient_; }
  const std::vector<IntVector>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  /// Columns are the basis vectors.
  IntMatrix basis_matrix() const;
  /// B^T G B.
  const IntMatrix& gram() const { return gram_; }
  bool is_primitive() const { return primitive_; }
  bool is_nondegenerate() const;
  /// The induced lattice; throws if the induced form is degenerate.
  Lattice lattice(std::string label = {}) const;

  IntVector to_ambient(const IntVector& local) const;
  /// Local coordinates of an ambient vector, if it lies in the subgroup.
  std::optional<IntVector> to_local(const IntVector& ambient) const;
  bool same_subgroup(const Sublattice& other) const;

 private:
  Lattice ambient_;
  std::vector<IntVector> basis_;
  IntMatrix gram_;
  bool primitive_ = false;
};

/// Saturated basis of {x : (x, v_i) = 0 for all i}.
Sublattice orthogonal_complement(const Lattice& l, const std::vector<IntVector>& vectors);

// Representation of integers by binary forms ----------------------------------

struct Representations {
  /// Primitive solutions, one per +-pair, first nonzero coordinate positive,
  /// sorted lexicographically.
  std::vector<IntVector> vectors;
  /// True when an exact solver certified the list independent of the bound.
  bool complete = false;
};

/// Primitive x with x^2 = n. U(m) and diag(2,-2) use exact factorization;
/// any other rank-2 form is enumerated in the box |coords| <= bound.
Representations represent(const Lattice& l, const Int& n, long bound);

/// T with T^T G1 T = G2, |det T| = 1 and entries bounded by `bound`.
/// An empty result only means "not found within bound". Enumeration is
/// exhaustive over a box, so this is practical for small ranks only.
std::optional<IntMatrix> isometry_search(const Lattice& l1, const Lattice& l2, long bound);

}  // namespace lw
