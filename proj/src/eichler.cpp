#include "latticeworks/eichler.hpp"

namespace lw {

FiniteQuadraticForm::Element residue(const LatticeVector& v) {
  if (!is_primitive(v)) throw MathError("non-primitive input");
  const Int d = divisibility(v);
  RatVector x(v.coords().size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = Rat(v.coords()[i], d);
    x[i].canonicalize();
  }
  return FiniteQuadraticForm(v.lattice()).coordinates(x);
}

EichlerInvariant eichler_invariant(const LatticeVector& v) {
  return {norm(v), divisibility(v), residue(v)};
}

void verify_witness(const Lattice& l, const UUWitness& witness) {
  const std::array<IntVector, 4> vs{witness.first[0], witness.first[1], witness.second[0], witness.second[1]};
  for (const auto& v : vs)
    if (v.size() != l.rank()) throw MathError("U+U hypothesis unverified");
  // Expected Gram: U + U.
  const IntMatrix expected = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (l.inner(vs[i], vs[j]) != expected(i, j)) throw MathError("U+U hypothesis unverified");
}

bool eichler_equivalent(const LatticeVector& v, const LatticeVector& w, const UUWitness& witness) {
  if (!(v.lattice() == w.lattice())) throw MathError("lattice mismatch");
  verify_witness(v.lattice(), witness);
  return eichler_invariant(v) == eichler_invariant(w);
}

}  // namespace lw
