#include <doctest.h>

#include "latticeworks/mukai.hpp"
#include "oracles.hpp"

using namespace lw;

TEST_CASE("mukai pairing") {
  CHECK(mukai_square({1, 0, -1}) == 2);
  CHECK(mukai_square({2, 1, 0}) == 2);
  CHECK(mukai_square({0, 1, 2}) == 2);
  CHECK(mukai_square({1, 0, 1}) == -2);
  CHECK(mukai_pairing({1, 0, 0}, {0, 0, 1}) == -1);
  CHECK(mukai_pairing({0, 1, 0}, {0, 1, 0}, 4) == 4);
  CHECK(mukai_vector_of_sheaf(1, 0, -2) == MukaiVector{1, 0, -1});
  CHECK(to_string(MukaiVector{2, 1, 0}) == "(2,1H,0)");

  const Lattice alg = algebraic_mukai_lattice();
  CHECK(alg.gram() == IntMatrix{{0, -1, 0}, {-1, 0, 0}, {0, 0, 2}});
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int i = 0; i < 200; ++i) {
    const MukaiVector v{c(rng), c(rng), c(rng)}, w{c(rng), c(rng), c(rng)};
    CHECK(alg.inner(algebraic_coords(v), algebraic_coords(w)) == mukai_pairing(v, w));
    CHECK(from_algebraic_coords(algebraic_coords(v)) == v);
    const FullMukaiLattice& full = full_mukai_lattice();
    CHECK(full.lattice.inner(full.embed(v), full.embed(w)) == mukai_pairing(v, w));
    CHECK(full.involution * full.embed(v) == full.embed(v));
  }
}

TEST_CASE("full Mukai lattice") {
  const FullMukaiLattice& full = full_mukai_lattice();
  CHECK(full.lattice.rank() == 24);
  CHECK(full.lattice.determinant() == 1);
  CHECK(full.lattice.signature() == Signature{4, 20});
  const IntMatrix& phi = full.involution;
  CHECK(phi * phi == IntMatrix::identity(24));
  CHECK(phi.transpose() * full.lattice.gram() * phi == full.lattice.gram());
}

TEST_CASE("O'Grady invariant lattices") {
  CHECK(ogrady_invariant_lattice({1, 0, -1}).name == Rank2Class::TwoPlusMinusTwo);
  CHECK(ogrady_invariant_lattice({2, 1, 0}).name == Rank2Class::U);
  CHECK(ogrady_invariant_lattice({0, 1, 2}).name == Rank2Class::U);
  const InvariantLattice inv = ogrady_invariant_lattice({1, 0, -1});
  for (const auto& b : inv.sublattice.basis())
    CHECK(mukai_pairing(from_algebraic_coords(b), {1, 0, -1}) == 0);
  CHECK_THROWS_WITH_AS(ogrady_invariant_lattice({2, 0, -2}), "non-primitive input", MathError);
  CHECK_THROWS_WITH_AS(ogrady_invariant_lattice({1, 0, 1}), "v^2 must be positive", MathError);
}

TEST_CASE("rank-3 and rank-24 computations agree") {
  for (const MukaiVector& v : {MukaiVector{1, 0, -1}, MukaiVector{2, 1, 0}, MukaiVector{0, 1, 2}, MukaiVector{1, 1, 0},
                               MukaiVector{3, 2, 1}}) {
    CAPTURE(to_string(v));
    const OgradyCrossCheck cc = ogrady_cross_check(v);
    CHECK(cc.agree);
    CHECK(cc.algebraic.name == cc.full.name);
    REQUIRE(cc.base_change.has_value());
    const IntMatrix& t = *cc.base_change;
    CHECK(t.transpose() * cc.algebraic.sublattice.gram() * t == cc.full.sublattice.gram());
    CHECK(cc.full.sublattice.is_primitive());
  }
}

TEST_CASE("Beauville invariants") {
  CHECK(beauville_invariants(-17) == BeauvilleInvariants{288, 37, 156, 19});
  CHECK(beauville_invariants(-19) == BeauvilleInvariants{360, 46, 192, 20});
  CHECK(beauville_invariants(21) == BeauvilleInvariants{440, 56, 232, 0});
  for (long t = -19; t <= 21; t += 2) {
    const BeauvilleInvariants b = beauville_invariants(t);
    CHECK(8 * b.chi == Int(t * t + 7));
    CHECK(2 * b.euler == Int(t * t + 23));
    CHECK(b.k_squared == Int(t * t - 1));
    CHECK(2 * b.moduli_dim == Int(21 - t));
    // Noether: 12 chi = K^2 + e.
    CHECK(12 * b.chi == b.k_squared + b.euler);
  }
  CHECK_THROWS_AS(beauville_invariants(0), MathError);
  CHECK_THROWS_AS(beauville_invariants(23), MathError);
  CHECK(trace_from_invariant_rank(2) == -17);
  CHECK(trace_from_invariant_rank(1) == -19);
}

TEST_CASE("vectors of square two") {
  const auto vs = mukai_vectors_of_square(2, 3);
  std::size_t brute = 0;
  for (long r = -3; r <= 3; ++r)
    for (long a = -3; a <= 3; ++a)
      for (long s = -3; s <= 3; ++s)
        if (std::gcd(std::gcd(r, a), s) == 1 && 2 * a * a - 2 * r * s == 2) ++brute;
  CHECK(vs.size() == brute);
  for (const auto& v : vs) CHECK(mukai_square(v) == 2);
}

TEST_CASE("U(2) impossibility") {
  const U2ImpossibilityReport rep = impossibility_u2(10);
  CHECK(rep.glue_subgroups == 3);
  CHECK(rep.nontrivial_glue_subgroups == 2);
  CHECK(rep.glued_with_u2_primitive == 0);
  CHECK(rep.count_u2 == 0);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.count_other == 0);
  CHECK(rep.vectors_checked == rep.count_u + rep.count_split);
  CHECK(rep.count_u > 0);
  CHECK(rep.count_split > 0);
  CHECK(rep.pass());
}

TEST_CASE("No.4 impossibility") {
  const No4ImpossibilityReport rep = impossibility_no4(10);
  CHECK_FALSE(rep.pairs.empty());
  for (const auto& p : rep.pairs) {
    CHECK(mukai_square(p.g) == -2);
    CHECK(mukai_pairing(p.g, p.v) == 0);
    CHECK(p.half_sum_integral);
    CHECK(p.div_in_full_complement == 2);
  }
  CHECK(rep.pass());
  const auto first = std::find_if(rep.pairs.begin(), rep.pairs.end(),
                                  [](const No4Pair& p) { return p.v == MukaiVector{1, 0, -1}; });
  REQUIRE(first != rep.pairs.end());
  CHECK((first->g == MukaiVector{1, 0, 1} || first->g == MukaiVector{-1, 0, -1}));
}

TEST_CASE("fixed-locus combinatorics") {
  const auto classes = jacobian_fixed_classes();
  CHECK(classes.size() == 16);
  std::size_t total = 0, six = 0, two = 0;
  for (const auto& c : classes) {
    total += c.members.size();
    if (c.members.size() == 6) {
      ++six;
      CHECK(r_invariant(c) == 2);
    } else {
      CHECK(c.members.size() == 2);
      ++two;
      CHECK(r_invariant(c) == 1);
      // a triple of distinct points and its complement
      std::set<int> u(c.members[0].begin(), c.members[0].end());
      u.insert(c.members[1].begin(), c.members[1].end());
      CHECK(u.size() == 6);
    }
  }
  CHECK(total == 56);
  CHECK(six == 6);
  CHECK(two == 10);
}
