// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "latticeworks/disc_forms.hpp"
#include "latticeworks/involutions.hpp"
#include "latticeworks/mukai.hpp"
#include "oracles.hpp"

using namespace lw;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Outcome classification_table() {
  Outcome o;
  const Rank2Class names[] = {Rank2Class::U, Rank2Class::U2, Rank2Class::TwoPlusMinusTwo, Rank2Class::TwoPlusMinusTwo};
  for (int j = 1; j <= 4; ++j) {
    const ClassRow row = verify_class(j);
    o.expect(row.invariant_class == names[j - 1], "class " + std::to_string(j) + " invariant lattice");
    if (j == 3) o.expect(row.g_divisibility && *row.g_divisibility == 2, "class 3 div(g) = 2");
    if (j == 4) o.expect(row.g_divisibility && *row.g_divisibility == 1, "class 4 div(g) = 1");
    if (j <= 2) o.expect(!row.g_divisibility, "no g for classes 1, 2");
  }
  return o;
}

Outcome fibre_sizes() {
  Outcome o;
  const std::size_t expected[4][3] = {{1, 0, 2}, {0, 0, 1}, {1, 2, 4}, {1, 0, 2}};
  const std::size_t fibres[] = {2, 1, 4, 2};
  for (int j = 1; j <= 4; ++j) {
    const WallCount w = walls_and_chambers(j);
    const std::string tag = "class " + std::to_string(j);
    o.expect(w.minus2_walls.size() == expected[j - 1][0], tag + " (-2)-walls");
    o.expect(w.minus10_walls.size() == expected[j - 1][1], tag + " (-10)-walls of div 2");
    o.expect(w.chamber_count == expected[j - 1][2], tag + " chambers");
    o.expect(w.chamber_count == fibres[j - 1], tag + " fibre size");
  }
  return o;
}

Outcome beauville() {
  Outcome o;
  o.expect(beauville_invariants(-17) == BeauvilleInvariants{288, 37, 156, 19}, "t = -17");
  for (long t = -19; t <= 21; t += 2) {
    const BeauvilleInvariants b = beauville_invariants(t);
    o.expect(8 * b.chi == Int(t * t + 7), "8 chi = t^2 + 7 at t = " + std::to_string(t));
    o.expect(2 * b.euler == Int(t * t + 23), "2 e = t^2 + 23 at t = " + std::to_string(t));
  }
  return o;
}

Outcome ogrady() {
  Outcome o;
  const std::pair<MukaiVector, Rank2Class> cases[] = {
      {{1, 0, -1}, Rank2Class::TwoPlusMinusTwo}, {{2, 1, 0}, Rank2Class::U}, {{0, 1, 2}, Rank2Class::U}};
  for (const auto& [v, name] : cases) {
    const OgradyCrossCheck cc = ogrady_cross_check(v);
    o.expect(cc.algebraic.name == name, to_string(v) + " rank-3 class");
    o.expect(cc.full.name == name, to_string(v) + " rank-24 class");
    o.expect(cc.agree && cc.base_change.has_value(), to_string(v) + " rank-3 and rank-24 isometric");
  }
  return o;
}

Outcome overlattices() {
  Outcome o;
  const Lattice l = direct_sum({k3_two_lattice(), make_rank_one(2)});
  const FiniteQuadraticForm a = discriminant_group(l);
  std::size_t nontrivial = 0;
  for (const auto& h : isotropic_subgroups(a)) {
    if (h.size() == 1) continue;
    ++nontrivial;
    const Overlattice ov = overlattice(l, a, h);
    o.expect(abs(ov.lattice.determinant()) == 1, "glued lattice unimodular");
    o.expect(ov.lattice.signature() == Signature{4, 20}, "glued signature (4,20)");
  }
  o.expect(nontrivial == 1, "exactly one nontrivial glue for Lambda + <2>");

  const Lattice m = direct_sum({rescale(make_U(), 2), make_rank_one(2)});
  const FiniteQuadraticForm am = discriminant_group(m);
  nontrivial = 0;
  for (const auto& h : isotropic_subgroups(am)) {
    if (h.size() == 1) continue;
    ++nontrivial;
    const Overlattice ov = overlattice(m, am, h);
    const Sublattice image(ov.lattice, {ov.embedding.col(0), ov.embedding.col(1)});
    o.expect(!is_primitive_in(image), "U(2) non-primitive in every overlattice");
  }
  o.expect(nontrivial == 2, "exactly two nontrivial isotropic subgroups for U(2) + <2>");
  return o;
}

Outcome sweeps() {
  Outcome o;
  const U2ImpossibilityReport u2 = impossibility_u2(10);
  o.expect(u2.vectors_checked > 0, "u2 sweep saw vectors");
  o.expect(u2.counterexamples.empty() && u2.count_u2 == 0, "no complement isometric to U(2)");
  o.expect(u2.pass(), "u2 report");
  const No4ImpossibilityReport no4 = impossibility_no4(10);
  o.expect(!no4.pairs.empty(), "no4 sweep saw <2>+<-2> complements");
  for (const auto& p : no4.pairs) {
    o.expect(mukai_square(p.g) == -2 && mukai_pairing(p.g, p.v) == 0, "g is a (-2)-class orthogonal to v");
    const Int r = p.g.r + p.v.r, a = p.g.a + p.v.a, s = p.g.s + p.v.s;
    o.expect(r % 2 == 0 && a % 2 == 0 && s % 2 == 0, "(g + v)/2 integral for " + to_string(p.v));
  }
  o.expect(no4.pass(), "no4 report");
  return o;
}

Outcome fixed_locus() {
  Outcome o;
  const auto classes = jacobian_fixed_classes();
  std::size_t total = 0, six = 0, two = 0;
  for (const auto& c : classes) {
    total += c.members.size();
    if (c.members.size() == 6 && r_invariant(c) == 2) ++six;
    if (c.members.size() == 2 && r_invariant(c) == 1) ++two;
  }
  o.expect(classes.size() == 16, "16 classes");
  o.expect(total == 56, "56 multisets");
  o.expect(six == 6 && two == 10, "6 classes of size 6 (r=2), 10 of size 2 (r=1)");
  return o;
}

Outcome hodge() {
  Outcome o;
  o.expect(admissible_hodge_orders(21) == std::set<long>{1, 2}, "orders for rank 21");
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    const IntMatrix m = oracle::random_matrix(rng, dim(rng), dim(rng), 100);
    const SnfResult s = snf(m);
    o.expect(s.U * m * s.V == s.S, "U M V = S");
    o.expect(abs(oracle::laplace_det(s.U)) == 1 && abs(oracle::laplace_det(s.V)) == 1, "U, V unimodular");
    const IntVector d = s.divisors();
    for (std::size_t k = 0; k + 1 < d.size(); ++k) o.expect(d[k + 1] % d[k] == 0, "divisor chain");
  }

  for (int i = 0; i < 100; ++i) {
    const Lattice l(oracle::random_even_gram(rng, 5, 5));
    const IntVector x = oracle::random_matrix(rng, 5, 1, 6).col(0);
    if (x == IntVector(5, Int(0))) continue;
    const Sublattice c = orthogonal_complement(l, {x});
    o.expect(saturate(c.basis(), 5) == c.basis(), "complement saturation idempotent");
  }
  const Lattice lambda = k3_two_lattice();
  for (const char* name : {"delta", "e1", "f3"}) {
    const Sublattice c = orthogonal_complement(lambda, {*named_lambda_vector(name)});
    o.expect(saturate(c.basis(), 23) == c.basis(), "complement saturation idempotent in Lambda");
  }

  const Lattice base = direct_sum({rescale(make_U(), 2), make_rank_one(2), make_rank_one(-6)});
  for (int i = 0; i < 20; ++i) {
    const IntMatrix t = oracle::random_unimodular(rng, 4, 12);
    const IntMatrix g = t.transpose() * base.gram() * t;
    const FiniteQuadraticForm a = discriminant_group(Lattice(g));
    for (const auto& x : a.elements()) {
      RatVector shifted = a.lift(x);
      for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] += Rat(static_cast<long>(k + 1));
      Rat q = oracle::pair(g, shifted, shifted) - a.q(x);
      q /= 2;
      o.expect(q.get_den() == 1, "q independent of the lift");
      for (const auto& y : a.elements()) {
        Rat b = oracle::pair(g, shifted, a.lift(y)) - a.b(x, y);
        b.canonicalize();
        o.expect(b.get_den() == 1, "b independent of the lift");
      }
    }
    o.expect(isomorphic(a, discriminant_group(base)), "form unchanged by base change");
  }

  for (int j = 1; j <= 4; ++j) {
    const Involution iota = involution_from_fixed_sublattice(class_embedding(j));
    const IntMatrix& m = iota.matrix();
    o.expect(m * m == IntMatrix::identity(23), "iota^2 = 1 for class " + std::to_string(j));
    o.expect(m.transpose() * lambda.gram() * m == lambda.gram(), "iota preserves the form for class " + std::to_string(j));
  }

  const std::vector<Lattice> shapes = {make_U(), rescale(make_U(), 2), Lattice(IntMatrix{{2, 0}, {0, -2}})};
  for (const auto& l : shapes)
    for (long n = -50; n <= 50; ++n) {
      const Representations r = represent(l, n, 0);
      o.expect(r.complete && r.vectors == oracle::brute_represent(l.gram(), n, 50),
               "solver = brute force for " + l.gram().row(0)[1].get_str() + ", n = " + std::to_string(n));
    }
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double limit_seconds;  // 0 means no limit
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"classification table", classification_table, 1.0},
      {"fibre sizes", fibre_sizes, 1.0},
      {"Beauville invariants", beauville, 0.0},
      {"O'Grady invariant lattices", ogrady, 5.0},
      {"overlattice machinery", overlattices, 0.0},
      {"impossibility sweeps (bound 10)", sweeps, 10.0},
      {"fixed-locus combinatorics", fixed_locus, 1.0},
      {"Hodge-order bound", hodge, 0.0},
      {"property suites", properties, 0.0},
  };
  int failures = 0, id = 1;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail = "exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id++, c.name, secs,
                o.ok ? "" : " -- ", o.detail.c_str());
    failures += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
