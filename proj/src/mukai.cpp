#include "latticeworks/mukai.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "latticeworks/involutions.hpp"

namespace lw {

std::string to_string(const MukaiVector& v) {
  return "(" + v.r.get_str() + "," + v.a.get_str() + "H," + v.s.get_str() + ")";
}

Int mukai_pairing(const MukaiVector& v, const MukaiVector& w, long h_square) {
  return Int(h_square) * v.a * w.a - v.r * w.s - w.r * v.s;
}

Int mukai_square(const MukaiVector& v, long h_square) { return mukai_pairing(v, v, h_square); }

MukaiVector mukai_vector_of_sheaf(const Int& rank, const Int& c1_coeff, const Int& ch2) {
  return {rank, c1_coeff, rank + ch2};
}

Lattice algebraic_mukai_lattice(long h_square) {
  IntMatrix g = {{0, -1, 0}, {-1, 0, 0}, {0, 0, 0}};
  g(2, 2) = h_square;
  return Lattice(std::move(g), "AlgMukai");
}

IntVector algebraic_coords(const MukaiVector& v) { return {v.r, v.s, v.a}; }

MukaiVector from_algebraic_coords(const IntVector& x) {
  if (x.size() != 3) throw MathError("lattice mismatch");
  return {x[0], x[2], x[1]};
}

// ---------------------------------------------------------------------------

namespace {
constexpr std::size_t kU0r = 0, kU0s = 1, kE1 = 2, kF1 = 3;
constexpr std::size_t kFullRank = 24;

FullMukaiLattice build_full() {
  const Lattice u0(IntMatrix{{0, -1}, {-1, 0}}, "U0");
  Lattice l = direct_sum({u0, make_U(), make_U(), make_U(), make_E8(), make_E8()}, "Mukai24");
  IntMatrix phi = IntMatrix::identity(kFullRank);
  phi(kE1, kE1) = 0;
  phi(kF1, kF1) = 0;
  phi(kE1, kF1) = 1;
  phi(kF1, kE1) = 1;
  for (std::size_t i = 4; i < kFullRank; ++i) phi(i, i) = -1;
  return FullMukaiLattice{std::move(l), std::move(phi)};
}

void require_positive_primitive(const MukaiVector& v) {
  if (gcd(gcd(v.r, v.a), v.s) != 1) throw MathError("non-primitive input");
  if (mukai_square(v) <= 0) throw MathError("v^2 must be positive");
}

std::optional<IntMatrix> find_base_change(const Lattice& a, const Lattice& b) {
  for (long bound = 2; bound <= 16; bound *= 2)
    if (auto t = isometry_search(a, b, bound)) return t;
  return std::nullopt;
}
}  // namespace

IntVector FullMukaiLattice::embed(const MukaiVector& v) const {
  IntVector x(kFullRank);
  x[kU0r] = v.r;
  x[kU0s] = v.s;
  x[kE1] = v.a;
  x[kF1] = v.a;
  return x;
}

const FullMukaiLattice& full_mukai_lattice() {
  static const FullMukaiLattice full = build_full();
  return full;
}

InvariantLattice ogrady_invariant_lattice(const MukaiVector& v) {
  require_positive_primitive(v);
  const Lattice alg = algebraic_mukai_lattice();
  Sublattice perp = orthogonal_complement(alg, {algebraic_coords(v)});
  Rank2Class name = classify_rank2(perp.lattice());
  return {std::move(perp), name};
}

OgradyCrossCheck ogrady_cross_check(const MukaiVector& v) {
  InvariantLattice alg = ogrady_invariant_lattice(v);
  const FullMukaiLattice& full = full_mukai_lattice();
  // ker(phi - 1) cap v^perp: stack phi - 1 with the pairing row of v.
  IntMatrix rows(kFullRank + 1, kFullRank);
  IntMatrix shifted = full.involution - IntMatrix::identity(kFullRank);
  for (std::size_t i = 0; i < kFullRank; ++i)
    for (std::size_t j = 0; j < kFullRank; ++j) rows(i, j) = shifted(i, j);
  IntVector pv = full.lattice.pairings(full.embed(v));
  for (std::size_t j = 0; j < kFullRank; ++j) rows(kFullRank, j) = pv[j];
  Sublattice inv(full.lattice, kernel_basis(rows));
  Rank2Class name = classify_rank2(inv.lattice());
  OgradyCrossCheck out{std::move(alg), InvariantLattice{std::move(inv), name}, std::nullopt, false};
  out.base_change = find_base_change(out.algebraic.sublattice.lattice(), out.full.sublattice.lattice());
  out.agree = out.algebraic.name == out.full.name && out.base_change.has_value();
  return out;
}

// ---------------------------------------------------------------------------

BeauvilleInvariants beauville_invariants(long t) {
  if (t % 2 == 0 || t < -19 || t > 21) throw MathError("not a non-symplectic-involution trace");
  const Int tt = Int(t) * t;
  return {tt - 1, (tt + 7) / 8, (tt + 23) / 2, Int(21 - t) / 2};
}

long trace_from_invariant_rank(long r) {
  if (r < 1 || r > 21) throw MathError("invariant rank out of range");
  return 2 * r - 21;
}

// ---------------------------------------------------------------------------

std::vector<MukaiVector> mukai_vectors_of_square(const Int& n, long bound) {
  std::vector<MukaiVector> out;
  for (long r = -bound; r <= bound; ++r)
    for (long a = -bound; a <= bound; ++a)
      for (long s = -bound; s <= bound; ++s) {
        if (std::gcd(std::gcd(r, a), s) != 1) continue;
        MukaiVector v{r, a, s};
        if (mukai_square(v) == n) out.push_back(v);
      }
  return out;
}

bool U2ImpossibilityReport::pass() const {
  return nontrivial_glue_subgroups > 0 && glued_with_u2_primitive == 0 && counterexamples.empty();
}

U2ImpossibilityReport impossibility_u2(long bound) {
  U2ImpossibilityReport rep;
  rep.bound = bound;

  const Lattice l = direct_sum({rescale(make_U(), 2), make_rank_one(2)});
  const FiniteQuadraticForm a = discriminant_group(l);
  const auto subs = isotropic_subgroups(a);
  rep.glue_subgroups = subs.size();
  for (const auto& h : subs) {
    if (h.size() == 1) continue;
    ++rep.nontrivial_glue_subgroups;
    Overlattice ov = overlattice(l, a, h);
    Sublattice image(ov.lattice, {ov.embedding.col(0), ov.embedding.col(1)});
    if (is_primitive_in(image)) ++rep.glued_with_u2_primitive;
  }

  for (const auto& v : mukai_vectors_of_square(2, bound)) {
    ++rep.vectors_checked;
    switch (ogrady_invariant_lattice(v).name) {
      case Rank2Class::U: ++rep.count_u; break;
      case Rank2Class::U2:
        ++rep.count_u2;
        rep.counterexamples.push_back(v);
        break;
      case Rank2Class::TwoPlusMinusTwo: ++rep.count_split; break;
      case Rank2Class::Other: ++rep.count_other; break;
    }
  }
  return rep;
}

bool No4ImpossibilityReport::pass() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const No4Pair& p) { return p.half_sum_integral && p.div_in_full_complement == 2; });
}

No4ImpossibilityReport impossibility_no4(long bound) {
  No4ImpossibilityReport rep;
  rep.bound = bound;
  const FullMukaiLattice& full = full_mukai_lattice();
  for (const auto& v : mukai_vectors_of_square(2, bound)) {
    ++rep.vectors_checked;
    InvariantLattice inv = ogrady_invariant_lattice(v);
    if (inv.name != Rank2Class::TwoPlusMinusTwo) continue;
    No4Pair p;
    p.v = v;
    p.g = from_algebraic_coords(minus_two_generator(inv.sublattice));
    p.half_sum_integral = (p.g.r + v.r) % 2 == 0 && (p.g.a + v.a) % 2 == 0 && (p.g.s + v.s) % 2 == 0;
    const Sublattice perp = orthogonal_complement(full.lattice, {full.embed(v)});
    const IntVector gp = full.lattice.pairings(full.embed(p.g));
    Int div = 0;
    for (const auto& b : perp.basis()) {
      Int s = 0;
      for (std::size_t i = 0; i < b.size(); ++i) s += gp[i] * b[i];
      div = gcd(div, s);
    }
    p.div_in_full_complement = div;
    rep.pairs.push_back(std::move(p));
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::array<int, 3> sorted3(int a, int b, int c) {
  std::array<int, 3> m{a, b, c};
  std::sort(m.begin(), m.end());
  return m;
}
}  // namespace

std::vector<WeierstrassDivisorClass> jacobian_fixed_classes() {
  std::vector<std::array<int, 3>> all;
  std::map<std::array<int, 3>, std::size_t> index;
  for (int i = 1; i <= 6; ++i)
    for (int j = i; j <= 6; ++j)
      for (int k = j; k <= 6; ++k) {
        index[{i, j, k}] = all.size();
        all.push_back({i, j, k});
      }

  UnionFind uf(all.size());
  // 2p_i ~ 2p_j (the hyperelliptic pencil).
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      for (int k = 1; k <= 6; ++k) uf.unite(index.at(sorted3(i, i, k)), index.at(sorted3(j, j, k)));
  // p_i + p_j + p_k ~ p_l + p_m + p_n for {i,...,n} = {1,...,6}.
  for (const auto& m : all) {
    if (m[0] == m[1] || m[1] == m[2]) continue;
    std::vector<int> rest;
    for (int x = 1; x <= 6; ++x)
      if (std::find(m.begin(), m.end(), x) == m.end()) rest.push_back(x);
    uf.unite(index.at(m), index.at(sorted3(rest[0], rest[1], rest[2])));
  }

  std::map<std::size_t, WeierstrassDivisorClass> classes;
  for (std::size_t i = 0; i < all.size(); ++i) classes[uf.find(i)].members.push_back(all[i]);
  std::vector<WeierstrassDivisorClass> out;
  for (auto& [root, c] : classes) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.members.front() < y.members.front(); });
  return out;
}

int r_invariant(const WeierstrassDivisorClass& c) {
  for (const auto& m : c.members)
    if (m[0] == m[1] || m[1] == m[2]) return 2;
  return 1;
}

}  // namespace lw
