#include "latticeworks/involutions.hpp"

#include <algorithm>
#include <map>

namespace lw {

namespace {

void require_class(int j) {
  if (j < 1 || j > 4) throw MathError("invalid class number");
}

void check(bool ok, const std::string& what) {
  if (!ok) throw VerificationError(what);
}

Int cross(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

IntVector minus_two_generator(const Sublattice& s) {
  // Gram [[a,b],[b,c]] with b^2 - ac = 4: the primitive isotropic vectors
  // u1, u2 pair to +-4 and (u1 -+ u2) / 2 is the (-2)-generator.
  const IntMatrix& g = s.gram();
  check(s.rank() == 2 && det(g) == -4, "no <2>+<-2> splitting found for the invariant lattice");
  const Int a = g(0, 0), b = g(0, 1), c = g(1, 1);
  auto primitive = [](Int x, Int y) {
    Int d = gcd(x, y);
    return IntVector{x / d, y / d};
  };
  IntVector u1, u2;
  if (a == 0) {
    u1 = {1, 0};
    u2 = primitive(c, -2 * b);
  } else {
    u1 = primitive(-b + 2, a);
    u2 = primitive(-b - 2, a);
  }
  const Lattice l = s.lattice();
  const Int p = l.inner(u1, u2);
  check(abs(p) == 4, "no <2>+<-2> splitting found for the invariant lattice");
  const int sign = p > 0 ? 1 : -1;
  IntVector x{u1[0] - sign * u2[0], u1[1] - sign * u2[1]};
  check(x[0] % 2 == 0 && x[1] % 2 == 0, "no <2>+<-2> splitting found for the invariant lattice");
  x = {x[0] / 2, x[1] / 2};
  check(l.norm(x) == -2 && gcd_of(l.pairings(x)) == 2, "no <2>+<-2> splitting found for the invariant lattice");
  return s.to_ambient(x);
}

Lattice k3_two_lattice() {
  static const Lattice lambda =
      direct_sum({make_U(), make_U(), make_U(), make_E8(), make_E8(), make_rank_one(-2)}, "Lambda");
  return lambda;
}

IntVector lambda_vector(std::initializer_list<std::pair<std::size_t, long>> terms) {
  IntVector v(k3two::kRank);
  for (const auto& [i, c] : terms) v.at(i) += c;
  return v;
}

std::optional<IntVector> named_lambda_vector(const std::string& name) {
  static const std::map<std::string, std::size_t> names = {
      {"e1", k3two::e1}, {"f1", k3two::f1}, {"e2", k3two::e2},       {"f2", k3two::f2},
      {"e3", k3two::e3}, {"f3", k3two::f3}, {"delta", k3two::delta},
  };
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return lambda_vector({{it->second, 1}});
}

// ---------------------------------------------------------------------------

namespace {
Sublattice eigen_sublattice(const Lattice& l, const IntMatrix& m, long eigenvalue) {
  IntMatrix shifted = m - Int(eigenvalue) * IntMatrix::identity(m.rows());
  return Sublattice(l, kernel_basis(shifted));
}
}  // namespace

Involution::Involution(Lattice lattice, IntMatrix matrix)
    : lattice_(std::move(lattice)),
      matrix_(std::move(matrix)),
      invariant_(lattice_, {}),
      anti_invariant_(lattice_, {}) {
  const std::size_t n = lattice_.rank();
  if (matrix_.rows() != n || matrix_.cols() != n) throw MathError("lattice mismatch");
  if (!(matrix_ * matrix_ == IntMatrix::identity(n))) throw MathError("not an involution");
  if (!(matrix_.transpose() * lattice_.gram() * matrix_ == lattice_.gram())) throw MathError("not an isometry");
  invariant_ = eigen_sublattice(lattice_, matrix_, 1);
  anti_invariant_ = eigen_sublattice(lattice_, matrix_, -1);
  if (invariant_.rank() + anti_invariant_.rank() != n) throw MathError("eigenlattices do not span");
  for (const auto& x : invariant_.basis())
    for (const auto& y : anti_invariant_.basis())
      if (lattice_.inner(x, y) != 0) throw MathError("eigenlattices not orthogonal");
}

Sublattice class_embedding(int j) {
  require_class(j);
  using namespace k3two;
  const Lattice lambda = k3_two_lattice();
  std::vector<IntVector> basis;
  switch (j) {
    case 1: basis = {lambda_vector({{e1, 1}}), lambda_vector({{f1, 1}})}; break;
    case 2: basis = {lambda_vector({{e1, 1}, {e2, 1}}), lambda_vector({{f1, 1}, {f2, 1}})}; break;
    case 3: basis = {lambda_vector({{e1, 1}, {f1, 1}}), lambda_vector({{delta, 1}})}; break;
    case 4: basis = {lambda_vector({{e1, 1}, {f1, 1}}), lambda_vector({{e2, 1}, {f2, -1}})}; break;
  }
  Sublattice m(lambda, std::move(basis));
  check(m.is_primitive(), "class embedding is not primitive");
  check(m.lattice().signature() == Signature{1, 1}, "class embedding is not hyperbolic");
  static const Rank2Class expected[] = {Rank2Class::U, Rank2Class::U2, Rank2Class::TwoPlusMinusTwo,
                                        Rank2Class::TwoPlusMinusTwo};
  check(classify_rank2(m.lattice()) == expected[j - 1], "class embedding has the wrong Gram class");
  if (j >= 3) {
    Int div = divisibility(LatticeVector(lambda, m.basis()[1]));
    check(div == (j == 3 ? 2 : 1), "divisibility of g in the class embedding");
  }
  return m;
}

Involution involution_from_fixed_sublattice(const Sublattice& m) {
  if (!m.is_primitive()) throw MathError("fixed sublattice must be primitive");
  if (!m.is_nondegenerate()) throw MathError("degenerate form");
  const Lattice& l = m.ambient();
  const std::size_t n = l.rank();
  RatMatrix b = to_rational(m.basis_matrix());
  RatMatrix g = to_rational(l.gram());
  RatMatrix proj = b * inverse(to_rational(m.gram())) * b.transpose() * g;
  RatMatrix iota = Rat(2) * proj - RatMatrix::identity(n);
  Involution result(l, to_integral(iota, "involution does not extend integrally"));
  if (!result.invariant().same_subgroup(m)) throw MathError("invariant lattice differs from the fixed sublattice");
  return result;
}

std::optional<int> recognize_class(const Involution& iota) {
  const Sublattice& inv = iota.invariant();
  if (inv.rank() != 2 || !inv.is_nondegenerate()) return std::nullopt;
  const Lattice l = inv.lattice();
  if (!(l.signature() == Signature{1, 1})) return std::nullopt;
  switch (classify_rank2(l)) {
    case Rank2Class::U: return 1;
    case Rank2Class::U2: return 2;
    case Rank2Class::TwoPlusMinusTwo: {
      Int div = divisibility(LatticeVector(iota.lattice(), minus_two_generator(inv)));
      return div == 2 ? 3 : 4;
    }
    case Rank2Class::Other: return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

WallCount walls_and_chambers(int j) {
  require_class(j);
  using namespace k3two;
  const Sublattice ns = class_embedding(j);
  const Lattice ns_lattice = ns.lattice();
  const Lattice& lambda = ns.ambient();

  WallCount out;
  auto minus2 = represent(ns_lattice, -2, 0);
  auto minus10 = represent(ns_lattice, -10, 0);
  check(minus2.complete && minus10.complete, "wall classes require a complete rank-2 solver");
  out.minus2_walls = minus2.vectors;
  for (const auto& x : minus10.vectors) {
    Int div = divisibility(LatticeVector(lambda, ns.to_ambient(x)));
    (div == 2 ? out.minus10_walls : out.minus10_excluded).push_back(x);
  }

  const IntVector ref_ambient =
      j == 2 ? lambda_vector({{e1, 1}, {e2, 1}, {f1, 1}, {f2, 1}}) : lambda_vector({{e1, 1}, {f1, 1}});
  const IntVector ref = *ns.to_local(ref_ambient);
  check(ns_lattice.norm(ref) > 0, "reference vector is not positive");

  std::vector<IntVector> rays;
  auto add_ray = [&](const IntVector& w) {
    IntVector gw = ns_lattice.pairings(w);
    IntVector r{-gw[1], gw[0]};
    if (ns_lattice.inner(r, ref) < 0) r = {-r[0], -r[1]};
    check(ns_lattice.norm(r) > 0, "wall does not meet the positive cone");
    rays.push_back(std::move(r));
  };
  for (const auto& w : out.minus2_walls) add_ray(w);
  for (const auto& w : out.minus10_walls) add_ray(w);
  // All rays lie in one convex component of angle < pi, so the cross product
  // is a strict order on directions.
  std::sort(rays.begin(), rays.end(), [](const IntVector& a, const IntVector& b) { return cross(a, b) > 0; });
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (i == 0 || cross(rays[i - 1], rays[i]) != 0) ++distinct;
  out.chamber_count = distinct + 1;
  return out;
}

ClassRow verify_class(int j) {
  require_class(j);
  const Sublattice m = class_embedding(j);
  const Involution iota = involution_from_fixed_sublattice(m);
  const Lattice& lambda = iota.lattice();

  ClassRow row;
  row.number = j;
  check(iota.invariant().same_subgroup(m), "recomputed invariant lattice");
  check(iota.invariant().rank() == 2 && iota.anti_invariant().rank() == 21, "eigenlattice ranks 2 + 21");
  row.invariant_class = classify_rank2(iota.invariant().lattice());
  static const Rank2Class expected[] = {Rank2Class::U, Rank2Class::U2, Rank2Class::TwoPlusMinusTwo,
                                        Rank2Class::TwoPlusMinusTwo};
  check(row.invariant_class == expected[j - 1], "invariant lattice class");

  const Lattice anti = iota.anti_invariant().lattice();
  row.anti_invariant_signature = anti.signature();
  check(row.anti_invariant_signature == Signature{2, 19}, "anti-invariant signature (2,19)");

  if (j >= 3) {
    row.g_divisibility = divisibility(LatticeVector(lambda, minus_two_generator(iota.invariant())));
    check(*row.g_divisibility == (j == 3 ? 2 : 1), "divisibility of g");
  }
  if (j == 2) {
    const Lattice n = direct_sum({make_U(), rescale(make_U(), 2), make_E8(), make_E8(), make_rank_one(-2)}, "N");
    check(abs(anti.determinant()) == 8, "anti-invariant |det| = 8");
    check(anti.signature() == n.signature(), "anti-invariant signature matches N");
    check(isomorphic(discriminant_group(anti), discriminant_group(n)), "anti-invariant discriminant form matches N");
  }
  check(recognize_class(iota) == j, "class recognition");
  row.fibre_size = walls_and_chambers(j).chamber_count;
  static const std::size_t expected_fibre[] = {2, 1, 4, 2};
  check(row.fibre_size == expected_fibre[j - 1], "fibre size");
  return row;
}

IntMatrix component_swap_isometry(int j) {
  require_class(j);
  using namespace k3two;
  const std::size_t e = j == 1 ? e2 : e3, f = j == 1 ? f2 : f3;
  const Involution iota = involution_from_fixed_sublattice(class_embedding(j));
  const Lattice& lambda = iota.lattice();
  const std::size_t n = lambda.rank();

  IntMatrix beta = IntMatrix::identity(n);
  beta(e, e) = -1;
  beta(f, f) = -1;

  check(beta * beta == IntMatrix::identity(n), "beta^2 = 1");
  check(beta.transpose() * lambda.gram() * beta == lambda.gram(), "beta preserves the form");
  check(beta * iota.matrix() == iota.matrix() * beta, "beta commutes with iota");
  for (const auto& x : iota.invariant().basis()) check(beta * x == x, "beta fixes the invariant lattice");

  const IntVector p1 = lambda_vector({{e, 1}, {f, 1}});
  IntVector p2;
  switch (j) {
    case 1: p2 = lambda_vector({{e3, 1}, {f3, 1}}); break;
    case 2: p2 = lambda_vector({{e1, 1}, {e2, -1}, {f1, 1}, {f2, -1}}); break;
    default: p2 = lambda_vector({{e2, 1}, {f2, 1}}); break;
  }
  auto negated = [](IntVector v) {
    for (auto& x : v) x = -x;
    return v;
  };
  check(iota.apply(p1) == negated(p1) && iota.apply(p2) == negated(p2), "test plane is anti-invariant");
  Int a = lambda.norm(p1), b = lambda.inner(p1, p2), c = lambda.norm(p2);
  check(a > 0 && a * c - b * b > 0, "test plane is positive definite");
  check(beta * p1 == negated(p1) && beta * p2 == p2, "beta reverses the orientation of the test plane");
  return beta;
}

long euler_phi(long n) {
  if (n < 1) throw MathError("phi undefined");
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::set<long> admissible_hodge_orders(long transcendental_rank) {
  if (transcendental_rank < 1) throw MathError("rank must be positive");
  // phi(N) >= sqrt(N/2), so phi(N) <= rank forces N <= 2 rank^2.
  const long limit = 2 * transcendental_rank * transcendental_rank + 2;
  std::set<long> out;
  for (long n = 1; n <= limit; ++n)
    if (transcendental_rank % euler_phi(n) == 0) out.insert(n);
  return out;
}

}  // namespace lw
