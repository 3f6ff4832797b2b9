#include "latticeworks/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lw {

const IntMatrix kE8Gram = {
    // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
    {-2, 0, 1, 0, 0, 0, 0, 0},  //
    {0, -2, 0, 1, 0, 0, 0, 0},  //
    {1, 0, -2, 1, 0, 0, 0, 0},  //
    {0, 1, 1, -2, 1, 0, 0, 0},  //
    {0, 0, 0, 1, -2, 1, 0, 0},  //
    {0, 0, 0, 0, 1, -2, 1, 0},  //
    {0, 0, 0, 0, 0, 1, -2, 1},  //
    {0, 0, 0, 0, 0, 0, 1, -2},
};

Lattice::Lattice(IntMatrix gram, std::string label) {
  if (!gram.is_symmetric()) throw MathError("not symmetric");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (!mpz_even_p(gram(i, i).get_mpz_t())) throw MathError("not even");
  Int d = det(gram);
  if (d == 0) throw MathError("degenerate form");
  data_ = std::make_shared<const Data>(Data{std::move(gram), std::move(label), std::move(d)});
}

Signature Lattice::signature() const { return lw::signature(gram()); }

Int Lattice::inner(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank()) throw MathError("lattice mismatch");
  Int s = 0;
  const IntMatrix& g = gram();
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (y[j] != 0) s += x[i] * g(i, j) * y[j];
  }
  return s;
}

IntVector Lattice::pairings(const IntVector& x) const {
  if (x.size() != rank()) throw MathError("lattice mismatch");
  return gram() * x;
}

LatticeVector::LatticeVector(Lattice lattice, IntVector coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (coords_.size() != lattice_.rank()) throw MathError("lattice mismatch");
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& x) { return x == 0; });
}

namespace {
void require_same(const LatticeVector& a, const LatticeVector& b) {
  if (!(a.lattice() == b.lattice())) throw MathError("lattice mismatch");
}
}  // namespace

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same(a, b);
  IntVector c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return {a.lattice_, std::move(c)};
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same(a, b);
  IntVector c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return {a.lattice_, std::move(c)};
}

LatticeVector operator-(const LatticeVector& a) { return Int(-1) * a; }

LatticeVector operator*(const Int& k, const LatticeVector& a) {
  IntVector c = a.coords_;
  for (auto& x : c) x *= k;
  return {a.lattice_, std::move(c)};
}

LatticeVector basis_vector(const Lattice& l, std::size_t i) {
  IntVector c(l.rank());
  c.at(i) = 1;
  return {l, std::move(c)};
}

Lattice make_U() { return Lattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }

Lattice make_E8() { return Lattice(kE8Gram, "E8"); }

Lattice make_rank_one(const Int& n) {
  if (n == 0) throw MathError("degenerate form");
  if (!mpz_even_p(n.get_mpz_t())) throw MathError("not even");
  IntMatrix g(1, 1);
  g(0, 0) = n;
  return Lattice(std::move(g), "<" + n.get_str() + ">");
}

Lattice rescale(const Lattice& l, const Int& m) {
  if (m <= 0) throw MathError("scale must be positive");
  std::string label = l.label().empty() ? std::string{} : l.label() + "(" + m.get_str() + ")";
  return Lattice(m * l.gram(), std::move(label));
}

Lattice direct_sum(const std::vector<Lattice>& parts, std::string label) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  IntMatrix g(n, n);
  std::size_t off = 0;
  std::string auto_label;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g(off + i, off + j) = p.gram()(i, j);
    off += p.rank();
    if (!auto_label.empty()) auto_label += "+";
    auto_label += p.label().empty() ? "?" : p.label();
  }
  return Lattice(std::move(g), label.empty() ? auto_label : std::move(label));
}

Int inner(const LatticeVector& v, const LatticeVector& w) {
  require_same(v, w);
  return v.lattice().inner(v.coords(), w.coords());
}

Int norm(const LatticeVector& v) { return v.lattice().norm(v.coords()); }

Int divisibility(const LatticeVector& v) {
  if (v.is_zero()) throw MathError("undefined for zero");
  return gcd_of(v.lattice().pairings(v.coords()));
}

bool is_primitive(const IntVector& v) {
  Int g = gcd_of(v);
  if (g == 0) throw MathError("undefined for zero");
  return g == 1;
}

bool is_primitive(const LatticeVector& v) { return is_primitive(v.coords()); }

// ---------------------------------------------------------------------------

Sublattice::Sublattice(Lattice ambient, std::vector<IntVector> basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  const std::size_t n = ambient_.rank();
  for (const auto& b : basis_)
    if (b.size() != n) throw MathError("lattice mismatch");
  if (basis_.empty()) {
    primitive_ = true;
    return;
  }
  IntMatrix rows = IntMatrix::from_rows(basis_, n);
  SnfResult r = snf(rows);
  if (r.rank != basis_.size()) throw MathError("rank deficiency");
  const IntVector d = r.divisors();
  primitive_ = std::all_of(d.begin(), d.end(), [](const Int& x) { return x == 1; });
  IntMatrix b = rows.transpose();
  gram_ = b.transpose() * ambient_.gram() * b;
}

IntMatrix Sublattice::basis_matrix() const { return IntMatrix::from_columns(basis_, ambient_.rank()); }

bool Sublattice::is_nondegenerate() const { return det(gram_) != 0; }

Lattice Sublattice::lattice(std::string label) const { return Lattice(gram_, std::move(label)); }

IntVector Sublattice::to_ambient(const IntVector& local) const {
  if (local.size() != rank()) throw MathError("lattice mismatch");
  IntVector x(ambient_.rank());
  for (std::size_t k = 0; k < rank(); ++k)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += local[k] * basis_[k][i];
  return x;
}

std::optional<IntVector> Sublattice::to_local(const IntVector& ambient) const {
  if (ambient.size() != ambient_.rank()) throw MathError("lattice mismatch");
  if (basis_.empty()) {
    if (std::all_of(ambient.begin(), ambient.end(), [](const Int& x) { return x == 0; })) return IntVector{};
    return std::nullopt;
  }
  // B y = x with U B V = S:  S (V^-1 y) = U x.
  SnfResult r = snf(basis_matrix());
  IntVector ux = r.U * ambient;
  IntVector z(rank());
  for (std::size_t i = 0; i < ux.size(); ++i) {
    if (i < r.rank) {
      if (ux[i] % r.S(i, i) != 0) return std::nullopt;
      z[i] = ux[i] / r.S(i, i);
    } else if (ux[i] != 0) {
      return std::nullopt;
    }
  }
  return r.V * z;
}

bool Sublattice::same_subgroup(const Sublattice& other) const {
  if (!(ambient_ == other.ambient_) || rank() != other.rank()) return false;
  return span_basis(basis_, ambient_.rank()) == span_basis(other.basis_, ambient_.rank());
}

Sublattice orthogonal_complement(const Lattice& l, const std::vector<IntVector>& vectors) {
  const std::size_t n = l.rank();
  if (vectors.empty()) {
    std::vector<IntVector> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(basis_vector(l, i).coords());
    return Sublattice(l, std::move(all));
  }
  std::vector<IntVector> rows;
  for (const auto& v : vectors) rows.push_back(l.pairings(v));
  return Sublattice(l, kernel_basis(IntMatrix::from_rows(rows, n)));
}

// ---------------------------------------------------------------------------
// Representations

namespace {

// Canonical +- representative: first nonzero coordinate positive.
IntVector sign_normalized(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

std::vector<Int> signed_divisors(const Int& k) {
  std::vector<Int> out;
  Int a = abs(k);
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    for (const Int& e : {d, Int(a / d)}) {
      out.push_back(e);
      out.push_back(-e);
    }
  }
  return out;
}

void add_if_primitive(std::set<IntVector>& acc, const Int& a, const Int& b) {
  if (gcd(a, b) != 1) return;
  acc.insert(sign_normalized({a, b}));
}

// 2m a b = n on U(m).
std::set<IntVector> solve_hyperbolic(const Int& m, const Int& n) {
  std::set<IntVector> acc;
  if (n == 0) {
    acc.insert({1, 0});
    acc.insert({0, 1});
    return acc;
  }
  if (n % (2 * m) != 0) return acc;
  Int k = n / (2 * m);
  for (const auto& a : signed_divisors(k)) add_if_primitive(acc, a, k / a);
  return acc;
}

// 2a^2 - 2b^2 = n, i.e. (a-b)(a+b) = n/2.
std::set<IntVector> solve_split(const Int& n) {
  std::set<IntVector> acc;
  if (n % 2 != 0) return acc;
  Int k = n / 2;
  if (k == 0) {
    acc.insert({1, 1});
    acc.insert({1, -1});
    return acc;
  }
  for (const auto& d : signed_divisors(k)) {
    Int e = k / d;
    if ((d - e) % 2 != 0) continue;
    add_if_primitive(acc, (d + e) / 2, (e - d) / 2);
  }
  return acc;
}

template <class F>
void for_each_in_box(std::size_t n, long bound, F&& f) {
  IntVector x(n, Int(-bound));
  if (n == 0) {
    f(x);
    return;
  }
  for (;;) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound) x[i++] = -bound;
    if (i == n) return;
    x[i] += 1;
  }
}

}  // namespace

Representations represent(const Lattice& l, const Int& n, long bound) {
  if (l.rank() != 2) throw MathError("rank 2 required");
  const IntMatrix& g = l.gram();
  Representations out;
  std::set<IntVector> acc;
  if (g(0, 0) == 0 && g(1, 1) == 0 && g(0, 1) > 0) {
    acc = solve_hyperbolic(g(0, 1), n);
    out.complete = true;
  } else if (g == IntMatrix{{2, 0}, {0, -2}}) {
    acc = solve_split(n);
    out.complete = true;
  } else {
    for_each_in_box(2, bound, [&](const IntVector& x) {
      if ((x[0] != 0 || x[1] != 0) && gcd(x[0], x[1]) == 1 && l.norm(x) == n) acc.insert(sign_normalized(x));
    });
  }
  out.vectors.assign(acc.begin(), acc.end());
  return out;
}

std::optional<IntMatrix> isometry_search(const Lattice& l1, const Lattice& l2, long bound) {
  if (l1.rank() != l2.rank()) throw MathError("rank mismatch");
  if (l1.determinant() != l2.determinant()) return std::nullopt;
  if (!(l1.signature() == l2.signature())) return std::nullopt;
  const std::size_t n = l1.rank();
  const IntMatrix& g2 = l2.gram();

  std::map<Int, std::vector<IntVector>> by_norm;
  std::set<Int> wanted;
  for (std::size_t j = 0; j < n; ++j) wanted.insert(g2(j, j));
  for_each_in_box(n, bound, [&](const IntVector& x) {
    Int q = l1.norm(x);
    if (wanted.count(q)) by_norm[q].push_back(x);
  });

  std::vector<IntVector> cols;
  std::function<bool(std::size_t)> place = [&](std::size_t j) -> bool {
    if (j == n) return true;
    for (const auto& x : by_norm[g2(j, j)]) {
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) ok = l1.inner(cols[i], x) == g2(i, j);
      if (!ok) continue;
      cols.push_back(x);
      if (place(j + 1)) return true;
      cols.pop_back();
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  IntMatrix t = IntMatrix::from_columns(cols, n);
  if (!(t.transpose() * l1.gram() * t == g2) || abs(det(t)) != 1) return std::nullopt;
  return t;
}

}  // namespace lw
