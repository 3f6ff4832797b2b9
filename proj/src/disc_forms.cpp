#include "latticeworks/disc_forms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lw {

Rat reduce_mod(const Rat& x, long m) {
  // x - m * floor(x / m)
  Rat y = x / m;
  Int fl = floor_div(y.get_num(), y.get_den());
  Rat r = x - Rat(fl * m);
  r.canonicalize();
  return r;
}

FiniteQuadraticForm::FiniteQuadraticForm(const Lattice& l) : gram_(to_rational(l.gram())) {
  const std::size_t n = l.rank();
  SnfResult r = snf(l.gram());
  v_inv_ = r.V_inv;
  for (std::size_t i = 0; i < n; ++i) {
    const Int& d = r.S(i, i);
    if (d == 1) continue;
    source_index_.push_back(i);
    orders_.push_back(d);
    RatVector lift(n);
    for (std::size_t k = 0; k < n; ++k) {
      lift[k] = Rat(r.V(k, i), d);
      lift[k].canonicalize();
    }
    lifts_.push_back(std::move(lift));
  }
  const std::size_t m = lifts_.size();
  gen_gram_ = RatMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    RatVector gi = gram_ * lifts_[i];
    for (std::size_t j = 0; j < m; ++j) {
      Rat s = 0;
      for (std::size_t k = 0; k < n; ++k) s += gi[k] * lifts_[j][k];
      gen_gram_(i, j) = s;
    }
  }
}

FiniteQuadraticForm discriminant_group(const Lattice& l) { return FiniteQuadraticForm(l); }

Int FiniteQuadraticForm::size() const {
  Int s = 1;
  for (const auto& d : orders_) s *= d;
  return s;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::generator(std::size_t i) const {
  Element e = zero();
  e.at(i) = 1;
  return e;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::add(const Element& x, const Element& y) const {
  Element z(orders_.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = mod_floor(x[i] + y[i], orders_[i]);
  return z;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::scale(const Int& k, const Element& x) const {
  Element z(orders_.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = mod_floor(k * x[i], orders_[i]);
  return z;
}

Int FiniteQuadraticForm::order_of(const Element& x) const {
  Int ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Int oi = orders_[i] / gcd(orders_[i], x[i]);
    ord = lcm(ord, oi);
  }
  return ord;
}

Rat FiniteQuadraticForm::q(const Element& x) const {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != 0) s += Rat(x[i] * x[j]) * gen_gram_(i, j);
  }
  return reduce_mod(s, 2);
}

Rat FiniteQuadraticForm::b(const Element& x, const Element& y) const {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += Rat(x[i] * y[j]) * gen_gram_(i, j);
  }
  return reduce_mod(s, 1);
}

RatVector FiniteQuadraticForm::lift(const Element& x) const {
  RatVector v(gram_.rows());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += Rat(x[i]) * lifts_[i][k];
  return v;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::coordinates(const RatVector& x) const {
  if (x.size() != gram_.rows()) throw MathError("lattice mismatch");
  // z = V^-1 x; x in L^* iff d_i z_i is integral for every i.
  RatVector z = to_rational(v_inv_) * x;
  Element c = zero();
  std::size_t g = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    bool is_gen = g < source_index_.size() && source_index_[g] == i;
    Rat scaled = is_gen ? z[i] * Rat(orders_[g]) : z[i];
    if (scaled.get_den() != 1) throw MathError("not in dual lattice");
    if (is_gen) {
      c[g] = mod_floor(scaled.get_num(), orders_[g]);
      ++g;
    }
  }
  return c;
}

std::vector<FiniteQuadraticForm::Element> FiniteQuadraticForm::elements(const Int& cap) const {
  if (size() > cap) throw MathError("cap exceeded");
  std::vector<Element> out;
  Element x = zero();
  for (;;) {
    out.push_back(x);
    // Increment the last coordinate fastest so the output is lexicographic.
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      x[i] += 1;
      if (x[i] < orders_[i]) break;
      x[i] = 0;
      if (i == 0) return out;
    }
    if (x.empty()) return out;
  }
}

std::vector<Rat> FiniteQuadraticForm::nonzero_q_values(const Int& cap) const {
  std::vector<Rat> qs;
  Element z = zero();
  for (const auto& x : elements(cap))
    if (x != z) qs.push_back(q(x));
  std::sort(qs.begin(), qs.end());
  return qs;
}

// ---------------------------------------------------------------------------

bool is_two_elementary(const Lattice& l) {
  FiniteQuadraticForm a(l);
  return std::all_of(a.orders().begin(), a.orders().end(), [](const Int& d) { return d == 2; });
}

TwoElementaryInvariants two_elementary_invariants(const Lattice& l) {
  FiniteQuadraticForm a(l);
  TwoElementaryInvariants inv;
  inv.rank = l.rank();
  inv.a = a.num_generators();
  for (std::size_t i = 0; i < a.num_generators(); ++i) {
    if (a.orders()[i] != 2) throw MathError("not 2-elementary");
    if (a.q(a.generator(i)).get_den() != 1) inv.delta_parity = 1;
  }
  return inv;
}

std::string to_string(Rank2Class c) {
  switch (c) {
    case Rank2Class::U: return "U";
    case Rank2Class::U2: return "U(2)";
    case Rank2Class::TwoPlusMinusTwo: return "<2>+<-2>";
    case Rank2Class::Other: return "other";
  }
  return "other";
}

Rank2Class classify_rank2(const Lattice& l) {
  if (l.rank() != 2 || !(l.signature() == Signature{1, 1}))
    throw MathError("rank 2 lattice of signature (1,1) required");
  if (abs(l.determinant()) == 1) return Rank2Class::U;
  if (abs(l.determinant()) != 4 || !is_two_elementary(l)) return Rank2Class::Other;
  const auto inv = two_elementary_invariants(l);
  const auto qs = FiniteQuadraticForm(l).nonzero_q_values();
  if (inv.delta_parity == 0 && qs == std::vector<Rat>{0, 0, 1}) return Rank2Class::U2;
  if (inv.delta_parity == 1 && qs == std::vector<Rat>{0, Rat(1, 2), Rat(3, 2)}) return Rank2Class::TwoPlusMinusTwo;
  return Rank2Class::Other;
}

// ---------------------------------------------------------------------------

std::vector<IsotropicSubgroup> isotropic_subgroups(const FiniteQuadraticForm& a, const Int& cap) {
  using Element = FiniteQuadraticForm::Element;
  const auto all = a.elements(cap);
  std::vector<Element> iso;
  for (const auto& x : all)
    if (a.q(x) == 0) iso.push_back(x);

  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> frontier{{a.zero()}};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<Element>> next;
    for (const auto& h : frontier) {
      for (const auto& x : iso) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        bool orthogonal = std::all_of(h.begin(), h.end(), [&](const Element& y) { return a.b(x, y) == 0; });
        if (!orthogonal) continue;
        std::set<Element> grown;
        Element kx = a.zero();
        const Int ord = a.order_of(x);
        for (Int k = 0; k < ord; ++k) {
          for (const auto& y : h) grown.insert(a.add(y, kx));
          kx = a.add(kx, x);
        }
        std::vector<Element> g(grown.begin(), grown.end());
        if (seen.insert(g).second) next.push_back(std::move(g));
      }
    }
    frontier = std::move(next);
  }

  std::vector<IsotropicSubgroup> out;
  for (const auto& h : seen) out.push_back({h});
  std::sort(out.begin(), out.end(), [](const IsotropicSubgroup& x, const IsotropicSubgroup& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.elements < y.elements;
  });
  return out;
}

Overlattice overlattice(const Lattice& l, const FiniteQuadraticForm& a, const IsotropicSubgroup& h) {
  const std::size_t n = l.rank();
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  for (const auto& x : h.elements) gens.push_back(a.lift(x));

  Int denom = 1;
  for (const auto& g : gens)
    for (const auto& c : g) denom = lcm(denom, Int(c.get_den()));
  std::vector<IntVector> scaled;
  for (const auto& g : gens) {
    IntVector s(n);
    for (std::size_t k = 0; k < n; ++k) {
      Rat v = g[k] * Rat(denom);
      s[k] = v.get_num();
    }
    scaled.push_back(std::move(s));
  }
  auto rows = span_basis(scaled, n);
  RatMatrix basis(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      basis(k, j) = Rat(rows[j][k], denom);
      basis(k, j).canonicalize();
    }
  RatMatrix gram = basis.transpose() * to_rational(l.gram()) * basis;
  IntMatrix igram = to_integral(gram, "glue is not isotropic: overlattice not integral");
  for (std::size_t i = 0; i < n; ++i)
    if (!mpz_even_p(igram(i, i).get_mpz_t())) throw MathError("glue is not isotropic: overlattice not even");
  IntMatrix embedding = to_integral(inverse(basis), "overlattice does not contain the lattice");
  return Overlattice{Lattice(std::move(igram)), std::move(basis), std::move(embedding)};
}

bool is_primitive_in(const Sublattice& m) { return m.is_primitive(); }

bool isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, const Int& cap) {
  using Element = FiniteQuadraticForm::Element;
  if (a.size() != b.size()) return false;
  if (a.size() > cap) throw MathError("cap exceeded");
  const auto targets = b.elements(cap);
  const std::size_t m = a.num_generators();
  std::vector<Element> image;

  auto is_bijective = [&]() {
    std::set<Element> hit;
    for (const auto& x : a.elements(cap)) {
      Element y = b.zero();
      for (std::size_t i = 0; i < m; ++i) y = b.add(y, b.scale(x[i], image[i]));
      hit.insert(std::move(y));
    }
    return Int(hit.size()) == b.size();
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == m) return is_bijective();
    const Element gi = a.generator(i);
    const Int ord = a.orders()[i];
    const Rat qi = a.q(gi);
    for (const auto& y : targets) {
      if (b.order_of(y) != ord || b.q(y) != qi) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = b.b(y, image[k]) == a.b(gi, a.generator(k));
      if (!ok) continue;
      image.push_back(y);
      if (assign(i + 1)) return true;
      image.pop_back();
    }
    return false;
  };
  return assign(0);
}

}  // namespace lw
