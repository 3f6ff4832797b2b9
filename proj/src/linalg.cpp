#include "latticeworks/linalg.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace lw {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) r += abs(b);
  return r;
}

Int gcd_of(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).get_den() != 1) return false;
  return true;
}

IntMatrix to_integral(const RatMatrix& m, const std::string& what) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw MathError(what);
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

class SnfWorker {
 public:
  explicit SnfWorker(const IntMatrix& m)
      : a_(m),
        u_(IntMatrix::identity(m.rows())),
        u_inv_(IntMatrix::identity(m.rows())),
        v_(IntMatrix::identity(m.cols())),
        v_inv_(IntMatrix::identity(m.cols())) {}

  SnfResult run() {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      auto piv = smallest_in_block(t);
      if (!piv) break;
      move_to(t, piv->first, piv->second);
      reduce_pivot(t);
    }
    for (std::size_t i = 0; i < t; ++i)
      if (a_(i, i) < 0) negate_row(i);
    return SnfResult{std::move(u_), std::move(a_), std::move(v_), std::move(u_inv_), std::move(v_inv_), t};
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        Int x = abs(a_(i, j));
        if (!best || x < best_abs) {
          best = {i, j};
          best_abs = x;
          if (best_abs == 1) return best;
        }
      }
    return best;
  }

  void move_to(std::size_t t, std::size_t i, std::size_t j) {
    if (i != t) swap_rows(i, t);
    if (j != t) swap_cols(j, t);
  }

  // Clears row t and column t outside the pivot and enforces d_t | rest.
  void reduce_pivot(std::size_t t) {
    const std::size_t m = a_.rows(), n = a_.cols();
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a_(i, t) == 0) continue;
        Int q = floor_div(a_(i, t), a_(t, t));
        add_row(i, t, -q);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a_(t, j) == 0) continue;
        Int q = floor_div(a_(t, j), a_(t, t));
        add_col(j, t, -q);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot appeared: promote it.
        std::size_t bi = t, bj = t;
        Int best = abs(a_(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (a_(i, t) != 0 && abs(a_(i, t)) < best) best = abs(a_(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (a_(t, j) != 0 && abs(a_(t, j)) < best) best = abs(a_(t, j)), bi = t, bj = j;
        move_to(t, bi, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a_(i, j) % a_(t, t) != 0) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) return;
    }
  }

  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const Int& k) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) += k * a_(j, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) += k * u_(j, c);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, j) -= k * u_inv_(r, i);
  }

  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, const Int& k) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, i) += k * a_(r, j);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, i) += k * v_(r, j);
    for (std::size_t c = 0; c < v_inv_.cols(); ++c) v_inv_(j, c) -= k * v_inv_(i, c);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, i), u_inv_(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
    for (std::size_t c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(i, c), v_inv_(j, c));
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
  }

  IntMatrix a_, u_, u_inv_, v_, v_inv_;
};

}  // namespace

IntVector SnfResult::divisors() const {
  IntVector d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
  return d;
}

SnfResult snf(const IntMatrix& m) { return SnfWorker(m).run(); }

// ---------------------------------------------------------------------------
// Hermite normal form and friends

IntMatrix hnf_rows(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  auto add_row = [&](std::size_t i, std::size_t j, const Int& k) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) += k * a(j, c);
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < m; ++i)
        if (a(i, c) != 0 && (!best || abs(a(i, c)) < abs(a(*best, c)))) best = i;
      if (!best) break;
      if (*best != r) swap_rows(*best, r);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        add_row(i, r, -floor_div(a(i, c), a(r, c)));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t k = 0; k < n; ++k) a(r, k) = -a(r, k);
    for (std::size_t i = 0; i < r; ++i)
      if (a(i, c) != 0) add_row(i, r, -floor_div(a(i, c), a(r, c)));
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

namespace {
std::vector<IntVector> rows_of(const IntMatrix& m) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}
}  // namespace

std::vector<IntVector> span_basis(const std::vector<IntVector>& vectors, std::size_t ambient_rank) {
  if (vectors.empty()) return {};
  return rows_of(hnf_rows(IntMatrix::from_rows(vectors, ambient_rank)));
}

std::size_t rank(const IntMatrix& m) { return hnf_rows(m).rows(); }

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  SnfResult r = snf(m);
  std::vector<IntVector> ker;
  for (std::size_t j = r.rank; j < m.cols(); ++j) ker.push_back(r.V.col(j));
  return span_basis(ker, m.cols());
}

std::vector<IntVector> saturate(const std::vector<IntVector>& vectors, std::size_t ambient_rank) {
  if (vectors.empty()) return {};
  IntMatrix b = IntMatrix::from_rows(vectors, ambient_rank);
  SnfResult r = snf(b);
  if (r.rank != vectors.size()) throw MathError("rank deficiency");
  // rows(b) = U^-1 S V^-1, so the hull is spanned by the first rank rows of V^-1.
  std::vector<IntVector> hull;
  for (std::size_t i = 0; i < r.rank; ++i) hull.push_back(r.V_inv.row(i));
  return span_basis(hull, ambient_rank);
}

// ---------------------------------------------------------------------------

Signature signature(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw MathError("not symmetric");
  const std::size_t n = gram.rows();
  RatMatrix a = to_rational(gram);
  auto add = [&](std::size_t i, std::size_t j, const Rat& k) {  // congruence: row_i += k row_j, col_i += k col_j
    for (std::size_t c = 0; c < n; ++c) a(i, c) += k * a(j, c);
    for (std::size_t r = 0; r < n; ++r) a(r, i) += k * a(r, j);
  };
  auto swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> p;
    for (std::size_t i = k; i < n && !p; ++i)
      if (a(i, i) != 0) p = i;
    if (!p) {
      // All remaining diagonal entries vanish: combine two rows with a_ij != 0.
      for (std::size_t i = k; i < n && !p; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            add(i, j, Rat(1));
            p = i;
            break;
          }
      if (!p) throw MathError("degenerate form");
    }
    if (*p != k) swap(*p, k);
    for (std::size_t r = k + 1; r < n; ++r)
      if (a(r, k) != 0) add(r, k, -a(r, k) / a(k, k));
    (a(k, k) > 0 ? sig.positive : sig.negative) += 1;
  }
  return sig;
}

Int det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a(i, k) == 0) ++i;
      if (i == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(i, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw MathError("singular matrix");
    if (p != k)
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c)), std::swap(inv(k, c), inv(p, c));
    Rat piv = a(k, k);
    for (std::size_t c = 0; c < n; ++c) a(k, c) /= piv, inv(k, c) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(k, c), inv(i, c) -= f * inv(k, c);
    }
  }
  return inv;
}

}  // namespace lw
