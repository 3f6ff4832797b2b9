#include <doctest.h>

#include "latticeworks/linalg.hpp"
#include "oracles.hpp"

using namespace lw;

namespace {

void check_snf(const IntMatrix& m) {
  const SnfResult s = snf(m);
  REQUIRE(s.U * m * s.V == s.S);
  CHECK(s.U * s.U_inv == IntMatrix::identity(m.rows()));
  CHECK(s.V * s.V_inv == IntMatrix::identity(m.cols()));
  CHECK(abs(oracle::laplace_det(s.U)) == 1);
  CHECK(abs(oracle::laplace_det(s.V)) == 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) CHECK(s.S(i, j) == 0);
  const IntVector d = s.divisors();
  CHECK(d.size() == s.rank);
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] > 0);
    if (i + 1 < d.size()) CHECK(d[i + 1] % d[i] == 0);
  }
}

}  // namespace

TEST_CASE("snf of small examples") {
  CHECK(snf(IntMatrix{{2, 4}, {6, 8}}).divisors() == IntVector{2, 4});
  CHECK(snf(IntMatrix{{0, 1}, {1, 0}}).divisors() == IntVector{1, 1});
  CHECK(snf(IntMatrix{{0, 2}, {2, 0}}).divisors() == IntVector{2, 2});
  CHECK(snf(IntMatrix{{2, 0}, {0, 3}}).divisors() == IntVector{1, 6});
  CHECK(snf(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).divisors() == IntVector{1, 3});
  CHECK(snf(IntMatrix{{0, 0}, {0, 0}}).rank == 0);
  check_snf(IntMatrix{{6, 4, 2}, {-3, 9, 12}});
}

TEST_CASE("snf identity on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int i = 0; i < 1000; ++i) check_snf(oracle::random_matrix(rng, dim(rng), dim(rng), 100));
}

TEST_CASE("snf divisor product equals |det| for square matrices") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const IntMatrix m = oracle::random_matrix(rng, 4, 4, 9);
    const Int d = oracle::laplace_det(m);
    const SnfResult s = snf(m);
    Int prod = 1;
    for (const auto& x : s.divisors()) prod *= x;
    if (d == 0)
      CHECK(s.rank < 4);
    else
      CHECK(prod == abs(d));
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(IntMatrix{{1, 1}}) == std::vector<IntVector>{{1, -1}});
  CHECK(kernel_basis(IntMatrix{{2, 4}}) == std::vector<IntVector>{{2, -1}});
  CHECK(kernel_basis(IntMatrix{{1, 0}, {0, 1}}).empty());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const IntMatrix m = oracle::random_matrix(rng, 2, 5, 20);
    const auto ker = kernel_basis(m);
    CHECK(ker.size() == 5 - rank(m));
    for (const auto& k : ker) CHECK(m * k == IntVector(2, Int(0)));
    CHECK(saturate(ker, 5) == ker);
  }
}

TEST_CASE("saturate") {
  CHECK(saturate({{2, 4}}, 2) == std::vector<IntVector>{{1, 2}});
  CHECK(saturate({{2, 0}, {0, 2}}, 2) == std::vector<IntVector>{{1, 0}, {0, 1}});
  CHECK(saturate({{3, 3, 0}}, 3) == std::vector<IntVector>{{1, 1, 0}});
  CHECK_THROWS_WITH_AS(saturate({{1, 2}, {2, 4}}, 2), "rank deficiency", MathError);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const IntMatrix m = oracle::random_matrix(rng, 2, 4, 30);
    if (rank(m) < 2) continue;
    const auto s = saturate({m.row(0), m.row(1)}, 4);
    CHECK(saturate(s, 4) == s);
    CHECK(hnf_rows(IntMatrix::from_rows(s, 4)) == IntMatrix::from_rows(s, 4));
  }
}

TEST_CASE("hnf decides equality of subgroups") {
  const IntMatrix a{{2, 0}, {0, 3}};
  const IntMatrix b{{2, 3}, {4, 3}};
  CHECK(hnf_rows(a) == hnf_rows(b));
  CHECK_FALSE(hnf_rows(IntMatrix{{2, 0}, {0, 1}}) == hnf_rows(IntMatrix{{1, 0}, {0, 2}}));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const IntMatrix m = oracle::random_matrix(rng, 3, 3, 20);
    const IntMatrix t = oracle::random_unimodular(rng, 3);
    CHECK(hnf_rows(m) == hnf_rows(t.transpose() * m));
  }
}

TEST_CASE("signature and determinant") {
  CHECK(signature(IntMatrix{{0, 1}, {1, 0}}) == Signature{1, 1});
  CHECK(signature(IntMatrix{{2, 1}, {1, 2}}) == Signature{2, 0});
  CHECK(signature(IntMatrix{{0, 0, 1}, {0, 2, 0}, {1, 0, 0}}) == Signature{2, 1});
  CHECK_THROWS_WITH_AS(signature(IntMatrix{{1, 1}, {1, 1}}), "degenerate form", MathError);
  CHECK_THROWS_WITH_AS(signature(IntMatrix{{1, 2}, {0, 1}}), "not symmetric", MathError);
  CHECK(det(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const IntMatrix g = oracle::random_even_gram(rng, 5, 6);
    CHECK(det(g) == oracle::laplace_det(g));
    const auto [p, n] = oracle::descartes_signature(g);
    CHECK(signature(g) == Signature{p, n});
  }
}

TEST_CASE("inverse and integrality") {
  const RatMatrix inv = inverse(to_rational(IntMatrix{{2, 1}, {1, 1}}));
  CHECK(to_integral(inv, "x") == IntMatrix{{1, -1}, {-1, 2}});
  CHECK_FALSE(is_integral(inverse(to_rational(IntMatrix{{2, 0}, {0, 1}}))));
  CHECK_THROWS_AS(to_integral(inverse(to_rational(IntMatrix{{2, 0}, {0, 1}})), "x"), MathError);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(mod_floor(-7, 2) == 1);
  CHECK(gcd_of({6, -10, 4}) == 2);
}
