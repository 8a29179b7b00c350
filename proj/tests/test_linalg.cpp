#include "doctest.h"

#include "sylab/linalg.hpp"

using namespace sylab;

namespace {

FMatrix mat(std::uint32_t p, std::vector<std::vector<std::int64_t>> rows) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  return FMatrix::from_rows(PrimeField(p), r, c, rows);
}

} // namespace

TEST_CASE("prime field construction rejects composites") {
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_NOTHROW(PrimeField(2147483647u));
  PrimeField f(7);
  CHECK(f.mul(3, f.inv(3)) == 1);
  CHECK(f.reduce(-1) == 6);
}

TEST_CASE("rank examples") {
  CHECK(rank(FMatrix::identity(PrimeField(2), 2)) == 2);
  CHECK(rank(mat(2, {{1, 1}, {1, 1}})) == 1);
  CHECK(rank(FMatrix(PrimeField(2), 0, 3)) == 0);
  CHECK(rank(FMatrix(PrimeField(5), 3, 0)) == 0);
}

TEST_CASE("kernel examples") {
  auto k1 = kernel_basis(mat(2, {{1, 0}}));
  REQUIRE(k1.cols() == 1);
  CHECK(k1(0, 0) == 0);
  CHECK(k1(1, 0) == 1);

  auto k2 = kernel_basis(FMatrix::identity(PrimeField(2), 3));
  CHECK(k2.rows() == 3);
  CHECK(k2.cols() == 0);

  // Exhaustive oracle over F_3^2: the null space of [1 1] is {0, (1,2), (2,1)}.
  auto a = mat(3, {{1, 1}});
  int nonzero_solutions = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if ((x + y) % 3 == 0 && (x || y))
        ++nonzero_solutions;
  CHECK(nonzero_solutions == 2);
  auto k3 = kernel_basis(a);
  REQUIRE(k3.cols() == 1);
  // Free variable set to one.
  CHECK(k3(0, 0) == 2);
  CHECK(k3(1, 0) == 1);
}

TEST_CASE("solve examples") {
  PrimeField f(5);
  auto b = mat(5, {{1, 2}, {3, 4}});
  auto x = solve(FMatrix::identity(f, 2), b);
  REQUIRE(x);
  CHECK(*x == b);

  auto a = mat(2, {{1, 1}});
  auto y = solve(a, mat(2, {{1}}));
  REQUIRE(y);
  CHECK(a * *y == mat(2, {{1}}));

  CHECK_FALSE(solve(mat(2, {{1}, {0}}), mat(2, {{0}, {1}})));
  CHECK_THROWS_AS(solve(mat(2, {{1}}), mat(2, {{1}, {0}})), Error);
}

TEST_CASE("integer rank examples") {
  CHECK(rank(ZMatrix::from_rows({{2, 0}, {0, 3}})) == 2);
  CHECK(rank(ZMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(ZMatrix(0, 4)) == 0);
  // Rank 2 over Q although every 2x2 minor is even: reduction mod 2 would
  // undercount.
  auto m = ZMatrix::from_rows({{2, 0, 2}, {0, 2, 2}});
  CHECK(rank(m) == 2);
  CHECK(rank(m.reduce_mod(PrimeField(2))) == 0);
}

TEST_CASE("minimal polynomial examples") {
  CHECK(minimal_polynomial(FMatrix(PrimeField(2), 2, 2)) == Poly{0, 1});
  CHECK(minimal_polynomial(FMatrix::identity(PrimeField(2), 2)) == Poly{1, 1});
  CHECK(minimal_polynomial(mat(3, {{0, 1}, {0, 0}})) == Poly{0, 0, 1});
  CHECK_THROWS_AS(minimal_polynomial(mat(3, {{0, 1}})), Error);
}

TEST_CASE("irreducible factor finds a genuine factor") {
  Rng rng(3);
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    PrimeField k(p);
    // (x^2 + x + 1)(x + 1)^2 over F_2 style products, generic over p.
    Poly f = poly::mul(k, poly::mul(k, Poly{1, 1}, Poly{1, 1}),
                       Poly{1, 0, 1});
    auto q = poly::irreducible_factor(k, f, rng);
    CHECK(poly::degree(q) >= 1);
    CHECK(poly::mod(k, f, q).empty());
    CHECK(q.back() == 1);
  }
  // x^2 + x + 1 is irreducible over F_2.
  PrimeField k2(2);
  CHECK(poly::irreducible_factor(k2, Poly{1, 1, 1}, rng) == Poly{1, 1, 1});
}

TEST_CASE("property: rank-nullity, solve consistency, minimal polynomial") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = (trial % 3 == 0) ? 2 : (trial % 3 == 1 ? 3 : 7);
    PrimeField k(p);
    const std::size_t r = rng() % 6, c = rng() % 6;
    auto m = FMatrix::random(k, r, c, rng);
    if (trial % 4 == 0 && r > 1) // force dependent rows
      for (std::size_t j = 0; j < c; ++j)
        m(r - 1, j) = m(0, j);
    auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.cols() == c);
    CHECK((m * ker).is_zero());
    CHECK(rank(ker) == ker.cols());

    auto b = FMatrix::random(k, r, 2, rng);
    if (auto x = solve(m, b))
      CHECK(m * *x == b);
    else
      CHECK(rank(hstack({m, b}, k, r)) > rank(m));

    const std::size_t n = rng() % 6;
    auto sq = FMatrix::random(k, n, n, rng);
    auto f = minimal_polynomial(sq);
    CHECK(evaluate(f, sq).is_zero());
    CHECK(poly::degree(f) <= n);
  }
}

TEST_CASE("property: integer rank agrees with rank modulo a large prime") {
  Rng rng(99);
  const PrimeField big(1000003);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = rng() % 6, c = rng() % 6;
    std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
    for (auto &row : rows)
      for (auto &x : row)
        x = static_cast<std::int64_t>(rng() % 7) - 3;
    if (r > 2)
      for (std::size_t j = 0; j < c; ++j)
        rows[2][j] = 2 * rows[0][j] - rows[1][j];
    ZMatrix z(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        z(i, j) = rows[i][j];
    CHECK(rank(z) == rank(z.reduce_mod(big)));
  }
}
