#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sexpansion/linalg.hpp"
#include "oracles.hpp"

using namespace sexpansion;

namespace {

Rational q(long long p, long long d = 1) { return Rational(Int(p), Int(d)); }

RationalMatrix random_matrix(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  RationalMatrix m(n, n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) m.at(r, c) = q(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("matrix construction and access") {
  RationalMatrix m(2, 3);
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 3);
  REQUIRE(m.is_zero());
  m.at(2, 3) = q(1, 2);
  REQUIRE_FALSE(m.is_zero());
  REQUIRE(m.at(2, 3) == q(1, 2));
  REQUIRE_THROWS_AS(m.at(0, 1), IndexOutOfRange);
  REQUIRE_THROWS_AS(m.at(3, 1), IndexOutOfRange);
  REQUIRE_THROWS_AS(m.at(1, 4), IndexOutOfRange);
  REQUIRE_THROWS_AS(RationalMatrix(-1, 2), ShapeMismatch);
  REQUIRE_THROWS_AS(RationalMatrix::from_rows({{q(1)}, {q(1), q(2)}}), ShapeMismatch);
  REQUIRE(RationalMatrix::from_rows({{q(1), q(2)}, {q(3), q(4)}}).at(2, 1) == q(3));
}

TEST_CASE("determinants of fixed matrices") {
  REQUIRE(exact_det(RationalMatrix(0, 0)) == q(1));
  REQUIRE(exact_det(RationalMatrix::from_rows({{q(7)}})) == q(7));
  REQUIRE(exact_det(RationalMatrix::from_rows({{q(1), q(2)}, {q(3), q(4)}})) == q(-2));
  // Singular: second row is twice the first.
  REQUIRE(exact_det(RationalMatrix::from_rows({{q(1), q(2)}, {q(2), q(4)}})) == q(0));
  // Fractions: det [[1/2, 1/3], [1/4, 1/5]] = 1/10 − 1/12 = 1/60.
  REQUIRE(exact_det(RationalMatrix::from_rows({{q(1, 2), q(1, 3)}, {q(1, 4), q(1, 5)}})) ==
          q(1, 60));
  REQUIRE_THROWS_AS(exact_det(RationalMatrix(2, 3)), ShapeMismatch);
  // 3x3 with a zero leading pivot exercises row swapping.
  REQUIRE(exact_det(RationalMatrix::from_rows(
              {{q(0), q(1), q(2)}, {q(1), q(0), q(3)}, {q(4), q(5), q(0)}})) == q(22));
}

TEST_CASE("determinant matches division-based elimination on random matrices") {
  std::mt19937 rng(20240816);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 5;
    auto m = random_matrix(rng, n);
    REQUIRE(exact_det(m) == oracles::oracle_det(m));
  }
}

TEST_CASE("rank handles degenerate and rectangular shapes") {
  REQUIRE(exact_rank(RationalMatrix(0, 0)) == 0);
  REQUIRE(exact_rank(RationalMatrix(3, 3)) == 0);
  REQUIRE(exact_rank(RationalMatrix::from_rows({{q(0), q(2), q(0)}})) == 1);
  REQUIRE(exact_rank(RationalMatrix::from_rows({{q(1), q(2)}, {q(2), q(4)}, {q(3), q(6)}})) ==
          1);
  REQUIRE(exact_rank(RationalMatrix::from_rows({{q(1), q(0), q(0)}, {q(0), q(0), q(1)}})) ==
          2);
  // Rank via det on random square matrices: nonsingular iff full rank.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 4;
    auto m = random_matrix(rng, n);
    REQUIRE((exact_rank(m) == n) == (oracles::oracle_det(m) != 0));
  }
}

TEST_CASE("row space basis is reduced and deterministic") {
  auto b = row_space_basis(RationalMatrix::from_rows({
      {q(2), q(4), q(6)},
      {q(1), q(2), q(3)},   // dependent
      {q(0), q(0), q(-5)},
  }));
  REQUIRE(b.size() == 2);
  // Coprime integer entries, positive leading coefficient.
  REQUIRE(b[0] == std::vector<Rational>{q(1), q(2), q(3)});
  REQUIRE(b[1] == std::vector<Rational>{q(0), q(0), q(1)});

  REQUIRE(row_space_basis(RationalMatrix(2, 4)).empty());

  // Basis spans the rows: stacking rows onto the basis adds no rank.
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_matrix(rng, 3);
    auto basis = row_space_basis(m);
    REQUIRE(static_cast<int>(basis.size()) == exact_rank(m));
    std::vector<std::vector<Rational>> stacked = basis;
    for (int r = 1; r <= 3; ++r) {
      std::vector<Rational> row(3);
      for (int c = 1; c <= 3; ++c) row[c - 1] = m.at(r, c);
      stacked.push_back(row);
    }
    REQUIRE(exact_rank(RationalMatrix::from_rows(stacked)) == exact_rank(m));
  }
}
