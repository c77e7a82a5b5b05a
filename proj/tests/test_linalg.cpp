#include <doctest.h>

#include "pil/linalg.hpp"
#include "test_util.hpp"

using namespace pil;
using pil::test::m;
using pil::test::v;

TEST_CASE("parse_rational") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("+2") == 2);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-6/4").get_str() == "-3/2");
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("--1"), std::invalid_argument);
}

TEST_CASE("rref examples") {
  SUBCASE("identity") {
    const auto r = rref(Matrix::identity(3));
    CHECK(r.reduced == Matrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("proportional rows") {
    const auto r = rref(m({{1, 2}, {2, 4}}));
    CHECK(r.reduced == m({{1, 2}, {0, 0}}));
    CHECK(r.rank == 1);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0});
  }
  SUBCASE("hand reduction") {
    // [[0,1,1],[1,0,1],[1,1,0]] has determinant 2.
    const auto r = rref(m({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(r.reduced == Matrix::identity(3));
    CHECK(r.rank == 3);
  }
  SUBCASE("empty and zero") {
    CHECK(rref(Matrix(0, 3)).rank == 0);
    const auto r = rref(Matrix(2, 2));
    CHECK(r.rank == 0);
    CHECK(r.pivot_columns.empty());
  }
}

TEST_CASE("kernel_basis examples") {
  const auto k1 = kernel_basis(m({{1, 0, 0}, {0, 1, 0}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == v({0, 0, 1}));

  CHECK(kernel_basis(m({{2, 1}, {1, 1}})).empty());

  const Matrix plane = m({{1, 1, 1}});
  const auto k2 = kernel_basis(plane);
  REQUIRE(k2.size() == 2);
  for (const auto& w : k2) CHECK(is_zero(plane.apply(w)));
  CHECK(rank(Matrix::from_rows(k2, 3)) == 2);

  // Canonical form: 1 in each free column.
  CHECK(k2[0] == v({-1, 1, 0}));
  CHECK(k2[1] == v({-1, 0, 1}));

  const auto all = kernel_basis(Matrix(0, 2));
  CHECK(all.size() == 2);
}

TEST_CASE("rowspace_contains examples") {
  CHECK(rowspace_contains(m({{1, 0}}), v({2, 0})));
  CHECK_FALSE(rowspace_contains(m({{1, 0}}), v({0, 1})));
  CHECK(rowspace_contains(m({{1, 1}, {1, -1}}), v({3, 5})));
  CHECK(rowspace_contains(Matrix(0, 2), v({0, 0})));
  CHECK_THROWS_AS(rowspace_contains(m({{1, 0}}), v({1})), std::invalid_argument);
}

TEST_CASE("subspace_sum examples") {
  const Matrix e1 = m({{1, 0, 0}});
  const Matrix e2 = m({{0, 1, 0}});
  const Matrix d3 = m({{1, 1, 0}});
  {
    const Matrix parts[] = {e1, e2};
    CHECK(subspace_sum(parts, 3).rows() == 2);
  }
  {
    const Matrix parts[] = {e1, e1};
    CHECK(subspace_sum(parts, 3) == e1);
  }
  {
    const Matrix parts[] = {e1, e2, d3};
    CHECK(subspace_sum(parts, 3) == m({{1, 0, 0}, {0, 1, 0}}));
  }
  const Matrix bad[] = {m({{1, 0}})};
  CHECK_THROWS_AS(subspace_sum(bad, 3), std::invalid_argument);
}

TEST_CASE("matrix helpers") {
  const Matrix a = m({{1, 2}, {3, 4}});
  CHECK(a.transpose() == m({{1, 3}, {2, 4}}));
  CHECK(a * Matrix::identity(2) == a);
  CHECK(a * a == m({{7, 10}, {15, 22}}));
  CHECK(a.apply(v({1, 1})) == v({3, 7}));
  CHECK(a.to_string() == "[[1, 2], [3, 4]]");
  CHECK_THROWS_AS(a * Matrix(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(a.apply(v({1})), std::invalid_argument);
  Matrix b(0, 2);
  CHECK_THROWS_AS(b.append_row(v({1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(dot(v({1}), v({1, 2})), std::invalid_argument);
}

TEST_CASE("EchelonBasis matches row_basis") {
  test::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = rng.matrix(static_cast<std::size_t>(rng.integer(1, 6)), 5);
    EchelonBasis e(5);
    for (std::size_t r = 0; r < a.rows(); ++r) e.insert(a.row(r));
    CHECK(e.to_matrix() == row_basis(a));
    CHECK(e.rank() == rref(a).rank);
  }
}

TEST_CASE("linalg properties on random matrices") {
  test::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.integer(1, 5));
    const auto cols = static_cast<std::size_t>(rng.integer(1, 6));
    Matrix a = rng.matrix(rows, cols);
    if (trial % 3 == 0 && rows > 1) {
      // Force a dependent row.
      for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = a(0, c) * 2 - a(1 % rows, c);
    }
    const auto r = rref(a);
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(rank(a) + kernel_basis(a).size() == cols);
    for (const auto& w : kernel_basis(a)) CHECK(is_zero(a.apply(w)));
    for (std::size_t i = 0; i < rows; ++i) CHECK(rowspace_contains(a, a.row(i)));
  }
}

TEST_CASE("exact arithmetic") {
  test::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Rational q = rng.rational(50);
    if (q == 0) continue;
    CHECK(q * (1 / q) == 1);
  }
  // Past 64 bits.
  Integer big = 1;
  for (int i = 0; i < 100; ++i) big *= 3;
  const Rational x(big, big + 1);
  CHECK(x * Rational(big + 1, big) == 1);
}
