#include <doctest.h>

#include <random>

#include "cpw/matrix.hpp"

using namespace cpw;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      long re = static_cast<long>(rng() % 7) - 3;
      long im = static_cast<long>(rng() % 7) - 3;
      m(i, j) = GaussianRational(Rational(re), Rational(im));
    }
  return m;
}

}  // namespace

TEST_CASE("rref of the identity and of zero") {
  ExactMatrix id = ExactMatrix::identity(2);
  RrefResult r = rref(id);
  CHECK(r.matrix == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});

  ExactMatrix zero(2, 2);
  RrefResult z = rref(zero);
  CHECK(z.matrix == zero);
  CHECK(z.pivots.empty());
}

TEST_CASE("rref collapses a dependent complex row") {
  GaussianRational i = GaussianRational::i();
  // [[1, i], [i, -1]]: the second row is i times the first.
  ExactMatrix m = from_rows({{GaussianRational(1), i}, {i, GaussianRational(-1)}});
  RrefResult r = rref(m);
  ExactMatrix expected = from_rows({{GaussianRational(1), i}, {GaussianRational(0), GaussianRational(0)}});
  CHECK(r.matrix == expected);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.transform * m == r.matrix);
}

TEST_CASE("rref transform and idempotence on random matrices") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 5;
    std::size_t cols = 1 + rng() % 5;
    ExactMatrix m = random_matrix(rng, rows, cols);
    RrefResult r = rref(m);
    CHECK(r.transform * m == r.matrix);
    CHECK(rref(r.matrix).matrix == r.matrix);
    for (std::size_t k = 1; k < r.pivots.size(); ++k) CHECK(r.pivots[k - 1] < r.pivots[k]);
  }
}

TEST_CASE("solve_membership on frozen examples") {
  // basis {(1,0)}, target (2,0) -> [2]
  ExactMatrix basis = from_rows({{GaussianRational(1), GaussianRational(0)}});
  std::vector<GaussianRational> target = {GaussianRational(2), GaussianRational(0)};
  auto coeffs = solve_membership(basis, target);
  REQUIRE(coeffs.has_value());
  CHECK((*coeffs)[0] == GaussianRational(2));

  // basis {(1,0)}, target (0,1) -> absent
  std::vector<GaussianRational> miss = {GaussianRational(0), GaussianRational(1)};
  CHECK(!solve_membership(basis, miss).has_value());

  // basis {(1,1),(0,1)}, target (1,0) -> [1, -1]
  ExactMatrix basis2 = from_rows({{GaussianRational(1), GaussianRational(1)},
                                  {GaussianRational(0), GaussianRational(1)}});
  std::vector<GaussianRational> target2 = {GaussianRational(1), GaussianRational(0)};
  auto coeffs2 = solve_membership(basis2, target2);
  REQUIRE(coeffs2.has_value());
  CHECK((*coeffs2)[0] == GaussianRational(1));
  CHECK((*coeffs2)[1] == GaussianRational(-1));
}

TEST_CASE("solve_membership rejects mismatched dimensions") {
  ExactMatrix basis = ExactMatrix::identity(2);
  std::vector<GaussianRational> target = {GaussianRational(1)};
  CHECK_THROWS_AS(solve_membership(basis, target), Error);
}

TEST_CASE("solve_membership replays exactly on random spans") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 4;
    std::size_t cols = 1 + rng() % 5;
    ExactMatrix basis = random_matrix(rng, rows, cols);
    // Build a target inside the span and check the coefficients reproduce it.
    std::vector<GaussianRational> weights;
    for (std::size_t i = 0; i < rows; ++i)
      weights.push_back(GaussianRational(static_cast<long>(rng() % 5) - 2));
    std::vector<GaussianRational> target(cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        target[j] = target[j] + weights[i] * basis(i, j);
    auto coeffs = solve_membership(basis, target);
    REQUIRE(coeffs.has_value());
    std::vector<GaussianRational> replay(cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        replay[j] = replay[j] + (*coeffs)[i] * basis(i, j);
    CHECK(replay == target);
  }
}
