#include "support/oracles.hpp"
#include "toric/exact.hpp"

#include <doctest.h>

#include <random>

using namespace toric;
using toric::testing::cofactor_det;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix random_matrix(int n, std::mt19937& rng, int range = 4) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  const Rational q(BigInt(4), BigInt(-6));
  CHECK(numerator(q) == -2);
  CHECK(denominator(q) == 3);
  CHECK(to_string(q) == "-2/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(denominator(Rational(0)) == 1);
  CHECK(parse_rational("-2/3") == q);
  CHECK(parse_rational("6/-9") == q);
  CHECK(parse_rational("+7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
}

TEST_CASE("det examples") {
  CHECK(det(IntMatrix(IntMatrix::Identity(2, 2))) == 1);
  CHECK(det(mat({{1, 1}, {0, 1}})) == 1);
  CHECK(det(mat({{1, -1}, {0, -1}})) == -1);
  CHECK(det(mat({{0, 1}, {1, 0}})) == -1);
  CHECK(det(mat({{0, 0}, {1, 0}})) == 0);
  CHECK_THROWS_AS(det(mat({{1, 2, 3}, {4, 5, 6}})), DimensionError);
}

TEST_CASE("det agrees with cofactor expansion and is multiplicative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 5;
    const IntMatrix a = random_matrix(n, rng);
    const IntMatrix b = random_matrix(n, rng);
    CHECK(det(a) == cofactor_det(a));
    CHECK(det(IntMatrix(a * b)) == det(a) * det(b));
    CHECK(det(RatMatrix(a.cast<Rational>())) == Rational(det(a)));
  }
}

TEST_CASE("inverse_unimodular examples") {
  CHECK(inverse_unimodular(IntMatrix(IntMatrix::Identity(3, 3))) == IntMatrix::Identity(3, 3));
  CHECK(inverse_unimodular(mat({{1, -1}, {0, -1}})) == mat({{1, -1}, {0, -1}}));
  CHECK(inverse_unimodular(mat({{1, 1}, {0, 1}})) == mat({{1, -1}, {0, 1}}));
  try {
    inverse_unimodular(mat({{2, 0}, {0, 1}}));
    FAIL("expected NotUnimodularError");
  } catch (const NotUnimodularError& e) {
    CHECK(e.det == 2);
  }
}

TEST_CASE("inverse_unimodular is a two-sided inverse") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const IntMatrix u = toric::testing::random_unimodular(n, rng);
    const IntMatrix inv = inverse_unimodular(u);
    CHECK(IntMatrix(inv * u) == IntMatrix::Identity(n, n));
    CHECK(IntMatrix(u * inv) == IntMatrix::Identity(n, n));
  }
}

TEST_CASE("solve_rational examples and substitution") {
  IntVector b(2);
  b << 1, 1;
  CHECK(solve_rational(IntMatrix(IntMatrix::Identity(2, 2)), b) == b.cast<Rational>());
  const RatVector half = solve_rational(mat({{2, 0}, {0, 2}}), b);
  CHECK(half(0) == Rational(1, 2));
  CHECK(half(1) == Rational(1, 2));
  IntVector c(2);
  c << 0, -1;
  const RatVector x = solve_rational(mat({{1, 0}, {-1, -1}}), c);
  CHECK(x(0) == 0);
  CHECK(x(1) == 1);
  CHECK_THROWS_AS(solve_rational(mat({{1, 2}, {2, 4}}), b), SingularError);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const IntMatrix a = random_matrix(n, rng);
    if (det(a) == 0) continue;
    IntVector rhs(n);
    for (int i = 0; i < n; ++i) rhs(i) = static_cast<long>(rng() % 11) - 5;
    const RatVector sol = solve_rational(a, rhs);
    CHECK(RatVector(a.cast<Rational>() * sol) == rhs.cast<Rational>());
  }
}

TEST_CASE("integer kernel is saturated and canonical") {
  // Kernel of (1, 1, 0): spanned by (1,-1,0) and (0,0,1).
  const IntMatrix k = integer_kernel(mat({{1, 1, 0}}));
  REQUIRE(k.cols() == 2);
  CHECK(IntMatrix(mat({{1, 1, 0}}) * k).isZero());
  // Saturation: the 2x2 minors of the basis have gcd 1.
  BigInt g = 0;
  for (int r1 = 0; r1 < 3; ++r1) {
    for (int r2 = r1 + 1; r2 < 3; ++r2) {
      g = gcd(g, k(r1, 0) * k(r2, 1) - k(r1, 1) * k(r2, 0));
    }
  }
  CHECK(g == 1);
  // Kernel of (2, 4) is spanned by (2, -1), not a multiple of it.
  const IntMatrix k2 = integer_kernel(mat({{2, 4}}));
  REQUIRE(k2.cols() == 1);
  CHECK(abs(k2(0, 0)) == 2);
  CHECK(abs(k2(1, 0)) == 1);
  CHECK(integer_kernel(mat({{1, 0}, {0, 1}})).cols() == 0);
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
}
