#pragma once

// Reference computations for tests. None of these call into the code paths
// they are used to check.

#include "toric/exact.hpp"
#include "toric/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace toric::testing {

// Laplace expansion along the first row.
inline BigInt cofactor_det(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    total += (j % 2 == 0 ? 1 : -1) * m(0, j) * cofactor_det(minor);
  }
  return total;
}

// Bernoulli numbers B_0..B_n with B_1 = -1/2, from sum_{j<=k} C(k+1, j) B_j = 0.
inline std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    BigInt binom = 1;  // C(k+1, j)
    for (int j = 0; j < k; ++j) {
      s += Rational(binom) * b[j];
      binom = binom * (k + 1 - j) / (j + 1);
    }
    b[k] = -s / Rational(k + 1);
  }
  return b;
}

inline Rational factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

// Lattice points of the closed face cut out by `facets`, by direct membership.
inline std::int64_t closed_face_points(const HPolytope& p, const std::vector<int>& facets, long lo, long hi) {
  const int n = p.dim();
  std::vector<long> x(n, lo);
  std::int64_t count = 0;
  while (true) {
    bool inside = true;
    for (int i = 0; i < p.num_facets() && inside; ++i) {
      BigInt s = -p.offset(i);
      for (int j = 0; j < n; ++j) s += p.normals()(i, j) * x[j];
      if (s < 0) inside = false;
      const bool on_face = std::find(facets.begin(), facets.end(), i) != facets.end();
      if (on_face && s != 0) inside = false;
    }
    if (inside) ++count;
    int j = 0;
    while (j < n && x[j] == hi) {
      x[j] = lo;
      ++j;
    }
    if (j == n) break;
    ++x[j];
  }
  return count;
}

// Product of random elementary integer matrices; determinant +-1.
inline IntMatrix random_unimodular(int n, std::mt19937& rng, int steps = 6) {
  IntMatrix u = IntMatrix::Identity(n, n);
  if (n == 1) {
    if (rng() % 2) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const int i = idx(rng);
    int j = idx(rng);
    if (i == j) j = (j + 1) % n;
    u.row(i) += coef(rng) * u.row(j);
  }
  if (rng() % 2) u.row(0) = -u.row(0);
  return u;
}

inline IntVector random_translation(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  IntVector t(n);
  for (int i = 0; i < n; ++i) t(i) = d(rng);
  return t;
}

}  // namespace toric::testing
