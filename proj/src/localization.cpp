#include "toric/localization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace toric {

namespace {

Rational product(const std::vector<BigInt>& ys) {
  BigInt p = 1;
  for (const auto& y : ys) p *= y;
  return Rational(p);
}

BigInt ipow(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<BigInt> checked_weights(const VertexChart& chart, const GenericVector& u) {
  auto ys = vertex_weights(chart, u);
  for (const auto& y : ys) {
    if (y == 0) throw GenericityError("generic vector is orthogonal to a mu row; choose another");
  }
  return ys;
}

bool is_prime(int t) {
  if (t < 2) return false;
  for (int d = 2; d * d <= t; ++d) {
    if (t % d == 0) return false;
  }
  return true;
}

}  // namespace

ToricManifold::ToricManifold(HPolytope p) : polytope_(std::move(p)), charts_(enumerate_vertices(polytope_)) {
  auto verdict = is_delzant(charts_);
  if (!verdict.delzant) {
    verdict.message = "polytope '" + polytope_.name() + "' is " + verdict.message;
    throw NotDelzantError(std::move(verdict));
  }
}

GenericVector make_generic_vector(const std::vector<long>& u) {
  IntVector v(static_cast<Eigen::Index>(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i) v(i) = u[i];
  return GenericVector{v};
}

std::vector<BigInt> vertex_weights(const VertexChart& chart, const GenericVector& u) {
  if (chart.mu.size() == 0) throw NotDelzantError(DelzantVerdict{false, {}, chart.point, chart.det, "vertex chart is not unimodular"});
  if (chart.mu.cols() != u.u.size()) throw DimensionError("generic vector has wrong length");
  const IntVector y = chart.mu * u.u;
  return std::vector<BigInt>(y.data(), y.data() + y.size());
}

bool is_generic(const std::vector<VertexChart>& charts, const GenericVector& u) {
  for (const auto& c : charts) {
    for (const auto& y : vertex_weights(c, u)) {
      if (y == 0) return false;
    }
  }
  return true;
}

GenericVector choose_generic(const std::vector<VertexChart>& charts, int skip) {
  if (charts.empty()) throw DimensionError("choose_generic: no vertex charts");
  const Eigen::Index n = charts.front().lambda.rows();
  std::vector<GenericVector> accepted;
  for (int t = 1;; ++t) {
    if (t > 1 && !is_prime(t)) continue;
    GenericVector cand{IntVector(n)};
    if (n == 1) {
      cand.u(0) = t;
    } else {
      if (t == 1) continue;
      BigInt power = 1;
      for (Eigen::Index i = 0; i < n; ++i) {
        cand.u(i) = power;
        power *= t;
      }
    }
    if (!is_generic(charts, cand)) continue;
    if (std::find(accepted.begin(), accepted.end(), cand) != accepted.end()) continue;
    accepted.push_back(cand);
    if (static_cast<int>(accepted.size()) == skip + 1) return cand;
  }
}

Rational integrate_monomial(const ToricManifold& tm, const Exponent& e, const GenericVector& u) {
  const int n = tm.dim();
  if (static_cast<int>(e.size()) != tm.num_facets()) throw ShapeError("exponent length mismatch");
  const int deg = total_degree(e);
  if (deg > n) throw DimensionError("integrate_monomial: degree exceeds dimension");
  Rational sum = 0;
  for (const auto& chart : tm.charts()) {
    bool supported = true;
    for (int i = 0; i < tm.num_facets() && supported; ++i) {
      if (e[i] > 0 && chart.local_index(i) < 0) supported = false;
    }
    const auto ys = checked_weights(chart, u);
    if (!supported) continue;
    BigInt num = 1;
    for (std::size_t j = 0; j < ys.size(); ++j) num *= ipow(ys[j], e[chart.facets[j]]);
    sum += Rational(num) / product(ys);
  }
  if (deg < n && sum != 0) {
    throw InternalError("localization of a degree-" + std::to_string(deg) +
                        " monomial is nonzero: " + to_string(sum));
  }
  return sum;
}

Integral integrate_poly_detailed(const ToricManifold& tm, const MultiPoly& f, const GenericVector& u) {
  const int n = tm.dim();
  if (f.num_vars() != tm.num_facets()) throw ShapeError("polynomial variable count differs from facet count");
  if (f.degree() > n) throw ShapeError("polynomial truncation exceeds the dimension");
  Integral out;
  std::vector<Rational> by_degree(n + 1, Rational(0));
  for (const auto& chart : tm.charts()) {
    const auto ys = checked_weights(chart, u);
    const Rational euler = product(ys);
    std::vector<Rational> local(n + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) {
      BigInt value = 1;
      for (int i = 0; i < tm.num_facets() && value != 0; ++i) {
        if (e[i] == 0) continue;
        const int j = chart.local_index(i);
        value = j < 0 ? BigInt(0) : value * ipow(ys[j], e[i]);
      }
      local[total_degree(e)] += c * Rational(value);
    }
    for (int k = 0; k <= n; ++k) by_degree[k] += local[k] / euler;
    out.per_vertex.push_back(local[n] / euler);
  }
  for (int k = 0; k < n; ++k) {
    if (by_degree[k] != 0) {
      throw InternalError("degree-" + std::to_string(k) + " part localizes to " +
                          to_string(by_degree[k]) + " instead of 0");
    }
  }
  out.value = by_degree[n];
  return out;
}

Rational integrate_poly(const ToricManifold& tm, const MultiPoly& f, const GenericVector& u) {
  return integrate_poly_detailed(tm, f, u).value;
}

Rational gysin_power(const ToricManifold& tm, int facet, int k, const GenericVector& u) {
  const int n = tm.dim();
  if (facet < 0 || facet >= tm.num_facets()) throw DimensionError("gysin_power: facet index out of range");
  if (k != n) throw DimensionError("gysin_power: power must equal the dimension");
  Rational sum = 0;
  for (const auto& chart : tm.charts()) {
    const int self = chart.local_index(facet);
    if (self < 0) continue;
    const auto ys = checked_weights(chart, u);
    BigInt den = 1;
    for (int j = 0; j < n; ++j) {
      if (j != self) den *= ys[j];
    }
    sum += Rational(ipow(ys[self], n - 1)) / Rational(den);
  }
  return sum;
}

Rational gysin_power_triple_product(const ToricManifold& tm, int facet, const GenericVector& u) {
  if (tm.dim() != 3) throw DimensionError("triple-product formula needs dimension 3");
  if (facet < 0 || facet >= tm.num_facets()) throw DimensionError("facet index out of range");
  auto bracket = [](const IntVector& a, const IntVector& b, const IntVector& c) {
    IntMatrix m(3, 3);
    m.col(0) = a;
    m.col(1) = b;
    m.col(2) = c;
    return det(m);
  };
  const IntVector li = tm.polytope().normal(facet);
  Rational sum = 0;
  for (const auto& chart : tm.charts()) {
    if (chart.local_index(facet) < 0) continue;
    std::vector<int> others;
    for (int f : chart.facets) {
      if (f != facet) others.push_back(f);
    }
    const IntVector l1 = tm.polytope().normal(others[0]);
    const IntVector l2 = tm.polytope().normal(others[1]);
    const BigInt num = bracket(l1, l2, u.u);
    const BigInt d1 = bracket(li, l1, u.u);
    const BigInt d2 = bracket(l2, li, u.u);
    if (d1 == 0 || d2 == 0) throw GenericityError("generic vector is degenerate for the triple-product formula");
    sum += Rational(num * num) / Rational(d1 * d2);
  }
  return sum;
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition make_partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw DimensionError("partition parts must be positive");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition{std::move(parts)};
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Rational monomial_chern_number(const ToricManifold& tm, const Partition& w, const GenericVector& u) {
  const int n = tm.dim();
  const int l = w.length();
  if (w.size() != n) throw DimensionError("partition must have size equal to the dimension");
  Rational sum = 0;
  for (const auto& chart : tm.charts()) {
    const auto ys = checked_weights(chart, u);
    // I_1 ranges over l-subsets of the incident facets, I_2 is the rest.
    std::vector<bool> in_first(n, false);
    std::fill(in_first.begin(), in_first.begin() + l, true);
    do {
      std::vector<int> first, second;
      for (int j = 0; j < n; ++j) (in_first[j] ? first : second).push_back(j);
      BigInt den = 1;
      for (int j : second) den *= ys[j];
      std::vector<int> sigma(l);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        BigInt num = 1;
        for (int j = 0; j < l; ++j) num *= ipow(ys[first[j]], w.parts[sigma[j]] - 1);
        sum += Rational(num) / Rational(den);
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    } while (std::prev_permutation(in_first.begin(), in_first.end()));
  }
  return sum;
}

BigInt elementary_to_monomial(const Partition& omega, const Partition& lambda) {
  if (omega.size() != lambda.size()) return 0;
  std::vector<int> capacity = lambda.parts;
  std::function<BigInt(int)> rows = [&](int r) -> BigInt {
    if (r == omega.length()) {
      return std::all_of(capacity.begin(), capacity.end(), [](int c) { return c == 0; }) ? 1 : 0;
    }
    // Choose omega_r distinct columns with remaining capacity.
    BigInt total = 0;
    std::function<void(int, int)> pick = [&](int start, int need) {
      if (need == 0) {
        total += rows(r + 1);
        return;
      }
      for (int c = start; c < static_cast<int>(capacity.size()); ++c) {
        if (capacity[c] == 0) continue;
        --capacity[c];
        pick(c + 1, need - 1);
        ++capacity[c];
      }
    };
    pick(0, omega.parts[r]);
    return total;
  };
  return rows(0);
}

ChernRoutes chern_number_routes(const ToricManifold& tm, const Partition& w, const GenericVector& u) {
  const int n = tm.dim();
  const int m = tm.num_facets();
  if (w.size() != n) {
    throw DimensionError("partition of " + std::to_string(w.size()) + " given for dimension " +
                         std::to_string(n));
  }
  ChernRoutes routes;
  for (const auto& lambda : partitions_of(n)) {
    const BigInt k = elementary_to_monomial(w, lambda);
    if (k == 0) continue;
    BigInt aut = 1;
    for (std::size_t i = 0; i < lambda.parts.size();) {
      std::size_t j = i;
      while (j < lambda.parts.size() && lambda.parts[j] == lambda.parts[i]) ++j;
      for (std::size_t f = 2; f <= j - i; ++f) aut *= static_cast<long>(f);
      i = j;
    }
    routes.fixed_point += Rational(k) * monomial_chern_number(tm, lambda, u) / Rational(aut);
  }
  MultiPoly c = MultiPoly::constant(m, n, 1);
  for (int part : w.parts) c = c * elementary_symmetric(m, n, part);
  routes.elementary = integrate_poly(tm, c, u);
  return routes;
}

Rational chern_number(const ToricManifold& tm, const Partition& w, const GenericVector& u) {
  const auto routes = chern_number_routes(tm, w, u);
  if (routes.fixed_point != routes.elementary) {
    throw InternalError("Chern number routes disagree: " + to_string(routes.fixed_point) +
                        " vs " + to_string(routes.elementary));
  }
  if (!is_integer(routes.elementary)) {
    throw InternalError("Chern number is not integral: " + to_string(routes.elementary));
  }
  return routes.elementary;
}

Rational chern_number(const ToricManifold& tm, const Partition& w) {
  return chern_number(tm, w, choose_generic(tm.charts()));
}

}  // namespace toric
