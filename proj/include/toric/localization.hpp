#pragma once

// Fixed-point integration over the toric manifold of a Delzant polytope.
//
// At the vertex p = F_{i_1} cap ... cap F_{i_n} the class v_i restricts to
// <mu_{p,i}, u> when i is incident to p and to 0 otherwise, where the mu rows
// come from M_p = Lambda_p^{-1}. The equivariant Euler class at p is the
// product of the n incident restrictions, and
//
//   <f, [M_P]> = sum_p f|_p / e_p
//
// for any polynomial f of degree n in the v_i, independently of the generic
// integer vector u.

#include "toric/polytope.hpp"
#include "toric/series.hpp"

#include <vector>

namespace toric {

struct NotDelzantError : Error {
  explicit NotDelzantError(DelzantVerdict v) : Error("not-delzant", v.message), verdict(std::move(v)) {}
  DelzantVerdict verdict;
};

struct GenericityError : Error {
  explicit GenericityError(const std::string& what) : Error("genericity", what) {}
};

// A cross-check inside the library failed; never expected on valid input.
struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error("internal", what) {}
};

class ToricManifold {
 public:
  // Throws NotDelzantError or the polytope errors of enumerate_vertices().
  explicit ToricManifold(HPolytope p);

  const HPolytope& polytope() const { return polytope_; }
  const std::vector<VertexChart>& charts() const { return charts_; }
  int dim() const { return polytope_.dim(); }
  int num_facets() const { return polytope_.num_facets(); }

 private:
  HPolytope polytope_;
  std::vector<VertexChart> charts_;
};

struct GenericVector {
  IntVector u;
  friend bool operator==(const GenericVector& a, const GenericVector& b) { return a.u == b.u; }
};

GenericVector make_generic_vector(const std::vector<long>& u);

// <mu_{p,i_j}, u> for j = 0..n-1 at one vertex.
std::vector<BigInt> vertex_weights(const VertexChart& chart, const GenericVector& u);
bool is_generic(const std::vector<VertexChart>& charts, const GenericVector& u);

// First (or, with skip = k, the (k+1)-th distinct) accepted vector of the
// sequence u = (1, t, t^2, ..., t^{n-1}), t = 2, 3, 5, 7, 11, ... In dimension
// one the sequence is (1), (2), (3), (5), ...
GenericVector choose_generic(const std::vector<VertexChart>& charts, int skip = 0);

// Intersection number <prod_i v_i^{e_i}, [M_P]>; |e| <= n. Zero below top degree.
Rational integrate_monomial(const ToricManifold& tm, const Exponent& e, const GenericVector& u);

struct Integral {
  Rational value;
  std::vector<Rational> per_vertex;  // contributions of the degree-n part
};

// Linear extension of integrate_monomial. Also verifies that every homogeneous
// part of degree < n localizes to exactly zero (InternalError otherwise).
Integral integrate_poly_detailed(const ToricManifold& tm, const MultiPoly& f, const GenericVector& u);
Rational integrate_poly(const ToricManifold& tm, const MultiPoly& f, const GenericVector& u);

// <v_i^k, [M_P]> straight from the vertex sum over facet i; requires k = n.
Rational gysin_power(const ToricManifold& tm, int facet, int k, const GenericVector& u);

// The same number in dimension three written with oriented volumes
// <a, b, c> = det[a b c] of the facet normals only.
Rational gysin_power_triple_product(const ToricManifold& tm, int facet, const GenericVector& u);

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

Partition make_partition(std::vector<int> parts);
// All partitions of n, largest first part first.
std::vector<Partition> partitions_of(int n);

// Vertex formula summing over disjoint index sets I_1, I_2 at each vertex and
// permutations sigma of the parts:
//   sum prod_{j in I_1} y_j^{w_sigma(j) - 1} / prod_{j in I_2} y_j.
// This evaluates sum over distinct facet assignments of prod v^{w}, i.e.
// aut(w) * <m_w(v_1..v_m), [M_P]> with m_w the monomial symmetric function.
Rational monomial_chern_number(const ToricManifold& tm, const Partition& w, const GenericVector& u);

// Coefficient of m_lambda in e_omega: number of 0/1 matrices with row sums
// omega and column sums lambda.
BigInt elementary_to_monomial(const Partition& omega, const Partition& lambda);

struct ChernRoutes {
  Rational fixed_point;  // vertex formula + symmetric-function change of basis
  Rational elementary;   // integrate_poly of prod_j e_{w_j}(v)
};

ChernRoutes chern_number_routes(const ToricManifold& tm, const Partition& w, const GenericVector& u);

// c_w[M_P]; both routes must agree and be integral (InternalError otherwise).
Rational chern_number(const ToricManifold& tm, const Partition& w, const GenericVector& u);
Rational chern_number(const ToricManifold& tm, const Partition& w);

}  // namespace toric
