#pragma once

// The twelve-dimensional cancellation L = 8 A(T) - 32 A-hat as an identity of
// polynomials in the Pontryagin classes p_1, p_2, p_3.
//
// Degrees here are cohomological: a root x_i has degree 2, p_k has degree 4k.

#include "toric/report.hpp"
#include "toric/series.hpp"

#include <map>
#include <vector>

namespace toric {

// Symmetric polynomial in the roots x_1..x_r, as coefficients on the monomial
// symmetric functions m_lambda (lambda a partition of root exponents).
class RootPoly {
 public:
  RootPoly(int num_roots, int degree) : r_(num_roots), d_(degree) {}

  int num_roots() const { return r_; }
  int degree() const { return d_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  Rational coefficient(const std::vector<int>& lambda) const;
  void add_term(std::vector<int> lambda, const Rational& c);
  // Part of cohomological degree k.
  RootPoly homogeneous_part(int k) const;

  RootPoly& operator+=(const RootPoly& o);
  RootPoly& operator*=(const Rational& s);

  friend bool operator==(const RootPoly&, const RootPoly&) = default;

 private:
  int r_;
  int d_;
  std::map<std::vector<int>, Rational> terms_;
};

RootPoly operator+(RootPoly a, const RootPoly& b);
RootPoly operator-(RootPoly a, const RootPoly& b);
RootPoly operator*(const Rational& s, RootPoly a);
RootPoly operator*(const RootPoly& a, const RootPoly& b);

// Polynomial in p_1, p_2, ...; key is the multiset of indices, e.g. {2,1} = p_2 p_1.
class PontryaginPoly {
 public:
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  Rational coefficient(std::vector<int> mono) const;
  void add_term(std::vector<int> mono, const Rational& c);
  PontryaginPoly homogeneous_part(int weight) const;
  // Value at p_k = values[k-1].
  Rational evaluate(const std::vector<Rational>& values) const;

  friend bool operator==(const PontryaginPoly&, const PontryaginPoly&) = default;

 private:
  std::map<std::vector<int>, Rational> terms_;
};

PontryaginPoly operator-(const PontryaginPoly& a, const PontryaginPoly& b);
PontryaginPoly operator*(const Rational& s, const PontryaginPoly& a);
std::string to_string(const PontryaginPoly& p);

// prod_i g(x_i) truncated at cohomological degree `degree`. g must be even.
RootPoly expand_genus_product(const UniSeries& g, int num_roots = 6, int degree = 12);
// prod_j A(x_j) * sum_j (e^{x_j} + e^{-x_j})
RootPoly twisted_ahat(int num_roots = 6, int degree = 12);
// p_k = e_k(x_1^2, ..., x_r^2) in the m-basis.
RootPoly pontryagin_class(int k, int num_roots, int degree);

PontryaginPoly to_pontryagin(const RootPoly& r);
RootPoly from_pontryagin(const PontryaginPoly& p, int num_roots, int degree);

struct AgwParts {
  PontryaginPoly l;       // L-genus, degree 12
  PontryaginPoly t;       // twisted A-hat, degree 12
  PontryaginPoly a;       // A-hat, degree 12
};

AgwParts agw_parts(int degree = 12);

// Checks L = 8 T - c A coefficientwise on {p3, p1p2, p1^3}; c = 32 is the true
// identity, other values give a negative control. lhs/rhs in the report are
// both sides evaluated at p = (1, 1, 1); the verdict is coefficientwise plus
// ten seeded random rational substitutions.
Report verify_agw(const Rational& ahat_coefficient = 32);

}  // namespace toric
