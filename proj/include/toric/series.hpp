#pragma once

// Truncated univariate power series (the genus generating functions) and
// truncated multivariate polynomials in the facet classes v_1..v_m.

#include "toric/exact.hpp"

#include <map>
#include <vector>

namespace toric {

struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error("shape", what) {}
};

// sum_{k <= degree} c_k x^k
class UniSeries {
 public:
  explicit UniSeries(int degree) : c_(degree + 1, Rational(0)) {}
  UniSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[k]; }
  Rational& operator[](int k) { return c_[k]; }
  const std::vector<Rational>& coefficients() const { return c_; }
  UniSeries truncated(int degree) const;
  // x -> s x
  UniSeries scaled_argument(const Rational& s) const;

  friend bool operator==(const UniSeries&, const UniSeries&) = default;

 private:
  std::vector<Rational> c_;
};

UniSeries operator+(const UniSeries& a, const UniSeries& b);
UniSeries operator*(const UniSeries& a, const UniSeries& b);
// Requires b[0] != 0.
UniSeries operator/(const UniSeries& a, const UniSeries& b);

enum class Genus {
  Todd,           // x / (1 - e^{-x})
  SignatureHalf,  // (x/2) / tanh(x/2)
  AHat,           // (x/2) / sinh(x/2)
  L,              // x / tanh(x)
};

UniSeries genus_series(Genus kind, int degree);
// e^{s x}
UniSeries exp_series(const Rational& s, int degree);

using Exponent = std::vector<int>;

// Polynomial in `num_vars` variables with all monomials of total degree above
// `degree` discarded. Zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly(int num_vars, int degree) : m_(num_vars), d_(degree) {}

  static MultiPoly constant(int num_vars, int degree, const Rational& c);
  static MultiPoly variable(int num_vars, int degree, int i);

  int num_vars() const { return m_; }
  int degree() const { return d_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponent& e) const;
  // Adds c to the coefficient of e (dropped when above the truncation).
  void add_term(const Exponent& e, const Rational& c);
  MultiPoly homogeneous_part(int k) const;
  bool is_zero() const { return terms_.empty(); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  int m_;
  int d_;
  std::map<Exponent, Rational> terms_;
};

int total_degree(const Exponent& e);

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(MultiPoly a, const Rational& s);
MultiPoly operator*(const Rational& s, MultiPoly a);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

// g(v_i) as a polynomial in m variables.
MultiPoly substitute(const UniSeries& g, int num_vars, int var, int degree);
// prod_{i=1}^{m} g(v_i)
MultiPoly product_over_facets(const UniSeries& g, int num_vars, int degree);
// exp(sum_i c_i v_i)
MultiPoly exp_linear(const std::vector<Rational>& coeffs, int degree);
// All exponent vectors in num_vars variables of total degree k, ascending.
std::vector<Exponent> monomials_of_degree(int num_vars, int k);
// Elementary symmetric polynomial e_k(v_1, ..., v_m).
MultiPoly elementary_symmetric(int num_vars, int degree, int k);

}  // namespace toric
