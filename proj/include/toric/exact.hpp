#pragma once

// Exact integer/rational scalars and small dense linear algebra over them.
// Matrices are plain Eigen dense types; the algorithms never divide inexactly.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

// Error hierarchy shared by the whole library. `kind()` is a stable tag used by
// the command line front end to pick an exit code and by tests.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error("dimension", what) {}
};

struct SingularError : Error {
  explicit SingularError(const std::string& what) : Error("singular", what) {}
};

struct NotUnimodularError : Error {
  NotUnimodularError(BigInt d, const std::string& what)
      : Error("not-unimodular", what), det(std::move(d)) {}
  BigInt det;
};

// Canonical "num/den" rendering, denominator omitted when 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
// Inverse of to_string; also accepts plain integers. Throws Error("parse").
Rational parse_rational(std::string_view text);

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }
inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

BigInt gcd(const BigInt& a, const BigInt& b);
// Floor and ceiling of an exact rational.
BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

// Fraction-free (Bareiss) determinant. Exact for integer and rational scalars.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw DimensionError("det: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign > 0 ? Scalar(a(n - 1, n - 1)) : Scalar(-a(n - 1, n - 1));
}

// Rank over the rationals.
Eigen::Index rank(const RatMatrix& m);
inline Eigen::Index rank(const IntMatrix& m) { return rank(RatMatrix(m.cast<Rational>())); }

// Integer inverse of a matrix with determinant +-1, satisfying inv * m = I.
IntMatrix inverse_unimodular(const IntMatrix& m);

// Exact solution of a x = b for nonsingular a.
RatVector solve_rational(const RatMatrix& a, const RatVector& b);
inline RatVector solve_rational(const IntMatrix& a, const IntVector& b) {
  return solve_rational(RatMatrix(a.cast<Rational>()), RatVector(b.cast<Rational>()));
}

// Basis of the integer kernel {x in Z^n : a x = 0} as columns, saturated in Z^n,
// brought to column Hermite normal form so the output is canonical.
IntMatrix integer_kernel(const IntMatrix& a);

// Column-style Hermite normal form of a full-column-rank integer matrix: the
// lattice spanned by the columns is preserved.
IntMatrix column_hermite_form(const IntMatrix& basis);

}  // namespace toric
