#include "toric/exact.hpp"

#include <charconv>
#include <utility>

namespace toric {

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error("parse", "malformed rational '" + std::string(whole) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error("parse", "malformed rational '" + std::string(whole) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return BigInt(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error("parse", "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt floor(const Rational& q) {
  BigInt n = numerator(q);
  BigInt d = denominator(q);
  BigInt r = n / d;
  if (n % d != 0 && n < 0) r -= 1;
  return r;
}

BigInt ceil(const Rational& q) { return -floor(-q); }

Eigen::Index rank(const RatMatrix& m) {
  RatMatrix a = m;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.row(r).swap(a.row(piv));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

RatVector solve_rational(const RatMatrix& a, const RatVector& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw DimensionError("solve_rational: system is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " with rhs of size " +
                         std::to_string(b.size()));
  }
  RatMatrix aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && aug(piv, c) == 0) ++piv;
    if (piv == n) throw SingularError("solve_rational: singular system");
    aug.row(c).swap(aug.row(piv));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      const Rational f = aug(i, c) / aug(c, c);
      for (Eigen::Index j = c; j <= n; ++j) aug(i, j) -= f * aug(c, j);
    }
  }
  RatVector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = aug(i, n) / aug(i, i);
  return x;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("inverse_unimodular: matrix is not square");
  }
  const BigInt d = det(m);
  if (d != 1 && d != -1) {
    throw NotUnimodularError(d, "inverse_unimodular: determinant is " + d.str());
  }
  const Eigen::Index n = m.rows();
  const RatMatrix a = m.cast<Rational>();
  IntMatrix inv(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    RatVector e = RatVector::Zero(n);
    e(j) = 1;
    const RatVector col = solve_rational(a, e);
    for (Eigen::Index i = 0; i < n; ++i) inv(i, j) = numerator(col(i));
  }
  return inv;
}

namespace {

// Column operations on `a` (mirrored on `u`) that leave gcd(a(row,p), a(row,q))
// in column p and zero in column q.
void euclid_columns(IntMatrix& a, IntMatrix& u, Eigen::Index row, Eigen::Index p,
                    Eigen::Index q) {
  while (a(row, q) != 0) {
    const BigInt t = a(row, p) / a(row, q);
    a.col(p) -= t * a.col(q);
    u.col(p) -= t * u.col(q);
    a.col(p).swap(a.col(q));
    u.col(p).swap(u.col(q));
  }
}

}  // namespace

IntMatrix column_hermite_form(const IntMatrix& basis) {
  IntMatrix a = basis;
  IntMatrix u = IntMatrix::Identity(a.cols(), a.cols());
  Eigen::Index col = 0;
  for (Eigen::Index row = 0; row < a.rows() && col < a.cols(); ++row) {
    for (Eigen::Index j = col + 1; j < a.cols(); ++j) euclid_columns(a, u, row, col, j);
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) a.col(col) = -a.col(col);
    for (Eigen::Index j = 0; j < col; ++j) {
      const Rational ratio(a(row, j), a(row, col));
      const BigInt f = floor(ratio);
      a.col(j) -= f * a.col(col);
    }
    ++col;
  }
  if (col != a.cols()) throw SingularError("column_hermite_form: columns are dependent");
  return a;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  IntMatrix work = a;
  IntMatrix u = IntMatrix::Identity(a.cols(), a.cols());
  Eigen::Index col = 0;
  for (Eigen::Index row = 0; row < work.rows() && col < work.cols(); ++row) {
    for (Eigen::Index j = col + 1; j < work.cols(); ++j) euclid_columns(work, u, row, col, j);
    if (work(row, col) != 0) ++col;
  }
  const Eigen::Index k = a.cols() - col;
  if (k == 0) return IntMatrix(a.cols(), 0);
  return column_hermite_form(u.rightCols(k));
}

}  // namespace toric
