#include "toric/series.hpp"

#include <numeric>

namespace toric {

namespace {

Rational factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

// sinh(x)/x, cosh(x) and (1 - e^{-x})/x as truncated series.
UniSeries sinh_over_x(int degree) {
  UniSeries s(degree);
  for (int k = 0; k <= degree; k += 2) s[k] = 1 / factorial(k + 1);
  return s;
}

UniSeries cosh_series(int degree) {
  UniSeries s(degree);
  for (int k = 0; k <= degree; k += 2) s[k] = 1 / factorial(k);
  return s;
}

UniSeries one_minus_exp_neg_over_x(int degree) {
  UniSeries s(degree);
  for (int k = 0; k <= degree; ++k) s[k] = (k % 2 == 0 ? 1 : -1) / factorial(k + 1);
  return s;
}

void check_shape(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars() != b.num_vars() || a.degree() != b.degree()) {
    throw ShapeError("polynomial shapes differ: (" + std::to_string(a.num_vars()) + " vars, deg " +
                     std::to_string(a.degree()) + ") vs (" + std::to_string(b.num_vars()) +
                     " vars, deg " + std::to_string(b.degree()) + ")");
  }
}

}  // namespace

UniSeries UniSeries::truncated(int degree) const {
  UniSeries out(degree);
  for (int k = 0; k <= std::min(degree, this->degree()); ++k) out[k] = c_[k];
  return out;
}

UniSeries UniSeries::scaled_argument(const Rational& s) const {
  UniSeries out(*this);
  Rational power = 1;
  for (int k = 0; k <= degree(); ++k) {
    out[k] *= power;
    power *= s;
  }
  return out;
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
  const int d = std::min(a.degree(), b.degree());
  UniSeries out(d);
  for (int i = 0; i <= d; ++i) out[i] = a[i] + b[i];
  return out;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  const int d = std::min(a.degree(), b.degree());
  UniSeries out(d);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

UniSeries operator/(const UniSeries& a, const UniSeries& b) {
  if (b[0] == 0) throw SingularError("series division by a series with zero constant term");
  const int d = std::min(a.degree(), b.degree());
  UniSeries q(d);
  for (int k = 0; k <= d; ++k) {
    Rational r = a[k];
    for (int j = 1; j <= k; ++j) r -= b[j] * q[k - j];
    q[k] = r / b[0];
  }
  return q;
}

UniSeries exp_series(const Rational& s, int degree) {
  UniSeries out(degree);
  Rational power = 1;
  for (int k = 0; k <= degree; ++k) {
    out[k] = power / factorial(k);
    power *= s;
  }
  return out;
}

UniSeries genus_series(Genus kind, int degree) {
  if (degree < 0) throw DimensionError("genus_series: negative degree");
  UniSeries one(degree);
  one[0] = 1;
  switch (kind) {
    case Genus::Todd:
      return one / one_minus_exp_neg_over_x(degree);
    case Genus::L:
      return cosh_series(degree) / sinh_over_x(degree);
    case Genus::SignatureHalf:
      return (cosh_series(degree) / sinh_over_x(degree)).scaled_argument(Rational(1, 2));
    case Genus::AHat:
      return (one / sinh_over_x(degree)).scaled_argument(Rational(1, 2));
  }
  throw DimensionError("genus_series: unknown genus");
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

MultiPoly MultiPoly::constant(int num_vars, int degree, const Rational& c) {
  MultiPoly p(num_vars, degree);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int num_vars, int degree, int i) {
  MultiPoly p(num_vars, degree);
  Exponent e(num_vars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != m_) throw ShapeError("exponent length mismatch");
  if (c == 0 || total_degree(e) > d_) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::homogeneous_part(int k) const {
  MultiPoly out(m_, d_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == k) out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_shape(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_shape(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_shape(a, b);
  MultiPoly out(a.num_vars(), a.degree());
  Exponent e(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) > a.degree()) continue;
      for (int i = 0; i < a.num_vars(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly substitute(const UniSeries& g, int num_vars, int var, int degree) {
  MultiPoly out(num_vars, degree);
  Exponent e(num_vars, 0);
  for (int k = 0; k <= std::min(degree, g.degree()); ++k) {
    e[var] = k;
    out.add_term(e, g[k]);
  }
  return out;
}

MultiPoly product_over_facets(const UniSeries& g, int num_vars, int degree) {
  if (g[0] != 1) throw ShapeError("product_over_facets: series must have constant term 1");
  MultiPoly out = MultiPoly::constant(num_vars, degree, 1);
  for (int i = 0; i < num_vars; ++i) out = out * substitute(g, num_vars, i, degree);
  return out;
}

MultiPoly exp_linear(const std::vector<Rational>& coeffs, int degree) {
  const int m = static_cast<int>(coeffs.size());
  MultiPoly out = MultiPoly::constant(m, degree, 1);
  for (int i = 0; i < m; ++i) {
    if (coeffs[i] == 0) continue;
    out = out * substitute(exp_series(coeffs[i], degree), m, i, degree);
  }
  return out;
}

std::vector<Exponent> monomials_of_degree(int num_vars, int k) {
  std::vector<Exponent> out;
  Exponent e(num_vars, 0);
  // Fill positions left to right with every split of the remaining degree.
  auto rec = [&](auto& self, int pos, int remaining) -> void {
    if (pos == num_vars - 1) {
      e[pos] = remaining;
      out.push_back(e);
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      e[pos] = d;
      self(self, pos + 1, remaining - d);
    }
  };
  if (num_vars > 0) rec(rec, 0, k);
  return out;
}

MultiPoly elementary_symmetric(int num_vars, int degree, int k) {
  MultiPoly out(num_vars, degree);
  if (k > num_vars) return out;
  Exponent e(num_vars, 0);
  // Walk all 0/1 exponent vectors with k ones.
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::fill(e.begin(), e.end(), 0);
    for (int i : idx) e[i] = 1;
    out.add_term(e, 1);
    int i = k - 1;
    while (i >= 0 && idx[i] == num_vars - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace toric
