#include "toric/agw.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace toric {

namespace {

std::vector<int> canonical(std::vector<int> lambda) {
  lambda.erase(std::remove(lambda.begin(), lambda.end(), 0), lambda.end());
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return lambda;
}

int weight(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// Partitions with at most `max_len` parts and size at most `max_sum`.
std::vector<std::vector<int>> bounded_partitions(int max_sum, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(max_sum, max_sum);
  return out;
}

// All distinct rearrangements of lambda padded with zeros to length r.
std::vector<std::vector<int>> orbit(const std::vector<int>& lambda, int r) {
  std::vector<int> a(lambda);
  a.resize(r, 0);
  std::sort(a.begin(), a.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

std::string mono_name(const std::vector<int>& mono) {
  if (mono.empty()) return "1";
  std::map<int, int> counts;
  for (int k : mono) ++counts[k];
  std::string s;
  for (const auto& [k, e] : counts) {
    s += "p" + std::to_string(k);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// Unique solution of an exactly determined or consistent overdetermined system.
std::vector<Rational> solve_consistent(RatMatrix a, RatVector b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  std::vector<Eigen::Index> pivots;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    a.row(r).swap(a.row(piv));
    std::swap(b(r), b(piv));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      a.row(i) -= f * a.row(r);
      b(i) -= f * b(r);
    }
    pivots.push_back(c);
    ++r;
  }
  if (r != cols) throw SingularError("Pontryagin basis is degenerate for this root count");
  for (Eigen::Index i = r; i < rows; ++i) {
    if (b(i) != 0) throw Error("parity", "polynomial is not expressible in Pontryagin classes");
  }
  std::vector<Rational> x(cols);
  for (Eigen::Index i = 0; i < r; ++i) x[pivots[i]] = b(i) / a(i, pivots[i]);
  return x;
}

}  // namespace

Rational RootPoly::coefficient(const std::vector<int>& lambda) const {
  auto it = terms_.find(canonical(lambda));
  return it == terms_.end() ? Rational(0) : it->second;
}

void RootPoly::add_term(std::vector<int> lambda, const Rational& c) {
  lambda = canonical(std::move(lambda));
  if (static_cast<int>(lambda.size()) > r_) return;
  if (c == 0 || 2 * weight(lambda) > d_) return;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RootPoly RootPoly::homogeneous_part(int k) const {
  RootPoly out(r_, d_);
  for (const auto& [l, c] : terms_) {
    if (2 * weight(l) == k) out.terms_.emplace(l, c);
  }
  return out;
}

RootPoly& RootPoly::operator+=(const RootPoly& o) {
  if (r_ != o.r_ || d_ != o.d_) throw ShapeError("root polynomial shapes differ");
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

RootPoly& RootPoly::operator*=(const Rational& s) {
  if (s == 0) terms_.clear();
  for (auto& [l, c] : terms_) c *= s;
  return *this;
}

RootPoly operator+(RootPoly a, const RootPoly& b) { return a += b; }
RootPoly operator-(RootPoly a, const RootPoly& b) { return a += Rational(-1) * b; }
RootPoly operator*(const Rational& s, RootPoly a) { return a *= s; }

RootPoly operator*(const RootPoly& a, const RootPoly& b) {
  if (a.num_roots() != b.num_roots() || a.degree() != b.degree()) {
    throw ShapeError("root polynomial shapes differ");
  }
  const int r = a.num_roots();
  RootPoly out(r, a.degree());
  // The coefficient of m_nu counts pairs (alpha, beta) from the two orbits
  // whose sum is the weakly decreasing representative of nu.
  for (const auto& [la, ca] : a.terms()) {
    const auto oa = orbit(la, r);
    for (const auto& [lb, cb] : b.terms()) {
      if (2 * (weight(la) + weight(lb)) > a.degree()) continue;
      const auto ob = orbit(lb, r);
      std::map<std::vector<int>, long> hits;
      std::vector<int> s(r);
      for (const auto& alpha : oa) {
        for (const auto& beta : ob) {
          for (int i = 0; i < r; ++i) s[i] = alpha[i] + beta[i];
          if (std::is_sorted(s.begin(), s.end(), std::greater<>())) ++hits[s];
        }
      }
      for (const auto& [nu, count] : hits) out.add_term(nu, ca * cb * Rational(count));
    }
  }
  return out;
}

Rational PontryaginPoly::coefficient(std::vector<int> mono) const {
  std::sort(mono.begin(), mono.end(), std::greater<>());
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PontryaginPoly::add_term(std::vector<int> mono, const Rational& c) {
  std::sort(mono.begin(), mono.end(), std::greater<>());
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PontryaginPoly PontryaginPoly::homogeneous_part(int w) const {
  PontryaginPoly out;
  for (const auto& [m, c] : terms_) {
    if (weight(m) == w) out.add_term(m, c);
  }
  return out;
}

Rational PontryaginPoly::evaluate(const std::vector<Rational>& values) const {
  Rational sum = 0;
  for (const auto& [mono, c] : terms_) {
    Rational term = c;
    for (int k : mono) {
      if (k > static_cast<int>(values.size())) throw DimensionError("missing Pontryagin value");
      term *= values[k - 1];
    }
    sum += term;
  }
  return sum;
}

PontryaginPoly operator-(const PontryaginPoly& a, const PontryaginPoly& b) {
  PontryaginPoly out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
  return out;
}

PontryaginPoly operator*(const Rational& s, const PontryaginPoly& a) {
  PontryaginPoly out;
  for (const auto& [m, c] : a.terms()) out.add_term(m, s * c);
  return out;
}

std::string to_string(const PontryaginPoly& p) {
  if (p.terms().empty()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")" + (m.empty() ? "" : " " + mono_name(m));
  }
  return s;
}

RootPoly expand_genus_product(const UniSeries& g, int num_roots, int degree) {
  const int top = degree / 2;
  if (g.degree() < top) throw ShapeError("genus series is shorter than the requested degree");
  for (int k = 1; k <= top; k += 2) {
    if (g[k] != 0) throw Error("parity", "genus series has a nonzero odd coefficient at x^" + std::to_string(k));
  }
  RootPoly out(num_roots, degree);
  for (const auto& lambda : bounded_partitions(top, num_roots)) {
    Rational c = 1;
    for (int part : lambda) c *= g[part];
    for (int i = static_cast<int>(lambda.size()); i < num_roots; ++i) c *= g[0];
    out.add_term(lambda, c);
  }
  return out;
}

RootPoly twisted_ahat(int num_roots, int degree) {
  const int top = degree / 2;
  const UniSeries a = genus_series(Genus::AHat, top);
  const UniSeries twist = exp_series(1, top) + exp_series(-1, top);
  const UniSeries at = a * twist;
  RootPoly out(num_roots, degree);
  for (const auto& lambda : bounded_partitions(top, num_roots)) {
    std::vector<int> alpha(lambda);
    alpha.resize(num_roots, 0);
    Rational c = 0;
    for (int j = 0; j < num_roots; ++j) {
      Rational term = at[alpha[j]];
      for (int i = 0; i < num_roots; ++i) {
        if (i != j) term *= a[alpha[i]];
      }
      c += term;
    }
    out.add_term(lambda, c);
  }
  return out;
}

RootPoly pontryagin_class(int k, int num_roots, int degree) {
  RootPoly out(num_roots, degree);
  if (k == 0) {
    out.add_term({}, 1);
  } else if (k <= num_roots) {
    out.add_term(std::vector<int>(k, 2), 1);
  }
  return out;
}

namespace {

RootPoly expand_monomial(const std::vector<int>& mono, int num_roots, int degree) {
  RootPoly out = pontryagin_class(0, num_roots, degree);
  for (int k : mono) out = out * pontryagin_class(k, num_roots, degree);
  return out;
}

}  // namespace

PontryaginPoly to_pontryagin(const RootPoly& r) {
  for (const auto& [lambda, c] : r.terms()) {
    for (int part : lambda) {
      if (part % 2 != 0) {
        throw Error("parity", "root polynomial has a term with an odd exponent");
      }
    }
  }
  PontryaginPoly out;
  for (int w = 0; 4 * w <= r.degree(); ++w) {
    const RootPoly part = r.homogeneous_part(4 * w);
    std::vector<std::vector<int>> basis;
    for (const auto& mu : bounded_partitions(w, w)) {
      if (weight(mu) == w && (mu.empty() || mu.front() <= r.num_roots())) basis.push_back(mu);
    }
    std::vector<RootPoly> images;
    std::map<std::vector<int>, Eigen::Index> row_of;
    auto row = [&](const std::vector<int>& key) {
      return row_of.emplace(key, static_cast<Eigen::Index>(row_of.size())).first->second;
    };
    for (const auto& mu : basis) {
      images.push_back(expand_monomial(mu, r.num_roots(), r.degree()).homogeneous_part(4 * w));
      for (const auto& [key, c] : images.back().terms()) row(key);
    }
    for (const auto& [key, c] : part.terms()) row(key);
    RatMatrix a = RatMatrix::Zero(static_cast<Eigen::Index>(row_of.size()),
                                  static_cast<Eigen::Index>(basis.size()));
    RatVector b = RatVector::Zero(static_cast<Eigen::Index>(row_of.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (const auto& [key, c] : images[j].terms()) a(row_of.at(key), static_cast<Eigen::Index>(j)) = c;
    }
    for (const auto& [key, c] : part.terms()) b(row_of.at(key)) = c;
    const auto x = solve_consistent(a, b);
    for (std::size_t j = 0; j < basis.size(); ++j) out.add_term(basis[j], x[j]);
  }
  return out;
}

RootPoly from_pontryagin(const PontryaginPoly& p, int num_roots, int degree) {
  RootPoly out(num_roots, degree);
  for (const auto& [mono, c] : p.terms()) out += c * expand_monomial(mono, num_roots, degree);
  return out;
}

AgwParts agw_parts(int degree) {
  AgwParts parts;
  const int top = degree / 2;
  parts.l = to_pontryagin(expand_genus_product(genus_series(Genus::L, top), 6, degree));
  parts.t = to_pontryagin(twisted_ahat(6, degree));
  parts.a = to_pontryagin(expand_genus_product(genus_series(Genus::AHat, top), 6, degree));
  return parts;
}

Report verify_agw(const Rational& ahat_coefficient) {
  const AgwParts parts = agw_parts(12);
  const PontryaginPoly l12 = parts.l.homogeneous_part(3);
  const PontryaginPoly t12 = parts.t.homogeneous_part(3);
  const PontryaginPoly a12 = parts.a.homogeneous_part(3);
  const PontryaginPoly rhs = Rational(8) * t12 - ahat_coefficient * a12;

  Report r;
  r.identity = "agw";
  r.polytope = "";
  bool coefficientwise = true;
  for (const std::vector<int>& mono : {std::vector<int>{3}, {2, 1}, {1, 1, 1}}) {
    const std::string name = mono_name(mono);
    r.breakdown["L." + name] = l12.coefficient(mono);
    r.breakdown["T." + name] = t12.coefficient(mono);
    r.breakdown["Ahat." + name] = a12.coefficient(mono);
    r.breakdown["rhs." + name] = rhs.coefficient(mono);
    if (l12.coefficient(mono) != rhs.coefficient(mono)) coefficientwise = false;
  }
  // Anything outside {p3, p1p2, p1^3} would also have to match.
  if (!((l12 - rhs).terms().empty())) coefficientwise = false;

  std::mt19937 rng(12);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  long agreeing = 0;
  for (int i = 0; i < 10; ++i) {
    std::vector<Rational> point;
    for (int k = 0; k < 3; ++k) point.emplace_back(num(rng), den(rng));
    if (l12.evaluate(point) == rhs.evaluate(point)) ++agreeing;
  }
  r.breakdown["spot_checks_agreeing"] = agreeing;
  r.breakdown["ahat_coefficient"] = ahat_coefficient;

  // Lower-degree pieces, for information only.
  r.breakdown["info.deg4.L.p1"] = parts.l.coefficient({1});
  r.breakdown["info.deg4.T.p1"] = parts.t.coefficient({1});
  r.breakdown["info.deg4.Ahat.p1"] = parts.a.coefficient({1});
  r.breakdown["info.deg0.T"] = parts.t.coefficient({});

  const std::vector<Rational> ones(3, Rational(1));
  r.lhs = l12.evaluate(ones);
  r.rhs = rhs.evaluate(ones);
  r.holds = coefficientwise && agreeing == 10;
  return r;
}

}  // namespace toric
