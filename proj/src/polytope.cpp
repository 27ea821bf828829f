#include "toric/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

namespace {

std::string format_point(const RatVector& x) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += to_string(x(i));
  }
  return s + ")";
}

std::string format_set(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// Calls `visit` on every k-subset of {0..m-1} in lexicographic order.
template <typename Visit>
void for_each_subset(int m, int k, Visit&& visit) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > m) return;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

IntMatrix rows_of(const IntMatrix& m, const std::vector<int>& rows) {
  IntMatrix out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) out.row(r) = m.row(rows[r]);
  return out;
}

// Affine rank of a set of points.
Eigen::Index affine_rank(const std::vector<VertexChart>& charts, const std::vector<int>& verts) {
  if (verts.size() <= 1) return 0;
  const Eigen::Index n = charts[verts.front()].point.size();
  RatMatrix diffs(n, static_cast<Eigen::Index>(verts.size()) - 1);
  for (std::size_t j = 1; j < verts.size(); ++j) {
    diffs.col(j - 1) = charts[verts[j]].point - charts[verts.front()].point;
  }
  return rank(diffs);
}

}  // namespace

HPolytope::HPolytope(IntMatrix normals, IntVector offsets, std::string name)
    : normals_(std::move(normals)), offsets_(std::move(offsets)), name_(std::move(name)) {
  if (normals_.cols() < 1) throw PolytopeError("invalid", "polytope dimension must be at least 1");
  if (normals_.rows() != offsets_.size()) {
    throw PolytopeError("invalid", "got " + std::to_string(normals_.rows()) + " normals but " +
                                       std::to_string(offsets_.size()) + " offsets");
  }
  for (Eigen::Index i = 0; i < normals_.rows(); ++i) {
    BigInt g = 0;
    for (Eigen::Index j = 0; j < normals_.cols(); ++j) g = gcd(g, normals_(i, j));
    if (g == 0) throw PolytopeError("invalid", "facet " + std::to_string(i) + " has zero normal");
    if (g != 1) {
      throw PolytopeError("invalid", "facet " + std::to_string(i) +
                                         " normal is not primitive (gcd " + g.str() + ")");
    }
    for (Eigen::Index k = 0; k < i; ++k) {
      if (normals_.row(k) == normals_.row(i) && offsets_(k) == offsets_(i)) {
        throw PolytopeError("invalid", "facets " + std::to_string(k) + " and " +
                                           std::to_string(i) + " are duplicates");
      }
    }
  }
}

HPolytope make_polytope(const std::vector<std::vector<long>>& normals,
                        const std::vector<long>& offsets, std::string name) {
  const Eigen::Index m = static_cast<Eigen::Index>(normals.size());
  const Eigen::Index n = m ? static_cast<Eigen::Index>(normals.front().size()) : 0;
  IntMatrix nm(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (static_cast<Eigen::Index>(normals[i].size()) != n) {
      throw PolytopeError("invalid", "normals have inconsistent lengths");
    }
    for (Eigen::Index j = 0; j < n; ++j) nm(i, j) = normals[i][j];
  }
  IntVector off(static_cast<Eigen::Index>(offsets.size()));
  for (std::size_t i = 0; i < offsets.size(); ++i) off(i) = offsets[i];
  return HPolytope(std::move(nm), std::move(off), std::move(name));
}

int VertexChart::local_index(int facet) const {
  auto it = std::lower_bound(facets.begin(), facets.end(), facet);
  if (it == facets.end() || *it != facet) return -1;
  return static_cast<int>(it - facets.begin());
}

bool is_bounded(const HPolytope& p) {
  const int n = p.dim();
  const int m = p.num_facets();
  if (rank(p.normals()) < n) return false;
  bool bounded = true;
  for_each_subset(m, n - 1, [&](const std::vector<int>& rows) {
    if (!bounded) return;
    const IntMatrix r = rows_of(p.normals(), rows);
    if (n > 1 && rank(r) < n - 1) return;
    // Kernel direction of r by signed maximal minors.
    IntVector d(n);
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor.col(cc++) = r.col(c);
      }
      d(j) = (j % 2 == 0 ? 1 : -1) * det(minor);
    }
    const IntVector pairing = p.normals() * d;
    const bool forward = (pairing.array() >= 0).all();
    const bool backward = (pairing.array() <= 0).all();
    if (forward || backward) bounded = false;
  });
  return bounded;
}

std::vector<VertexChart> enumerate_vertices(const HPolytope& p) {
  const int n = p.dim();
  const int m = p.num_facets();
  if (!is_bounded(p)) {
    throw PolytopeError("unbounded", "polytope '" + p.name() + "' is unbounded");
  }
  std::vector<VertexChart> charts;
  for_each_subset(m, n, [&](const std::vector<int>& subset) {
    IntMatrix lambda(n, n);
    IntVector rhs(n);
    for (int j = 0; j < n; ++j) {
      lambda.col(j) = p.normal(subset[j]);
      rhs(j) = p.offset(subset[j]);
    }
    BigInt d = det(lambda);
    if (d == 0) return;
    RatVector x = solve_rational(IntMatrix(lambda.transpose()), rhs);
    const RatVector slack = p.normals().cast<Rational>() * x - p.offsets().cast<Rational>();
    for (int i = 0; i < m; ++i) {
      if (std::binary_search(subset.begin(), subset.end(), i)) continue;
      if (slack(i) < 0) return;
    }
    for (int i = 0; i < m; ++i) {
      if (std::binary_search(subset.begin(), subset.end(), i)) continue;
      if (slack(i) == 0) {
        throw PolytopeError("not-simple", "vertex " + format_point(x) + " of '" + p.name() +
                                              "' lies on more than " + std::to_string(n) +
                                              " facets");
      }
    }
    VertexChart chart;
    chart.point = std::move(x);
    chart.facets = subset;
    chart.lambda = std::move(lambda);
    chart.det = std::move(d);
    if (chart.unimodular()) chart.mu = inverse_unimodular(chart.lambda);
    charts.push_back(std::move(chart));
  });
  if (charts.empty()) {
    throw PolytopeError("empty", "polytope '" + p.name() + "' has no vertices");
  }
  for (int i = 0; i < m; ++i) {
    std::vector<int> on_facet;
    for (std::size_t v = 0; v < charts.size(); ++v) {
      if (charts[v].local_index(i) >= 0) on_facet.push_back(static_cast<int>(v));
    }
    if (on_facet.empty() || affine_rank(charts, on_facet) != n - 1) {
      throw PolytopeError("redundant", "facet " + std::to_string(i) + " of '" + p.name() +
                                           "' does not support an (n-1)-dimensional face");
    }
  }
  return charts;
}

DelzantVerdict is_delzant(const std::vector<VertexChart>& charts) {
  DelzantVerdict verdict;
  for (std::size_t v = 0; v < charts.size(); ++v) {
    if (charts[v].unimodular()) continue;
    verdict.delzant = false;
    verdict.vertex = static_cast<int>(v);
    verdict.point = charts[v].point;
    verdict.det = charts[v].det;
    verdict.message = "not Delzant at vertex " + format_point(charts[v].point) +
                      ": det(Lambda) = " + charts[v].det.str();
    return verdict;
  }
  return verdict;
}

DelzantVerdict is_delzant(const HPolytope& p) { return is_delzant(enumerate_vertices(p)); }

FaceLattice::FaceLattice(int dim, std::vector<Face> faces)
    : dim_(dim), faces_(std::move(faces)), by_dim_(dim + 1), closure_(faces_.size()) {
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    by_dim_[faces_[f].dim].push_back(static_cast<int>(f));
    by_facets_.emplace(faces_[f].facets, static_cast<int>(f));
  }
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    for (std::size_t g = 0; g < faces_.size(); ++g) {
      if (contains(static_cast<int>(f), static_cast<int>(g))) {
        closure_[f].push_back(static_cast<int>(g));
      }
    }
  }
}

bool FaceLattice::contains(int f, int g) const {
  const auto& outer = faces_[f].facets;
  const auto& inner = faces_[g].facets;
  return std::includes(inner.begin(), inner.end(), outer.begin(), outer.end());
}

int FaceLattice::find_by_facets(const std::vector<int>& facets) const {
  auto it = by_facets_.find(facets);
  return it == by_facets_.end() ? -1 : it->second;
}

std::vector<long> FaceLattice::f_vector() const {
  std::vector<long> f;
  for (const auto& group : by_dim_) f.push_back(static_cast<long>(group.size()));
  return f;
}

FaceLattice face_lattice(const HPolytope& p, const std::vector<VertexChart>& charts) {
  const int n = p.dim();
  std::map<std::vector<int>, std::vector<int>> vertices_of;
  for (std::size_t v = 0; v < charts.size(); ++v) {
    const auto& fs = charts[v].facets;
    if (static_cast<int>(fs.size()) != n) {
      throw PolytopeError("not-simple", "vertex chart with wrong facet count");
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> subset;
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) subset.push_back(fs[j]);
      }
      vertices_of[subset].push_back(static_cast<int>(v));
    }
  }
  std::map<std::vector<int>, std::vector<int>> facets_of;
  for (auto& [facets, verts] : vertices_of) {
    const int dim = n - static_cast<int>(facets.size());
    if (affine_rank(charts, verts) != dim) {
      throw PolytopeError("not-simple", "facets " + format_set(facets) +
                                            " meet in a face of the wrong dimension");
    }
    auto [it, inserted] = facets_of.emplace(verts, facets);
    if (!inserted) {
      throw PolytopeError("not-simple", "two facet sets cut out the same face");
    }
  }
  std::vector<Face> faces;
  for (auto& [verts, facets] : facets_of) {
    faces.push_back(Face{facets, n - static_cast<int>(facets.size()), verts});
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return FaceLattice(n, std::move(faces));
}

FaceLattice face_lattice(const HPolytope& p) { return face_lattice(p, enumerate_vertices(p)); }

Rational HVector::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (const BigInt& c : h) acc = acc * t + Rational(c);
  return acc;
}

HVector h_vector(const FaceLattice& fl) {
  const int n = fl.dim();
  const auto f = fl.f_vector();
  // coeff[j] is the coefficient of t^j in sum_i f_i (t-1)^i.
  std::vector<BigInt> coeff(n + 1, BigInt(0));
  for (int i = 0; i <= n; ++i) {
    BigInt binom = 1;
    for (int j = 0; j <= i; ++j) {
      // C(i, j) (-1)^{i-j}
      coeff[j] += ((i - j) % 2 == 0 ? 1 : -1) * binom * f[i];
      binom = binom * (i - j) / (j + 1);
    }
  }
  HVector out;
  for (int k = 0; k <= n; ++k) out.h.push_back(coeff[n - k]);
  return out;
}

Rational signature_from_h(const HVector& h) {
  Rational s = 0;
  for (std::size_t i = 0; i < h.h.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * Rational(h.h[i]);
  return s;
}

std::vector<std::vector<int>> fan_triangulation(const FaceLattice& fl, int face) {
  const Face& f = fl.face(face);
  if (f.dim == 0) return {{f.vertices.front()}};
  const int apex = f.vertices.front();
  std::vector<std::vector<int>> simplices;
  for (int g : fl.closure(face)) {
    const Face& sub = fl.face(g);
    if (sub.dim != f.dim - 1) continue;
    if (std::binary_search(sub.vertices.begin(), sub.vertices.end(), apex)) continue;
    for (auto s : fan_triangulation(fl, g)) {
      s.insert(s.begin(), apex);
      simplices.push_back(std::move(s));
    }
  }
  return simplices;
}

Rational volume(const HPolytope& p, const std::vector<VertexChart>& charts, const FaceLattice& fl) {
  const int n = p.dim();
  BigInt factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  Rational total = 0;
  for (const auto& simplex : fan_triangulation(fl, fl.top())) {
    RatMatrix edges(n, n);
    for (int j = 0; j < n; ++j) {
      edges.col(j) = charts[simplex[j + 1]].point - charts[simplex[0]].point;
    }
    total += abs(det(edges));
  }
  return total / Rational(factorial);
}

Rational volume(const HPolytope& p) {
  const auto charts = enumerate_vertices(p);
  return volume(p, charts, face_lattice(p, charts));
}

FaceChart induce_face_polytope(const HPolytope& p, const std::vector<VertexChart>& charts,
                               const FaceLattice& fl, int face) {
  const Face& f = fl.face(face);
  const int n = p.dim();
  const int k = f.dim;
  if (k == 0) {
    throw DimensionError("induce_face_polytope: face is a vertex; use the vertex directly");
  }
  if (k == n) {
    return FaceChart{p, IntVector::Zero(n), IntMatrix::Identity(n, n), [&] {
                       std::vector<int> all(p.num_facets());
                       std::iota(all.begin(), all.end(), 0);
                       return all;
                     }()};
  }
  const IntMatrix basis = integer_kernel(rows_of(p.normals(), f.facets));
  if (basis.cols() != k) throw PolytopeError("not-simple", "face direction lattice has wrong rank");

  const RatVector& origin = charts[f.vertices.front()].point;
  IntVector base(n);
  for (int i = 0; i < n; ++i) {
    if (!is_integer(origin(i))) {
      throw PolytopeError("non-lattice", "face base point " + format_point(origin) +
                                             " is not a lattice point");
    }
    base(i) = numerator(origin(i));
  }

  std::vector<int> sub_facets;
  for (int g : fl.closure(face)) {
    const Face& sub = fl.face(g);
    if (sub.dim != k - 1) continue;
    for (int j : sub.facets) {
      if (!std::binary_search(f.facets.begin(), f.facets.end(), j)) sub_facets.push_back(j);
    }
  }
  std::sort(sub_facets.begin(), sub_facets.end());

  IntMatrix normals(static_cast<Eigen::Index>(sub_facets.size()), k);
  IntVector offsets(static_cast<Eigen::Index>(sub_facets.size()));
  for (std::size_t r = 0; r < sub_facets.size(); ++r) {
    const int j = sub_facets[r];
    IntVector nu = basis.transpose() * p.normal(j);
    BigInt b = p.offset(j) - p.normal(j).dot(base);
    BigInt g = 0;
    for (Eigen::Index c = 0; c < k; ++c) g = gcd(g, nu(c));
    if (b % g != 0) {
      throw PolytopeError("non-lattice", "face facet offset is not integral in the face lattice");
    }
    normals.row(r) = (nu / g).transpose();
    offsets(r) = b / g;
  }
  std::string label = p.name() + "/face" + format_set(f.facets);
  return FaceChart{HPolytope(std::move(normals), std::move(offsets), std::move(label)), base, basis,
                   std::move(sub_facets)};
}

HPolytope transform_unimodular(const HPolytope& p, const IntMatrix& u, const IntVector& t) {
  const IntMatrix u_inv = inverse_unimodular(u);
  IntMatrix normals = p.normals() * u_inv;
  IntVector offsets = p.offsets() + normals * t;
  return HPolytope(std::move(normals), std::move(offsets), p.name());
}

}  // namespace toric
