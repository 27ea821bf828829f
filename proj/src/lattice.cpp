#include "toric/lattice.hpp"

#include <algorithm>

namespace toric {

std::int64_t FaceCounts::closed_in_dim(int k) const {
  std::int64_t s = 0;
  for (const auto& f : faces) {
    if (f.dim == k) s += f.closed;
  }
  return s;
}

std::int64_t FaceCounts::relint_in_dim(int k) const {
  std::int64_t s = 0;
  for (const auto& f : faces) {
    if (f.dim == k) s += f.relint;
  }
  return s;
}

FaceCounts count_points(const HPolytope& p, const std::vector<VertexChart>& charts,
                        const FaceLattice& fl) {
  const int n = p.dim();
  const int m = p.num_facets();
  std::vector<std::int64_t> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    Rational mn = charts.front().point(i), mx = mn;
    for (const auto& c : charts) {
      mn = std::min(mn, c.point(i));
      mx = std::max(mx, c.point(i));
    }
    lo[i] = ceil(mn).convert_to<std::int64_t>();
    hi[i] = floor(mx).convert_to<std::int64_t>();
    if (lo[i] > hi[i]) throw PolytopeError("unbounded", "degenerate bounding box");
  }

  // Facet data as machine integers; corpus-scale inputs fit comfortably.
  std::vector<std::vector<std::int64_t>> normal(m, std::vector<std::int64_t>(n));
  std::vector<std::int64_t> offset(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) normal[i][j] = p.normals()(i, j).convert_to<std::int64_t>();
    offset[i] = p.offset(i).convert_to<std::int64_t>();
  }

  FaceCounts out;
  out.dim = n;
  out.top = fl.top();
  for (std::size_t f = 0; f < fl.faces().size(); ++f) {
    out.faces.push_back(FaceCount{static_cast<int>(f), fl.face(static_cast<int>(f)).dim, 0, 0});
  }

  std::vector<std::int64_t> x = lo;
  std::vector<int> tight;
  while (true) {
    tight.clear();
    bool inside = true;
    for (int i = 0; i < m && inside; ++i) {
      std::int64_t s = -offset[i];
      for (int j = 0; j < n; ++j) s += normal[i][j] * x[j];
      if (s < 0) inside = false;
      if (s == 0) tight.push_back(i);
    }
    if (inside) {
      const int f = fl.find_by_facets(tight);
      if (f < 0) throw PolytopeError("not-simple", "lattice point on an unexpected facet set");
      ++out.faces[f].relint;
    }
    int j = 0;
    while (j < n && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++x[j];
  }

  for (std::size_t f = 0; f < out.faces.size(); ++f) {
    for (int g : fl.closure(static_cast<int>(f))) out.faces[f].closed += out.faces[g].relint;
  }
  return out;
}

FaceCounts count_points(const HPolytope& p) {
  const auto charts = enumerate_vertices(p);
  return count_points(p, charts, face_lattice(p, charts));
}

Rational weighted_sum_closed(const FaceCounts& fc) {
  Rational sum = fc.total();
  Rational weight = 1;
  for (int k = 1; k <= fc.dim; ++k) {
    weight *= Rational(-1, 2);
    sum += weight * fc.closed_in_dim(fc.dim - k);
  }
  return sum;
}

Rational weighted_sum_relint(const FaceCounts& fc) {
  Rational sum = fc.relint_in_dim(fc.dim);
  Rational weight = 1;
  for (int k = 1; k <= fc.dim; ++k) {
    weight *= Rational(1, 2);
    sum += weight * fc.relint_in_dim(fc.dim - k);
  }
  return sum;
}

Rational pick_rhs_3d(const FaceCounts& fc) {
  if (fc.dim != 3) {
    throw DimensionError("pick_rhs_3d: polytope has dimension " + std::to_string(fc.dim));
  }
  return Rational(fc.relint_in_dim(3)) + Rational(fc.relint_in_dim(2), 2) +
         Rational(fc.relint_in_dim(1), 4) + Rational(fc.relint_in_dim(0), 8);
}

}  // namespace toric
