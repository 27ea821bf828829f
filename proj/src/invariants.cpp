#include "toric/invariants.hpp"

#include <algorithm>

namespace toric {

namespace {

std::vector<std::int64_t> to_ints(const GenericVector& u) {
  std::vector<std::int64_t> out;
  for (Eigen::Index i = 0; i < u.u.size(); ++i) out.push_back(u.u(i).convert_to<std::int64_t>());
  return out;
}

std::string facet_key(const std::vector<int>& facets) {
  std::string s = "face{";
  for (std::size_t i = 0; i < facets.size(); ++i) s += (i ? "," : "") + std::to_string(facets[i]);
  return s + "}";
}

MultiPoly twisted_class(const ToricManifold& tm, Genus genus) {
  const int n = tm.dim();
  const int m = tm.num_facets();
  return exp_series_of_kahler(tm.polytope()) * product_over_facets(genus_series(genus, n), m, n);
}

}  // namespace

MultiPoly kahler_class(const HPolytope& p) {
  MultiPoly w(p.num_facets(), p.dim());
  for (int i = 0; i < p.num_facets(); ++i) {
    Exponent e(p.num_facets(), 0);
    e[i] = 1;
    w.add_term(e, -Rational(p.offset(i)));
  }
  return w;
}

MultiPoly exp_series_of_kahler(const HPolytope& p) {
  std::vector<Rational> coeffs;
  for (int i = 0; i < p.num_facets(); ++i) coeffs.push_back(-Rational(p.offset(i)));
  return exp_linear(coeffs, p.dim());
}

Rational twisted_todd(const ToricManifold& tm, const GenericVector& u) {
  return integrate_poly(tm, twisted_class(tm, Genus::Todd), u);
}

Rational twisted_todd(const ToricManifold& tm) { return twisted_todd(tm, choose_generic(tm.charts())); }

Rational twisted_signature(const ToricManifold& tm, const GenericVector& u) {
  return integrate_poly(tm, twisted_class(tm, Genus::SignatureHalf), u);
}

Rational twisted_signature(const ToricManifold& tm) {
  return twisted_signature(tm, choose_generic(tm.charts()));
}

Rational signature_genus_term(const ToricManifold& tm, const GenericVector& u) {
  const int n = tm.dim();
  return integrate_poly(tm, product_over_facets(genus_series(Genus::SignatureHalf, n), tm.num_facets(), n), u);
}

Rational volume_by_localization(const ToricManifold& tm, const GenericVector& u) {
  const int n = tm.dim();
  return integrate_poly(tm, exp_series_of_kahler(tm.polytope()).homogeneous_part(n), u);
}

std::pair<GenericVector, GenericVector> generic_pair(const ToricManifold& tm, const CheckOptions& opts) {
  GenericVector first = choose_generic(tm.charts());
  if (opts.u) {
    if (opts.u->u.size() != tm.dim()) {
      throw DimensionError("generic vector has length " + std::to_string(opts.u->u.size()) +
                           ", expected " + std::to_string(tm.dim()));
    }
    if (!is_generic(tm.charts(), *opts.u)) {
      throw GenericityError("supplied vector is orthogonal to some mu row");
    }
    first = *opts.u;
  }
  for (int k = 0;; ++k) {
    GenericVector second = choose_generic(tm.charts(), k);
    if (!(second == first)) return {first, second};
  }
}

Report check_pick(const HPolytope& p, const CheckOptions& opts) {
  const ToricManifold tm(p);
  const int n = tm.dim();
  const auto fl = face_lattice(p, tm.charts());
  const auto fc = count_points(p, tm.charts(), fl);
  const auto [u1, u2] = generic_pair(tm, opts);

  const MultiPoly f = twisted_class(tm, Genus::SignatureHalf);
  const Integral at_u1 = integrate_poly_detailed(tm, f, u1);
  const Rational at_u2 = integrate_poly(tm, f, u2);

  Report r;
  r.identity = "pick";
  r.polytope = p.name();
  r.lhs = at_u1.value;
  r.rhs = weighted_sum_closed(fc);
  const Rational relint = weighted_sum_relint(fc);
  r.holds = r.lhs == r.rhs && at_u2 == r.lhs && relint == r.rhs;
  r.generic_vectors = {to_ints(u1), to_ints(u2)};

  const Rational volume_term = volume_by_localization(tm, u1);
  const Rational constant_term = signature_genus_term(tm, u1);
  r.breakdown["lhs.u1"] = at_u1.value;
  r.breakdown["lhs.u2"] = at_u2;
  r.breakdown["lhs.volume_term"] = volume_term;
  r.breakdown["lhs.constant_term"] = constant_term;
  r.breakdown["lhs.mixed_terms"] = at_u1.value - volume_term - constant_term;
  r.breakdown["rhs.closed"] = r.rhs;
  r.breakdown["rhs.relint"] = relint;
  for (int k = 0; k <= n; ++k) {
    r.breakdown["closed.dim" + std::to_string(k)] = fc.closed_in_dim(k);
    r.breakdown["relint.dim" + std::to_string(k)] = fc.relint_in_dim(k);
  }
  for (std::size_t v = 0; v < at_u1.per_vertex.size(); ++v) {
    r.breakdown["vertex" + std::to_string(v)] = at_u1.per_vertex[v];
  }
  if (n == 2) {
    const Rational interior = fc.relint_in_dim(2);
    const Rational boundary = fc.total() - fc.relint_in_dim(2);
    const Rational m = p.num_facets();
    r.breakdown["pick2d.area"] = volume_term;
    r.breakdown["pick2d.interior"] = interior;
    r.breakdown["pick2d.boundary"] = boundary;
    r.breakdown["pick2d.classical_rhs"] = interior + boundary / 2 - 1;
    r.breakdown["pick2d.expected_constant_term"] = (4 - m) / 4;
  }
  return r;
}

Report check_todd(const HPolytope& p, const CheckOptions& opts) {
  const ToricManifold tm(p);
  const auto [u1, u2] = generic_pair(tm, opts);
  const auto fc = count_points(p, tm.charts(), face_lattice(p, tm.charts()));
  Report r;
  r.identity = "todd";
  r.polytope = p.name();
  r.lhs = twisted_todd(tm, u1);
  r.rhs = fc.total();
  const Rational second = twisted_todd(tm, u2);
  r.holds = r.lhs == r.rhs && second == r.lhs;
  r.breakdown["lhs.u1"] = r.lhs;
  r.breakdown["lhs.u2"] = second;
  r.generic_vectors = {to_ints(u1), to_ints(u2)};
  return r;
}

Report check_face_todd(const HPolytope& p, const CheckOptions& opts) {
  const ToricManifold tm(p);
  const auto fl = face_lattice(p, tm.charts());
  const auto fc = count_points(p, tm.charts(), fl);
  const auto [u1, u2] = generic_pair(tm, opts);
  Report r;
  r.identity = "face-todd";
  r.polytope = p.name();
  r.holds = true;
  r.generic_vectors = {to_ints(u1)};
  for (std::size_t f = 0; f < fl.faces().size(); ++f) {
    const Face& face = fl.face(static_cast<int>(f));
    Rational todd;
    if (face.dim == 0) {
      todd = 1;
    } else if (face.dim == tm.dim()) {
      todd = twisted_todd(tm, u1);
    } else {
      const auto chart = induce_face_polytope(p, tm.charts(), fl, static_cast<int>(f));
      todd = twisted_todd(ToricManifold(chart.polytope));
    }
    const Rational count = fc.faces[f].closed;
    const std::string key = facet_key(face.facets);
    r.breakdown[key + ".todd"] = todd;
    r.breakdown[key + ".count"] = count;
    r.lhs += todd;
    r.rhs += count;
    if (todd != count) r.holds = false;
  }
  return r;
}

Report check_untwisted_signature(const HPolytope& p, const CheckOptions& opts) {
  const ToricManifold tm(p);
  const int n = tm.dim();
  const auto fl = face_lattice(p, tm.charts());
  const auto [u1, u2] = generic_pair(tm, opts);
  const HVector h = h_vector(fl);
  Report r;
  r.identity = "signature";
  r.polytope = p.name();
  r.lhs = signature_genus_term(tm, u1);
  const Rational sigma = signature_from_h(h);
  r.rhs = sigma / Rational(BigInt(1) << n);
  const Rational second = signature_genus_term(tm, u2);
  r.holds = r.lhs == r.rhs && second == r.lhs;
  r.breakdown["lhs.u2"] = second;
  r.breakdown["signature"] = sigma;
  r.breakdown["signature.from_h_at_minus_1"] = (n % 2 == 0 ? 1 : -1) * h.evaluate(-1);
  for (std::size_t i = 0; i < h.h.size(); ++i) r.breakdown["h" + std::to_string(i)] = h.h[i];
  if (n == 2) r.breakdown["signature.four_minus_m"] = 4 - p.num_facets();
  r.generic_vectors = {to_ints(u1), to_ints(u2)};
  return r;
}

Report check_tetrahedron(const HPolytope& p) {
  if (p.dim() != 3 || p.num_facets() != 4) {
    throw ShapeError("tetrahedron check needs a 3-polytope with 4 facets, got dimension " +
                     std::to_string(p.dim()) + " with " + std::to_string(p.num_facets()) + " facets");
  }
  const ToricManifold tm(p);
  const auto fl = face_lattice(p, tm.charts());
  const auto fc = count_points(p, tm.charts(), fl);
  Report r;
  r.identity = "tetrahedron";
  r.polytope = p.name();
  r.lhs = pick_rhs_3d(fc);
  const Rational vol = volume(p, tm.charts(), fl);
  Rational offsets = 0;
  for (int j = 0; j < 4; ++j) offsets += Rational(p.offset(j));
  r.rhs = vol - offsets / 3;
  r.holds = r.lhs == r.rhs;
  r.breakdown["Int"] = fc.relint_in_dim(3);
  r.breakdown["Fac"] = fc.relint_in_dim(2);
  r.breakdown["Edg"] = fc.relint_in_dim(1);
  r.breakdown["Vert"] = fc.relint_in_dim(0);
  r.breakdown["volume"] = vol;
  r.breakdown["offset_sum"] = offsets;
  return r;
}

Report check_u_independence(const HPolytope& p, const CheckOptions& opts) {
  const ToricManifold tm(p);
  const int n = tm.dim();
  const auto [u1, u2] = generic_pair(tm, opts);
  Report r;
  r.identity = "u-independence";
  r.polytope = p.name();
  r.generic_vectors = {to_ints(u1), to_ints(u2)};
  long compared = 0;
  long agreeing = 0;
  auto compare = [&](const std::string& key, const Rational& a, const Rational& b) {
    ++compared;
    if (a == b) {
      ++agreeing;
    } else {
      r.breakdown[key + ".u1"] = a;
      r.breakdown[key + ".u2"] = b;
    }
  };
  for (const auto& e : monomials_of_degree(tm.num_facets(), n)) {
    std::string key = "monomial(";
    for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
    compare(key + ")", integrate_monomial(tm, e, u1), integrate_monomial(tm, e, u2));
  }
  compare("twisted_todd", twisted_todd(tm, u1), twisted_todd(tm, u2));
  compare("twisted_signature", twisted_signature(tm, u1), twisted_signature(tm, u2));
  for (const auto& w : partitions_of(n)) {
    std::string key = "chern(";
    for (std::size_t i = 0; i < w.parts.size(); ++i) key += (i ? "," : "") + std::to_string(w.parts[i]);
    compare(key + ")", chern_number(tm, w, u1), chern_number(tm, w, u2));
  }
  r.lhs = compared;
  r.rhs = agreeing;
  r.holds = compared == agreeing;
  r.breakdown["compared"] = compared;
  r.breakdown["agreeing"] = agreeing;
  return r;
}

}  // namespace toric
