#pragma once

// Identity checks tying the enumeration side (lattice points, h-vector,
// triangulated volume) to the localization side (twisted genera).

#include "toric/lattice.hpp"
#include "toric/localization.hpp"
#include "toric/report.hpp"

#include <optional>

namespace toric {

// w_P = -sum_i a_i v_i, truncated at degree n.
MultiPoly kahler_class(const HPolytope& p);

// exp(w_P) truncated at degree n.
MultiPoly exp_series_of_kahler(const HPolytope& p);

// <exp(w_P) prod Td(v_i), [M_P]>
Rational twisted_todd(const ToricManifold& tm, const GenericVector& u);
Rational twisted_todd(const ToricManifold& tm);
// <exp(w_P) prod (v_i/2)/tanh(v_i/2), [M_P]>
Rational twisted_signature(const ToricManifold& tm, const GenericVector& u);
Rational twisted_signature(const ToricManifold& tm);
// <prod (v_i/2)/tanh(v_i/2), [M_P]>, the part without the Kahler factor.
Rational signature_genus_term(const ToricManifold& tm, const GenericVector& u);
// <w_P^n / n!, [M_P]>
Rational volume_by_localization(const ToricManifold& tm, const GenericVector& u);

struct CheckOptions {
  // Replaces the first automatically chosen generic vector.
  std::optional<GenericVector> u;
};

// The two generic vectors a check evaluates at: the override (if any) or the
// first policy vector, and a different policy vector.
std::pair<GenericVector, GenericVector> generic_pair(const ToricManifold& tm, const CheckOptions& opts);

// Twisted signature vs. the (-1/2)^k weighted closed-face lattice sum.
Report check_pick(const HPolytope& p, const CheckOptions& opts = {});
// Twisted Todd genus vs. the lattice point count.
Report check_todd(const HPolytope& p, const CheckOptions& opts = {});
// Twisted Todd genus of every face (in its own lattice) vs. its closed count.
Report check_face_todd(const HPolytope& p, const CheckOptions& opts = {});
// Genus term without the Kahler factor vs. (-1)^n h_P(-1) / 2^n.
Report check_untwisted_signature(const HPolytope& p, const CheckOptions& opts = {});
// Int + Fac/2 + Edg/4 + Vert/8 vs. Vol(P) - sum_j a_j / 3 for a tetrahedron.
Report check_tetrahedron(const HPolytope& p);
// Every degree-n monomial integral, both twisted genera and all Chern numbers
// agree at two generic vectors.
Report check_u_independence(const HPolytope& p, const CheckOptions& opts = {});

}  // namespace toric
