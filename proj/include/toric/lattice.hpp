#pragma once

// Brute-force lattice point counts per face and the weighted face sums built
// from them. Deliberately shares no machinery with the localization code.

#include "toric/polytope.hpp"

#include <cstdint>
#include <vector>

namespace toric {

struct FaceCount {
  int face = 0;
  int dim = 0;
  std::int64_t closed = 0;  // points in the closed face
  std::int64_t relint = 0;  // points in the relative interior
};

struct FaceCounts {
  int dim = 0;
  std::vector<FaceCount> faces;  // indexed like FaceLattice::faces()
  int top = 0;                   // index of P itself

  std::int64_t total() const { return faces[top].closed; }
  std::int64_t closed_in_dim(int k) const;
  std::int64_t relint_in_dim(int k) const;
};

// Enumerates every integer point of the bounding box and files it under the
// face cut out by its tight inequalities.
FaceCounts count_points(const HPolytope& p, const std::vector<VertexChart>& charts,
                        const FaceLattice& fl);
FaceCounts count_points(const HPolytope& p);

// #(P cap Z^n) + sum_k (-1/2)^k sum_{dim F = n-k} #(F cap Z^n)
Rational weighted_sum_closed(const FaceCounts& fc);
// #relint(P) + sum_k (1/2)^k sum_{dim F = n-k} #relint(F)
Rational weighted_sum_relint(const FaceCounts& fc);
// Int + Fac/2 + Edg/4 + Vert/8 for a 3-polytope.
Rational pick_rhs_3d(const FaceCounts& fc);

}  // namespace toric
