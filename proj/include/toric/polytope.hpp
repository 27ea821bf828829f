#pragma once

// Lattice polytopes given by inequalities <x, normal_i> >= offset_i, together
// with their vertex charts, face lattice and basic combinatorial invariants.

#include "toric/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toric {

struct PolytopeError : Error {
  PolytopeError(std::string kind, const std::string& what) : Error(std::move(kind), what) {}
};

// Inequality system with primitive integer normals (one per row) and integer
// offsets. The facet order is significant: facet i is the divisor class v_i.
class HPolytope {
 public:
  HPolytope(IntMatrix normals, IntVector offsets, std::string name = {});

  int dim() const { return static_cast<int>(normals_.cols()); }
  int num_facets() const { return static_cast<int>(normals_.rows()); }
  const IntMatrix& normals() const { return normals_; }
  const IntVector& offsets() const { return offsets_; }
  IntVector normal(int i) const { return normals_.row(i).transpose(); }
  const BigInt& offset(int i) const { return offsets_(i); }
  const std::string& name() const { return name_; }

  friend bool operator==(const HPolytope& a, const HPolytope& b) {
    return a.normals_ == b.normals_ && a.offsets_ == b.offsets_ && a.name_ == b.name_;
  }

 private:
  IntMatrix normals_;
  IntVector offsets_;
  std::string name_;
};

// Convenience constructor from nested integer lists.
HPolytope make_polytope(const std::vector<std::vector<long>>& normals,
                        const std::vector<long>& offsets, std::string name = {});

// Data attached to a vertex p = F_{i_1} cap ... cap F_{i_n}.
struct VertexChart {
  RatVector point;
  std::vector<int> facets;  // ascending
  IntMatrix lambda;         // column j is the normal of facets[j]
  BigInt det;               // det(lambda)
  IntMatrix mu;             // lambda^{-1}; empty unless |det| = 1. Row j is mu_{p, facets[j]}

  bool unimodular() const { return det == 1 || det == -1; }
  // Position of `facet` among the incident facets, or -1.
  int local_index(int facet) const;
};

// Vertex enumeration over all n-subsets of facets. Throws PolytopeError with
// kind "unbounded", "empty", "not-simple" or "redundant".
std::vector<VertexChart> enumerate_vertices(const HPolytope& p);

// True iff the normals' recession cone is trivial.
bool is_bounded(const HPolytope& p);

struct DelzantVerdict {
  bool delzant = true;
  std::optional<int> vertex;  // first offending vertex
  RatVector point;
  BigInt det;
  std::string message;
};

DelzantVerdict is_delzant(const HPolytope& p);
DelzantVerdict is_delzant(const std::vector<VertexChart>& charts);

struct Face {
  std::vector<int> facets;    // facet indices whose intersection is the face
  int dim = 0;
  std::vector<int> vertices;  // vertex indices in the closure
};

class FaceLattice {
 public:
  FaceLattice(int dim, std::vector<Face> faces);

  int dim() const { return dim_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int i) const { return faces_[i]; }
  const std::vector<int>& faces_of_dim(int k) const { return by_dim_[k]; }
  // Faces G with G <= F, including F itself.
  const std::vector<int>& closure(int f) const { return closure_[f]; }
  bool contains(int f, int g) const;
  // Index of the face cut out exactly by this facet set, or -1.
  int find_by_facets(const std::vector<int>& facets) const;
  int top() const { return by_dim_[dim_].front(); }
  std::vector<long> f_vector() const;

 private:
  int dim_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<std::vector<int>> closure_;
  std::map<std::vector<int>, int> by_facets_;
};

FaceLattice face_lattice(const HPolytope& p, const std::vector<VertexChart>& charts);
FaceLattice face_lattice(const HPolytope& p);

// h_P(t) = sum_i f_i (t - 1)^i; h[0] is the coefficient of t^n.
struct HVector {
  std::vector<BigInt> h;
  int dim() const { return static_cast<int>(h.size()) - 1; }
  // Evaluates h_P(t) = h_0 t^n + ... + h_n.
  Rational evaluate(const Rational& t) const;
};

HVector h_vector(const FaceLattice& fl);
Rational signature_from_h(const HVector& h);

// Euclidean volume from a fan triangulation (recursive over faces).
Rational volume(const HPolytope& p, const std::vector<VertexChart>& charts, const FaceLattice& fl);
Rational volume(const HPolytope& p);

// Simplices (as lists of vertex indices) of the fan triangulation used by volume().
std::vector<std::vector<int>> fan_triangulation(const FaceLattice& fl, int face);

// A face expressed in its own lattice: points of the face are base + basis * t,
// t in Z^k, and `polytope` is the inequality system on t.
struct FaceChart {
  HPolytope polytope;
  IntVector base;
  IntMatrix basis;          // n x k, column Hermite form
  std::vector<int> facets;  // original facet index of each chart facet
};

FaceChart induce_face_polytope(const HPolytope& p, const std::vector<VertexChart>& charts,
                               const FaceLattice& fl, int face);

// Image of p under x -> U x + t for U in GL(n, Z).
HPolytope transform_unimodular(const HPolytope& p, const IntMatrix& u, const IntVector& t);

}  // namespace toric
