#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colp/error.hpp"
#include "colp/linear_algebra.hpp"

namespace colp {

// A face is a bitmask over the vertex list (at most 64 vertices).
using Face = std::uint64_t;

inline int face_size(Face f) { return __builtin_popcountll(f); }

// A finite simplicial complex given by its facets. No facets at all is the
// void complex; the single facet 0 is {emptyset}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Drops non-maximal facets. Vertices may be unused by every facet.
  SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> facets);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  int dim() const;  // -2 for the void complex
  bool is_pure() const;
  bool contains(Face f) const;
  Face used_vertices() const;

  // All faces, including the empty face, sorted by (size, mask).
  std::vector<Face> faces(std::size_t cap = default_guards().faces) const;

  std::string face_to_string(Face f) const;  // {(p,1),(q,3)}
  std::string to_string() const;            // one facet per line

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Face> facets_;  // sorted ascending
};

SimplicialComplex link(const SimplicialComplex& d, Face f);
// Vertex lists are concatenated; labels must be disjoint.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
// Codimension-one faces lying in exactly one facet, with their subsets.
// Throws InputError unless the complex is pure.
SimplicialComplex boundary(const SimplicialComplex& d);
// The full simplex on `vertices` and its boundary.
SimplicialComplex simplex(std::vector<std::string> vertices);
SimplicialComplex simplex_boundary(std::vector<std::string> vertices);

// out[i] = dim H~_{i-1}, for i - 1 = -1 .. dim. Empty for the void complex.
std::vector<std::size_t> reduced_homology(const SimplicialComplex& d, FieldChoice field = FieldChoice::rational(),
                                          std::size_t face_cap = default_guards().faces);
// Same, from a downward-closed face list (must contain the empty face unless empty).
std::vector<std::size_t> reduced_homology_of_faces(const std::vector<Face>& faces, FieldChoice field);

// H~ concentrated in degree `dim`, with dimension 1 there.
bool has_sphere_homology(const std::vector<std::size_t>& h, int dim);
bool has_zero_homology(const std::vector<std::size_t>& h);

}  // namespace colp
