#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colp/simplicial.hpp"
#include "colp/resolution.hpp"

namespace colp {

struct DeltaComplex {
  SimplicialComplex complex;                        // on V' = {(p_i, a) : a in B_i}
  std::vector<std::pair<std::size_t, int>> vertex;  // vertex index -> (element, letter)
  std::vector<std::vector<int>> b_sets;             // letters actually used by the ideal
  std::vector<std::string> discarded;               // vertices of V outside V' (cone points)
};

// Facets V' \ Gamma_f for f in the ideal, checked against the Alexander dual of L.
DeltaComplex delta_of(const PosetIdeal& ideal, const Guards& guards = default_guards());

struct HomologyCertificate {
  bool sphere = false;
  bool ball = false;
  std::size_t faces_checked = 0;
  SimplicialComplex boundary;
  std::vector<std::size_t> homology;  // reduced homology of the complex, index i = H~_{i-1}
  std::string failure;                // first violated condition, when neither holds
};

// Links of every face (including the empty face) against the homology sphere
// and homology ball definitions, with the boundary as the candidate for the
// ball's sphere.
HomologyCertificate certify_homology_type(const SimplicialComplex& d, FieldChoice field = FieldChoice::rational(),
                                          const Guards& guards = default_guards());

struct ClassificationReport {
  std::vector<std::vector<int>> b_sets;
  bool combinatorial_sphere = false;  // interval condition on the B_i and A == Hom(P, B)
  int pd = 0;
  int pd_bound = 0;                   // sum |B_i| - m
  bool pd_sphere = false;             // pd == pd_bound
  bool sphere = false;
  std::optional<HomologyCertificate> homology;
  SimplicialComplex boundary;
  DeltaComplex delta;

  std::string verdict() const { return sphere ? "sphere" : "ball"; }
};

// Both rules, asserted to agree; with `certify` the homology certificate too.
ClassificationReport classify(const PosetIdeal& ideal, bool certify = true, FieldChoice field = FieldChoice::rational(),
                              const Guards& guards = default_guards());

}  // namespace colp
