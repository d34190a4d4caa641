#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colp/resolution.hpp"

namespace colp {

// ---- multisets ----

// Sorted ascending, with repetition.
using Multiset = std::vector<int>;

// The ell-th smallest element (1-based), or n when ell > |A|.
int N_ell(const Multiset& A, int ell, int n);

// phi[i] is the position in B of the image of A[i]. Throws InputError unless
// phi is a bijection with A[i] <= B[phi[i]]; otherwise returns whether
// N_ell(A) <= N_ell(B) for every ell = 1..|A|.
bool check_N_monotone(const Multiset& A, const Multiset& B, const std::vector<std::size_t>& phi, int n);

struct NMonotoneSweep {
  std::size_t multisets = 0;   // sub-multisets of {[n]}_k
  std::size_t dominated = 0;   // (A, B, phi) triples with a <= phi(a)
  bool holds = true;
  std::optional<std::pair<Multiset, Multiset>> counterexample;
};
// Every pair of equal-size sub-multisets of {[n]}_k and every arrangement of B.
// An exhaustive check at small scale, not a proof.
NMonotoneSweep sweep_N_monotone(int n, int k);

// ---- bounded powers ----

// Weakly increasing chains f_1 <= ... <= f_k of members, in lex order of the tuple.
std::vector<std::vector<IsotoneMap>> increasing_chains(const PosetIdeal& ideal, int k,
                                                       std::size_t cap = default_guards().chains);

// L(A; k): generated by U_{f_1} ... U_{f_k} over those chains.
MonomialIdeal bounded_power(const PosetIdeal& ideal, int k, const Guards& guards = default_guards());

struct EquivalenceReport {
  int k = 2;
  bool equal_at_k = false;         // L(A;k) == L(A)^k
  bool sublattice = false;
  bool unique_maximal = false;
  bool hom_of_subsets = false;     // A == Hom(P, B_1..B_m) with B_i the achieved letters
  bool equal_at_k_and_next = false;
  std::vector<std::vector<int>> b_sets;
  bool all_agree() const;
};
// Throws VerificationError when the five conditions disagree.
EquivalenceReport equivalence_report(const PosetIdeal& ideal, int k, const Guards& guards = default_guards());

// ---- the P^k lift ----

struct PowerContext {
  PosetIdeal base;
  int k;
  ProductPoset product;
  PosetIdeal lifted;                                  // A^k inside Hom(P^k, A^k)
  std::vector<std::pair<Variable, Variable>> differences;  // (X^{(s)}_{i,a}, X^{(s+1)}_{i,a})

  // X_{p_{i,j},a} (element = label in P^k) -> X^{(j)}_{i,a} (copy j, 1-based).
  Variable to_power_ring(const Variable& v) const;
  // L(P^k, A^k; A^k) written over T.
  MonomialIdeal lifted_ideal() const;
  // The direct resolution of the lifted ideal, written over T.
  ResolutionComplex lifted_resolution(const Guards& guards = default_guards()) const;
};

// Builds P^k, A^k and the lifted ideal generated by the bars of the maximal
// members, and asserts the bijection between the lifted ideal and the chains.
PowerContext lift(const PosetIdeal& ideal, int k, const Guards& guards = default_guards());

// X^{(s)}_{i,a} -> X_{i,a}.
Variable specialize(const Variable& v);
MonomialIdeal specialize(const MonomialIdeal& I);
// Keeps every basis element; re-verifies the complex and minimality.
ResolutionComplex specialize(const ResolutionComplex& rz);

struct RegularityCertificate {
  IntPolynomial numerator_t;  // T / L(P^k, A^k; A^k)
  IntPolynomial numerator_r;  // R / L(A; k)
  int t_variables = 0;
  int r_variables = 0;
  int c = 0;                  // number of variable differences
  bool quotient_matches = false;  // specialized lifted ideal == L(A; k)
  bool holds = false;
};
// A sequence of c linear forms is regular iff the Hilbert series gets multiplied
// by (1-t)^c; over the rings of T and R this says the two numerators coincide.
RegularityCertificate regular_sequence_certificate(const PowerContext& ctx, const Guards& guards = default_guards());

struct PowerResolutionReport {
  ResolutionComplex complex;     // over R
  MonomialIdeal target;          // L(P, A)^k
  std::size_t strands_checked = 0;
  bool betti_matches_oracle = false;
  std::vector<std::size_t> ranks;
};
// Requires the full Hom(P, A). Throws VerificationError on any failed check.
PowerResolutionReport verify_power_resolution(const Poset& P, const AlphabetMap& A, int k,
                                              FieldChoice field = FieldChoice::rational(),
                                              const Guards& guards = default_guards());

struct PolarizationReport {
  bool isomorphic = false;  // some variable bijection maps one ideal onto the other
  std::vector<std::pair<Variable, Variable>> witness;  // lifted variable -> polarized variable
  std::size_t nodes = 0;    // search nodes explored
  std::string reason;       // why no bijection exists, when the search is cut short
  MonomialIdeal lifted, polarized;
};
// Compares L(P^k, A^k; A^k) with the polarization of L(A; k) up to renaming variables.
PolarizationReport polarization_mismatch(const PowerContext& ctx, const Guards& guards = default_guards());

}  // namespace colp
